#pragma once

#include <stdexcept>
#include <string>

namespace wentzell {

enum class ErrorKind { validation, grid_mismatch, domain, numerical, io };

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace wentzell
