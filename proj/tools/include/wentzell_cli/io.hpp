#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace wentzell::cli {

/// Writes to a temporary sibling, then renames over path.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

/// Decimal form with 17 significant digits.
std::string num(double v);

using HeaderFields = std::vector<std::pair<std::string, std::string>>;

/// CSV text with '#' comment lines for the command and parameters.
class CsvWriter {
public:
    CsvWriter(const std::string& command, const HeaderFields& fields, const std::vector<std::string>& columns);

    void row(const std::vector<double>& values);
    void row(const std::vector<std::string>& values);
    const std::string& str() const noexcept { return text_; }

private:
    std::string text_;
    std::size_t width_;
};

} // namespace wentzell::cli
