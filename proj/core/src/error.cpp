#include "wentzell/error.hpp"

namespace wentzell {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::grid_mismatch: return "grid mismatch";
    case ErrorKind::domain: return "domain";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind)
{
}

} // namespace wentzell
