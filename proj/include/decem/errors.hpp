#pragma once

#include <stdexcept>
#include <string>

namespace decem {

// Exit-code categories used by the CLI (0 = success).
enum class ErrorCategory : int {
    Config = 2,
    Mesh = 3,
    Solver = 4,
    Io = 5,
};

// All library errors carry a short machine-checkable kind (e.g. "DegenerateTet")
// plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message),
          category_(category),
          kind_(std::move(kind)) {}

    ErrorCategory category() const { return category_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorCategory category_;
    std::string kind_;
};

inline Error mesh_error(const std::string& kind, const std::string& msg) {
    return Error(ErrorCategory::Mesh, kind, msg);
}
inline Error config_error(const std::string& kind, const std::string& msg) {
    return Error(ErrorCategory::Config, kind, msg);
}
inline Error solver_error(const std::string& kind, const std::string& msg) {
    return Error(ErrorCategory::Solver, kind, msg);
}
inline Error io_error(const std::string& kind, const std::string& msg) {
    return Error(ErrorCategory::Io, kind, msg);
}

} // namespace decem
