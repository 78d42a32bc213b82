#pragma once

#include <stdexcept>
#include <string>

namespace sgs {

/// Error with a stable machine-readable code, surfaced verbatim by the CLI.
/// Codes in use: "parse", "io", "range", "invalid", "arity", "limit", "usage".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace sgs
