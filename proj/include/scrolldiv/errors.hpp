#pragma once

#include <stdexcept>
#include <string>

namespace scrolldiv {

/// Precondition violation in a library operation. `code` is a stable
/// machine-readable name (e.g. "NotACone"); `what()` starts with the code
/// followed by a human-readable explanation.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, std::string message)
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          message_(std::move(message)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::string message_;
};

}  // namespace scrolldiv
