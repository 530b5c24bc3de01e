#pragma once

#include <stdexcept>
#include <string>

namespace enlab {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// Domain -> 1, Usage -> 2, Budget -> 3.
enum class ErrorKind { Domain, Usage, Budget };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }
[[noreturn]] inline void throw_usage(const std::string& msg) { throw Error(ErrorKind::Usage, msg); }
[[noreturn]] inline void throw_budget(const std::string& msg) { throw Error(ErrorKind::Budget, msg); }

// Parse failure with a position (byte offset for polynomials, line number for
// system files). The message already embeds the position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(ErrorKind::Domain, msg), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace enlab
