#ifndef ZFAC_ERRORS_HPP
#define ZFAC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zfac {

// Caller passed arguments that violate an operation's contract.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request (counting roots of 0, content of 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string &msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), detail_(msg), pos_(pos)
    {
    }

    std::size_t position() const noexcept { return pos_; }
    // The message without the offset suffix.
    const std::string &detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t pos_;
};

#define ZFAC_ENSURE(cond, msg)                                                                     \
    do {                                                                                           \
        if (!(cond))                                                                               \
            throw ::zfac::InvariantViolation(std::string(msg) + " (" #cond ")");                   \
    } while (false)

} // namespace zfac

#endif
