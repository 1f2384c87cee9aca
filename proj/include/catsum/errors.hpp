#ifndef CATSUM_ERRORS_HPP
#define CATSUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catsum {

/// Mathematical precondition violated (zero inverse, negative index, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// API misuse such as mixing variable tags or mismatched dimensions.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the unpivoted LU when a leading principal minor vanishes.
class ZeroPivotError : public DomainError {
public:
    explicit ZeroPivotError(std::size_t minor)
        : DomainError("zero pivot: leading principal minor of order " +
                      std::to_string(minor) + " is zero"),
          minor_(minor) {}

    /// Order (1-based) of the first vanishing leading principal minor.
    std::size_t leading_minor() const noexcept { return minor_; }

private:
    std::size_t minor_;
};

} // namespace catsum

#endif // CATSUM_ERRORS_HPP
