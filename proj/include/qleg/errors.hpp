#ifndef QLEG_ERRORS_HPP
#define QLEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qleg {

/// An index pair or size argument violates a documented constraint
/// (k > l >= 0, the k <= 64 / l <= 63 guard, ...).
class ConstraintError : public std::invalid_argument {
public:
    explicit ConstraintError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument lies outside the region where the requested representation is valid.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation hits a genuine pole or a vanishing denominator.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

} // namespace qleg

#endif // QLEG_ERRORS_HPP
