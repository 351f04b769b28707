#ifndef POWMON_ERRORS_HPP
#define POWMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace powmon {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text literal (element, set, monoid spec, alpha).
class parse_error : public error {
public:
    using error::error;
};

/// A value violates a type invariant (perfect-square radicand, b = 0, ...).
class invalid_value : public error {
public:
    using error::error;
};

/// A caller broke an operation's precondition.
class precondition_violation : public error {
public:
    using error::error;
};

/// The factor search hit its radius cap. Inconclusive: it does not mean the
/// element is irreducible.
class search_exhausted : public error {
public:
    explicit search_exhausted(unsigned long long radius)
        : error("factor search exhausted at max_radius=" + std::to_string(radius)), radius_(radius) {}
    unsigned long long radius() const noexcept { return radius_; }

private:
    unsigned long long radius_;
};

/// No candidate shift normalizes the set. Only reachable with a broken cone.
class no_shift_found : public error {
public:
    using error::error;
};

/// More than one candidate shift normalizes the set. Only reachable with a
/// broken cone (one that is not reduced).
class multiple_shifts_found : public error {
public:
    using error::error;
};

class postcondition_failed : public error {
public:
    using error::error;
};

class not_in_source_monoid : public error {
public:
    using error::error;
};

class rejection_budget_exceeded : public error {
public:
    using error::error;
};

} // namespace powmon

#endif // POWMON_ERRORS_HPP
