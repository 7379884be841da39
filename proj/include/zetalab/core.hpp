#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

using real = long double;

/// Value with a certified bound on its absolute error.
struct EvalResult {
    real value = 0;
    real abs_err = 0;
};

/// A labelled term of a report breakdown.
struct Component {
    std::string label;
    real value = 0;
};

/// Raised when an argument lies outside an operation's domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when the requested accuracy cannot be certified within the
/// configured budget. Carries the best result that was reached.
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& what, EvalResult best)
        : std::runtime_error(what), best_(best) {}

    const EvalResult& best_effort() const noexcept { return best_; }

private:
    EvalResult best_;
};

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) throw domain_error(message);
}

}  // namespace detail
}  // namespace zetalab
