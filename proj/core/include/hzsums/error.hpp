#ifndef HZSUMS_ERROR_HPP
#define HZSUMS_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hzs {

// A parameter violates a convergence or validity condition. The message
// names the condition, e.g. "requires s > m+2 (= 5)".
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested sum has no known closed form (e.g. the alternating moment
// sum with m >= 3). Callers must switch to direct evaluation explicitly.
class NoClosedForm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Summation ran past its term budget before the certified error bound
// dropped below the requested tolerance.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::int64_t terms)
        : std::runtime_error(what), terms_(terms) {}
    std::int64_t terms() const noexcept { return terms_; }

private:
    std::int64_t terms_;
};

// An iterative numerical scheme (quadrature refinement) did not converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace hzs

#endif
