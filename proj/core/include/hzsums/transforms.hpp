#ifndef HZSUMS_TRANSFORMS_HPP
#define HZSUMS_TRANSFORMS_HPP

// Parameter-inversion transformations of the lattice sums
//
//   sum_{k>=0} (+-1)^k e^(-ck) zeta(s, ka + b) = a^-s sum_{n>=0} Phi(+-e^-c, s, (n+b)/a)
//
// and the strategy layer choosing between the two sides. For small a the
// left side converges like (ka)^(1-s) and needs many terms, while the right
// side's arguments (n+b)/a grow quickly.

#include <cstdint>

#include "hzsums/series.hpp"

namespace hzs {

/// a^-s sum_{n>=0} zeta(s, (n+b)/a) = sum_{k>=0} zeta(s, ka+b); s > 2, a, b > 0.
SumResult kappa_ab_transformed(double s, double a, double b, Tolerance tol = Tolerance{},
                               std::int64_t term_budget = kDefaultTermBudget);

/// (2a)^-s sum_{n>=0} {zeta(s, (n+b)/2a) - zeta(s, (n+b)/2a + 1/2)}
///   = sum_{k>=0} (-1)^k zeta(s, ka+b); s > 1, a, b > 0.
SumResult kappa_ab_alt_transformed(double s, double a, double b, Tolerance tol = Tolerance{},
                                   std::int64_t term_budget = kDefaultTermBudget);

/// a^-s sum_{n>=0} zeta(s, n/a + 1) (PLUS, s > 2) or its alternating
/// analogue (MINUS, s > 1); equals sum_{k>=1} (+-1)^(k-1) zeta(s, ka).
SumResult corollary_b_equals_a(double s, double a, Sign sign, Tolerance tol = Tolerance{},
                               std::int64_t term_budget = kDefaultTermBudget);

/// a^-s sum_{n>=0} Phi(+-e^-c, s, (n+b)/a) = sum_{k>=0} (+-1)^k e^(-ck) zeta(s, ka+b).
/// s > 1, c >= 0; c = 0 with PLUS needs s > 2 and is delegated to
/// kappa_ab_transformed (MINUS to kappa_ab_alt_transformed).
SumResult s_pm_transformed(double s, double a, double b, double c, Sign sign,
                           Tolerance tol = Tolerance{}, std::int64_t term_budget = kDefaultTermBudget);

/// Transformed evaluation of a GENERAL_AB, GENERAL_AB_ALT or EXP_WEIGHTED spec.
SumResult eval_transformed(const SumSpec& spec);

enum class Side { DIRECT, TRANSFORMED };

/// Predicted term count of one side of sum_{k>=0} zeta(s, ka+b) (s > 2).
/// Uses the evaluators' own stopping rule on closed-form term sizes, so the
/// prediction is within a factor of 2 of the actual count.
std::int64_t term_count_estimate(double s, double a, double b, Tolerance tol, Side side);

/// Same for any GENERAL_AB, GENERAL_AB_ALT or EXP_WEIGHTED spec.
std::int64_t term_count_estimate(const SumSpec& spec, Side side);

/// Side with the smaller predicted term count; ties go to TRANSFORMED.
/// Throws DomainError for other families.
Method choose_method(const SumSpec& spec);

struct TransformReport {
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    std::int64_t lhs_terms = 0;
    std::int64_t rhs_terms = 0;
    double agreement = 0.0;
    double speedup_estimate = 0.0;  // lhs_terms / rhs_terms
};

/// Evaluates both sides of a GENERAL_AB, GENERAL_AB_ALT or EXP_WEIGHTED spec.
TransformReport compare_sides(const SumSpec& spec);

}  // namespace hzs

#endif
