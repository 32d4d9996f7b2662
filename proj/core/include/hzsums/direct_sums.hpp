#ifndef HZSUMS_DIRECT_SUMS_HPP
#define HZSUMS_DIRECT_SUMS_HPP

#include "hzsums/series.hpp"

namespace hzs {

/// Reference evaluation of the sum described by `spec` by explicit
/// summation of its terms.
///
/// The tail left after K terms is enclosed with certified bounds and the
/// midpoint of the enclosure is added to the partial sum; summation stops
/// as soon as the enclosure half-width plus the accumulated per-term
/// evaluation error is below spec.tol.abs_tol.
///
/// - Plain families use zeta(s,x) = x^(1-s)/(s-1) + x^(-s)/2 + R with
///   0 <= R <= s x^(-s-1)/12; the power parts of the tail are summed
///   exactly through Hurwitz zeta and R bounds the width.
/// - Alternating families with completely monotone terms use
///   sum_{i>=0} (-1)^i u_i in [u_0/2, u_0/2 + (u_0 - u_1)/2].
/// - EXP_WEIGHTED with PLUS uses a geometric majorant.
///
/// Near the convergence threshold of an alternating family (s = 1 + eps)
/// the sum converges only conditionally and the term count grows like
/// tol^(-1/s); the term budget turns that into a BudgetExceeded error.
SumResult eval_direct(const SumSpec& spec);

/// Predicted number of terms eval_direct will use.
std::int64_t direct_term_estimate(const SumSpec& spec);

/// sum_{k>=1} k^m e^(-kx) = e^(-x) P_m(e^(-x)) / (1 - e^(-x))^(m+1), 0 <= m <= 12.
double inner_power_sum(int m, double x);

/// sum_{k>=1} (-1)^(k-1) k^m e^(-kx) = e^(-x) P_m(-e^(-x)) / (1 + e^(-x))^(m+1).
double alternating_inner_power_sum(int m, double x);

}  // namespace hzs

#endif
