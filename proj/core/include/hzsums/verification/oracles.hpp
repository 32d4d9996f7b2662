#ifndef HZSUMS_VERIFICATION_ORACLES_HPP
#define HZSUMS_VERIFICATION_ORACLES_HPP

// Slow, independent evaluation paths used to cross-check the library:
// tanh-sinh quadrature of the integral representations
//
//   zeta(s, alpha)                         = 1/Gamma(s) int_0^inf x^(s-1) e^(-alpha x) / (1 - e^(-x)) dx
//   2^-s {zeta(s, alpha/2) - zeta(s, alpha/2 + 1/2)} = 1/Gamma(s) int_0^inf x^(s-1) e^(-alpha x) / (1 + e^(-x)) dx
//
// and exact power sums. Not meant for production evaluation.

#include <vector>

#include "hzsums/coeffs.hpp"

namespace hzs::verification {

struct QuadratureSpec {
    double upper_cutoff = 60.0;  // X: the integral is taken over (0, X]
    int levels = 10;             // maximal refinement depth, step 2^-level
    double target_abs = 1e-10;
};

inline constexpr int kMaxQuadratureLevels = 12;

/// Cutoff X for which the neglected tail int_X^inf is below target_abs/10.
QuadratureSpec make_quadrature_spec(double s, double alpha, double target_abs = 1e-10,
                                    int levels = kMaxQuadratureLevels);

/// Estimates at refinement levels 0, 1, ... (stops one level after the
/// change drops below target_abs/10, or at spec.levels).
std::vector<double> quad_hurwitz_levels(double s, double alpha, const QuadratureSpec& spec);
std::vector<double> quad_eta_split_levels(double s, double alpha, const QuadratureSpec& spec);

/// zeta(s, alpha) by quadrature, s >= 2.5, alpha > 0. Throws
/// ConvergenceError when refinement does not settle within spec.levels.
double quad_hurwitz(double s, double alpha, const QuadratureSpec& spec);

/// The alternating-denominator integral above, s >= 1.5, alpha > 0.
double quad_eta_split(double s, double alpha, const QuadratureSpec& spec);

/// sum_{k=1}^n k^m exactly, 0 <= m <= 12, 1 <= n <= 10^4.
BigInt brute_power_sum(int m, int n);

/// sum_{k=1}^n (-1)^(k-1) k^m exactly, same ranges.
BigInt brute_alt_power_sum(int m, int n);

}  // namespace hzs::verification

#endif
