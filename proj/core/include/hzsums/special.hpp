#ifndef HZSUMS_SPECIAL_HPP
#define HZSUMS_SPECIAL_HPP

// Double-precision special functions on the real line: Gamma, Pochhammer,
// Riemann/Hurwitz zeta, Dirichlet eta and the Lerch transcendent, plus the
// exact Bernoulli table everything else is built from.
//
// Every zeta-type routine takes a Tolerance and guarantees that the
// truncation error of the algorithm is below tol.abs_tol. Rounding error of
// binary64 arithmetic is not part of the certificate.

#include "hzsums/coeffs.hpp"

namespace hzs {

/// Requested accuracy. abs_tol is the certified bound; rel_tol is advisory
/// and only used in reports.
struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;

    Tolerance() = default;
    explicit Tolerance(double abs, double rel = 0.0);
};

// Parameters closer than this to a convergence threshold are rejected.
inline constexpr double kBoundaryMargin = 1e-12;

inline constexpr int kMaxBernoulliIndex = 64;

/// B_0..B_{n_max} exactly, with B_1 = -1/2. The table is built once and
/// shared between threads.
RationalCoeffs bernoulli_numbers(int n_max);

/// B_n rounded to binary64, 0 <= n <= 64.
double bernoulli_double(int n);

double gamma_fn(double s);

/// Rising factorial a(a+1)...(a+n-1); throws OverflowError when the result
/// leaves the binary64 range.
double pochhammer(double a, int n);

double riemann_zeta(double s, Tolerance tol = Tolerance{});

/// zeta(s, alpha) = sum_{n>=0} (n + alpha)^-s for s > 1, alpha > 0.
///
/// Euler-Maclaurin: explicit terms up to N + alpha >= L, then the integral,
/// the half term and Bernoulli corrections up to B_24. L is chosen so the
/// first omitted correction is below tol; for completely monotone summands
/// that term bounds the remainder.
double hurwitz_zeta(double s, double alpha, Tolerance tol = Tolerance{});

/// Certified upper bound alpha^-s + alpha^(1-s)/(s-1) >= zeta(s, alpha).
double hurwitz_tail_bound(double s, double alpha);

/// (1 - 2^(1-s)) zeta(s), s > 1.
double dirichlet_eta(double s, Tolerance tol = Tolerance{});

/// Phi(z, s, alpha) = sum_{n>=0} z^n / (n + alpha)^s for real |z| <= 1.
/// z = 1 and z = -1 are routed through Hurwitz zeta.
double lerch_phi(double z, double s, double alpha, Tolerance tol = Tolerance{});

namespace detail {

// Unchecked kernels used inside long summations. abs_tol may be far below
// the public Tolerance floor since terms can be tiny.
double hurwitz(double s, double alpha, double abs_tol);
double lerch(double z, double s, double alpha, double abs_tol,
             long long term_budget = 10'000'000);

}  // namespace detail

}  // namespace hzs

#endif
