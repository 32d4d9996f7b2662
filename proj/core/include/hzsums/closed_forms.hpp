#ifndef HZSUMS_CLOSED_FORMS_HPP
#define HZSUMS_CLOSED_FORMS_HPP

// Closed-form right-hand sides of the Hurwitz-zeta sums, kept symbolically
// as rational-linear combinations of zeta values until evaluation.

#include <optional>
#include <utility>
#include <vector>

#include "hzsums/coeffs.hpp"
#include "hzsums/series.hpp"
#include "hzsums/special.hpp"

namespace hzs {

enum class ZetaKind { ZETA, HURWITZ };

/// coefficient * [2^(-s)] * zeta(s - s_shift)            (ZETA)
/// coefficient * [2^(-s)] * zeta(s - s_shift, alpha)     (HURWITZ)
/// The bracketed 2^(-s) factor is present when two_pow_minus_s is set.
struct ZetaTerm {
    Rational coefficient;
    ZetaKind kind = ZetaKind::ZETA;
    int s_shift = 0;
    std::optional<double> alpha;
    bool two_pow_minus_s = false;

    friend bool operator==(const ZetaTerm&, const ZetaTerm&) = default;
};

class ZetaCombination {
public:
    ZetaCombination() = default;

    /// Appends a term; zero coefficients are dropped. Throws DomainError for
    /// negative shifts or a HURWITZ term without alpha > 0.
    ZetaCombination& add(Rational coefficient, int s_shift, bool two_pow_minus_s = false);
    ZetaCombination& add_hurwitz(Rational coefficient, int s_shift, double alpha,
                                 bool two_pow_minus_s = false);

    const std::vector<ZetaTerm>& terms() const noexcept { return terms_; }

    /// Largest s_shift; the combination is defined for s > max_shift() + 1.
    int max_shift() const noexcept;

    /// Coefficients of the plain ZETA terms without the 2^(-s) factor,
    /// indexed by s_shift (missing shifts are zero).
    std::vector<Rational> zeta_coefficients() const;

    /// Value at s with total truncation error below tol.abs_tol.
    double evaluate(double s, Tolerance tol = Tolerance{}) const;

private:
    std::vector<ZetaTerm> terms_;
};

/// Default accuracy of the closed-form evaluators.
inline const Tolerance kClosedFormTol{1e-14};

// Symbolic forms. Parameters that enter the coefficients are validated here;
// conditions on s are checked by the evaluators below.
ZetaCombination kappa_form();
ZetaCombination kappa_alt_form();
ZetaCombination shifted_form(double a);
ZetaCombination shifted_alt_form(double a);
ZetaCombination moment_form(int m);
ZetaCombination moment_alt_form(int m);
ZetaCombination even_arg_moment_form(int m);

/// sum_{k>=1} zeta(s,k) = zeta(s-1), s > 2.
double kappa_closed(double s, Tolerance tol = kClosedFormTol);

/// sum_{k>=1} (-1)^(k-1) zeta(s,k) = (1 - 2^-s) zeta(s), s > 1.
double kappa_alt_closed(double s, Tolerance tol = kClosedFormTol);

/// sum_{k>=0} zeta(s,k+a) = zeta(s-1,a) + (1-a) zeta(s,a), s > 2, a > 0.
double shifted_closed(double s, double a, Tolerance tol = kClosedFormTol);

/// sum_{k>=0} (-1)^k zeta(s,k+a) = 2^-s zeta(s, a/2), s > 1, a > 0.
double shifted_alt_closed(double s, double a, Tolerance tol = kClosedFormTol);

/// Coefficients of P_m in ascending powers (Eulerian numbers), 1 <= m <= 12.
RationalCoeffs eulerian_polynomial(int m);

/// S_m(n) = sum_{k=1}^n k^m as a polynomial in n, 0 <= m <= 12. Entry i
/// multiplies n^(i+1) (offset 1: there is no constant term).
RationalCoeffs faulhaber_coeffs(int m);

/// sum_{k>=1} k^m zeta(s,k) = sum_j c_j zeta(s-j), c = faulhaber_coeffs(m),
/// s > m+2.
double moment_closed(double s, int m, Tolerance tol = kClosedFormTol);

/// sum_{k>=1} (-1)^(k-1) k^m zeta(s,k) for m in {1, 2}, s > m+1; any other
/// m throws NoClosedForm.
double moment_alt_closed(double s, int m, Tolerance tol = kClosedFormTol);

/// sum_{k>=1} k^m zeta(s,2k) for m in {1, 2}, s > m+2; other m throw
/// NoClosedForm.
double even_arg_moment_closed(double s, int m, Tolerance tol = kClosedFormTol);

/// (2^(-m-1) (moment_closed - moment_alt_closed), even_arg_moment_closed).
std::pair<double, double> combination_split(double s, int m, Tolerance tol = kClosedFormTol);

/// True when the family (and m) of `spec` has a closed form above.
bool has_closed_form(const SumSpec& spec);

/// Closed-form evaluation of `spec`; throws NoClosedForm when
/// has_closed_form(spec) is false. terms_used counts zeta evaluations and
/// tail_bound is the truncation bound of those evaluations.
SumResult eval_closed(const SumSpec& spec);

}  // namespace hzs

#endif
