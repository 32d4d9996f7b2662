#include "hzsums/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "check.hpp"
#include "hzsums/error.hpp"
#include "hzsums/series.hpp"

namespace hzs {

namespace {

void check_moment(int m, int lo) {
    if (m < lo || m > kMaxMoment) {
        throw DomainError("requires " + std::to_string(lo) + " <= m <= " + std::to_string(kMaxMoment) +
                          " (got " + std::to_string(m) + ")");
    }
}

void check_shift_param(double a) {
    internal::require_finite(a, "a");
    internal::require_above(a, 0, "a > 0");
}

void check_s(double s, double threshold, const std::string& condition) {
    internal::require_finite(s, "s");
    internal::require_above(s, threshold, condition);
}

std::string m_condition(const char* form, int offset, int m) {
    return std::string("s > ") + form + " (= " + std::to_string(m + offset) + ")";
}

}  // namespace

ZetaCombination& ZetaCombination::add(Rational coefficient, int s_shift, bool two_pow_minus_s) {
    if (s_shift < 0) throw DomainError("requires s_shift >= 0");
    if (coefficient != 0) {
        terms_.push_back({std::move(coefficient), ZetaKind::ZETA, s_shift, std::nullopt, two_pow_minus_s});
    }
    return *this;
}

ZetaCombination& ZetaCombination::add_hurwitz(Rational coefficient, int s_shift, double alpha,
                                              bool two_pow_minus_s) {
    if (s_shift < 0) throw DomainError("requires s_shift >= 0");
    internal::require_finite(alpha, "alpha");
    internal::require_above(alpha, 0, "alpha > 0");
    if (coefficient != 0) {
        terms_.push_back({std::move(coefficient), ZetaKind::HURWITZ, s_shift, alpha, two_pow_minus_s});
    }
    return *this;
}

int ZetaCombination::max_shift() const noexcept {
    int out = 0;
    for (const auto& t : terms_) out = std::max(out, t.s_shift);
    return out;
}

std::vector<Rational> ZetaCombination::zeta_coefficients() const {
    std::vector<Rational> out(static_cast<std::size_t>(max_shift()) + 1);
    for (const auto& t : terms_) {
        if (t.kind == ZetaKind::ZETA && !t.two_pow_minus_s) out[t.s_shift] += t.coefficient;
    }
    return out;
}

double ZetaCombination::evaluate(double s, Tolerance tol) const {
    internal::require_finite(s, "s");
    internal::require_above(s, max_shift() + 1.0, "s > " + std::to_string(max_shift() + 1));
    if (terms_.empty()) return 0.0;
    const double share = tol.abs_tol / static_cast<double>(terms_.size());
    const double half_pow = std::exp2(-s);
    double acc = 0.0;
    for (const auto& t : terms_) {
        const double c = t.coefficient.convert_to<double>() * (t.two_pow_minus_s ? half_pow : 1.0);
        const double alpha = t.kind == ZetaKind::HURWITZ ? *t.alpha : 1.0;
        acc += c * detail::hurwitz(s - t.s_shift, alpha, share / std::abs(c));
    }
    return acc;
}

// --- symbolic forms -------------------------------------------------------

ZetaCombination kappa_form() { return ZetaCombination{}.add(1, 1); }

ZetaCombination kappa_alt_form() { return ZetaCombination{}.add(1, 0).add(-1, 0, true); }

ZetaCombination shifted_form(double a) {
    check_shift_param(a);
    // 1 - a, exactly.
    Rational one_minus_a = Rational(1) - rational_from_double(a);
    return ZetaCombination{}.add_hurwitz(1, 1, a).add_hurwitz(one_minus_a, 0, a);
}

ZetaCombination shifted_alt_form(double a) {
    check_shift_param(a);
    return ZetaCombination{}.add_hurwitz(1, 0, a / 2, true);
}

RationalCoeffs eulerian_polynomial(int m) {
    check_moment(m, 1);
    std::vector<BigInt> row{1};
    for (int n = 2; n <= m; ++n) {
        std::vector<BigInt> next(n);
        for (int j = 0; j < n; ++j) {
            BigInt v = 0;
            if (j < n - 1) v += BigInt(j + 1) * row[j];
            if (j > 0) v += BigInt(n - j) * row[j - 1];
            next[j] = v;
        }
        row = std::move(next);
    }
    return RationalCoeffs(std::vector<Rational>(row.begin(), row.end()));
}

RationalCoeffs faulhaber_coeffs(int m) {
    check_moment(m, 0);
    const auto b = bernoulli_numbers(m).values();
    // S_m(n) = 1/(m+1) sum_j C(m+1, j) (-1)^j B_j n^(m+1-j)
    std::vector<Rational> c(m + 1);
    BigInt binom = 1;
    for (int j = 0; j <= m; ++j) {
        Rational term = Rational(binom) * b[j] / (m + 1);
        if (j % 2 == 1) term = -term;
        c[m - j] = term;  // power m+1-j, offset 1
        binom = binom * (m + 1 - j) / (j + 1);
    }
    return RationalCoeffs(c, 1);
}

ZetaCombination moment_form(int m) {
    const auto c = faulhaber_coeffs(m);
    ZetaCombination out;
    for (std::size_t i = 0; i < c.size(); ++i) out.add(c.at(i), static_cast<int>(i) + 1);
    return out;
}

ZetaCombination moment_alt_form(int m) {
    check_moment(m, 0);
    ZetaCombination out;
    if (m == 1) {
        // 2^-s { zeta(s-1, 1/2) + zeta(s, 1/2)/2 - zeta(s-1) }
        out.add_hurwitz(1, 1, 0.5, true).add_hurwitz(Rational(1, 2), 0, 0.5, true).add(-1, 1, true);
    } else if (m == 2) {
        // 1/2 { (1 - 2^(2-s)) zeta(s-1) + (1 - 2^(3-s)) zeta(s-2) }
        out.add(Rational(1, 2), 1).add(-2, 1, true).add(Rational(1, 2), 2).add(-4, 2, true);
    } else {
        throw NoClosedForm("no closed form is known for the alternating moment sum with m = " +
                           std::to_string(m) + " (available for m = 1, 2)");
    }
    return out;
}

ZetaCombination even_arg_moment_form(int m) {
    check_moment(m, 0);
    ZetaCombination out;
    if (m == 1) {
        // 1/8 { (1 + 2^(1-s)) zeta(s-1) + zeta(s-2) - 2^(1-s) (zeta(s-1,1/2) + zeta(s,1/2)/2) }
        out.add(Rational(1, 8), 1)
            .add(Rational(1, 4), 1, true)
            .add(Rational(1, 8), 2)
            .add_hurwitz(Rational(-1, 4), 1, 0.5, true)
            .add_hurwitz(Rational(-1, 8), 0, 0.5, true);
    } else if (m == 2) {
        // 1/24 { (3 2^(1-s) - 1) zeta(s-1) + 6 2^(1-s) zeta(s-2) + zeta(s-3) }
        out.add(Rational(-1, 24), 1)
            .add(Rational(1, 4), 1, true)
            .add(Rational(1, 2), 2, true)
            .add(Rational(1, 24), 3);
    } else {
        throw NoClosedForm("no closed form is known for sum k^m zeta(s,2k) with m = " + std::to_string(m) +
                           " (available for m = 1, 2)");
    }
    return out;
}

// --- evaluators -----------------------------------------------------------

double kappa_closed(double s, Tolerance tol) {
    check_s(s, 2, "s > 2");
    return kappa_form().evaluate(s, tol);
}

double kappa_alt_closed(double s, Tolerance tol) {
    check_s(s, 1, "s > 1");
    return kappa_alt_form().evaluate(s, tol);
}

double shifted_closed(double s, double a, Tolerance tol) {
    check_s(s, 2, "s > 2");
    return shifted_form(a).evaluate(s, tol);
}

double shifted_alt_closed(double s, double a, Tolerance tol) {
    check_s(s, 1, "s > 1");
    return shifted_alt_form(a).evaluate(s, tol);
}

double moment_closed(double s, int m, Tolerance tol) {
    check_moment(m, 0);
    check_s(s, m + 2, m_condition("m+2", 2, m));
    return moment_form(m).evaluate(s, tol);
}

double moment_alt_closed(double s, int m, Tolerance tol) {
    const auto form = moment_alt_form(m);
    check_s(s, m + 1, m_condition("m+1", 1, m));
    return form.evaluate(s, tol);
}

double even_arg_moment_closed(double s, int m, Tolerance tol) {
    const auto form = even_arg_moment_form(m);
    check_s(s, m + 2, m_condition("m+2", 2, m));
    return form.evaluate(s, tol);
}

std::pair<double, double> combination_split(double s, int m, Tolerance tol) {
    const double even = even_arg_moment_closed(s, m, tol);
    const double diff = moment_closed(s, m, tol) - moment_alt_closed(s, m, tol);
    return {std::ldexp(diff, -m - 1), even};
}

bool has_closed_form(const SumSpec& spec) {
    switch (spec.family) {
        case Family::KAPPA:
        case Family::KAPPA_ALT:
        case Family::SHIFTED:
        case Family::SHIFTED_ALT:
            return true;
        case Family::MOMENT:
            return spec.m >= 0 && spec.m <= kMaxMoment;
        case Family::MOMENT_ALT:
        case Family::EVEN_ARG_MOMENT:
            return spec.m == 1 || spec.m == 2;
        default:
            return false;
    }
}

SumResult eval_closed(const SumSpec& spec) {
    validate(spec);
    ZetaCombination form;
    switch (spec.family) {
        case Family::KAPPA: form = kappa_form(); break;
        case Family::KAPPA_ALT: form = kappa_alt_form(); break;
        case Family::SHIFTED: form = shifted_form(spec.a); break;
        case Family::SHIFTED_ALT: form = shifted_alt_form(spec.a); break;
        case Family::MOMENT: form = moment_form(spec.m); break;
        case Family::MOMENT_ALT: form = moment_alt_form(spec.m); break;
        case Family::EVEN_ARG_MOMENT: form = even_arg_moment_form(spec.m); break;
        default:
            throw NoClosedForm("no closed form is available for family " + std::string(to_string(spec.family)));
    }
    const double value = form.evaluate(spec.s, spec.tol);
    const auto terms = static_cast<std::int64_t>(std::max<std::size_t>(form.terms().size(), 1));
    return {value, terms, spec.tol.abs_tol, Method::CLOSED_FORM};
}

}  // namespace hzs
