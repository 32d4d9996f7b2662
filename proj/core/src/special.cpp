#include "hzsums/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "check.hpp"
#include "hzsums/error.hpp"

namespace hzs {

using internal::require_above;
using internal::require_finite;

Tolerance::Tolerance(double abs, double rel) : abs_tol(abs), rel_tol(rel) {
    if (!std::isfinite(abs) || !std::isfinite(rel)) throw DomainError("tolerance must be finite");
    if (abs < std::ldexp(1.0, -52)) throw DomainError("requires abs_tol >= 2^-52");
    if (rel < 0) throw DomainError("requires rel_tol >= 0");
}

namespace {

const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        std::vector<Rational> b(kMaxBernoulliIndex + 1);
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        b[0] = 1;
        for (int m = 1; m <= kMaxBernoulliIndex; ++m) {
            Rational acc = 0;
            BigInt binom = 1;  // C(m+1, 0)
            for (int j = 0; j < m; ++j) {
                acc += Rational(binom) * b[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            b[m] = -acc / (m + 1);
        }
        return b;
    }();
    return table;
}

const std::array<double, kMaxBernoulliIndex + 1>& bernoulli_doubles() {
    static const auto table = [] {
        std::array<double, kMaxBernoulliIndex + 1> out{};
        const auto& exact = bernoulli_table();
        for (int i = 0; i <= kMaxBernoulliIndex; ++i) out[i] = exact[i].convert_to<double>();
        return out;
    }();
    return table;
}

// B_{2j} / (2j)! for j = 0..13.
const std::array<double, 14>& em_coefficients() {
    static const auto table = [] {
        std::array<double, 14> out{};
        const auto& exact = bernoulli_table();
        BigInt fact = 1;
        for (int j = 0; j < 14; ++j) {
            if (j > 0) fact *= BigInt(2 * j - 1) * BigInt(2 * j);
            out[j] = Rational(exact[2 * j] / Rational(fact)).convert_to<double>();
        }
        return out;
    }();
    return table;
}

constexpr int kMaxCorrection = 12;  // B_24

}  // namespace

RationalCoeffs bernoulli_numbers(int n_max) {
    if (n_max < 0 || n_max > kMaxBernoulliIndex) {
        throw DomainError("bernoulli_numbers requires 0 <= n_max <= 64");
    }
    const auto& table = bernoulli_table();
    return RationalCoeffs(std::vector<Rational>(table.begin(), table.begin() + n_max + 1));
}

double bernoulli_double(int n) {
    if (n < 0 || n > kMaxBernoulliIndex) throw DomainError("bernoulli index must be in [0, 64]");
    return bernoulli_doubles()[n];
}

double gamma_fn(double s) {
    require_finite(s, "s");
    require_above(s, 0.0, "s > 0");
    double g = std::tgamma(s);
    if (!std::isfinite(g)) throw OverflowError("gamma_fn: result exceeds binary64 range");
    return g;
}

double pochhammer(double a, int n) {
    require_finite(a, "a");
    if (n < 0) throw DomainError("pochhammer requires n >= 0");
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
        p *= a + k;
        if (!std::isfinite(p)) throw OverflowError("pochhammer: result exceeds binary64 range");
    }
    return p;
}

namespace detail {

double hurwitz(double s, double alpha, double abs_tol) {
    const auto& c = em_coefficients();
    const double tol = std::max(abs_tol, std::numeric_limits<double>::min()) / 2;

    // Choose L so that |B_26/26!| (s)_25 L^(-s-25) <= tol. Long sums call
    // this with a fixed s, so the s-dependent part is cached per thread.
    thread_local double cached_s = NAN;
    thread_local double cached_log_first_omitted = 0.0;
    if (s != cached_s) {
        double log_poch = 0.0;
        for (int k = 0; k < 2 * kMaxCorrection + 1; ++k) log_poch += std::log(s + k);
        cached_log_first_omitted = std::log(std::abs(c[kMaxCorrection + 1])) + log_poch;
        cached_s = s;
    }
    const double log_first_omitted = cached_log_first_omitted;
    double L = std::exp((log_first_omitted - std::log(tol)) / (s + 2 * kMaxCorrection + 1));
    L = std::max(L, 1.0);

    long long n_explicit = alpha >= L ? 0 : static_cast<long long>(std::ceil(L - alpha));
    double direct = 0.0;
    for (long long n = n_explicit - 1; n >= 0; --n) direct += std::pow(n + alpha, -s);

    const double x = static_cast<double>(n_explicit) + alpha;
    const double xs = std::pow(x, -s);
    double em = x * xs / (s - 1) + xs / 2;
    double t = s * xs / x;  // (s)_1 x^(-s-1)
    const double inv_x2 = 1.0 / (x * x);
    for (int j = 1; j <= kMaxCorrection; ++j) {
        double term = c[j] * t;
        // The remainder after j-1 corrections is bounded by |term|.
        if (std::abs(term) <= tol) break;
        em += term;
        t *= (s + 2 * j - 1) * (s + 2 * j) * inv_x2;
    }
    return direct + em;
}

double lerch(double z, double s, double alpha, double abs_tol, long long term_budget) {
    if (z == 1.0) return hurwitz(s, alpha, abs_tol);
    if (z == -1.0) {
        const double scale = std::pow(2.0, -s);
        const double t = abs_tol / (2 * scale);
        return scale * (hurwitz(s, alpha / 2, t) - hurwitz(s, alpha / 2 + 0.5, t));
    }
    if (z == 0.0) return std::pow(alpha, -s);

    const double az = std::abs(z);
    double sum = 0.0, comp = 0.0;
    double zn = 1.0;
    for (long long n = 0; n < term_budget; ++n) {
        double term = zn * std::pow(n + alpha, -s);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        // Bound the tail that starts at index n + 1.
        zn *= z;
        const double x = n + 1 + alpha;
        const double next = std::abs(zn) * std::pow(x, -s);
        double bound = std::numeric_limits<double>::infinity();
        const double rho = az * (s >= 0 ? 1.0 : std::pow((x + 1) / x, -s));
        if (rho < 1) bound = next / (1 - rho);
        if (z < 0 && s >= 0) bound = std::min(bound, next);
        if (s > 1) bound = std::min(bound, std::abs(zn) * (std::pow(x, -s) + x * std::pow(x, -s) / (s - 1)));
        if (bound <= abs_tol) return sum;
    }
    throw BudgetExceeded("lerch_phi: term budget exhausted (|z| too close to 1)", term_budget);
}

}  // namespace detail

double hurwitz_zeta(double s, double alpha, Tolerance tol) {
    require_finite(s, "s");
    require_finite(alpha, "alpha");
    require_above(s, 1.0, "s > 1");
    require_above(alpha, 0.0, "alpha > 0");
    return detail::hurwitz(s, alpha, tol.abs_tol);
}

double riemann_zeta(double s, Tolerance tol) {
    require_finite(s, "s");
    require_above(s, 1.0, "s > 1");
    return detail::hurwitz(s, 1.0, tol.abs_tol);
}

double hurwitz_tail_bound(double s, double alpha) {
    require_finite(s, "s");
    require_finite(alpha, "alpha");
    require_above(s, 1.0, "s > 1");
    require_above(alpha, 0.0, "alpha > 0");
    const double p = std::pow(alpha, -s);
    return p + alpha * p / (s - 1);
}

double dirichlet_eta(double s, Tolerance tol) {
    require_finite(s, "s");
    require_above(s, 1.0, "s > 1");
    const double factor = -std::expm1((1 - s) * std::log(2.0));
    return factor * detail::hurwitz(s, 1.0, tol.abs_tol / factor);
}

double lerch_phi(double z, double s, double alpha, Tolerance tol) {
    require_finite(z, "z");
    require_finite(s, "s");
    require_finite(alpha, "alpha");
    if (std::abs(z) > 1) throw DomainError("requires |z| <= 1 (got " + internal::num(z) + ")");
    require_above(alpha, 0.0, "alpha > 0");
    if (std::abs(z) == 1) require_above(s, 1.0, "s > 1 when |z| = 1");
    return detail::lerch(z, s, alpha, tol.abs_tol);
}

}  // namespace hzs
