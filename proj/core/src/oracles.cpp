#include "hzsums/verification/oracles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "check.hpp"
#include "hzsums/error.hpp"
#include "hzsums/special.hpp"

namespace hzs::verification {

namespace {

constexpr double kTMax = 4.5;

void check_args(double s, double alpha, double s_min) {
    internal::require_finite(s, "s");
    internal::require_finite(alpha, "alpha");
    internal::require_at_least(s, s_min, "s >= " + internal::num(s_min));
    internal::require_above(alpha, 0, "alpha > 0");
}

void check_spec(const QuadratureSpec& spec) {
    if (!(spec.upper_cutoff > 0) || !std::isfinite(spec.upper_cutoff)) {
        throw DomainError("quadrature upper_cutoff must be positive and finite");
    }
    if (spec.levels < 1 || spec.levels > kMaxQuadratureLevels) {
        throw DomainError("quadrature levels must lie in [1, 12]");
    }
    if (!(spec.target_abs > 0)) throw DomainError("quadrature target_abs must be positive");
}

// Upper bound on int_X^inf x^(s-1) e^(-alpha x) dx / Gamma(s) / (1 - e^(-X));
// infinite while X is too small for the bound to apply.
double tail_bound(double s, double alpha, double x) {
    const double rate = alpha - (s - 1) / x;
    if (rate <= 0) return INFINITY;
    return std::exp((s - 1) * std::log(x) - alpha * x - std::lgamma(s)) / rate / -std::expm1(-x);
}

// Integrand sign: +1 for 1/(1 - e^-x), -1 for 1/(1 + e^-x).
std::vector<double> tanh_sinh_levels(double s, double alpha, int sign, const QuadratureSpec& spec) {
    check_spec(spec);
    const double big_x = spec.upper_cutoff;
    const double half_pi = std::numbers::pi / 2;
    auto f = [&](double x) {
        const double denom = sign > 0 ? -std::expm1(-x) : 1 + std::exp(-x);
        return std::exp((s - 1) * std::log(x) - alpha * x) / denom;
    };
    // Contribution of node t with unit step.
    auto node = [&](double t) {
        const double u = half_pi * std::sinh(t);
        const double e = std::exp(-2 * std::abs(u));
        // x / X = 1 / (1 + e^(-2u)), computed without cancellation near 0.
        const double frac = u >= 0 ? 1 / (1 + e) : e / (1 + e);
        const double x = big_x * frac;
        if (x <= 0) return 0.0;
        const double ch = std::cosh(u);
        const double w = big_x * half_pi * std::cosh(t) / (2 * ch * ch);
        return w * f(x);
    };

    std::vector<double> out;
    double h = 1.0;
    double sum = node(0.0);
    for (int k = 1; k <= static_cast<int>(kTMax); ++k) sum += node(k) + node(-k);
    out.push_back(sum * h);
    for (int level = 1; level <= spec.levels; ++level) {
        h /= 2;
        // Add the new odd nodes.
        for (double t = h; t <= kTMax; t += 2 * h) sum += node(t) + node(-t);
        out.push_back(sum * h);
        const double diff = std::abs(out[out.size() - 1] - out[out.size() - 2]);
        if (level >= 4 && diff <= spec.target_abs / 10) break;
    }
    const double inv_gamma = 1 / gamma_fn(s);
    for (auto& v : out) v *= inv_gamma;
    return out;
}

double converged(const std::vector<double>& levels, const QuadratureSpec& spec) {
    const std::size_t n = levels.size();
    if (n < 2 || std::abs(levels[n - 1] - levels[n - 2]) > spec.target_abs / 10) {
        throw ConvergenceError("quadrature did not converge within " + std::to_string(spec.levels) + " levels");
    }
    return levels.back();
}

void check_power_args(int m, int n) {
    if (m < 0 || m > 12) throw DomainError("requires 0 <= m <= 12 (got " + std::to_string(m) + ")");
    if (n < 1 || n > 10'000) throw DomainError("requires 1 <= n <= 10000 (got " + std::to_string(n) + ")");
}

}  // namespace

QuadratureSpec make_quadrature_spec(double s, double alpha, double target_abs, int levels) {
    internal::require_finite(s, "s");
    internal::require_above(alpha, 0, "alpha > 0");
    QuadratureSpec spec;
    spec.levels = levels;
    spec.target_abs = target_abs;
    double x = std::max(1.0, 2 * (s - 1) / alpha);
    while (tail_bound(s, alpha, x) > target_abs / 10) x *= 1.25;
    spec.upper_cutoff = x;
    check_spec(spec);
    return spec;
}

std::vector<double> quad_hurwitz_levels(double s, double alpha, const QuadratureSpec& spec) {
    check_args(s, alpha, 2.5);
    return tanh_sinh_levels(s, alpha, +1, spec);
}

std::vector<double> quad_eta_split_levels(double s, double alpha, const QuadratureSpec& spec) {
    check_args(s, alpha, 1.5);
    return tanh_sinh_levels(s, alpha, -1, spec);
}

double quad_hurwitz(double s, double alpha, const QuadratureSpec& spec) {
    return converged(quad_hurwitz_levels(s, alpha, spec), spec);
}

double quad_eta_split(double s, double alpha, const QuadratureSpec& spec) {
    return converged(quad_eta_split_levels(s, alpha, spec), spec);
}

BigInt brute_power_sum(int m, int n) {
    check_power_args(m, n);
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k) acc += boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(m));
    return acc;
}

BigInt brute_alt_power_sum(int m, int n) {
    check_power_args(m, n);
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k) {
        BigInt t = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(m));
        if (k % 2 == 1) acc += t;
        else acc -= t;
    }
    return acc;
}

}  // namespace hzs::verification
