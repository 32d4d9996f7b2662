#include "lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hzsums/error.hpp"
#include "hzsums/special.hpp"

namespace hzs::internal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// How the tail after N terms is enclosed.
enum class Mode {
    PLAIN,       // zeta kernel, all terms positive, no damping
    ALT_CM,      // alternating, completely monotone magnitudes (m == 0)
    ALT_MOMENT,  // alternating with k^m weight
    EXP_PLUS,    // positive terms with e^(-cj) damping
    LERCH,       // Phi(z, s, .) kernel, positive outer sum
};

Mode mode_of(const Lattice& lat) {
    if (lat.kernel == Kernel::LERCH) return Mode::LERCH;
    if (lat.alternating) return lat.m > 0 ? Mode::ALT_MOMENT : Mode::ALT_CM;
    return lat.c > 0 ? Mode::EXP_PLUS : Mode::PLAIN;
}

// Neumaier compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
        else comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

class Engine {
public:
    Engine(const Lattice& lat, double abs_tol)
        : lat_(lat), tol_(abs_tol), mode_(mode_of(lat)) {}

    double alpha(std::int64_t j) const { return lat_.x0 + lat_.step * static_cast<double>(j); }

    double weight(std::int64_t j) const {
        double w = lat_.scale;
        if (lat_.m > 0) w *= std::pow(static_cast<double>(j + 1), lat_.m);
        if (lat_.c > 0) w *= std::exp(-lat_.c * static_cast<double>(j));
        return w;
    }

    // Asymptotic size of F(x), used for estimates only.
    double kernel_approx(double x) const {
        const double s = lat_.s;
        if (lat_.kernel == Kernel::LERCH) return std::pow(x, -s) / (1 - lat_.z);
        return std::pow(x, 1 - s) / (s - 1) + std::pow(x, -s) / 2;
    }

    double kernel(double x, double tol) const {
        if (lat_.kernel == Kernel::LERCH) return hzs::detail::lerch(lat_.z, lat_.s, x, tol);
        return hzs::detail::hurwitz(lat_.s, x, tol);
    }

    // Signed term and the absolute evaluation error allowed for it.
    double term(std::int64_t j, double term_tol) const {
        const double w = weight(j);
        if (w == 0) return 0.0;
        double v = w * kernel(alpha(j), term_tol / w);
        return (lat_.alternating && (j % 2 == 1)) ? -v : v;
    }

    // Bound on the R part of zeta(s, x) = x^(1-s)/(s-1) + x^(-s)/2 + R summed
    // over the tail, including the k^m weight.
    double remainder_bound(double x) const {
        const double s = lat_.s;
        const double a = lat_.step;
        return lat_.scale * std::pow(a, -lat_.m) * (s / 12) * power_sum_bound(x, a, s + 1 - lat_.m);
    }

    // Main part x^m (x^(1-s)/(s-1) + x^(-s)/2) / step^m with scale.
    double moment_main(double x) const {
        const double s = lat_.s;
        const int m = lat_.m;
        return lat_.scale * std::pow(lat_.step, -m) *
               (std::pow(x, m + 1 - s) / (s - 1) + std::pow(x, m - s) / 2);
    }

    double lerch_width(double x) const {
        const double s = lat_.s, z = lat_.z, a = lat_.step;
        const double kappa = std::abs(z) / ((1 - z) * (1 - z));
        return lat_.scale * s * kappa * power_sum_bound(x, a, s + 1);
    }

    double lerch_zeta_upper(double x) const {
        const double s = lat_.s, a = lat_.step;
        if (lat_.z <= 0 || s <= 2) return kInf;
        return lat_.scale * (power_sum_bound(x, a, s - 1) / (s - 1) + power_sum_bound(x, a, s) / 2 +
                             (s / 12) * power_sum_bound(x, a, s + 1));
    }

    double exp_upper(std::int64_t n, double u_n) const {
        const double s = lat_.s, a = lat_.step;
        double geo = u_n / -std::expm1(-lat_.c);
        double plain = kInf;
        if (s > 2) {
            const double x = alpha(n);
            plain = weight(n) * (power_sum_bound(x, a, s) + power_sum_bound(x, a, s - 1) / (s - 1));
        }
        return std::min(geo, plain);
    }

    // Approximate tail half-width after n terms, from elementary bounds and
    // asymptotic term sizes.
    double approx_halfwidth(std::int64_t n) const {
        const double x = alpha(n);
        switch (mode_) {
            case Mode::PLAIN:
                return remainder_bound(x) / 2;
            case Mode::ALT_CM: {
                double u0 = weight(n) * kernel_approx(x);
                double u1 = weight(n + 1) * kernel_approx(alpha(n + 1));
                return std::max(u0 - u1, 0.0) / 4;
            }
            case Mode::ALT_MOMENT:
                return std::max(moment_main(x) - moment_main(alpha(n + 1)), 0.0) / 4 + remainder_bound(x);
            case Mode::EXP_PLUS: {
                double u0 = weight(n) * kernel_approx(x);
                return std::max(exp_upper(n, u0) - u0, 0.0) / 2;
            }
            case Mode::LERCH:
                return std::min(lerch_width(x), lerch_zeta_upper(x)) / 2;
        }
        return kInf;
    }

    struct Tail {
        double estimate;
        double halfwidth;
    };

    // Certified enclosure of the tail starting at index n. u_n and u_next are
    // the computed terms n and n+1 (with evaluation error err_n, err_next).
    Tail tail(std::int64_t n, double u_n, double u_next, double err_n, double err_next) const {
        const double x = alpha(n);
        const double sign = (lat_.alternating && (n % 2 == 1)) ? -1.0 : 1.0;
        switch (mode_) {
            case Mode::PLAIN:
                return {kInf, remainder_bound(x) / 2};
            case Mode::ALT_CM: {
                double a0 = std::abs(u_n), a1 = std::abs(u_next);
                double d = std::max(a0 - a1, 0.0);
                return {sign * (a0 / 2 + d / 4), d / 4 + err_n + err_next};
            }
            case Mode::ALT_MOMENT: {
                double f0 = moment_main(x), f1 = moment_main(alpha(n + 1));
                double d = std::max(f0 - f1, 0.0);
                return {sign * (f0 / 2 + d / 4), d / 4 + remainder_bound(x)};
            }
            case Mode::EXP_PLUS: {
                double u0 = std::abs(u_n);
                double hi = exp_upper(n, u0);
                return {(u0 + hi) / 2, (hi - u0) / 2 + 2 * err_n};
            }
            case Mode::LERCH:
                return {kInf, std::min(lerch_width(x), lerch_zeta_upper(x)) / 2};
        }
        return {kInf, kInf};
    }

    // PLAIN and LERCH tails need Hurwitz evaluations of the power parts;
    // done once, after the stopping index is known. Returns the estimate and
    // adds the enclosure half-width plus evaluation error to `bound`.
    double final_tail(std::int64_t n, double& bound) const {
        const double x = alpha(n);
        const double s = lat_.s, a = lat_.step;
        const double budget = tol_ / 4;
        if (mode_ == Mode::PLAIN) {
            const int m = lat_.m;
            const double p1 = s - 1 - m, p2 = s - m;
            const double w = lat_.scale * std::pow(a, -m);
            const double c1 = w * std::pow(a, -p1) / (s - 1);
            const double c2 = w * std::pow(a, -p2) / 2;
            const double main = c1 * hzs::detail::hurwitz(p1, x / a, budget / (2 * c1)) +
                                c2 * hzs::detail::hurwitz(p2, x / a, budget / (2 * c2));
            const double r = remainder_bound(x);
            bound += r / 2 + budget;
            return main + r / 2;
        }
        // LERCH
        const double z = lat_.z;
        const double cm = lat_.scale * std::pow(a, -s) / (1 - z);
        const double main = cm * hzs::detail::hurwitz(s, x / a, budget / cm);
        const double w1 = lerch_width(x);
        double lo, hi;
        if (z < 0) {
            lo = main;
            hi = main + w1;
        } else {
            lo = std::max(main - w1, 0.0);
            hi = std::min(main, lerch_zeta_upper(x));
            if (hi < lo) hi = lo;
        }
        bound += (hi - lo) / 2 + budget;
        return (lo + hi) / 2;
    }

    Mode mode() const { return mode_; }

private:
    const Lattice& lat_;
    double tol_;
    Mode mode_;
};

// Per-term share of abs_tol/2: 1/(2K) for j < K, then K/(2j(j+1)) so that
// the total never exceeds abs_tol/2 whatever the final count.
double term_tolerance(double abs_tol, std::int64_t j, std::int64_t k_est) {
    const double k = static_cast<double>(std::max<std::int64_t>(k_est, 1));
    const double jd = static_cast<double>(j);
    double share = j < k_est ? 1 / (2 * k) : k / (2 * std::max(jd, 1.0) * (jd + 1));
    return std::max(abs_tol / 2 * share, 1e-300);
}

}  // namespace

double power_sum_bound(double x, double step, double p) {
    return std::pow(x, -p) + x * std::pow(x, -p) / (step * (p - 1));
}

std::int64_t estimate_terms(const Lattice& lat, double abs_tol, std::int64_t budget) {
    Engine eng(lat, abs_tol);
    const double target = abs_tol / 4;
    auto ok = [&](std::int64_t n) { return eng.approx_halfwidth(n) <= target; };
    if (ok(1)) return 1;
    std::int64_t lo = 1, hi = 2;
    while (!ok(hi)) {
        if (hi > budget) return budget + 1;
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (ok(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

LatticeSum sum_lattice(const Lattice& lat, double abs_tol, std::int64_t budget) {
    Engine eng(lat, abs_tol);
    const std::int64_t k_est = std::min(estimate_terms(lat, abs_tol, budget), budget);
    const double target = abs_tol / 4;

    Accumulator acc;
    double eval_err = 0.0;
    double tol_cur = term_tolerance(abs_tol, 0, k_est);
    double u_cur = eng.term(0, tol_cur);

    for (std::int64_t n = 0;; ++n) {
        // u_cur is term n; the partial sum holds terms 0..n-1.
        if (n >= 1) {
            double tol_next = term_tolerance(abs_tol, n + 1, k_est);
            double u_next = 0.0;
            bool need_next = eng.mode() == Mode::ALT_CM;
            if (need_next) u_next = eng.term(n + 1, tol_next);
            auto t = eng.tail(n, u_cur, u_next, tol_cur, tol_next);
            if (t.halfwidth <= target) {
                double bound = eval_err + t.halfwidth;
                double tail_value = t.estimate;
                if (!std::isfinite(tail_value)) {
                    bound = eval_err;
                    tail_value = eng.final_tail(n, bound);
                }
                acc.add(tail_value);
                return {acc.value(), n, bound};
            }
            if (n >= budget) {
                throw BudgetExceeded("term budget of " + std::to_string(budget) +
                                         " exhausted before the tail bound reached the tolerance",
                                     n);
            }
            acc.add(u_cur);
            eval_err += tol_cur;
            if (need_next) {
                u_cur = u_next;
                tol_cur = tol_next;
            } else {
                tol_cur = term_tolerance(abs_tol, n + 1, k_est);
                u_cur = eng.term(n + 1, tol_cur);
            }
        } else {
            acc.add(u_cur);
            eval_err += tol_cur;
            tol_cur = term_tolerance(abs_tol, 1, k_est);
            u_cur = eng.term(1, tol_cur);
        }
    }
}

}  // namespace hzs::internal
