// Acceptance run: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hzsums/closed_forms.hpp"
#include "hzsums/direct_sums.hpp"
#include "hzsums/error.hpp"
#include "hzsums/special.hpp"
#include "hzsums/transforms.hpp"
#include "hzsums/verification/oracles.hpp"
#include "hzsums_cli/app.hpp"
#include "series_checks.hpp"

using namespace hzs;

namespace {

// Direct sums are run at half the acceptance threshold so the certified
// bound and the closed-form error together stay below it.
const Tolerance kDirectTol{5e-10};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            else detail.str("");
            pass = false;
            detail << what;
        }
    }
};

class Tracker {
public:
    void worst(double diff) { max_diff_ = std::max(max_diff_, diff); }
    double max_diff() const { return max_diff_; }

private:
    double max_diff_ = 0.0;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

SumSpec spec_of(Family f, double s, int m = 0, double a = 1.0) {
    SumSpec spec;
    spec.family = f;
    spec.s = s;
    spec.m = m;
    spec.a = a;
    spec.tol = kDirectTol;
    return spec;
}

double direct_value(const SumSpec& spec) { return eval_direct(spec).value; }

bool same_coefficients(const ZetaCombination& form, const std::vector<Rational>& expected, int first_shift) {
    const auto coeffs = form.zeta_coefficients();
    if (static_cast<int>(coeffs.size()) != first_shift + static_cast<int>(expected.size())) return false;
    for (int i = 0; i < first_shift; ++i)
        if (coeffs[i] != 0) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (coeffs[first_shift + i] != expected[i]) return false;
    return true;
}

Outcome criterion1() {
    Outcome out;
    Tracker t;
    const auto t0 = Clock::now();
    const std::vector<double> a_grid{0.25, 1.0, 2.5, 9.75};
    for (double s : {2.5, 3.0, 4.0, 6.0, 10.0}) {
        const double d21 = std::abs(direct_value(spec_of(Family::KAPPA, s)) - kappa_closed(s));
        t.worst(d21);
        out.require(d21 <= 1e-9, "kappa at s=" + fmt("%g", s));
        for (double a : a_grid) {
            const double d = std::abs(direct_value(spec_of(Family::SHIFTED, s, 0, a)) - shifted_closed(s, a));
            t.worst(d);
            out.require(d <= 1e-9, "shifted at s=" + fmt("%g", s) + " a=" + fmt("%g", a));
        }
    }
    for (double s : {1.5, 2.0, 3.0, 7.0}) {
        const double d22 = std::abs(direct_value(spec_of(Family::KAPPA_ALT, s)) - kappa_alt_closed(s));
        t.worst(d22);
        out.require(d22 <= 1e-9, "alternating kappa at s=" + fmt("%g", s));
        for (double a : a_grid) {
            const double d =
                std::abs(direct_value(spec_of(Family::SHIFTED_ALT, s, 0, a)) - shifted_alt_closed(s, a));
            t.worst(d);
            out.require(d <= 1e-9, "alternating shifted at s=" + fmt("%g", s) + " a=" + fmt("%g", a));
        }
    }
    const double secs = seconds_since(t0);
    out.require(secs < 5.0, "runtime " + fmt("%.2f", secs) + " s");
    if (out.pass)
        out.detail << "48 points, max |lhs - rhs| = " << fmt("%.2e", t.max_diff()) << ", " << fmt("%.2f", secs)
                   << " s";
    return out;
}

Outcome criterion2() {
    Outcome out;
    Tracker t;
    for (int m = 1; m <= 3; ++m)
        for (double s : {m + 2.5, m + 4.0}) {
            const double d = std::abs(direct_value(spec_of(Family::MOMENT, s, m)) - moment_closed(s, m));
            t.worst(d);
            out.require(d <= 1e-9, "moment m=" + std::to_string(m) + " s=" + fmt("%g", s));
        }
    out.require(same_coefficients(moment_form(1), {Rational(1, 2), Rational(1, 2)}, 1), "m=1 coefficients");
    out.require(same_coefficients(moment_form(2), {Rational(1, 6), Rational(1, 2), Rational(1, 3)}, 1),
                "m=2 coefficients");
    out.require(same_coefficients(moment_form(3), {Rational(1, 4), Rational(1, 2), Rational(1, 4)}, 2),
                "m=3 coefficients");
    if (out.pass)
        out.detail << "6 points, max |lhs - rhs| = " << fmt("%.2e", t.max_diff())
                   << ", coefficient vectors exact";
    return out;
}

Outcome criterion3() {
    Outcome out;
    Tracker t;
    for (int m = 1; m <= 2; ++m)
        for (double s : {3.5, 5.0}) {
            const double d = std::abs(direct_value(spec_of(Family::MOMENT_ALT, s, m)) - moment_alt_closed(s, m));
            t.worst(d);
            out.require(d <= 1e-9, "alternating moment m=" + std::to_string(m) + " s=" + fmt("%g", s));
        }
    bool refused = false;
    try {
        moment_alt_closed(6.0, 3);
    } catch (const NoClosedForm&) {
        refused = true;
    }
    out.require(refused, "m=3 did not raise NoClosedForm");
    if (out.pass)
        out.detail << "4 points, max |lhs - rhs| = " << fmt("%.2e", t.max_diff()) << ", m=3 -> NoClosedForm";
    return out;
}

Outcome criterion4() {
    Outcome out;
    Tracker t;
    const std::vector<std::pair<int, double>> points{{1, 4.0}, {1, 5.0}, {2, 5.0}, {2, 6.0}};
    double split_diff = 0.0;
    for (const auto& [m, s] : points) {
        const double d =
            std::abs(direct_value(spec_of(Family::EVEN_ARG_MOMENT, s, m)) - even_arg_moment_closed(s, m));
        t.worst(d);
        out.require(d <= 1e-9, "even-argument m=" + std::to_string(m) + " s=" + fmt("%g", s));
        const auto [via_moments, direct_form] = combination_split(s, m);
        split_diff = std::max(split_diff, std::abs(via_moments - direct_form));
    }
    out.require(split_diff <= 1e-10, "combination_split differs by " + fmt("%.2e", split_diff));
    if (out.pass)
        out.detail << "4 points, max |lhs - rhs| = " << fmt("%.2e", t.max_diff())
                   << ", split agreement " << fmt("%.2e", split_diff);
    return out;
}

Outcome criterion5() {
    Outcome out;
    const auto t0 = Clock::now();
    struct Target {
        double a;
        std::int64_t lo, hi, rhs_max;
    };
    std::ostringstream summary;
    for (const Target& tg : {Target{0.1, 1000, 2500, 20}, Target{0.01, 10000, 30000, 3}}) {
        SumSpec spec;
        spec.family = Family::GENERAL_AB;
        spec.s = 4.0;
        spec.a = tg.a;
        spec.b = 1.0;
        spec.tol = Tolerance{1e-8};
        const TransformReport r = compare_sides(spec);
        const std::string at = " at a=" + fmt("%g", tg.a);
        out.require(r.lhs_terms >= tg.lo && r.lhs_terms <= tg.hi,
                    "direct terms " + std::to_string(r.lhs_terms) + at + " outside [" + std::to_string(tg.lo) +
                        ", " + std::to_string(tg.hi) + "]");
        out.require(r.rhs_terms <= tg.rhs_max, "transformed terms " + std::to_string(r.rhs_terms) + at +
                                                   " > " + std::to_string(tg.rhs_max));
        out.require(r.agreement <= 1e-8, "agreement " + fmt("%.2e", r.agreement) + at);
        summary << "a=" << tg.a << ": direct " << r.lhs_terms << ", transformed " << r.rhs_terms
                << ", agreement " << fmt("%.1e", r.agreement) << "; ";
    }
    const double secs = seconds_since(t0);
    out.require(secs < 30.0, "runtime " + fmt("%.2f", secs) + " s");
    if (out.pass)
        out.detail << summary.str() << fmt("%.2f", secs) << " s";
    else
        out.detail << " [" << summary.str() << fmt("%.2f", secs) << " s]";
    return out;
}

Outcome criterion6() {
    Outcome out;
    struct P {
        double s, a, b, c;
    };
    double worst = 0.0;
    for (const P& p : {P{3, 0.5, 1, 0.7}, P{2, 0.25, 0.5, 1.2}})
        for (Sign sign : {Sign::PLUS, Sign::MINUS}) {
            SumSpec spec;
            spec.family = Family::EXP_WEIGHTED;
            spec.s = p.s;
            spec.a = p.a;
            spec.b = p.b;
            spec.c = p.c;
            spec.sign = sign;
            spec.tol = Tolerance{5e-9};
            const double d = std::abs(eval_direct(spec).value -
                                      s_pm_transformed(p.s, p.a, p.b, p.c, sign, spec.tol).value);
            worst = std::max(worst, d);
            out.require(d <= 1e-8, "weighted sum at s=" + fmt("%g", p.s) + " differs by " + fmt("%.2e", d));
        }
    // c = 0: the kernel Phi(+-1, s, x) is the Hurwitz zeta function (or its
    // alternating split), so the weighted transform is the unweighted one.
    const Tolerance tol{1e-10};
    for (double s : {2.5, 3.0, 4.0})
        for (double a : {0.1, 0.5, 2.0})
            for (double b : {0.7, 1.0}) {
                out.require(s_pm_transformed(s, a, b, 0.0, Sign::PLUS, tol).value ==
                                kappa_ab_transformed(s, a, b, tol).value,
                            "c=0 PLUS reduction not exact at s=" + fmt("%g", s));
                out.require(s_pm_transformed(s, a, b, 0.0, Sign::MINUS, tol).value ==
                                kappa_ab_alt_transformed(s, a, b, tol).value,
                            "c=0 MINUS reduction not exact at s=" + fmt("%g", s));
            }
    double phi_diff = 0.0;
    for (double s : {2.0, 3.0, 4.5})
        for (double x : {0.3, 1.0, 7.5}) {
            out.require(lerch_phi(1.0, s, x) == hurwitz_zeta(s, x), "Phi(1) != zeta");
            const double split = std::pow(2.0, -s) * (hurwitz_zeta(s, x / 2) - hurwitz_zeta(s, x / 2 + 0.5));
            phi_diff = std::max(phi_diff, std::abs(lerch_phi(-1.0, s, x) - split));
        }
    out.require(phi_diff <= 1e-11, "Phi(-1) split differs by " + fmt("%.2e", phi_diff));
    if (out.pass)
        out.detail << "4 weighted points, max diff " << fmt("%.2e", worst)
                   << "; c=0 reduction bit-exact on 18 points; Phi(-1) split " << fmt("%.1e", phi_diff);
    return out;
}

Outcome criterion7() {
    Outcome out;
    double worst = 0.0;
    for (double s : {2.5, 3.0, 4.0, 6.0})
        for (double alpha : {0.5, 1.0, 2.0, 10.0}) {
            const auto spec = verification::make_quadrature_spec(s, alpha, 1e-11);
            const double d = std::abs(verification::quad_hurwitz(s, alpha, spec) - hurwitz_zeta(s, alpha));
            worst = std::max(worst, d);
            out.require(d <= 1e-9, "quadrature at s=" + fmt("%g", s) + " alpha=" + fmt("%g", alpha));
        }
    double worst_eta = 0.0;
    for (double s : {1.5, 2.0, 3.0})
        for (double alpha : {0.4, 1.0, 2.0}) {
            const auto spec = verification::make_quadrature_spec(s, alpha, 1e-10);
            const double rhs =
                std::pow(2.0, -s) * (hurwitz_zeta(s, alpha / 2) - hurwitz_zeta(s, alpha / 2 + 0.5));
            const double d = std::abs(verification::quad_eta_split(s, alpha, spec) - rhs);
            worst_eta = std::max(worst_eta, d);
            out.require(d <= 1e-8, "split integral at s=" + fmt("%g", s) + " alpha=" + fmt("%g", alpha));
        }
    out.require(checks::eulerian_matches_brute(8, 50), "Eulerian series vs brute-force power sums");
    out.require(checks::faulhaber_matches_brute(8, 50), "Faulhaber polynomials vs brute-force power sums");
    if (out.pass)
        out.detail << "quadrature max diff " << fmt("%.2e", worst) << ", split integral " << fmt("%.2e", worst_eta)
                   << ", Eulerian/Faulhaber exact for m<=8, n<=50";
    return out;
}

std::string cli_output(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    return std::to_string(code) + "\n" + o.str() + e.str();
}

Outcome criterion8() {
    Outcome out;
    // Tail soundness: the certified bound at tol covers the change seen when
    // tightening to tol/100.
    int sound = 0;
    const double tol = 1e-7;
    std::vector<SumSpec> specs;
    for (double s : {2.5, 4.0}) specs.push_back(spec_of(Family::KAPPA, s));
    for (double s : {1.5, 3.0}) specs.push_back(spec_of(Family::KAPPA_ALT, s));
    specs.push_back(spec_of(Family::SHIFTED, 3.0, 0, 0.25));
    specs.push_back(spec_of(Family::SHIFTED_ALT, 2.0, 0, 2.5));
    specs.push_back(spec_of(Family::MOMENT, 5.5, 2));
    specs.push_back(spec_of(Family::MOMENT_ALT, 4.0, 2));
    specs.push_back(spec_of(Family::EVEN_ARG_MOMENT, 5.0, 1));
    {
        SumSpec g = spec_of(Family::GENERAL_AB, 3.0, 0, 0.3);
        g.b = 0.7;
        specs.push_back(g);
        g.family = Family::EXP_WEIGHTED;
        g.c = 0.4;
        g.sign = Sign::MINUS;
        specs.push_back(g);
    }
    for (SumSpec spec : specs) {
        spec.tol = Tolerance{tol};
        const SumResult coarse = eval_direct(spec);
        spec.tol = Tolerance{tol / 100};
        const SumResult fine = eval_direct(spec);
        const bool ok = std::abs(coarse.value - fine.value) <= coarse.tail_bound;
        sound += ok;
        out.require(ok, "tail bound unsound for " + std::string(to_string(spec.family)));
        if (spec.family == Family::GENERAL_AB || spec.family == Family::EXP_WEIGHTED) {
            spec.tol = Tolerance{tol};
            const SumResult tc = eval_transformed(spec);
            spec.tol = Tolerance{tol / 100};
            const SumResult tf = eval_transformed(spec);
            out.require(std::abs(tc.value - tf.value) <= tc.tail_bound,
                        "transformed tail bound unsound for " + std::string(to_string(spec.family)));
        }
    }
    // zeta(s, alpha) = alpha^-s + zeta(s, alpha + 1), within the two absolute
    // tolerances plus rounding.
    double shift = 0.0;
    bool shift_ok = true;
    const Tolerance zeta_tol{1e-13};
    for (double s : {1.25, 2.0, 4.0, 8.0})
        for (double alpha : {0.1, 1.0, 10.0, 1000.0}) {
            const double lhs = hurwitz_zeta(s, alpha, zeta_tol);
            const double rhs = std::pow(alpha, -s) + hurwitz_zeta(s, alpha + 1, zeta_tol);
            const double diff = std::abs(lhs - rhs);
            shift = std::max(shift, diff);
            shift_ok = shift_ok && diff <= 2 * zeta_tol.abs_tol + 16 * 0x1p-52 * std::abs(lhs);
        }
    out.require(shift_ok, "shift identity violated, max diff " + fmt("%.2e", shift));
    out.require(checks::eulerian_symmetric_with_factorial_sums(12), "Eulerian symmetry / m! row sums");
    bool deterministic = true;
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"identity-check", "all", "--grid", "default", "--format", "json"},
             {"table", "--identity", "2.1", "--s-grid", "2.5:10:0.5", "--format", "csv"},
             {"table", "--family", "forms", "--format", "json"},
             {"eval", "--family", "general-ab", "--s", "4", "--a", "0.01", "--format", "json"}})
        deterministic = deterministic && cli_output(args) == cli_output(args);
    out.require(deterministic, "CLI output differs between identical runs");
    if (out.pass)
        out.detail << "tail bounds sound on " << sound << " sums, shift identity max diff " << fmt("%.1e", shift)
                   << ", Eulerian symmetry and m! sums exact, CLI output deterministic";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail.str("");
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("Criterion %zu: %s - %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
