#include <cmath>
#include <numbers>

#include "hzsums/closed_forms.hpp"
#include "hzsums/direct_sums.hpp"
#include "hzsums/error.hpp"
#include "hzsums/transforms.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace hzs;

namespace {

constexpr double pi = std::numbers::pi;

SumSpec lattice(Family f, double s, double a, double b, double tol, double c = 0, Sign sign = Sign::PLUS) {
    SumSpec spec;
    spec.family = f;
    spec.s = s;
    spec.a = a;
    spec.b = b;
    spec.c = c;
    spec.sign = sign;
    spec.tol = Tolerance(tol);
    return spec;
}

}  // namespace

TEST_SUITE("kappa(s; a, b)") {
    TEST_CASE("examples") {
        const Tolerance tol(1e-10);
        auto r = kappa_ab_transformed(4, 1, 1, tol);
        CHECK(r.method == Method::TRANSFORMED);
        CHECK_NEAR(r.value, ref::kZeta3, r.tail_bound);

        r = kappa_ab_transformed(4, 0.1, 1, Tolerance(1e-8));
        CHECK_NEAR(r.value, ref::kAB4_01_1, r.tail_bound);
        const auto d = eval_direct(lattice(Family::GENERAL_AB, 4, 0.1, 1, 1e-8));
        CHECK_NEAR(r.value, d.value, 1e-8);

        r = kappa_ab_transformed(4, 0.01, 1, Tolerance(1e-8));
        CHECK_NEAR(r.value, ref::kAB4_001_1, r.tail_bound);
    }

    TEST_CASE("alternating examples") {
        auto r = kappa_ab_alt_transformed(2, 1, 1, Tolerance(1e-10));
        CHECK_NEAR(r.value, pi * pi / 8, r.tail_bound + 1e-14);
        r = kappa_ab_alt_transformed(3, 0.1, 1, Tolerance(1e-9));
        CHECK_NEAR(r.value, ref::kABAlt3_01_1, r.tail_bound);
        r = kappa_ab_alt_transformed(1.5, 0.05, 0.7, Tolerance(1e-9));
        CHECK_NEAR(r.value, ref::kABAlt1_5_005_07, r.tail_bound);
    }

    TEST_CASE("corollary") {
        auto r = corollary_b_equals_a(4, 1, Sign::PLUS, Tolerance(1e-10));
        CHECK_NEAR(r.value, ref::kZeta3, r.tail_bound);
        r = corollary_b_equals_a(3, 0.2, Sign::PLUS, Tolerance(1e-9));
        CHECK_NEAR(r.value, ref::kCorollary3_02, r.tail_bound + 1e-13);
        r = corollary_b_equals_a(2, 0.5, Sign::MINUS, Tolerance(1e-9));
        CHECK_NEAR(r.value, ref::kCorollaryAlt2_05, r.tail_bound);
        CHECK_THROWS_AS(corollary_b_equals_a(2, 0.5, Sign::PLUS), DomainError);
    }

    TEST_CASE("domain") {
        CHECK_THROWS_AS(kappa_ab_transformed(2, 0.1, 1), DomainError);
        CHECK_THROWS_AS(kappa_ab_transformed(4, 0, 1), DomainError);
        CHECK_THROWS_AS(kappa_ab_transformed(4, 1, 0), DomainError);
        CHECK_THROWS_AS(kappa_ab_alt_transformed(1, 0.5, 1), DomainError);
    }

    TEST_CASE("identity over the parameter grid") {
        for (double s : {2.5, 4.0, 6.0})
            for (double a : {0.05, 0.1, 0.5, 1.0, 2.0})
                for (double b : {0.3, 1.0, 2.7}) {
                    CAPTURE(s);
                    CAPTURE(a);
                    CAPTURE(b);
                    const auto spec = lattice(Family::GENERAL_AB, s, a, b, 1e-9);
                    const auto d = eval_direct(spec);
                    const auto t = eval_transformed(spec);
                    CHECK(std::abs(d.value - t.value) <= d.tail_bound + t.tail_bound + 1e-13 * std::abs(d.value));
                }
        for (double s : {2.0, 3.0})
            for (double a : {0.1, 0.5, 2.0})
                for (double b : {0.3, 1.0}) {
                    const auto spec = lattice(Family::GENERAL_AB_ALT, s, a, b, 1e-9);
                    const auto d = eval_direct(spec);
                    const auto t = eval_transformed(spec);
                    CHECK(std::abs(d.value - t.value) <= d.tail_bound + t.tail_bound + 1e-14);
                }
    }

    TEST_CASE("parameter inversion") {
        // sum_k zeta(s, ka+b) = a^-s sum_n zeta(s, n/a + b/a); transforming
        // the right-hand sum again (parameters 1/a, b/a) must recover it.
        for (double a : {0.5, 2.0}) {
            const double s = 4, b = 0.7;
            const auto lhs = eval_direct(lattice(Family::GENERAL_AB, s, a, b, 1e-10));
            const auto back = kappa_ab_transformed(s, 1 / a, b / a, Tolerance(1e-10));
            CHECK_NEAR(std::pow(a, -s) * back.value, lhs.value, 1e-9);
        }
    }
}

TEST_SUITE("S_pm") {
    TEST_CASE("examples") {
        auto r = s_pm_transformed(4, 1, 1, 0, Sign::PLUS, Tolerance(1e-10));
        CHECK_NEAR(r.value, ref::kZeta3, r.tail_bound);
        r = s_pm_transformed(3, 0.5, 1, 0.7, Sign::PLUS, Tolerance(1e-9));
        CHECK_NEAR(r.value, ref::kExpPlus, r.tail_bound);
        r = s_pm_transformed(2, 0.25, 0.5, 1.2, Sign::MINUS, Tolerance(1e-9));
        CHECK_NEAR(r.value, ref::kExpMinus, r.tail_bound);
    }

    TEST_CASE("c = 0 reduces exactly") {
        const Tolerance tol(1e-10);
        CHECK(s_pm_transformed(4, 0.3, 1.1, 0, Sign::PLUS, tol).value == kappa_ab_transformed(4, 0.3, 1.1, tol).value);
        CHECK(s_pm_transformed(3, 0.3, 1.1, 0, Sign::MINUS, tol).value ==
              kappa_ab_alt_transformed(3, 0.3, 1.1, tol).value);
        CHECK_THROWS_AS(s_pm_transformed(1.5, 0.3, 1.1, 0, Sign::PLUS), DomainError);
        CHECK_NOTHROW(s_pm_transformed(1.5, 0.3, 1.1, 0.5, Sign::PLUS, Tolerance(1e-8)));
    }

    TEST_CASE("continuity in c") {
        // The Lerch kernel needs about log(1/tol)/c terms, so c is kept
        // moderate; the derivative in c is O(1) here.
        const Tolerance tol(1e-8);
        const double v0 = s_pm_transformed(4, 1, 1, 0, Sign::PLUS, tol).value;
        const double v1 = s_pm_transformed(4, 1, 1, 1e-3, Sign::PLUS, tol).value;
        CHECK(v1 < v0);
        CHECK(v0 - v1 <= 1e-2);
    }

    TEST_CASE("against direct weighted summation") {
        for (double c : {0.25, 1.0, 3.0})
            for (Sign sign : {Sign::PLUS, Sign::MINUS}) {
                const auto spec = lattice(Family::EXP_WEIGHTED, 2.5, 0.4, 0.9, 1e-9, c, sign);
                const auto rep = compare_sides(spec);
                CHECK(rep.agreement <= 2e-9);
            }
    }
}

TEST_SUITE("strategy") {
    TEST_CASE("term count estimates") {
        const Tolerance tol(1e-8);
        const auto d1 = term_count_estimate(4, 0.1, 1, tol, Side::DIRECT);
        CHECK(d1 >= 1000);
        CHECK(d1 <= 2500);
        const auto d2 = term_count_estimate(4, 0.01, 1, tol, Side::DIRECT);
        CHECK(d2 >= 10000);
        CHECK(d2 <= 30000);
        // The transformed side is far cheaper for small a.
        CHECK(term_count_estimate(4, 0.01, 1, tol, Side::TRANSFORMED) * 100 < d2);
    }

    TEST_CASE("estimates are within a factor of two of actual counts") {
        for (double a : {0.05, 0.1, 0.5, 2.0})
            for (Family f : {Family::GENERAL_AB, Family::GENERAL_AB_ALT}) {
                const auto spec = lattice(f, 4, a, 1, 1e-8);
                const auto ed = term_count_estimate(spec, Side::DIRECT);
                const auto et = term_count_estimate(spec, Side::TRANSFORMED);
                const auto ad = eval_direct(spec).terms_used;
                const auto at = eval_transformed(spec).terms_used;
                CHECK(ed <= 2 * ad);
                CHECK(ad <= 2 * ed);
                CHECK(et <= 2 * at);
                CHECK(at <= 2 * et);
            }
    }

    TEST_CASE("choose_method") {
        CHECK(choose_method(lattice(Family::GENERAL_AB, 4, 0.01, 1, 1e-10)) == Method::TRANSFORMED);
        CHECK(choose_method(lattice(Family::GENERAL_AB, 4, 10, 1, 1e-10)) == Method::DIRECT);
        CHECK(choose_method(lattice(Family::GENERAL_AB, 4, 1, 1, 1e-10)) == Method::TRANSFORMED);
        CHECK_THROWS_AS(choose_method(lattice(Family::KAPPA, 4, 1, 1, 1e-10)), DomainError);
    }

    TEST_CASE("selected side is never much more expensive") {
        for (double a : {0.02, 0.2, 1.0, 5.0, 20.0}) {
            const auto spec = lattice(Family::GENERAL_AB, 3.5, a, 0.8, 1e-8);
            const auto chosen = choose_method(spec);
            const auto d = eval_direct(spec).terms_used;
            const auto t = eval_transformed(spec).terms_used;
            if (chosen == Method::DIRECT) CHECK(d <= 2 * t);
            else CHECK(t <= 2 * d);
        }
    }

    TEST_CASE("report") {
        const auto rep = compare_sides(lattice(Family::GENERAL_AB, 4, 0.1, 1, 1e-8));
        CHECK(rep.agreement <= 1e-8);
        CHECK(rep.lhs_terms >= 1);
        CHECK(rep.rhs_terms >= 1);
        CHECK(rep.speedup_estimate == doctest::Approx(double(rep.lhs_terms) / double(rep.rhs_terms)));
    }
}
