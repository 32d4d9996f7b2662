#include "hzsums/transforms.hpp"

#include <cmath>

#include "check.hpp"
#include "hzsums/direct_sums.hpp"
#include "hzsums/error.hpp"
#include "lattice.hpp"

namespace hzs {

namespace {

bool has_transform(Family f) {
    return f == Family::GENERAL_AB || f == Family::GENERAL_AB_ALT || f == Family::EXP_WEIGHTED;
}

void require_transform_family(const SumSpec& spec) {
    if (!has_transform(spec.family)) {
        throw DomainError("no transformation is available for family " + std::string(to_string(spec.family)) +
                          " (requires GENERAL_AB, GENERAL_AB_ALT or EXP_WEIGHTED)");
    }
}

SumSpec make_spec(Family family, double s, double a, double b, double c, Sign sign, Tolerance tol,
                  std::int64_t budget) {
    SumSpec spec;
    spec.family = family;
    spec.s = s;
    spec.a = a;
    spec.b = b;
    spec.c = c;
    spec.sign = sign;
    spec.tol = tol;
    spec.term_budget = budget;
    return spec;
}

}  // namespace

internal::Lattice internal::transformed_lattice(const SumSpec& spec) {
    require_transform_family(spec);
    Lattice lat;
    lat.s = spec.s;
    lat.x0 = spec.b / spec.a;
    lat.step = 1 / spec.a;
    lat.scale = std::pow(spec.a, -spec.s);
    const bool minus = spec.family == Family::GENERAL_AB_ALT ||
                       (spec.family == Family::EXP_WEIGHTED && spec.sign == Sign::MINUS);
    const double c = spec.family == Family::EXP_WEIGHTED ? spec.c : 0.0;
    if (c == 0 && !minus) return lat;  // zeta kernel
    lat.kernel = Kernel::LERCH;
    lat.z = (minus ? -1.0 : 1.0) * std::exp(-c);
    return lat;
}

SumResult eval_transformed(const SumSpec& spec) {
    require_transform_family(spec);
    validate(spec);
    auto r = internal::sum_lattice(internal::transformed_lattice(spec), spec.tol.abs_tol, spec.term_budget);
    return {r.value, r.terms, r.bound, Method::TRANSFORMED};
}

SumResult kappa_ab_transformed(double s, double a, double b, Tolerance tol, std::int64_t term_budget) {
    return eval_transformed(make_spec(Family::GENERAL_AB, s, a, b, 0, Sign::PLUS, tol, term_budget));
}

SumResult kappa_ab_alt_transformed(double s, double a, double b, Tolerance tol, std::int64_t term_budget) {
    return eval_transformed(make_spec(Family::GENERAL_AB_ALT, s, a, b, 0, Sign::MINUS, tol, term_budget));
}

SumResult corollary_b_equals_a(double s, double a, Sign sign, Tolerance tol, std::int64_t term_budget) {
    internal::require_finite(a, "a");
    internal::require_above(a, 0, "a > 0");
    return sign == Sign::PLUS ? kappa_ab_transformed(s, a, a, tol, term_budget)
                              : kappa_ab_alt_transformed(s, a, a, tol, term_budget);
}

SumResult s_pm_transformed(double s, double a, double b, double c, Sign sign, Tolerance tol,
                           std::int64_t term_budget) {
    return eval_transformed(make_spec(Family::EXP_WEIGHTED, s, a, b, c, sign, tol, term_budget));
}

std::int64_t term_count_estimate(const SumSpec& spec, Side side) {
    require_transform_family(spec);
    validate(spec);
    if (side == Side::DIRECT) return direct_term_estimate(spec);
    return internal::estimate_terms(internal::transformed_lattice(spec), spec.tol.abs_tol, spec.term_budget);
}

std::int64_t term_count_estimate(double s, double a, double b, Tolerance tol, Side side) {
    return term_count_estimate(make_spec(Family::GENERAL_AB, s, a, b, 0, Sign::PLUS, tol, kDefaultTermBudget),
                               side);
}

Method choose_method(const SumSpec& spec) {
    const auto direct = term_count_estimate(spec, Side::DIRECT);
    const auto transformed = term_count_estimate(spec, Side::TRANSFORMED);
    return transformed <= direct ? Method::TRANSFORMED : Method::DIRECT;
}

TransformReport compare_sides(const SumSpec& spec) {
    require_transform_family(spec);
    const auto lhs = eval_direct(spec);
    const auto rhs = eval_transformed(spec);
    TransformReport out;
    out.lhs_value = lhs.value;
    out.rhs_value = rhs.value;
    out.lhs_terms = lhs.terms_used;
    out.rhs_terms = rhs.terms_used;
    out.agreement = std::abs(lhs.value - rhs.value);
    out.speedup_estimate = static_cast<double>(lhs.terms_used) / static_cast<double>(rhs.terms_used);
    return out;
}

}  // namespace hzs
