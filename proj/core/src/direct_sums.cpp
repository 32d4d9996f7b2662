#include "hzsums/direct_sums.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "check.hpp"
#include "hzsums/closed_forms.hpp"
#include "hzsums/error.hpp"
#include "lattice.hpp"

namespace hzs {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::KAPPA, "KAPPA"},
    {Family::KAPPA_ALT, "KAPPA_ALT"},
    {Family::SHIFTED, "SHIFTED"},
    {Family::SHIFTED_ALT, "SHIFTED_ALT"},
    {Family::MOMENT, "MOMENT"},
    {Family::MOMENT_ALT, "MOMENT_ALT"},
    {Family::EVEN_ARG_MOMENT, "EVEN_ARG_MOMENT"},
    {Family::GENERAL_AB, "GENERAL_AB"},
    {Family::GENERAL_AB_ALT, "GENERAL_AB_ALT"},
    {Family::EXP_WEIGHTED, "EXP_WEIGHTED"},
}};

bool has_moment(Family f) {
    return f == Family::MOMENT || f == Family::MOMENT_ALT || f == Family::EVEN_ARG_MOMENT;
}

}  // namespace

internal::Lattice internal::direct_lattice(const SumSpec& spec) {
    internal::Lattice lat;
    lat.s = spec.s;
    switch (spec.family) {
        case Family::KAPPA:
            break;
        case Family::KAPPA_ALT:
            lat.alternating = true;
            break;
        case Family::SHIFTED:
            lat.x0 = spec.a;
            break;
        case Family::SHIFTED_ALT:
            lat.x0 = spec.a;
            lat.alternating = true;
            break;
        case Family::MOMENT:
            lat.m = spec.m;
            break;
        case Family::MOMENT_ALT:
            lat.m = spec.m;
            lat.alternating = true;
            break;
        case Family::EVEN_ARG_MOMENT:
            lat.m = spec.m;
            lat.x0 = 2;
            lat.step = 2;
            break;
        case Family::GENERAL_AB:
            lat.x0 = spec.b;
            lat.step = spec.a;
            break;
        case Family::GENERAL_AB_ALT:
            lat.x0 = spec.b;
            lat.step = spec.a;
            lat.alternating = true;
            break;
        case Family::EXP_WEIGHTED:
            lat.x0 = spec.b;
            lat.step = spec.a;
            lat.c = spec.c;
            lat.alternating = spec.sign == Sign::MINUS;
            break;
    }
    return lat;
}

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "UNKNOWN";
}

std::string_view to_string(Sign s) { return s == Sign::PLUS ? "PLUS" : "MINUS"; }

std::string_view to_string(Method m) {
    switch (m) {
        case Method::DIRECT: return "DIRECT";
        case Method::CLOSED_FORM: return "CLOSED";
        case Method::TRANSFORMED: return "TRANSFORMED";
    }
    return "UNKNOWN";
}

std::optional<Family> parse_family(std::string_view name) {
    std::string norm;
    for (char ch : name) norm += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (const auto& [fam, fname] : kFamilyNames)
        if (fname == norm) return fam;
    return std::nullopt;
}

bool is_alternating(const SumSpec& spec) {
    switch (spec.family) {
        case Family::KAPPA_ALT:
        case Family::SHIFTED_ALT:
        case Family::MOMENT_ALT:
        case Family::GENERAL_AB_ALT:
            return true;
        case Family::EXP_WEIGHTED:
            return spec.sign == Sign::MINUS;
        default:
            return false;
    }
}

double convergence_threshold(const SumSpec& spec) {
    switch (spec.family) {
        case Family::KAPPA:
        case Family::SHIFTED:
        case Family::GENERAL_AB:
            return 2;
        case Family::KAPPA_ALT:
        case Family::SHIFTED_ALT:
        case Family::GENERAL_AB_ALT:
            return 1;
        case Family::MOMENT:
        case Family::EVEN_ARG_MOMENT:
            return spec.m + 2;
        case Family::MOMENT_ALT:
            return spec.m + 1;
        case Family::EXP_WEIGHTED:
            return (spec.c == 0 && spec.sign == Sign::PLUS) ? 2 : 1;
    }
    return 1;
}

void validate(const SumSpec& spec) {
    using internal::require_above;
    internal::require_finite(spec.s, "s");
    if (has_moment(spec.family)) {
        if (spec.m < 0 || spec.m > kMaxMoment) throw DomainError("requires 0 <= m <= 12");
    }
    const double threshold = convergence_threshold(spec);
    std::string condition;
    switch (spec.family) {
        case Family::MOMENT:
        case Family::EVEN_ARG_MOMENT:
            condition = "s > m+2 (= " + internal::num(threshold) + ")";
            break;
        case Family::MOMENT_ALT:
            condition = "s > m+1 (= " + internal::num(threshold) + ")";
            break;
        default:
            condition = "s > " + internal::num(threshold);
            if (spec.family == Family::EXP_WEIGHTED && threshold == 2) condition += " when c = 0 and sign = PLUS";
    }
    require_above(spec.s, threshold, condition);

    switch (spec.family) {
        case Family::SHIFTED:
        case Family::SHIFTED_ALT:
            internal::require_finite(spec.a, "a");
            require_above(spec.a, 0, "a > 0");
            break;
        case Family::EXP_WEIGHTED:
            internal::require_finite(spec.c, "c");
            internal::require_at_least(spec.c, 0, "c >= 0");
            [[fallthrough]];
        case Family::GENERAL_AB:
        case Family::GENERAL_AB_ALT:
            internal::require_finite(spec.a, "a");
            internal::require_finite(spec.b, "b");
            require_above(spec.a, 0, "a > 0");
            require_above(spec.b, 0, "b > 0");
            break;
        default:
            break;
    }
    if (spec.term_budget < 1) throw DomainError("requires term_budget >= 1");
}

SumResult eval_direct(const SumSpec& spec) {
    validate(spec);
    auto r = internal::sum_lattice(internal::direct_lattice(spec), spec.tol.abs_tol, spec.term_budget);
    return {r.value, r.terms, r.bound, Method::DIRECT};
}

std::int64_t direct_term_estimate(const SumSpec& spec) {
    validate(spec);
    return internal::estimate_terms(internal::direct_lattice(spec), spec.tol.abs_tol, spec.term_budget);
}

namespace {

void check_inner(int m, double x) {
    if (m < 0 || m > kMaxMoment) throw DomainError("requires 0 <= m <= 12");
    internal::require_finite(x, "x");
    internal::require_above(x, 0, "x > 0");
}

double eulerian_at(int m, double y) {
    if (m == 0) return 1.0;
    const auto p = eulerian_polynomial(m);
    double acc = 0.0;
    for (std::size_t j = p.size(); j-- > 0;) acc = acc * y + p.to_double(j);
    return acc;
}

}  // namespace

double inner_power_sum(int m, double x) {
    check_inner(m, x);
    const double y = std::exp(-x);
    const double one_minus_y = -std::expm1(-x);
    return y * eulerian_at(m, y) / std::pow(one_minus_y, m + 1);
}

double alternating_inner_power_sum(int m, double x) {
    check_inner(m, x);
    const double y = std::exp(-x);
    return y * eulerian_at(m, -y) / std::pow(1 + y, m + 1);
}

}  // namespace hzs
