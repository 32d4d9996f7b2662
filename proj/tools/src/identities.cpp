#include "hzsums_cli/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "hzsums/closed_forms.hpp"
#include "hzsums/direct_sums.hpp"
#include "hzsums/error.hpp"
#include "hzsums/transforms.hpp"

namespace hzs::cli {

namespace {

struct Entry {
    std::string key;
    std::string description;
    ParamUse uses;
    std::function<SumSpec(const IdentityParams&)> lhs;
    // Right-hand side evaluated at the given tolerance.
    std::function<SumResult(const IdentityParams&, Tolerance, std::int64_t)> rhs;
    std::vector<IdentityParams> grid;
};

SumSpec spec_of(Family f, const IdentityParams& p, int m = 0) {
    SumSpec spec;
    spec.family = f;
    spec.s = p.s;
    spec.m = m;
    spec.a = p.a;
    spec.b = p.b;
    spec.c = p.c;
    spec.sign = p.sign;
    return spec;
}

// Right-hand side by closed form.
auto closed(Family f, int m = 0) {
    return [f, m](const IdentityParams& p, Tolerance, std::int64_t) {
        SumSpec spec = spec_of(f, p, m);
        spec.tol = kClosedFormTol;
        return eval_closed(spec);
    };
}

std::vector<IdentityParams> s_grid(std::initializer_list<double> ss) {
    std::vector<IdentityParams> out;
    for (double s : ss) out.push_back({s, 1, 1, 0, Sign::PLUS});
    return out;
}

std::vector<IdentityParams> sa_grid(std::initializer_list<double> ss, std::initializer_list<double> as) {
    std::vector<IdentityParams> out;
    for (double s : ss)
        for (double a : as) out.push_back({s, a, 1, 0, Sign::PLUS});
    return out;
}

std::vector<IdentityParams> sab_grid(std::initializer_list<double> ss, std::initializer_list<double> as,
                                     std::initializer_list<double> bs) {
    std::vector<IdentityParams> out;
    for (double s : ss)
        for (double a : as)
            for (double b : bs) out.push_back({s, a, b, 0, Sign::PLUS});
    return out;
}

const std::vector<Entry>& catalog() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({"2.1", "sum_{k>=1} zeta(s,k) = zeta(s-1)", {}, [](const IdentityParams& p) {
                         return spec_of(Family::KAPPA, p);
                     },
                     closed(Family::KAPPA), s_grid({2.5, 3, 4, 6, 10})});
        e.push_back({"2.2", "sum_{k>=1} (-1)^(k-1) zeta(s,k) = (1-2^-s) zeta(s)", {},
                     [](const IdentityParams& p) { return spec_of(Family::KAPPA_ALT, p); },
                     closed(Family::KAPPA_ALT), s_grid({1.5, 2, 3, 7})});
        e.push_back({"2.3", "sum_{k>=0} zeta(s,k+a) = zeta(s-1,a) + (1-a) zeta(s,a)", {true},
                     [](const IdentityParams& p) { return spec_of(Family::SHIFTED, p); },
                     closed(Family::SHIFTED), sa_grid({2.5, 3, 4, 6, 10}, {0.25, 1, 2.5, 9.75})});
        e.push_back({"2.4", "sum_{k>=0} (-1)^k zeta(s,k+a) = 2^-s zeta(s,a/2)", {true},
                     [](const IdentityParams& p) { return spec_of(Family::SHIFTED_ALT, p); },
                     closed(Family::SHIFTED_ALT), sa_grid({1.5, 2, 3, 7}, {0.25, 1, 2.5, 9.75})});
        e.push_back({"3.1", "sum_{k>=1} k zeta(s,k) = (zeta(s-1) + zeta(s-2))/2", {},
                     [](const IdentityParams& p) { return spec_of(Family::MOMENT, p, 1); },
                     closed(Family::MOMENT, 1), s_grid({3.5, 5})});
        e.push_back({"3.2", "sum_{k>=1} k^2 zeta(s,k) = (zeta(s-1) + 3 zeta(s-2) + 2 zeta(s-3))/6", {},
                     [](const IdentityParams& p) { return spec_of(Family::MOMENT, p, 2); },
                     closed(Family::MOMENT, 2), s_grid({4.5, 6})});
        e.push_back({"kappa3", "sum_{k>=1} k^3 zeta(s,k) = (zeta(s-2) + 2 zeta(s-3) + zeta(s-4))/4", {},
                     [](const IdentityParams& p) { return spec_of(Family::MOMENT, p, 3); },
                     closed(Family::MOMENT, 3), s_grid({5.5, 7})});
        e.push_back({"alt-m1",
                     "sum_{k>=1} (-1)^(k-1) k zeta(s,k) = 2^-s {zeta(s-1,1/2) + zeta(s,1/2)/2 - zeta(s-1)}", {},
                     [](const IdentityParams& p) { return spec_of(Family::MOMENT_ALT, p, 1); },
                     closed(Family::MOMENT_ALT, 1), s_grid({3.5, 5})});
        e.push_back({"alt-m2",
                     "sum_{k>=1} (-1)^(k-1) k^2 zeta(s,k) = {(1-2^(2-s)) zeta(s-1) + (1-2^(3-s)) zeta(s-2)}/2",
                     {}, [](const IdentityParams& p) { return spec_of(Family::MOMENT_ALT, p, 2); },
                     closed(Family::MOMENT_ALT, 2), s_grid({3.5, 5})});
        e.push_back({"even-m1", "sum_{k>=1} k zeta(s,2k) in closed form", {},
                     [](const IdentityParams& p) { return spec_of(Family::EVEN_ARG_MOMENT, p, 1); },
                     closed(Family::EVEN_ARG_MOMENT, 1), s_grid({4, 5})});
        e.push_back({"even-m2", "sum_{k>=1} k^2 zeta(s,2k) in closed form", {},
                     [](const IdentityParams& p) { return spec_of(Family::EVEN_ARG_MOMENT, p, 2); },
                     closed(Family::EVEN_ARG_MOMENT, 2), s_grid({5, 6})});
        e.push_back({"4.2", "sum_{k>=0} zeta(s,ka+b) = a^-s sum_{n>=0} zeta(s,(n+b)/a)", {true, true},
                     [](const IdentityParams& p) { return spec_of(Family::GENERAL_AB, p); },
                     [](const IdentityParams& p, Tolerance tol, std::int64_t budget) {
                         return kappa_ab_transformed(p.s, p.a, p.b, tol, budget);
                     },
                     sab_grid({2.5, 4, 6}, {0.05, 0.1, 0.5, 1, 2}, {0.3, 1, 2.7})});
        e.push_back({"4.3",
                     "sum_{k>=0} (-1)^k zeta(s,ka+b) = (2a)^-s sum_{n>=0} {zeta(s,(n+b)/2a) - zeta(s,(n+b)/2a+1/2)}",
                     {true, true},
                     [](const IdentityParams& p) { return spec_of(Family::GENERAL_AB_ALT, p); },
                     [](const IdentityParams& p, Tolerance tol, std::int64_t budget) {
                         return kappa_ab_alt_transformed(p.s, p.a, p.b, tol, budget);
                     },
                     sab_grid({2, 3, 4}, {0.1, 0.5, 1, 2}, {0.7, 1})});
        e.push_back({"4.4", "sum_{k>=0} (+-1)^k e^(-ck) zeta(s,ka+b) = a^-s sum_{n>=0} Phi(+-e^-c, s, (n+b)/a)",
                     {true, true, true, true},
                     [](const IdentityParams& p) { return spec_of(Family::EXP_WEIGHTED, p); },
                     [](const IdentityParams& p, Tolerance tol, std::int64_t budget) {
                         return s_pm_transformed(p.s, p.a, p.b, p.c, p.sign, tol, budget);
                     },
                     {{3, 0.5, 1, 0.7, Sign::PLUS},
                      {2, 0.25, 0.5, 1.2, Sign::MINUS},
                      {4, 1, 1, 0, Sign::PLUS},
                      {3, 0.5, 1, 0, Sign::MINUS},
                      {2.5, 0.2, 1, 0.5, Sign::PLUS},
                      {4, 2, 0.3, 1, Sign::MINUS}}});
        e.push_back({"corollary", "sum_{k>=1} (+-1)^(k-1) zeta(s,ka) = a^-s sum_{n>=0} Phi(+-1, s, n/a + 1)",
                     {true, false, false, true},
                     [](const IdentityParams& p) {
                         IdentityParams q = p;
                         q.b = p.a;
                         return spec_of(p.sign == Sign::PLUS ? Family::GENERAL_AB : Family::GENERAL_AB_ALT, q);
                     },
                     [](const IdentityParams& p, Tolerance tol, std::int64_t budget) {
                         return corollary_b_equals_a(p.s, p.a, p.sign, tol, budget);
                     },
                     {{4, 1, 1, 0, Sign::PLUS},
                      {3, 0.2, 1, 0, Sign::PLUS},
                      {2, 0.5, 1, 0, Sign::MINUS},
                      {3, 0.1, 1, 0, Sign::MINUS}}});
        return e;
    }();
    return entries;
}

const Entry& find(const std::string& key) {
    for (const auto& e : catalog())
        if (e.key == key) return e;
    throw DomainError("unknown identity '" + key + "'");
}

}  // namespace

const std::vector<std::string>& identity_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& e : catalog()) out.push_back(e.key);
        return out;
    }();
    return keys;
}

std::optional<std::string> canonical_identity(std::string_view name) {
    static const std::map<std::string, std::string, std::less<>> aliases{
        {"3.3", "kappa3"}, {"3.7", "alt-m1"}, {"3.8", "alt-m2"}};
    if (auto it = aliases.find(name); it != aliases.end()) return it->second;
    for (const auto& k : identity_keys())
        if (k == name) return k;
    return std::nullopt;
}

ParamUse params_used(const std::string& key) { return find(key).uses; }

std::string describe_identity(const std::string& key) { return find(key).description; }

std::vector<IdentityParams> default_grid(const std::string& key) {
    // The corollary sets b = a itself; normalise b so reports are uniform.
    auto grid = find(key).grid;
    if (key == "corollary")
        for (auto& p : grid) p.b = p.a;
    return grid;
}

IdentityReport check_identity(const std::string& key, const IdentityParams& params, Tolerance tol,
                              std::int64_t term_budget) {
    const Entry& e = find(key);
    IdentityParams p = params;
    if (key == "corollary") p.b = p.a;

    SumSpec lhs_spec = e.lhs(p);
    lhs_spec.tol = tol;
    lhs_spec.term_budget = term_budget;
    const SumResult lhs = eval_direct(lhs_spec);
    const SumResult rhs = e.rhs(p, tol, term_budget);

    IdentityReport r;
    r.identity = key;
    r.params = p;
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.abs_diff = std::abs(lhs.value - rhs.value);
    const double scale = std::max(std::abs(lhs.value), std::abs(rhs.value));
    r.rel_diff = scale > 0 ? r.abs_diff / scale : 0.0;
    r.budget = lhs.tail_bound + rhs.tail_bound + 64 * std::numeric_limits<double>::epsilon() * scale;
    r.pass = r.abs_diff <= r.budget;
    r.lhs_terms = lhs.terms_used;
    r.rhs_terms = rhs.terms_used;
    return r;
}

}  // namespace hzs::cli
