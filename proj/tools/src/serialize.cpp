#include "hzsums_cli/serialize.hpp"

#include <charconv>
#include <cstdio>

namespace hzs::cli {

std::string format_csv(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

Json to_json(const SumResult& r) {
    return Json{{"value", r.value},
                {"terms_used", r.terms_used},
                {"tail_bound", r.tail_bound},
                {"method", std::string(to_string(r.method))}};
}

Json to_json(const TransformReport& r) {
    return Json{{"lhs_value", r.lhs_value},         {"rhs_value", r.rhs_value}, {"lhs_terms", r.lhs_terms},
                {"rhs_terms", r.rhs_terms},         {"agreement", r.agreement},
                {"speedup_estimate", r.speedup_estimate}};
}

Json to_json(const IdentityReport& r) {
    Json j{{"identity", r.identity}, {"s", r.params.s}};
    const ParamUse use = params_used(r.identity);
    if (use.a) j["a"] = r.params.a;
    if (use.b) j["b"] = r.params.b;
    if (use.c) j["c"] = r.params.c;
    if (use.sign) j["sign"] = std::string(to_string(r.params.sign));
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_diff"] = r.abs_diff;
    j["rel_diff"] = r.rel_diff;
    j["budget"] = r.budget;
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    j["pass"] = r.pass;
    return j;
}

Json to_json(const RationalCoeffs& c) {
    Json coeffs = Json::array();
    for (const auto& v : c.values()) coeffs.push_back(to_string(v));
    return Json{{"offset", c.offset()}, {"coefficients", coeffs}};
}

Json to_json(const ZetaCombination& z) {
    Json out = Json::array();
    for (const auto& t : z.terms()) {
        Json j{{"coefficient", to_string(t.coefficient)},
               {"kind", t.kind == ZetaKind::ZETA ? "ZETA" : "HURWITZ"},
               {"s_shift", t.s_shift}};
        j["alpha"] = t.alpha ? Json(*t.alpha) : Json(nullptr);
        j["two_pow_minus_s"] = t.two_pow_minus_s;
        out.push_back(j);
    }
    return out;
}

}  // namespace hzs::cli
