#include "hzsums_cli/app.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hzsums/closed_forms.hpp"
#include "hzsums/direct_sums.hpp"
#include "hzsums/error.hpp"
#include "hzsums/transforms.hpp"
#include "hzsums_cli/identities.hpp"
#include "hzsums_cli/serialize.hpp"

namespace hzs::cli {

namespace {

enum class Format { TEXT, JSON, CSV };
enum class MethodChoice { AUTO, DIRECT, CLOSED, TRANSFORMED };

// Thrown for invalid option combinations detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    Format format = Format::TEXT;
    std::string output_path;
    double tol = 0.0;  // 0: subcommand default
    std::int64_t term_budget = kDefaultTermBudget;
};

void add_common(CLI::App* cmd, Common& c) {
    const std::map<std::string, Format> formats{{"text", Format::TEXT}, {"json", Format::JSON}, {"csv", Format::CSV}};
    cmd->add_option("--format", c.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--output,-o", c.output_path, "Write the output to this file instead of stdout");
    cmd->add_option("--tol", c.tol, "Absolute tolerance");
}

Tolerance tolerance(const Common& c, double fallback) { return Tolerance(c.tol > 0 ? c.tol : fallback); }

std::int64_t term_budget_from_env() {
    const char* env = std::getenv("ZS_TERM_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultTermBudget;
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError(std::string("ZS_TERM_BUDGET must be a positive integer (got '") + env + "')");
    return v;
}

// "lo:hi:step" (inclusive) or a single value.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("invalid grid '" + text + "' (expected lo:hi:step)");
        }
    }
    if (parts.size() == 1) return parts;
    if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0]) {
        throw UsageError("invalid grid '" + text + "' (expected lo:hi:step with step > 0, hi >= lo)");
    }
    const auto n = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    if (n > 100000) throw UsageError("grid '" + text + "' has too many points");
    std::vector<double> out;
    for (long i = 0; i <= n; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    return out;
}

Sign parse_sign(const std::string& s) {
    if (s == "plus" || s == "PLUS" || s == "+") return Sign::PLUS;
    if (s == "minus" || s == "MINUS" || s == "-") return Sign::MINUS;
    throw UsageError("invalid sign '" + s + "' (expected plus or minus)");
}

std::string sign_name(Sign s) { return s == Sign::PLUS ? "plus" : "minus"; }

// Writes to the requested file or to `out`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& out) : out_(&out) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line + '\n';
}

// --- eval -------------------------------------------------------------------

struct EvalOptions {
    Common common;
    std::string family;
    SumSpec spec;
    std::string sign = "plus";
    MethodChoice method = MethodChoice::AUTO;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
    auto family = parse_family(o.family);
    if (!family) throw UsageError("unknown family '" + o.family + "'");
    SumSpec spec = o.spec;
    spec.family = *family;
    spec.sign = parse_sign(o.sign);
    spec.tol = tolerance(o.common, 1e-10);
    spec.term_budget = o.common.term_budget;
    validate(spec);

    const bool transformable = spec.family == Family::GENERAL_AB || spec.family == Family::GENERAL_AB_ALT ||
                               spec.family == Family::EXP_WEIGHTED;
    Method method = Method::DIRECT;
    switch (o.method) {
        case MethodChoice::AUTO:
            if (has_closed_form(spec)) method = Method::CLOSED_FORM;
            else if (transformable) method = choose_method(spec);
            break;
        case MethodChoice::DIRECT:
            break;
        case MethodChoice::CLOSED:
            if (!has_closed_form(spec)) {
                throw NoClosedForm("method closed is not available for family " + std::string(to_string(spec.family)) +
                                   (spec.family == Family::MOMENT_ALT || spec.family == Family::EVEN_ARG_MOMENT
                                        ? " with m = " + std::to_string(spec.m)
                                        : std::string()));
            }
            method = Method::CLOSED_FORM;
            break;
        case MethodChoice::TRANSFORMED:
            if (!transformable) {
                throw UsageError("method transformed requires family general-ab, general-ab-alt or exp-weighted");
            }
            method = Method::TRANSFORMED;
            break;
    }

    SumResult r;
    switch (method) {
        case Method::DIRECT: r = eval_direct(spec); break;
        case Method::CLOSED_FORM: r = eval_closed(spec); break;
        case Method::TRANSFORMED: r = eval_transformed(spec); break;
    }

    Sink sink(o.common.output_path, out);
    auto& os = sink.stream();
    const std::string fam(to_string(spec.family));
    switch (o.common.format) {
        case Format::TEXT:
            os << "family      " << fam << '\n'
               << "method      " << to_string(r.method) << '\n'
               << "value       " << format_text(r.value) << '\n'
               << "terms_used  " << r.terms_used << '\n';
            if (r.method == Method::TRANSFORMED) os << "rhs_terms   " << r.terms_used << '\n';
            os << "tail_bound  " << format_text(r.tail_bound) << '\n';
            break;
        case Format::JSON: {
            Json j{{"family", fam}, {"s", spec.s}};
            j.update(to_json(r));
            if (r.method == Method::TRANSFORMED) j["rhs_terms"] = r.terms_used;
            os << j.dump(2) << '\n';
            break;
        }
        case Format::CSV:
            os << "family,s,value,terms_used,tail_bound,method\n"
               << csv_line({fam, format_csv(spec.s), format_csv(r.value), std::to_string(r.terms_used),
                            format_csv(r.tail_bound), std::string(to_string(r.method))});
            break;
    }
    return kExitOk;
}

// --- identity reports ---------------------------------------------------------

void write_reports(const std::vector<IdentityReport>& reports, Format format, std::ostream& os) {
    ParamUse cols;
    for (const auto& r : reports) {
        const ParamUse u = params_used(r.identity);
        cols.a |= u.a;
        cols.b |= u.b;
        cols.c |= u.c;
        cols.sign |= u.sign;
    }
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;

    switch (format) {
        case Format::TEXT:
            for (const auto& r : reports) {
                const ParamUse u = params_used(r.identity);
                os << (r.pass ? "PASS " : "FAIL ") << r.identity << "  s=" << format_text(r.params.s);
                if (u.a) os << " a=" << format_text(r.params.a);
                if (u.b) os << " b=" << format_text(r.params.b);
                if (u.c) os << " c=" << format_text(r.params.c);
                if (u.sign) os << " sign=" << sign_name(r.params.sign);
                os << "  lhs=" << format_text(r.lhs) << " rhs=" << format_text(r.rhs)
                   << " |diff|=" << format_text(r.abs_diff) << " budget=" << format_text(r.budget)
                   << " terms=" << r.lhs_terms << "/" << r.rhs_terms << '\n';
            }
            os << passed << "/" << reports.size() << " passed\n";
            break;
        case Format::JSON: {
            Json rows = Json::array();
            for (const auto& r : reports) rows.push_back(to_json(r));
            Json j{{"results", rows}, {"passed", passed}, {"total", reports.size()}};
            os << j.dump(2) << '\n';
            break;
        }
        case Format::CSV: {
            std::vector<std::string> header{"identity", "s", "lhs", "rhs", "abs_diff", "pass"};
            if (cols.a) header.push_back("a");
            if (cols.b) header.push_back("b");
            if (cols.c) header.push_back("c");
            if (cols.sign) header.push_back("sign");
            os << csv_line(header);
            for (const auto& r : reports) {
                const ParamUse u = params_used(r.identity);
                std::vector<std::string> row{r.identity,           format_csv(r.params.s), format_csv(r.lhs),
                                             format_csv(r.rhs),    format_csv(r.abs_diff), r.pass ? "true" : "false"};
                if (cols.a) row.push_back(u.a ? format_csv(r.params.a) : "");
                if (cols.b) row.push_back(u.b ? format_csv(r.params.b) : "");
                if (cols.c) row.push_back(u.c ? format_csv(r.params.c) : "");
                if (cols.sign) row.push_back(u.sign ? sign_name(r.params.sign) : "");
                os << csv_line(row);
            }
            break;
        }
    }
}

struct PointOptions {
    double s = 4.0;
    double a = 1.0;
    double b = 1.0;
    double c = 0.0;
    std::string sign = "plus";

    IdentityParams params() const { return {s, a, b, c, parse_sign(sign)}; }
};

std::string resolve_identity(const std::string& name) {
    auto key = canonical_identity(name);
    if (!key) {
        std::string known;
        for (const auto& k : identity_keys()) known += (known.empty() ? "" : ", ") + k;
        throw UsageError("unknown identity '" + name + "' (known: " + known + ", all)");
    }
    return *key;
}

struct IdentityOptions {
    Common common;
    std::string name;
    std::string grid;
    PointOptions point;
};

int cmd_identity_check(const IdentityOptions& o, std::ostream& out) {
    const Tolerance tol = tolerance(o.common, 1e-10);
    std::vector<std::string> keys;
    if (o.name == "all") keys = identity_keys();
    else keys.push_back(resolve_identity(o.name));
    if (!o.grid.empty() && o.grid != "default") throw UsageError("unknown grid '" + o.grid + "' (expected default)");
    const bool use_grid = !o.grid.empty() || o.name == "all";

    std::vector<IdentityReport> reports;
    for (const auto& key : keys) {
        const auto points = use_grid ? default_grid(key) : std::vector<IdentityParams>{o.point.params()};
        for (const auto& p : points) reports.push_back(check_identity(key, p, tol, o.common.term_budget));
    }
    Sink sink(o.common.output_path, out);
    write_reports(reports, o.common.format, sink.stream());
    for (const auto& r : reports)
        if (!r.pass) return kExitIdentityFailed;
    return kExitOk;
}

// --- benchmark ----------------------------------------------------------------

struct BenchOptions {
    Common common;
    std::string family = "general-ab";
    double s = 4.0;
    double b = 1.0;
    double c = 0.0;
    std::string sign = "plus";
    std::vector<double> a_list{0.1, 0.01};
};

struct BenchRow {
    double a = 0;
    std::optional<SumResult> direct, transformed;
    double direct_ms = 0, transformed_ms = 0;
    std::int64_t direct_estimate = 0, transformed_estimate = 0;
    std::string status = "ok";
};

template <class F>
std::optional<SumResult> timed(F&& f, double& ms, std::string& status, const char* side) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto r = f();
        ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return r;
    } catch (const BudgetExceeded& e) {
        ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        status = std::string(side) + " budget exceeded after " + std::to_string(e.terms()) + " terms";
        return std::nullopt;
    }
}

int cmd_benchmark(const BenchOptions& o, std::ostream& out) {
    auto family = parse_family(o.family);
    if (!family || !(*family == Family::GENERAL_AB || *family == Family::GENERAL_AB_ALT ||
                     *family == Family::EXP_WEIGHTED)) {
        throw UsageError("benchmark requires family general-ab, general-ab-alt or exp-weighted");
    }
    if (o.a_list.empty()) throw UsageError("--a-list must not be empty");
    std::vector<BenchRow> rows;
    for (double a : o.a_list) {
        SumSpec spec;
        spec.family = *family;
        spec.s = o.s;
        spec.a = a;
        spec.b = o.b;
        spec.c = o.c;
        spec.sign = parse_sign(o.sign);
        spec.tol = tolerance(o.common, 1e-8);
        spec.term_budget = o.common.term_budget;
        validate(spec);
        BenchRow row;
        row.a = a;
        row.direct_estimate = term_count_estimate(spec, Side::DIRECT);
        row.transformed_estimate = term_count_estimate(spec, Side::TRANSFORMED);
        std::string st_d, st_t;
        row.direct = timed([&] { return eval_direct(spec); }, row.direct_ms, st_d, "direct");
        row.transformed = timed([&] { return eval_transformed(spec); }, row.transformed_ms, st_t, "transformed");
        if (!st_d.empty() || !st_t.empty()) row.status = st_d.empty() ? st_t : (st_t.empty() ? st_d : st_d + "; " + st_t);
        rows.push_back(row);
    }

    Sink sink(o.common.output_path, out);
    auto& os = sink.stream();
    auto terms = [](const std::optional<SumResult>& r) { return r ? std::to_string(r->terms_used) : std::string(); };
    auto agreement = [](const BenchRow& r) {
        return (r.direct && r.transformed) ? std::abs(r.direct->value - r.transformed->value) : NAN;
    };
    auto speedup = [](const BenchRow& r) {
        return (r.direct && r.transformed)
                   ? static_cast<double>(r.direct->terms_used) / static_cast<double>(r.transformed->terms_used)
                   : NAN;
    };
    switch (o.common.format) {
        case Format::TEXT: {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%-10s %12s %12s %12s %12s %12s %12s  %s\n", "a", "direct_terms",
                          "rhs_terms", "direct_ms", "rhs_ms", "agreement", "speedup", "status");
            os << "family " << to_string(*family) << ", s = " << format_text(o.s) << ", b = " << format_text(o.b)
               << ", tol = " << format_text(tolerance(o.common, 1e-8).abs_tol) << '\n'
               << buf;
            for (const auto& r : rows) {
                std::snprintf(buf, sizeof buf, "%-10s %12s %12s %12.3f %12.3f %12.3e %12.1f  %s\n",
                              format_text(r.a).c_str(), terms(r.direct).c_str(), terms(r.transformed).c_str(),
                              r.direct_ms, r.transformed_ms, agreement(r), speedup(r), r.status.c_str());
                os << buf;
            }
            break;
        }
        case Format::JSON: {
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json j{{"a", r.a}};
                j["direct_terms"] = r.direct ? Json(r.direct->terms_used) : Json(nullptr);
                j["rhs_terms"] = r.transformed ? Json(r.transformed->terms_used) : Json(nullptr);
                j["direct_estimate"] = r.direct_estimate;
                j["rhs_estimate"] = r.transformed_estimate;
                j["direct_ms"] = r.direct_ms;
                j["rhs_ms"] = r.transformed_ms;
                j["lhs_value"] = r.direct ? Json(r.direct->value) : Json(nullptr);
                j["rhs_value"] = r.transformed ? Json(r.transformed->value) : Json(nullptr);
                const double ag = agreement(r), sp = speedup(r);
                j["agreement"] = std::isnan(ag) ? Json(nullptr) : Json(ag);
                j["speedup_estimate"] = std::isnan(sp) ? Json(nullptr) : Json(sp);
                j["status"] = r.status;
                arr.push_back(j);
            }
            Json doc{{"family", std::string(to_string(*family))}, {"s", o.s}, {"b", o.b},
                     {"tol", tolerance(o.common, 1e-8).abs_tol}, {"rows", arr}};
            os << doc.dump(2) << '\n';
            break;
        }
        case Format::CSV:
            os << "a,direct_terms,rhs_terms,direct_ms,rhs_ms,lhs,rhs,agreement,speedup_estimate,status\n";
            for (const auto& r : rows) {
                os << csv_line({format_csv(r.a), terms(r.direct), terms(r.transformed), format_csv(r.direct_ms),
                                format_csv(r.transformed_ms), r.direct ? format_csv(r.direct->value) : "",
                                r.transformed ? format_csv(r.transformed->value) : "",
                                r.direct && r.transformed ? format_csv(agreement(r)) : "",
                                r.direct && r.transformed ? format_csv(speedup(r)) : "", r.status});
            }
            break;
    }
    return kExitOk;
}

// --- table ----------------------------------------------------------------------

struct TableOptions {
    Common common;
    std::string identity;
    std::string family;
    int m_max = 6;
    std::string s_grid, a_grid, b_grid, c_grid;
    PointOptions point;
};

int table_coefficients(const TableOptions& o, std::ostream& os) {
    const std::string& fam = o.family;
    struct Row {
        int index;
        Json data;
        std::vector<std::string> cells;
    };
    std::vector<Row> rows;
    auto add_coeffs = [&](int m, const RationalCoeffs& c) {
        std::vector<std::string> cells;
        for (const auto& v : c.values()) cells.push_back(to_string(v));
        rows.push_back({m, to_json(c), cells});
    };
    if (fam == "eulerian") {
        if (o.m_max < 1 || o.m_max > kMaxMoment) throw UsageError("--m-max must lie in [1, 12] for eulerian");
        for (int m = 1; m <= o.m_max; ++m) add_coeffs(m, eulerian_polynomial(m));
    } else if (fam == "faulhaber") {
        if (o.m_max < 0 || o.m_max > kMaxMoment) throw UsageError("--m-max must lie in [0, 12] for faulhaber");
        for (int m = 0; m <= o.m_max; ++m) add_coeffs(m, faulhaber_coeffs(m));
    } else if (fam == "bernoulli") {
        if (o.m_max < 0 || o.m_max > kMaxBernoulliIndex) throw UsageError("--m-max must lie in [0, 64] for bernoulli");
        const auto b = bernoulli_numbers(o.m_max).values();
        for (int n = 0; n <= o.m_max; ++n) {
            rows.push_back({n, Json(to_string(b[n])), {to_string(b[n])}});
        }
    } else if (fam == "forms") {
        if (o.m_max < 0 || o.m_max > kMaxMoment) throw UsageError("--m-max must lie in [0, 12] for forms");
        std::vector<std::pair<std::string, ZetaCombination>> forms{
            {"kappa", kappa_form()},
            {"kappa-alt", kappa_alt_form()},
            {"shifted", shifted_form(o.point.a)},
            {"shifted-alt", shifted_alt_form(o.point.a)}};
        for (int m = 0; m <= o.m_max; ++m) forms.emplace_back("moment-m" + std::to_string(m), moment_form(m));
        for (int m = 1; m <= 2; ++m) {
            forms.emplace_back("alt-m" + std::to_string(m), moment_alt_form(m));
            forms.emplace_back("even-m" + std::to_string(m), even_arg_moment_form(m));
        }
        Json arr = Json::array();
        for (std::size_t i = 0; i < forms.size(); ++i) {
            std::vector<std::string> cells{forms[i].first};
            Json j{{"name", forms[i].first}, {"terms", to_json(forms[i].second)}};
            rows.push_back({static_cast<int>(i), j, cells});
        }
    } else {
        throw UsageError("unknown table family '" + fam + "' (expected eulerian, faulhaber, bernoulli or forms)");
    }

    const char* index_name = fam == "bernoulli" ? "n" : (fam == "forms" ? "index" : "m");
    switch (o.common.format) {
        case Format::JSON: {
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json j{{index_name, r.index}};
                if (fam == "bernoulli") j["value"] = r.data;
                else if (fam == "forms") j.update(r.data);
                else j.update(r.data);
                arr.push_back(j);
            }
            os << Json{{"family", fam}, {"rows", arr}}.dump(2) << '\n';
            break;
        }
        case Format::CSV:
            if (fam == "forms") throw UsageError("table --family forms supports json output only");
            os << index_name << (fam == "bernoulli" ? ",value\n" : ",coefficients\n");
            for (const auto& r : rows) {
                std::string joined;
                for (std::size_t i = 0; i < r.cells.size(); ++i) joined += (i ? " " : "") + r.cells[i];
                os << r.index << ',' << joined << '\n';
            }
            break;
        case Format::TEXT:
            for (const auto& r : rows) {
                os << index_name << '=' << r.index << ':';
                if (fam == "forms") {
                    os << ' ' << r.cells[0] << ' ' << r.data["terms"].dump();
                } else {
                    for (const auto& c : r.cells) os << ' ' << c;
                }
                os << '\n';
            }
            break;
    }
    return kExitOk;
}

int cmd_table(const TableOptions& o, std::ostream& out) {
    if (o.identity.empty() == o.family.empty()) throw UsageError("table requires exactly one of --identity or --family");
    Sink sink(o.common.output_path, out);
    if (!o.family.empty()) return table_coefficients(o, sink.stream());

    const std::string key = resolve_identity(o.identity);
    const Tolerance tol = tolerance(o.common, 1e-10);
    const IdentityParams base = o.point.params();
    auto grid_or = [](const std::string& g, double v) { return g.empty() ? std::vector<double>{v} : parse_grid(g); };
    std::vector<IdentityReport> reports;
    for (double s : grid_or(o.s_grid, base.s))
        for (double a : grid_or(o.a_grid, base.a))
            for (double b : grid_or(o.b_grid, base.b))
                for (double c : grid_or(o.c_grid, base.c)) {
                    reports.push_back(check_identity(key, {s, a, b, c, base.sign}, tol, o.common.term_budget));
                }
    write_reports(reports, o.common.format, sink.stream());
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz-zeta sums: evaluation, identity checks and transformation benchmarks", "hzsums"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hzsums 0.1.0");

    const std::map<std::string, MethodChoice> methods{{"auto", MethodChoice::AUTO},
                                                      {"direct", MethodChoice::DIRECT},
                                                      {"closed", MethodChoice::CLOSED},
                                                      {"transformed", MethodChoice::TRANSFORMED}};

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one sum");
    eval_cmd->add_option("--family", eval.family, "kappa, kappa-alt, shifted, shifted-alt, moment, moment-alt, "
                                                  "even-arg-moment, general-ab, general-ab-alt, exp-weighted")
        ->required();
    eval_cmd->add_option("--s", eval.spec.s, "Exponent s");
    eval_cmd->add_option("--m", eval.spec.m, "Moment exponent m");
    eval_cmd->add_option("--a", eval.spec.a, "Parameter a");
    eval_cmd->add_option("--b", eval.spec.b, "Parameter b");
    eval_cmd->add_option("--c", eval.spec.c, "Damping c");
    eval_cmd->add_option("--sign", eval.sign, "plus or minus (exp-weighted)");
    eval_cmd->add_option("--method", eval.method, "auto, direct, closed or transformed")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    add_common(eval_cmd, eval.common);

    IdentityOptions ident;
    auto* ident_cmd = app.add_subcommand("identity-check", "Check one identity (or all) numerically");
    ident_cmd->add_option("identity", ident.name, "Identity key or 'all'")->required();
    ident_cmd->add_option("--grid", ident.grid, "Use the built-in parameter grid ('default')");
    ident_cmd->add_option("--s", ident.point.s, "Exponent s");
    ident_cmd->add_option("--a", ident.point.a, "Parameter a");
    ident_cmd->add_option("--b", ident.point.b, "Parameter b");
    ident_cmd->add_option("--c", ident.point.c, "Damping c");
    ident_cmd->add_option("--sign", ident.point.sign, "plus or minus");
    add_common(ident_cmd, ident.common);

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("benchmark", "Compare direct and transformed evaluation over a");
    bench_cmd->add_option("--family", bench.family, "general-ab, general-ab-alt or exp-weighted");
    bench_cmd->add_option("--s", bench.s, "Exponent s");
    bench_cmd->add_option("--b", bench.b, "Parameter b");
    bench_cmd->add_option("--c", bench.c, "Damping c");
    bench_cmd->add_option("--sign", bench.sign, "plus or minus");
    bench_cmd->add_option("--a-list", bench.a_list, "Comma-separated values of a")->delimiter(',');
    add_common(bench_cmd, bench.common);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Emit identity sweeps or exact coefficient tables");
    table_cmd->add_option("--identity", table.identity, "Identity key to sweep");
    table_cmd->add_option("--family", table.family, "eulerian, faulhaber, bernoulli or forms");
    table_cmd->add_option("--m-max", table.m_max, "Largest m (or n for bernoulli)");
    table_cmd->add_option("--s-grid", table.s_grid, "lo:hi:step");
    table_cmd->add_option("--a-grid", table.a_grid, "lo:hi:step");
    table_cmd->add_option("--b-grid", table.b_grid, "lo:hi:step");
    table_cmd->add_option("--c-grid", table.c_grid, "lo:hi:step");
    table_cmd->add_option("--s", table.point.s, "Exponent s when not swept");
    table_cmd->add_option("--a", table.point.a, "Parameter a when not swept");
    table_cmd->add_option("--b", table.point.b, "Parameter b when not swept");
    table_cmd->add_option("--c", table.point.c, "Damping c when not swept");
    table_cmd->add_option("--sign", table.point.sign, "plus or minus");
    add_common(table_cmd, table.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::int64_t budget = term_budget_from_env();
        eval.common.term_budget = ident.common.term_budget = bench.common.term_budget = table.common.term_budget =
            budget;
        if (*eval_cmd) return cmd_eval(eval, out);
        if (*ident_cmd) return cmd_identity_check(ident, out);
        if (*bench_cmd) return cmd_benchmark(bench, out);
        if (*table_cmd) return cmd_table(table, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const NoClosedForm& e) {
        err << "error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (try --method transformed or raise ZS_TERM_BUDGET)\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"hzsums"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hzs::cli
