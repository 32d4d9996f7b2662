#ifndef HZSUMS_CLI_IDENTITIES_HPP
#define HZSUMS_CLI_IDENTITIES_HPP

// Catalog of the identities checked by `hzsums identity-check`. Each entry
// evaluates the left-hand side by direct summation and the right-hand side
// by its closed form or transformed series.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hzsums/series.hpp"

namespace hzs::cli {

struct IdentityParams {
    double s = 4.0;
    double a = 1.0;
    double b = 1.0;
    double c = 0.0;
    Sign sign = Sign::PLUS;
};

// Parameters other than s that an identity depends on.
struct ParamUse {
    bool a = false;
    bool b = false;
    bool c = false;
    bool sign = false;
};

struct IdentityReport {
    std::string identity;
    IdentityParams params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    // Allowed discrepancy: the two certified error bounds plus a rounding
    // allowance of 64 ulp of the larger value.
    double budget = 0.0;
    bool pass = false;
    std::int64_t lhs_terms = 0;
    std::int64_t rhs_terms = 0;
};

/// Canonical keys in catalog order.
const std::vector<std::string>& identity_keys();

/// Maps a key or alias ("3.3" -> "kappa3") to its canonical key.
std::optional<std::string> canonical_identity(std::string_view name);

ParamUse params_used(const std::string& key);

/// One-line description of the identity.
std::string describe_identity(const std::string& key);

/// Parameter grid swept by `identity-check <key> --grid default`.
std::vector<IdentityParams> default_grid(const std::string& key);

/// Evaluates both sides. `tol` applies to the direct and transformed
/// series; closed forms are evaluated at 1e-14.
IdentityReport check_identity(const std::string& key, const IdentityParams& params, Tolerance tol,
                              std::int64_t term_budget = kDefaultTermBudget);

}  // namespace hzs::cli

#endif
