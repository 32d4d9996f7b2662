#ifndef HZSUMS_CLI_SERIALIZE_HPP
#define HZSUMS_CLI_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "hzsums/closed_forms.hpp"
#include "hzsums/coeffs.hpp"
#include "hzsums/series.hpp"
#include "hzsums/transforms.hpp"
#include "hzsums_cli/identities.hpp"

namespace hzs::cli {

using Json = nlohmann::ordered_json;

/// Shortest round-trip form (17 significant digits at most).
std::string format_csv(double x);
/// 10 significant digits.
std::string format_text(double x);

Json to_json(const SumResult& r);
Json to_json(const TransformReport& r);
Json to_json(const IdentityReport& r);
/// {"offset": k, "coefficients": ["p/q", ...]}
Json to_json(const RationalCoeffs& c);
/// [{"coefficient": "p/q", "kind": "ZETA"|"HURWITZ", "s_shift": j,
///   "alpha": x|null, "two_pow_minus_s": bool}, ...]
Json to_json(const ZetaCombination& z);

}  // namespace hzs::cli

#endif
