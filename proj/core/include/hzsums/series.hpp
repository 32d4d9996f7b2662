#ifndef HZSUMS_SERIES_HPP
#define HZSUMS_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hzsums/special.hpp"

namespace hzs {

// The Hurwitz-zeta sums this library evaluates. With k running over the
// index range shown and zeta = zeta(s, .):
//
//   KAPPA            sum_{k>=1} zeta(s, k)                       s > 2
//   KAPPA_ALT        sum_{k>=1} (-1)^(k-1) zeta(s, k)            s > 1
//   SHIFTED          sum_{k>=0} zeta(s, k + a)                   s > 2
//   SHIFTED_ALT      sum_{k>=0} (-1)^k zeta(s, k + a)            s > 1
//   MOMENT           sum_{k>=1} k^m zeta(s, k)                   s > m+2
//   MOMENT_ALT       sum_{k>=1} (-1)^(k-1) k^m zeta(s, k)        s > m+1
//   EVEN_ARG_MOMENT  sum_{k>=1} k^m zeta(s, 2k)                  s > m+2
//   GENERAL_AB       sum_{k>=0} zeta(s, ka + b)                  s > 2
//   GENERAL_AB_ALT   sum_{k>=0} (-1)^k zeta(s, ka + b)           s > 1
//   EXP_WEIGHTED     sum_{k>=0} (+-1)^k e^(-ck) zeta(s, ka + b)  s > 1 (s > 2 if c = 0, PLUS)
enum class Family {
    KAPPA,
    KAPPA_ALT,
    SHIFTED,
    SHIFTED_ALT,
    MOMENT,
    MOMENT_ALT,
    EVEN_ARG_MOMENT,
    GENERAL_AB,
    GENERAL_AB_ALT,
    EXP_WEIGHTED,
};

enum class Sign { PLUS, MINUS };

enum class Method { DIRECT, CLOSED_FORM, TRANSFORMED };

inline constexpr std::int64_t kDefaultTermBudget = 10'000'000;

// Largest moment exponent m supported by the moment families.
inline constexpr int kMaxMoment = 12;

struct SumSpec {
    Family family = Family::KAPPA;
    double s = 4.0;
    int m = 0;
    double a = 1.0;
    double b = 1.0;
    double c = 0.0;
    Sign sign = Sign::PLUS;
    Tolerance tol{};
    std::int64_t term_budget = kDefaultTermBudget;
};

struct SumResult {
    double value = 0.0;
    std::int64_t terms_used = 0;
    // Certified bound on |value - exact|, truncation and per-term
    // evaluation error combined.
    double tail_bound = 0.0;
    Method method = Method::DIRECT;
};

/// Throws DomainError naming the violated condition.
void validate(const SumSpec& spec);

/// Convergence threshold on s for the family (e.g. m + 2 for MOMENT).
double convergence_threshold(const SumSpec& spec);

/// True for the families whose terms alternate in sign.
bool is_alternating(const SumSpec& spec);

std::string_view to_string(Family f);
std::string_view to_string(Sign s);
std::string_view to_string(Method m);

/// Accepts the enum spelling ("GENERAL_AB") and the CLI spelling ("general-ab").
std::optional<Family> parse_family(std::string_view name);

}  // namespace hzs

#endif
