#ifndef HZSUMS_SRC_CHECK_HPP
#define HZSUMS_SRC_CHECK_HPP

#include <cmath>
#include <cstdio>
#include <string>

#include "hzsums/error.hpp"
#include "hzsums/special.hpp"

namespace hzs::internal {

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

inline void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw DomainError(std::string(name) + " must be finite");
}

// value > threshold with the boundary margin applied.
inline void require_above(double value, double threshold, const std::string& condition) {
    if (!(value > threshold + kBoundaryMargin)) {
        throw DomainError("requires " + condition + " (got " + num(value) + ")");
    }
}

inline void require_at_least(double value, double threshold, const std::string& condition) {
    if (!(value >= threshold)) {
        throw DomainError("requires " + condition + " (got " + num(value) + ")");
    }
}

}  // namespace hzs::internal

#endif
