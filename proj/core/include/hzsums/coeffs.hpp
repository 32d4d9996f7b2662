#ifndef HZSUMS_COEFFS_HPP
#define HZSUMS_COEFFS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hzs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rational coefficient vector. Entry i multiplies n^(offset + i).
///
/// Fractions are kept in lowest terms with positive denominators; both
/// lists always have the same length.
class RationalCoeffs {
public:
    RationalCoeffs() = default;
    explicit RationalCoeffs(const std::vector<Rational>& values, int offset = 0);

    std::size_t size() const noexcept { return numerators_.size(); }
    bool empty() const noexcept { return numerators_.empty(); }
    int offset() const noexcept { return offset_; }

    const std::vector<BigInt>& numerators() const noexcept { return numerators_; }
    const std::vector<BigInt>& denominators() const noexcept { return denominators_; }

    Rational at(std::size_t i) const;
    double to_double(std::size_t i) const;
    std::vector<Rational> values() const;

    // Exact value of sum_i c_i n^(offset+i); offset must be >= 0.
    Rational evaluate(const Rational& n) const;

    friend bool operator==(const RationalCoeffs&, const RationalCoeffs&) = default;

private:
    std::vector<BigInt> numerators_;
    std::vector<BigInt> denominators_;
    int offset_ = 0;
};

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
Rational rational_from_double(double x);

}  // namespace hzs

#endif
