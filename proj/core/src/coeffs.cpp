#include "hzsums/coeffs.hpp"

#include <cmath>
#include <stdexcept>

namespace hzs {

RationalCoeffs::RationalCoeffs(const std::vector<Rational>& values, int offset) : offset_(offset) {
    numerators_.reserve(values.size());
    denominators_.reserve(values.size());
    for (const auto& v : values) {
        // cpp_rational is always normalized with a positive denominator.
        numerators_.push_back(boost::multiprecision::numerator(v));
        denominators_.push_back(boost::multiprecision::denominator(v));
    }
}

Rational RationalCoeffs::at(std::size_t i) const {
    return Rational(numerators_.at(i), denominators_.at(i));
}

double RationalCoeffs::to_double(std::size_t i) const {
    return at(i).convert_to<double>();
}

std::vector<Rational> RationalCoeffs::values() const {
    std::vector<Rational> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
    return out;
}

Rational RationalCoeffs::evaluate(const Rational& n) const {
    if (offset_ < 0) throw std::invalid_argument("RationalCoeffs::evaluate: negative offset");
    Rational power = 1;
    for (int i = 0; i < offset_; ++i) power *= n;
    Rational acc = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        acc += at(i) * power;
        power *= n;
    }
    return acc;
}

std::string to_string(const Rational& r) {
    const BigInt& q = boost::multiprecision::denominator(r);
    if (q == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + q.str();
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);
    // 53 significant bits make the mantissa an exact integer.
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational r{BigInt(scaled)};
    BigInt two_pow = BigInt(1) << std::abs(exponent);
    if (exponent >= 0) r *= two_pow;
    else r /= two_pow;
    return r;
}

}  // namespace hzs
