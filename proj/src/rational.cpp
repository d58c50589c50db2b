#include "finetti/rational.hpp"

#include <stdexcept>

namespace finetti {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (std::int64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);  // divides exactly: prefix products are binomials
    }
    return result;
}

Rational pow_rational(const Rational& base, std::int64_t exponent) {
    if (exponent == 0) return Rational(1);
    bool invert = exponent < 0;
    std::uint64_t e = invert ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                             : static_cast<std::uint64_t>(exponent);
    if (invert && base == 0) throw std::domain_error("pow_rational: 0 to a negative power");
    Rational acc(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1u) acc *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return invert ? Rational(1) / acc : acc;
}

double to_double(const Rational& value) { return static_cast<double>(value); }

}  // namespace finetti
