#pragma once

#include <cmath>

namespace finetti {

// Sign-and-log representation for values whose magnitude can leave the
// double range (binomials times large integer powers). Multiplication
// adds logs; addition factors out the larger magnitude first.
struct SignedLogValue {
    int sign = 0;          // -1, 0, +1
    double log_mag = 0.0;  // ln|value|; meaningless when sign == 0

    static SignedLogValue zero() { return {0, 0.0}; }

    static SignedLogValue from_log(int sign, double log_mag) {
        if (sign == 0) return zero();
        return {sign, log_mag};
    }

    static SignedLogValue from_value(double v) {
        if (v == 0.0) return zero();
        return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return static_cast<double>(sign) * std::exp(log_mag);
    }

    SignedLogValue pow_int(long long exponent) const {
        if (sign == 0) return zero();
        int s = (sign < 0 && (exponent & 1LL)) ? -1 : 1;
        return {s, log_mag * static_cast<double>(exponent)};
    }

    friend SignedLogValue operator*(const SignedLogValue& a, const SignedLogValue& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.log_mag + b.log_mag};
    }

    friend SignedLogValue operator+(const SignedLogValue& a, const SignedLogValue& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const SignedLogValue& big = (a.log_mag >= b.log_mag) ? a : b;
        const SignedLogValue& small = (a.log_mag >= b.log_mag) ? b : a;
        // r = s_big + s_small * exp(l_small - l_big), in [-2, 2]
        const double r = static_cast<double>(big.sign) +
                         static_cast<double>(small.sign) * std::exp(small.log_mag - big.log_mag);
        if (r == 0.0) return zero();
        return {r > 0.0 ? 1 : -1, big.log_mag + std::log(std::fabs(r))};
    }

    friend SignedLogValue operator-(const SignedLogValue& a, const SignedLogValue& b) {
        return a + SignedLogValue{-b.sign, b.log_mag};
    }
};

}  // namespace finetti
