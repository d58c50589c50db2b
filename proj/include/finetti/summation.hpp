#pragma once

namespace finetti {

// Kahan compensated accumulator. Use where an alternating or long sum
// would otherwise lose low-order bits; a drop-in for plain +=.
struct KahanAccumulator {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        const double y = value - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

}  // namespace finetti
