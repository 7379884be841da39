#pragma once

#include <cmath>

namespace zetalab {

/// Neumaier compensated accumulator.
template <typename T>
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(T init) : sum_(init) {}

    CompensatedSum& operator+=(T x) {
        T t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    CompensatedSum& operator-=(T x) { return *this += -x; }

    T value() const { return sum_ + comp_; }
    explicit operator T() const { return value(); }

private:
    T sum_ = 0;
    T comp_ = 0;
};

}  // namespace zetalab
