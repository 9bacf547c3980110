#include "gue/scaled_value.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gue/errors.hpp"

namespace gue {

ScaledValue ScaledValue::from(double value, std::int64_t exponent)
{
    if (!std::isfinite(value)) {
        throw DomainError("ScaledValue: non-finite mantissa");
    }
    ScaledValue result;
    if (value == 0.0) {
        return result;
    }
    int e = 0;
    // frexp yields [0.5, 1); shift to [1, 2).
    const double m = std::frexp(value, &e);
    result.mantissa_ = 2.0 * m;
    result.exponent_ = exponent + e - 1;
    return result;
}

double ScaledValue::log_abs() const noexcept
{
    if (mantissa_ == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log(std::abs(mantissa_))
           + static_cast<double>(exponent_) * std::numbers::ln2;
}

double ScaledValue::to_double() const noexcept
{
    if (mantissa_ == 0.0) {
        return 0.0;
    }
    if (exponent_ > 1100) {
        return std::copysign(std::numeric_limits<double>::infinity(), mantissa_);
    }
    if (exponent_ < -1100) {
        return std::copysign(0.0, mantissa_);
    }
    return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

ScaledValue ScaledValue::operator-() const noexcept
{
    ScaledValue r = *this;
    r.mantissa_ = -r.mantissa_;
    return r;
}

ScaledValue operator*(const ScaledValue& a, const ScaledValue& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    return ScaledValue::from(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

ScaledValue operator/(const ScaledValue& a, const ScaledValue& b)
{
    if (b.is_zero()) {
        throw DomainError("ScaledValue: division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    return ScaledValue::from(a.mantissa_ / b.mantissa_, a.exponent_ - b.exponent_);
}

ScaledValue operator+(const ScaledValue& a, const ScaledValue& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const ScaledValue& big = a.exponent_ >= b.exponent_ ? a : b;
    const ScaledValue& small = a.exponent_ >= b.exponent_ ? b : a;
    const std::int64_t shift = big.exponent_ - small.exponent_;
    if (shift > 60) {
        return big;
    }
    const double sum = big.mantissa_ + std::ldexp(small.mantissa_, -static_cast<int>(shift));
    return ScaledValue::from(sum, big.exponent_);
}

ScaledValue operator-(const ScaledValue& a, const ScaledValue& b)
{
    return a + (-b);
}

ScaledValue operator*(const ScaledValue& a, double b)
{
    return a * ScaledValue::from(b);
}

}  // namespace gue
