#pragma once

#include <cstdint>

namespace gue {

/*!
 * A real number stored as mantissa * 2^exponent with |mantissa| in [1, 2)
 * (or mantissa == 0), so magnitudes far outside the double range can be
 * carried through a recurrence. Every arithmetic operation returns a
 * normalized value.
 */
class ScaledValue {
  public:
    constexpr ScaledValue() = default;

    /// Normalizes value * 2^exponent.
    static ScaledValue from(double value, std::int64_t exponent = 0);

    double mantissa() const noexcept { return mantissa_; }
    std::int64_t exponent() const noexcept { return exponent_; }

    bool is_zero() const noexcept { return mantissa_ == 0.0; }
    int sign() const noexcept { return (mantissa_ > 0) - (mantissa_ < 0); }

    /// Natural log of |value|; -inf for zero.
    double log_abs() const noexcept;

    /// Conversion to double; saturates to +-inf or flushes to 0 out of range.
    double to_double() const noexcept;

    ScaledValue operator-() const noexcept;

    friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b);
    friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b);
    friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b);
    friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b);
    friend ScaledValue operator*(const ScaledValue& a, double b);

  private:
    double mantissa_ = 0.0;
    std::int64_t exponent_ = 0;
};

}  // namespace gue
