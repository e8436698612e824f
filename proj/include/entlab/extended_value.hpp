/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace entlab {

/// Finite real or +infinity.  Relative entropies land here in singular
/// cases.  NaN and -infinity are rejected at construction; +infinity is
/// absorbing under addition and multiplication by positive scalars.
class ExtendedValue {
 public:
  ExtendedValue() : v_(0.0) {}
  ExtendedValue(double v) : v_(v) {  // NOLINT: implicit by design
    if (std::isnan(v_)) throw std::domain_error("ExtendedValue: NaN");
    if (std::isinf(v_) && v_ < 0.0)
      throw std::domain_error("ExtendedValue: -inf is not representable");
  }

  static ExtendedValue infinity() {
    return ExtendedValue(std::numeric_limits<double>::infinity());
  }

  bool is_infinite() const { return std::isinf(v_); }
  bool is_finite() const { return !is_infinite(); }

  /// IEEE value; +inf maps to the IEEE infinity.
  double value() const { return v_; }

  double finite_value() const {
    if (is_infinite())
      throw std::domain_error("ExtendedValue: +inf where a finite value is required");
    return v_;
  }

  ExtendedValue operator+(const ExtendedValue& o) const { return ExtendedValue(v_ + o.v_); }
  ExtendedValue operator-() const = delete;  // would create -inf

  /// Scale by a positive factor (homogeneity use only).
  ExtendedValue scaled(double lambda) const {
    if (!(lambda > 0.0)) throw std::domain_error("ExtendedValue::scaled: factor must be positive");
    return ExtendedValue(v_ * lambda);
  }

  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) { return a.v_ < b.v_; }
  friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return a.v_ > b.v_; }
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return a.v_ >= b.v_; }
  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) { return a.v_ == b.v_; }

 private:
  double v_;
};

}  // namespace entlab
