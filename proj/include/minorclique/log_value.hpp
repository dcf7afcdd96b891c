#ifndef MINORCLIQUE_LOG_VALUE_HPP
#define MINORCLIQUE_LOG_VALUE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "minorclique/big_count.hpp"
#include "minorclique/errors.hpp"

namespace minorclique {

/// A nonnegative quantity stored as its base-2 logarithm, or an exact zero.
class LogValue {
 public:
  LogValue() = default;  // zero

  static LogValue zero() { return LogValue(); }
  static LogValue from_log2(double l) {
    detail::require(!std::isnan(l) && l != INFINITY, "LogValue: log2 must be finite");
    if (l == -INFINITY) return zero();
    LogValue v;
    v.log2_ = l;
    v.zero_ = false;
    return v;
  }
  static LogValue of(double x) {
    detail::require(x >= 0 && std::isfinite(x), "LogValue: quantity must be finite and nonnegative");
    return x == 0 ? zero() : from_log2(std::log2(x));
  }
  static LogValue of(const BigCount& x) {
    detail::require(x >= 0, "LogValue: quantity must be nonnegative");
    return x == 0 ? zero() : from_log2(log2_of(x));
  }

  bool is_zero() const { return zero_; }
  /// log2 of the quantity; -infinity for zero.
  double log2() const { return zero_ ? -INFINITY : log2_; }

  friend LogValue operator*(const LogValue& a, const LogValue& b) {
    if (a.zero_ || b.zero_) return zero();
    return from_log2(a.log2_ + b.log2_);
  }
  friend LogValue operator/(const LogValue& a, const LogValue& b) {
    detail::require(!b.zero_, "LogValue: division by zero");
    if (a.zero_) return zero();
    return from_log2(a.log2_ - b.log2_);
  }
  friend LogValue operator+(const LogValue& a, const LogValue& b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    double hi = std::max(a.log2_, b.log2_), lo = std::min(a.log2_, b.log2_);
    return from_log2(hi + std::log2(1.0 + std::exp2(lo - hi)));
  }
  LogValue& operator+=(const LogValue& o) { return *this = *this + o; }
  LogValue& operator*=(const LogValue& o) { return *this = *this * o; }

  /// The quantity raised to a real power e >= 0 (0^0 = 1).
  LogValue pow(double e) const {
    if (e == 0) return from_log2(0);
    if (zero_) return zero();
    return from_log2(log2_ * e);
  }

  friend bool operator<(const LogValue& a, const LogValue& b) { return a.log2() < b.log2(); }
  friend bool operator<=(const LogValue& a, const LogValue& b) { return a.log2() <= b.log2(); }
  friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
  friend bool operator>=(const LogValue& a, const LogValue& b) { return b <= a; }

 private:
  double log2_ = 0;
  bool zero_ = true;
};

/// Sum of many LogValues, stable regardless of order (max is factored out).
template <typename Range>
LogValue log_sum(const Range& values) {
  double hi = -INFINITY;
  for (const LogValue& v : values) hi = std::max(hi, v.log2());
  if (hi == -INFINITY) return LogValue::zero();
  double s = 0;
  for (const LogValue& v : values)
    if (!v.is_zero()) s += std::exp2(v.log2() - hi);
  return LogValue::from_log2(hi + std::log2(s));
}

/// log2 C(n, k); exact zero when k < 0, n < 0 or k > n.
inline LogValue log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return LogValue::zero();
  std::int64_t m = std::min(k, n - k);
  if (m <= 1000) {
    double s = 0;
    for (std::int64_t i = 0; i < m; ++i)
      s += std::log2(static_cast<double>(n - i)) - std::log2(static_cast<double>(i + 1));
    return LogValue::from_log2(s);
  }
  double l = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
             std::lgamma(static_cast<double>(n - k) + 1);
  return LogValue::from_log2(l / std::log(2.0));
}

/// log2 of the generalized binomial prod_{i<m} (x - i) / m! for real x.
/// Zero when m > x, matching the empty-count convention.
inline LogValue log_binomial_real(double x, std::int64_t m) {
  if (m < 0 || static_cast<double>(m) > x) return LogValue::zero();
  if (m <= 1000) {
    double s = 0;
    for (std::int64_t i = 0; i < m; ++i)
      s += std::log2(x - static_cast<double>(i)) - std::log2(static_cast<double>(i + 1));
    return LogValue::from_log2(s);
  }
  double l = std::lgamma(x + 1) - std::lgamma(x - static_cast<double>(m) + 1) -
             std::lgamma(static_cast<double>(m) + 1);
  return LogValue::from_log2(l / std::log(2.0));
}

}  // namespace minorclique

#endif  // MINORCLIQUE_LOG_VALUE_HPP
