#ifndef MINORCLIQUE_BIG_COUNT_HPP
#define MINORCLIQUE_BIG_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "minorclique/errors.hpp"

namespace minorclique {

/// Exact nonnegative integer used for every clique count.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

inline BigCount from_decimal(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("not a nonnegative decimal integer: '" + s + "'");
  return BigCount(s);
}

/// Exact binomial coefficient; zero when k < 0 or k > n (including n < 0).
inline BigCount binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline BigCount pow2(std::uint64_t e) {
  BigCount r = 1;
  r <<= e;
  return r;
}

/// log2 of a positive big integer, accurate to double precision.
/// Returns -infinity for zero.
inline double log2_of(const BigCount& v) {
  if (v <= 0) return -INFINITY;
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 63) return std::log2(static_cast<double>(v.convert_to<std::uint64_t>()));
  std::size_t shift = bits - 63;
  BigCount top = v >> shift;
  return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift);
}

}  // namespace minorclique

#endif  // MINORCLIQUE_BIG_COUNT_HPP
