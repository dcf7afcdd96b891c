#ifndef MINORCLIQUE_TURAN_HPP
#define MINORCLIQUE_TURAN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorclique/big_count.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/log_value.hpp"

namespace minorclique {

/// Complete multipartite graph described by its part sizes, kept in
/// descending order.
class MultipartiteSpec {
 public:
  MultipartiteSpec() = default;
  explicit MultipartiteSpec(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    detail::require(!parts_.empty(), "multipartite spec needs at least one part");
    for (auto a : parts_) detail::require(a >= 1, "multipartite part sizes must be at least 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  std::size_t order() const {
    std::size_t s = 0;
    for (auto a : parts_) s += a;
    return s;
  }
  bool balanced() const { return parts_.empty() || parts_.front() - parts_.back() <= 1; }

  friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;

 private:
  std::vector<std::size_t> parts_;
};

/// T(n, w): w parts of sizes floor(n/w) and ceil(n/w).
inline MultipartiteSpec turan_spec(std::size_t n, std::size_t w) {
  detail::require(w >= 1 && w <= n, "turan_spec needs 1 <= w <= n");
  std::vector<std::size_t> parts(w, n / w);
  for (std::size_t i = 0; i < n % w; ++i) ++parts[i];
  return MultipartiteSpec(std::move(parts));
}

/// Number of k-cliques, i.e. the elementary symmetric polynomial e_k of the
/// part sizes, by the usual O(l * k) recurrence.
inline BigCount multipartite_k_cliques(const MultipartiteSpec& spec, std::size_t k) {
  const auto& a = spec.parts();
  if (k > a.size()) return 0;
  std::vector<BigCount> e(k + 1, BigCount(0));
  e[0] = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * a[i];
  return e[k];
}

/// Same count for a balanced spec via sum_i C(x,i) C(y,k-i) a^i (a+1)^(k-i),
/// where x parts have size a and y parts size a+1.
inline BigCount balanced_k_cliques(const MultipartiteSpec& spec, std::size_t k) {
  detail::require(spec.balanced(), "balanced_k_cliques needs a balanced spec");
  const std::size_t a = spec.parts().back();
  std::size_t y = 0;
  for (auto p : spec.parts()) y += (p == a + 1);
  const std::size_t x = spec.part_count() - y;
  BigCount total = 0;
  for (std::size_t i = 0; i <= std::min(x, k); ++i) {
    if (k - i > y) continue;
    BigCount term = binomial(static_cast<std::int64_t>(x), static_cast<std::int64_t>(i)) *
                    binomial(static_cast<std::int64_t>(y), static_cast<std::int64_t>(k - i));
    term *= boost::multiprecision::pow(BigCount(a), static_cast<unsigned>(i));
    term *= boost::multiprecision::pow(BigCount(a + 1), static_cast<unsigned>(k - i));
    total += term;
  }
  return total;
}

/// Default upper limit on the vertex count of a materialized spec.
inline constexpr std::size_t kMaterializeCap = 2000;

/// Parts occupy consecutive labels, largest part first.
inline Graph materialize(const MultipartiteSpec& spec, std::size_t cap = kMaterializeCap) {
  const std::size_t n = spec.order();
  if (n > cap)
    throw CapExceeded("materialization refused: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(cap));
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < spec.part_count(); ++p) part_of.insert(part_of.end(), spec.parts()[p], p);
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (part_of[u] != part_of[v]) rows[u].insert(v);
  return Graph(std::move(rows));
}

struct TStarResult {
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t omega_star = 0;
  MultipartiteSpec spec;
  BigCount count = 0;
};

inline nlohmann::json to_json(const TStarResult& r) {
  return nlohmann::json{{"t", r.t},         {"k", r.k}, {"omega", r.omega_star}, {"parts", r.spec.parts()},
                        {"count", to_decimal(r.count)}};
}

namespace detail {

/// Natural-log factorials 0..n, shared by the log-space scan.
inline const std::vector<double>& log_factorials(std::size_t n) {
  thread_local std::vector<double> table{0.0};
  while (table.size() <= n) table.push_back(table.back() + std::log(static_cast<double>(table.size())));
  return table;
}

/// ln of the k-clique count of T(2t - w - 1, w), evaluated from the balanced
/// binomial form in floating point.
inline double turan_log_count(std::size_t t, std::size_t w, std::size_t k) {
  const std::size_t n = 2 * t - w - 1;
  const std::size_t a = n / w, y = n % w, x = w - y;
  const auto& lf = log_factorials(w + 1);
  auto lc = [&](std::size_t nn, std::size_t r) { return lf[nn] - lf[r] - lf[nn - r]; };
  const double la = std::log(static_cast<double>(a)), la1 = std::log(static_cast<double>(a + 1));
  const std::size_t lo = k > y ? k - y : 0, hi = std::min(x, k);
  double best = -INFINITY;
  thread_local std::vector<double> terms;
  terms.clear();
  for (std::size_t i = lo; i <= hi; ++i) {
    double v = lc(x, i) + lc(y, k - i) + static_cast<double>(i) * la + static_cast<double>(k - i) * la1;
    terms.push_back(v);
    best = std::max(best, v);
  }
  double s = 0;
  for (double v : terms) s += std::exp(v - best);
  return best + std::log(s);
}

}  // namespace detail

/// Reference optimizer: exact k-clique count for every omega in [k, t-1].
inline TStarResult t_star_exact(std::size_t t, std::size_t k) {
  detail::require(k >= 1 && k < t, "t_star needs 1 <= k < t");
  TStarResult best{t, k, 0, {}, -1};
  for (std::size_t w = k; w + 1 <= t; ++w) {
    auto spec = turan_spec(2 * t - w - 1, w);
    BigCount c = multipartite_k_cliques(spec, k);
    if (c > best.count) best = {t, k, w, spec, c};
  }
  return best;
}

/// The Turan graph T(2t - w - 1, w), w in [k, t-1], with the most k-cliques;
/// the smallest such w on ties. A floating-point scan shortlists the omegas
/// within a relative 1e-9 of the best estimate and exact counts decide.
inline TStarResult t_star(std::size_t t, std::size_t k) {
  detail::require(k >= 1 && k < t, "t_star needs 1 <= k < t");
  std::vector<double> est;
  double top = -INFINITY;
  for (std::size_t w = k; w + 1 <= t; ++w) {
    est.push_back(detail::turan_log_count(t, w, k));
    top = std::max(top, est.back());
  }
  const double tol = 1e-9 * std::max(1.0, std::fabs(top)) + 1e-9;
  TStarResult best{t, k, 0, {}, -1};
  for (std::size_t i = 0; i < est.size(); ++i) {
    if (est[i] < top - tol) continue;
    std::size_t w = k + i;
    auto spec = turan_spec(2 * t - w - 1, w);
    BigCount c = balanced_k_cliques(spec, k);
    if (c > best.count) best = {t, k, w, spec, c};
  }
  return best;
}

/// log2 bounds C(t-1,k) * max(1, 2 - 4 sqrt(2k/t))^k and C(t-1,k) * 2^k.
inline std::pair<LogValue, LogValue> c_star_sandwich(std::size_t t, std::size_t k) {
  detail::require(k >= 1 && k < t, "c_star_sandwich needs 1 <= k < t");
  LogValue base = log_binomial(static_cast<std::int64_t>(t - 1), static_cast<std::int64_t>(k));
  double factor = std::max(1.0, 2.0 - 4.0 * std::sqrt(2.0 * static_cast<double>(k) / static_cast<double>(t)));
  LogValue lower = base * LogValue::from_log2(static_cast<double>(k) * std::log2(factor));
  LogValue upper = base * LogValue::from_log2(static_cast<double>(k));
  return {lower, upper};
}

/// Every part a satisfies a < 3 or (a-1)^2 (k-1) < 4n - 3k + 7 - 4a, in exact
/// integer arithmetic.
inline bool part_size_bound_check(const MultipartiteSpec& spec, std::size_t k) {
  detail::require(k >= 2, "part_size_bound_check needs k >= 2");
  const auto n = static_cast<std::int64_t>(spec.order());
  const auto kk = static_cast<std::int64_t>(k);
  for (auto part : spec.parts()) {
    const auto a = static_cast<std::int64_t>(part);
    if (a < 3) continue;
    if (!((a - 1) * (a - 1) * (kk - 1) < 4 * n - 3 * kk + 7 - 4 * a)) return false;
  }
  return true;
}

/// omega* lies in [sqrt(tk)/4, 10 sqrt(tk)], and omega* = t-1 once k >= 2t/3.
/// Compared through squares so no rounding is involved.
inline bool omega_in_range(std::size_t t, std::size_t k, std::size_t omega) {
  const auto w = static_cast<std::uint64_t>(omega), tk = static_cast<std::uint64_t>(t) * k;
  if (16 * w * w < tk || w * w > 100 * tk) return false;
  if (3 * k >= 2 * t && omega != t - 1) return false;
  return true;
}

inline bool omega_star_range_check(std::size_t t, std::size_t k) {
  return omega_in_range(t, k, t_star(t, k).omega_star);
}

}  // namespace minorclique

#endif  // MINORCLIQUE_TURAN_HPP
