#ifndef MINORCLIQUE_BOUNDS_HPP
#define MINORCLIQUE_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorclique/big_count.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/log_value.hpp"
#include "minorclique/peeling.hpp"
#include "minorclique/turan.hpp"

namespace minorclique {

/// Constant in the edge bound d = beta * t * sqrt(ln t) for K_t-minor-free graphs.
inline constexpr double kBeta = 0.64;

/// Below this t the "sufficiently large t" bounds are reported with a warning.
inline constexpr std::size_t kLargeTThreshold = 2000;

/// d = beta t sqrt(ln t), natural log.
inline double thomason_d(std::size_t t) {
  const double x = static_cast<double>(t);
  return kBeta * x * std::sqrt(std::log(x));
}

/// The real number 4 sqrt(t) (log2 t)^(1/4); r0_bound is its ceiling.
inline double r0_real(std::size_t t) {
  const double x = static_cast<double>(t);
  return 4.0 * std::sqrt(x) * std::sqrt(std::sqrt(std::log2(x)));
}

/// 2t/3 + 2 sqrt(t) (log2 t)^(1/4).
inline double klarge0_threshold(std::size_t t) {
  const double x = static_cast<double>(t);
  return 2.0 * x / 3.0 + 2.0 * std::sqrt(x) * std::sqrt(std::sqrt(std::log2(x)));
}

/// log2 C(n, k) through the exact big integer. Slow; meant for cross-checks.
inline LogValue log_binomial_exact(std::int64_t n, std::int64_t k) { return LogValue::of(binomial(n, k)); }

/// log2( C(d, k-1) * n ) with the generalized binomial over real d. Any
/// k >= 2 is accepted so the empty case k - 1 > d can be observed.
inline LogValue crude_upper(std::size_t t, std::size_t k, std::uint64_t n) {
  detail::require(k >= 2, "crude_upper needs k >= 2");
  detail::require(t >= 2, "crude_upper needs t >= 2");
  return log_binomial_real(thomason_d(t), static_cast<std::int64_t>(k) - 1) * LogValue::of(static_cast<double>(n));
}

/// k-cliques in any (t-2)-tree on n vertices: C(t-2, k) + (n-t+2) C(t-2, k-1).
inline BigCount tree_count(std::size_t t, std::size_t k, std::uint64_t n) {
  detail::require(t >= 2, "tree_count needs t >= 2");
  detail::require(n + 2 >= t, "tree_count needs n >= t - 2");
  detail::require(k + 1 <= t, "tree_count needs k <= t - 1");
  const auto base = static_cast<std::int64_t>(t) - 2, kk = static_cast<std::int64_t>(k);
  return binomial(base, kk) + BigCount(n + 2 - t) * binomial(base, kk - 1);
}

/// Exact C(t-r-s, k-r) * 2^s; zero when the binomial is empty.
inline BigCount count_Ht_exact(std::int64_t t, std::int64_t k, std::int64_t r, std::int64_t s) {
  detail::require(s >= 0, "count_Ht needs s >= 0");
  BigCount c = binomial(t - r - s, k - r);
  return c == 0 ? c : c * pow2(static_cast<std::uint64_t>(s));
}

inline LogValue count_Ht_bound(std::int64_t t, std::int64_t k, std::int64_t r, std::int64_t s) {
  detail::require(s >= 0, "count_Ht needs s >= 0");
  return log_binomial(t - r - s, k - r) * LogValue::from_log2(static_cast<double>(s));
}

/// n C(r-1, r_l) M^(r-r_l-1) C(r0, r_l) (d / r0)^r_l with the real r0.
inline LogValue encoding_count_bound(std::size_t t, std::uint64_t n, std::size_t r, std::size_t r_l, double M) {
  detail::require(t >= 2, "encoding_count_bound needs t >= 2");
  detail::require(r_l < r, "encoding_count_bound needs r_l < r");
  detail::require(r <= r0_bound(t), "encoding_count_bound needs r <= r0_bound(t)");
  detail::require(M >= 1 && std::isfinite(M), "encoding_count_bound needs M >= 1");
  const double r0 = r0_real(t);
  const auto rl = static_cast<std::int64_t>(r_l);
  LogValue v = LogValue::of(static_cast<double>(n));
  v *= log_binomial(static_cast<std::int64_t>(r) - 1, rl);
  v *= LogValue::of(M).pow(static_cast<double>(r - r_l - 1));
  v *= log_binomial_real(r0, rl);
  v *= LogValue::of(thomason_d(t) / r0).pow(static_cast<double>(r_l));
  return v;
}

struct KeyLemmaBounds {
  double general = 0;
  double refined = 0;
};

/// Lower bounds on the number of extra branch disks: r/3 - 7 log2 t, and
/// r_l - 1 - 7 (log_{1/(1-eps)} d + 8 r_l log_{1/(2 eps)} M / M).
inline KeyLemmaBounds key_lemma1_lower(std::size_t r, std::size_t r_l, std::size_t t, double M, double eps) {
  detail::require(eps > 0 && eps <= 1.0 / 6.0, "key_lemma1_lower needs eps in (0, 1/6]");
  detail::require(M >= 1 && std::isfinite(M), "key_lemma1_lower needs M >= 1");
  detail::require(t >= 2, "key_lemma1_lower needs t >= 2");
  KeyLemmaBounds b;
  b.general = static_cast<double>(r) / 3.0 - 7.0 * std::log2(static_cast<double>(t));
  const double log_d = std::log(thomason_d(t)) / -std::log1p(-eps);
  const double log_M = std::log(M) / std::log(1.0 / (2.0 * eps));
  b.refined = static_cast<double>(r_l) - 1.0 - 7.0 * (log_d + 8.0 * static_cast<double>(r_l) * log_M / M);
  return b;
}

/// n ((C(t-1,k) + C(t-2,k-1)) / t) t^(10 log2 t) 2^min(4 r0 log2 t, 160 (t-k) ln ln t).
inline LogValue theorem_klarge0_bound(std::size_t t, std::size_t k, std::uint64_t n) {
  detail::require(k < t, "theorem_klarge0_bound needs k < t");
  detail::require(static_cast<double>(k) >= klarge0_threshold(t),
                  "theorem_klarge0_bound needs k >= 2t/3 + 2 sqrt(t) (log2 t)^(1/4)");
  const auto tt = static_cast<std::int64_t>(t), kk = static_cast<std::int64_t>(k);
  const double lt = std::log2(static_cast<double>(t));
  LogValue main = (log_binomial(tt - 1, kk) + log_binomial(tt - 2, kk - 1)) / LogValue::of(static_cast<double>(t));
  const double extra = std::min(4.0 * r0_real(t) * lt,
                                160.0 * static_cast<double>(t - k) * std::log(std::log(static_cast<double>(t))));
  return LogValue::of(static_cast<double>(n)) * main * LogValue::from_log2(10.0 * lt * lt + extra);
}

/// n (C*_t(k) / |T*_t(k)|) 2^(8 sqrt(t) (log2 t)^(5/4)).
inline LogValue theorem_main_bound(std::size_t t, std::size_t k, std::uint64_t n) {
  detail::require(k >= 1 && k < t, "theorem_main_bound needs 1 <= k < t");
  TStarResult ts = t_star(t, k);
  const double lt = std::log2(static_cast<double>(t));
  const double err = 8.0 * std::sqrt(static_cast<double>(t)) * lt * std::sqrt(std::sqrt(lt));
  return LogValue::of(static_cast<double>(n)) * LogValue::of(ts.count) /
         LogValue::of(static_cast<double>(ts.spec.order())) * LogValue::from_log2(err);
}

/// n sum_{r=1}^{floor(min(r0, k))} C(r0, r-1) (d/r0)^(r-1) h(r).
inline LogValue reduce2_bound(std::size_t t, std::size_t k, std::uint64_t n, const std::map<std::size_t, LogValue>& h) {
  detail::require(t >= 2 && k >= 1, "reduce2_bound needs t >= 2 and k >= 1");
  const double r0 = r0_real(t);
  const auto top = static_cast<std::size_t>(std::floor(std::min(r0, static_cast<double>(k))));
  const LogValue ratio = LogValue::of(thomason_d(t) / r0);
  std::vector<LogValue> terms;
  for (std::size_t r = 1; r <= top; ++r) {
    auto it = h.find(r);
    if (it == h.end()) throw PreconditionError("reduce2_bound: missing h value for r = " + std::to_string(r));
    terms.push_back(log_binomial_real(r0, static_cast<std::int64_t>(r) - 1) *
                    ratio.pow(static_cast<double>(r - 1)) * it->second);
  }
  return LogValue::of(static_cast<double>(n)) * log_sum(terms);
}

/// h(r) = C*_{t-r+1}(k-r), with the empty clique counted once.
inline std::map<std::size_t, LogValue> optimizer_h_values(std::size_t t, std::size_t k) {
  std::map<std::size_t, LogValue> h;
  const auto top = static_cast<std::size_t>(std::floor(std::min(r0_real(t), static_cast<double>(k))));
  for (std::size_t r = 1; r <= top; ++r)
    h[r] = (k == r) ? LogValue::of(1.0) : LogValue::of(t_star(t - r + 1, k - r).count);
  return h;
}

enum class Regime { small_k, middle, very_large_k };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::small_k: return "small_k";
    case Regime::middle: return "middle";
    case Regime::very_large_k: return "very_large_k";
  }
  return "?";
}

inline Regime regime_of(std::size_t t, std::size_t k) {
  if (static_cast<double>(k) >= klarge0_threshold(t)) return Regime::very_large_k;
  if (static_cast<double>(k) >= std::cbrt(static_cast<double>(t) * static_cast<double>(t))) return Regime::middle;
  return Regime::small_k;
}

struct BoundOptions {
  /// reduce2 needs one optimizer per r, so it is only evaluated up to this t.
  std::size_t reduce2_max_t = 500;
  /// The optimizer scan is O(t k); beyond this t the main bound is skipped.
  std::size_t optimizer_max_t = 20000;
};

struct BoundReport {
  std::size_t t = 0, k = 0;
  std::uint64_t n = 0;
  Regime regime = Regime::small_k;
  std::map<std::string, LogValue> entries;
  std::vector<std::string> warnings;
};

inline BoundReport bound_report(std::size_t t, std::size_t k, std::uint64_t n, const BoundOptions& opt = {}) {
  detail::require(k >= 1 && k < t, "bound_report needs 1 <= k < t");
  BoundReport rep{t, k, n, regime_of(t, k), {}, {}};
  if (t < kLargeTThreshold)
    rep.warnings.push_back("t = " + std::to_string(t) + " is below the large-t threshold " +
                           std::to_string(kLargeTThreshold) + "; bounds are evaluated but not guaranteed");
  if (k >= 2) rep.entries["crude"] = crude_upper(t, k, n);
  if (t <= opt.optimizer_max_t)
    rep.entries["main"] = theorem_main_bound(t, k, n);
  else
    rep.warnings.push_back("main bound skipped: t above optimizer_max_t");
  if (rep.regime == Regime::very_large_k) rep.entries["klarge0"] = theorem_klarge0_bound(t, k, n);
  if (t <= opt.reduce2_max_t)
    rep.entries["reduce2"] = reduce2_bound(t, k, n, optimizer_h_values(t, k));
  else
    rep.warnings.push_back("reduce2 bound skipped: t above reduce2_max_t");
  if (n + 2 >= t) rep.entries["tree"] = LogValue::of(tree_count(t, k, n));
  return rep;
}

/// Every k in [1, t-1].
inline std::vector<BoundReport> bound_sweep(std::size_t t, std::uint64_t n, const BoundOptions& opt = {}) {
  std::vector<BoundReport> out;
  for (std::size_t k = 1; k < t; ++k) out.push_back(bound_report(t, k, n, opt));
  return out;
}

/// Zero quantities are encoded as null.
inline nlohmann::json log_to_json(const LogValue& v) {
  return v.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(v.log2());
}

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json b = nlohmann::json::object();
  for (const auto& [name, v] : r.entries) b[name] = log_to_json(v);
  return {{"t", r.t}, {"k", r.k}, {"n", r.n}, {"regime", to_string(r.regime)}, {"bounds", b}, {"warnings", r.warnings}};
}

inline const std::vector<std::string>& bound_csv_columns() {
  static const std::vector<std::string> cols{"crude", "main", "klarge0", "reduce2", "tree"};
  return cols;
}

inline std::string csv_header() {
  std::string s = "t,k,n,regime";
  for (const auto& c : bound_csv_columns()) s += "," + c;
  return s;
}

/// Absent entries are empty cells; zero entries print as -inf.
inline std::string to_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << r.t << ',' << r.k << ',' << r.n << ',' << to_string(r.regime);
  for (const auto& c : bound_csv_columns()) {
    os << ',';
    auto it = r.entries.find(c);
    if (it == r.entries.end()) continue;
    if (it->second.is_zero())
      os << "-inf";
    else
      os << it->second.log2();
  }
  return os.str();
}

}  // namespace minorclique

#endif  // MINORCLIQUE_BOUNDS_HPP
