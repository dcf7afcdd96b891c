#ifndef MINORCLIQUE_TOOLS_CLI_HPP
#define MINORCLIQUE_TOOLS_CLI_HPP

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "minorclique/minorclique.hpp"

namespace minorclique::cli {

enum class Format { json, csv, text };

struct Common {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::size_t max_vertices = MinorOptions{}.max_vertices;

  Format fmt() const { return format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json; }
};

namespace detail {

inline void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--seed", c.seed, "Seed for randomized campaigns");
  sub->add_option("--threads", c.threads, "Worker threads (0: MINORCLIQUE_THREADS or hardware)");
  sub->add_option("--max-vertices", c.max_vertices, "Vertex cap for exact minor search")->check(CLI::Range(1, 64));
}

inline VertexSet parse_vertex_list(const std::string& s, std::size_t n) {
  VertexSet out(n);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError("--clique expects comma-separated vertex labels, got '" + s + "'");
    std::size_t v = std::stoul(item);
    if (v >= n) throw PreconditionError("--clique vertex " + item + " is out of range");
    out.insert(static_cast<Vertex>(v));
  }
  return out;
}

inline std::string join(const std::vector<std::size_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

inline std::string fmt_log(const LogValue& v) {
  if (v.is_zero()) return "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v.log2();
  return os.str();
}

inline void print_bound_text(std::ostream& out, const BoundReport& r) {
  out << "t=" << r.t << " k=" << r.k << " n=" << r.n << " regime=" << to_string(r.regime) << "\n";
  for (const auto& [name, v] : r.entries) out << "  log2 " << name << " = " << fmt_log(v) << "\n";
  for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
}

}  // namespace detail

/// Executes one command line. Exit status: 0 success, 2 usage error,
/// 1 computation error (cap exceeded, malformed input, failed verification).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique counts, clique minors and extremal bounds for K_t-minor-free graphs", "minorclique"};
  app.require_subcommand(1, 1);
  Common common;

  std::string graph_path;
  std::size_t k = 0, t = 0;
  std::uint64_t n = 0;
  double lambda = 0, M = 0, eps = 1.0 / 6.0;
  std::size_t r = 0, r_l = 0;
  std::string clique_list, kind, spec_json, profile = "quick", fault;
  std::size_t materialize_cap = kMaterializeCap;

  auto* count = app.add_subcommand("count", "Count k-cliques of a graph");
  count->add_option("--graph", graph_path, "graph6 file, or edge-list JSON if it ends in .json")->required();
  count->add_option("--k", k, "Clique order")->required();

  auto* hadwiger = app.add_subcommand("hadwiger", "Exact Hadwiger number with a branch-set certificate");
  hadwiger->add_option("--graph", graph_path, "graph6 or .json graph file")->required();

  auto* tstar = app.add_subcommand("tstar", "Turan optimizer T*_t(k) and its k-clique count");
  tstar->add_option("--t", t, "Forbidden minor order")->required();
  tstar->add_option("--k", k, "Clique order")->required();

  auto* peel_cmd = app.add_subcommand("peel", "Run the peeling process on a clique");
  peel_cmd->add_option("--graph", graph_path, "graph6 or .json graph file")->required();
  peel_cmd->add_option("--t", t, "Forbidden minor order")->required();
  peel_cmd->add_option("--clique", clique_list, "Comma-separated clique (default: a maximum clique)");
  peel_cmd->add_option("--M", M, "Large-layer threshold (default (ln t)^2)");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds in log2 (all k when --k is absent)");
  bounds->add_option("--t", t, "Forbidden minor order")->required();
  bounds->add_option("--n", n, "Number of vertices")->required();
  bounds->add_option("--k", k, "Clique order");
  bounds->add_option("--r", r, "Encoding length, adds the encoding and branch-disk bounds");
  bounds->add_option("--rl", r_l, "Number of large layers for --r");
  bounds->add_option("--M", M, "Large-layer threshold (default (ln t)^2)");
  bounds->add_option("--eps", eps, "Epsilon in (0, 1/6]");

  auto* construct = app.add_subcommand("construct", "Build an extremal construction");
  construct->add_option("--kind", kind, "tstar_union | t2_tree | ktminus_union | matching_complement_union");
  construct->add_option("--spec", spec_json, "Construction as JSON {\"kind\",\"t\",\"k\",\"n\"}");
  construct->add_option("--t", t, "Forbidden minor order");
  construct->add_option("--k", k, "Clique order (tstar_union)");
  construct->add_option("--n", n, "Number of vertices");
  construct->add_option("--materialize-cap", materialize_cap, "Largest graph that may be built");

  auto* wood = app.add_subcommand("check-wood", "Compare the matching-complement construction with Wood's bound");
  wood->add_option("--t", t, "Forbidden minor order, 1 mod 3")->required();
  wood->add_option("--lambda", lambda, "k / t")->required();

  auto* verify = app.add_subcommand("verify", "Run the oracle and property campaigns");
  verify->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--inject-fault", fault, "")->group("");

  for (auto* sub : {count, hadwiger, tstar, peel_cmd, bounds, construct, wood, verify}) detail::add_common(sub, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = common.fmt();
  MinorOptions minor_opt;
  minor_opt.max_vertices = common.max_vertices;

  try {
    if (count->parsed()) {
      Graph g = read_graph_file(graph_path);
      BigCount c = count_k_cliques(g, k);
      if (fmt == Format::json)
        out << nlohmann::json{{"n", g.order()}, {"k", k}, {"count", to_decimal(c)}}.dump() << "\n";
      else if (fmt == Format::csv)
        out << "n,k,count\n" << g.order() << "," << k << "," << to_decimal(c) << "\n";
      else
        out << to_decimal(c) << "\n";
    } else if (hadwiger->parsed()) {
      Graph g = read_graph_file(graph_path);
      auto res = hadwiger_with_certificate(g, minor_opt);
      if (fmt == Format::json)
        out << nlohmann::json{{"n", g.order()}, {"hadwiger", res.value}, {"certificate", to_json(res.certificate)}}.dump()
            << "\n";
      else if (fmt == Format::csv)
        out << "n,hadwiger\n" << g.order() << "," << res.value << "\n";
      else
        out << res.value << "\n";
    } else if (tstar->parsed()) {
      auto res = t_star(t, k);
      if (fmt == Format::json)
        out << to_json(res).dump() << "\n";
      else if (fmt == Format::csv)
        out << "t,k,omega,order,parts,count\n"
            << t << "," << k << "," << res.omega_star << "," << res.spec.order() << ","
            << detail::join(res.spec.parts(), ';') << "," << to_decimal(res.count) << "\n";
      else
        out << "T*_" << t << "(" << k << ") = T(" << res.spec.order() << "," << res.omega_star << "), parts "
            << detail::join(res.spec.parts(), ' ') << ", count " << to_decimal(res.count) << "\n";
    } else if (peel_cmd->parsed()) {
      Graph g = read_graph_file(graph_path);
      VertexSet K = clique_list.empty() ? maximum_clique(g) : detail::parse_vertex_list(clique_list, g.order());
      auto tr = peel(g, K, t);
      const double m = M > 0 ? M : default_M(t);
      auto cert = greedy_branch_set(g, tr);
      const auto path = tr.encoding();
      std::vector<std::size_t> enc(path.begin(), path.end());
      if (fmt == Format::json) {
        for (const auto& line : to_json_lines(tr)) out << line.dump() << "\n";
        out << nlohmann::json{{"encoding", enc},
                              {"M", m},
                              {"large_layers", large_layer_count(tr, m)},
                              {"branch_disks", cert.disks.size()}}
                   .dump()
            << "\n";
      } else if (fmt == Format::csv) {
        out << "i,v,n,d,n_prime,D,Y\n";
        for (const auto& s : tr.steps)
          out << s.i << "," << s.v << "," << s.n << "," << s.d << "," << s.n_prime << "," << s.D.count() << ","
              << s.Y.count() << "\n";
      } else {
        out << "encoding " << detail::join(enc, ' ') << "\n"
            << "r = " << tr.r << ", stop = " << to_string(tr.stop) << "\n"
            << "layers with |Y_i| >= " << m << ": " << large_layer_count(tr, m) << "\n"
            << "greedy branch disks: " << cert.disks.size() << "\n";
      }
    } else if (bounds->parsed()) {
      BoundOptions bopt;
      std::vector<BoundReport> reps;
      if (bounds->count("--k")) {
        reps.push_back(bound_report(t, k, n, bopt));
      } else {
        auto ks = parallel_map(
            t > 0 ? t - 1 : 0, [&](std::size_t i) { return bound_report(t, i + 1, n, bopt); }, common.threads);
        reps = std::move(ks);
      }
      nlohmann::json extra = nlohmann::json::object();
      if (bounds->count("--r")) {
        const double mm = M > 0 ? M : default_M(t);
        auto kl = key_lemma1_lower(r, r_l, t, mm, eps);
        extra = {{"r", r},
                 {"r_l", r_l},
                 {"M", mm},
                 {"eps", eps},
                 {"encoding", log_to_json(encoding_count_bound(t, n, r, r_l, mm))},
                 {"key_lemma1_general", kl.general},
                 {"key_lemma1_refined", kl.refined}};
      }
      if (fmt == Format::json) {
        if (reps.size() == 1) {
          auto j = to_json(reps[0]);
          if (!extra.empty()) j["encoding"] = extra;
          out << j.dump() << "\n";
        } else {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& rep : reps) arr.push_back(to_json(rep));
          nlohmann::json j{{"sweep", arr}};
          if (!extra.empty()) j["encoding"] = extra;
          out << j.dump() << "\n";
        }
      } else if (fmt == Format::csv) {
        out << csv_header() << "\n";
        for (const auto& rep : reps) out << to_csv_row(rep) << "\n";
      } else {
        for (const auto& rep : reps) detail::print_bound_text(out, rep);
        if (!extra.empty()) out << "encoding and branch-disk bounds: " << extra.dump() << "\n";
      }
    } else if (construct->parsed()) {
      ConstructionSpec s;
      if (!spec_json.empty()) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(spec_json);
        } catch (const nlohmann::json::exception& e) {
          throw PreconditionError(std::string("--spec is not valid JSON: ") + e.what());
        }
        try {
          s = construction_spec_from_json(j);
        } catch (const ParseError& e) {
          throw PreconditionError(e.what());
        }
      } else {
        if (kind.empty() || !construct->count("--t") || !construct->count("--n"))
          throw PreconditionError("construct needs --spec, or --kind with --t and --n");
        try {
          s = {construction_kind_from_string(kind), t, k, static_cast<std::size_t>(n)};
        } catch (const ParseError& e) {
          throw PreconditionError(e.what());
        }
      }
      Graph g = build(s, materialize_cap);
      if (fmt == Format::json) {
        out << serialize_graph(g, GraphFormat::edge_list_json) << "\n";
      } else if (fmt == Format::csv) {
        out << "u,v\n";
        for (const auto& [u, v] : g.edges()) out << u << "," << v << "\n";
      } else {
        out << serialize_graph(g, GraphFormat::graph6) << "\n";
      }
    } else if (wood->parsed()) {
      auto w = wood_counterexample_check(t, lambda);
      if (fmt == Format::json) {
        out << to_json(w).dump() << "\n";
      } else {
        std::string verdict = w.conclusive ? (w.verdict ? "true" : "false") : "inconclusive";
        if (fmt == Format::csv)
          out << "t,lambda,k,construction_log2,conjecture_log2,exact,verdict\n"
              << w.t << "," << w.lambda << "," << w.k << "," << detail::fmt_log(w.construction_count) << ","
              << detail::fmt_log(w.conjecture_bound) << "," << (w.exact ? "true" : "false") << "," << verdict << "\n";
        else
          out << "t=" << w.t << " k=" << w.k << ": log2 construction " << detail::fmt_log(w.construction_count)
              << " vs log2 conjecture " << detail::fmt_log(w.conjecture_bound) << ", verdict " << verdict << "\n";
      }
    } else if (verify->parsed()) {
      VerifyOptions vo;
      vo.profile = profile_from_string(profile);
      vo.seed = common.seed;
      vo.threads = common.threads;
      vo.fault = fault_from_string(fault);
      auto rep = verify_suite(vo);
      if (fmt == Format::json) {
        out << to_json(rep).dump(2) << "\n";
      } else if (fmt == Format::csv) {
        out << "name,passed,cases,failures\n";
        for (const auto& c : rep.checks)
          out << c.name << "," << (c.passed() ? "true" : "false") << "," << c.cases << "," << c.failures << "\n";
      } else {
        for (const auto& c : rep.checks) {
          out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
          if (c.failures) out << ", " << c.failures << " failures; first: " << c.first_failure;
          out << ")\n";
        }
        out << (rep.passed() ? "all checks passed" : "some checks failed") << "\n";
      }
      return rep.passed() ? 0 : 1;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"minorclique"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace minorclique::cli

#endif  // MINORCLIQUE_TOOLS_CLI_HPP
