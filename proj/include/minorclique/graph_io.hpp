#ifndef MINORCLIQUE_GRAPH_IO_HPP
#define MINORCLIQUE_GRAPH_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"

namespace minorclique {

enum class GraphFormat { graph6, edge_list_json };

namespace detail {

inline std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

inline Graph parse_graph6(std::string_view text) {
  text = trim_ws(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  // Only the first graph of a multi-line file is read.
  if (auto nl = text.find('\n'); nl != std::string_view::npos) text = trim_ws(text.substr(0, nl));
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");

  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("graph6: truncated header");
      v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    }
    return v;
  };
  std::uint64_t n;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() >= 2 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (text.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes for n = " + std::to_string(n) +
                     ", found " + std::to_string(text.size() - pos));
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit) {
      int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  // Padding bits must be zero.
  for (; bit < need * 6; ++bit) {
    int byte = text[pos + bit / 6] - 63;
    if ((byte >> (5 - bit % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline std::string serialize_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph parse_edge_list_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("edge-list JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("edge-list JSON: expected object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0)
    throw ParseError("edge-list JSON: \"n\" must be a nonnegative integer");
  const auto n = static_cast<std::size_t>(j["n"].get<std::int64_t>());
  if (!j["edges"].is_array()) throw ParseError("edge-list JSON: \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge-list JSON: each edge must be a pair of integers");
    auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParseError("edge-list JSON: endpoint out of range in [" + std::to_string(u) + "," +
                       std::to_string(v) + "] for n = " + std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph(n, edges);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("edge-list JSON: ") + e.what());
  }
}

inline std::string serialize_edge_list_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

}  // namespace detail

/// Throws ParseError on malformed text, bad endpoints, loops or repeated pairs.
inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? detail::parse_graph6(text) : detail::parse_edge_list_json(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? detail::serialize_graph6(g) : detail::serialize_edge_list_json(g);
}

/// Format chosen by extension: ".json" is edge-list JSON, anything else graph6.
inline GraphFormat format_for_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? GraphFormat::edge_list_json
                                                                            : GraphFormat::graph6;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format_for_path(path));
}

}  // namespace minorclique

#endif  // MINORCLIQUE_GRAPH_IO_HPP
