#pragma once

// External formats: versioned JSON graph documents (canonical, lossless),
// DOT (render only), plain edge lists and line-delimited claim reports.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fibset/errors.hpp"
#include "fibset/generators.hpp"
#include "fibset/graph.hpp"
#include "fibset/numseq.hpp"
#include "fibset/setspace.hpp"
#include "fibset/verify.hpp"

namespace fibset {

inline constexpr int kFormatVersion = 1;
inline constexpr std::uint32_t kDotParallelCap = 10;

enum class Family { FibSum, SetGraph, FibSumSet, SetGraphOfGraph, Popped };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::FibSum: return "fib_sum";
    case Family::SetGraph: return "set_graph";
    case Family::FibSumSet: return "fib_sum_set";
    case Family::SetGraphOfGraph: return "set_graph_of_graph";
    case Family::Popped: return "popped";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (auto f : {Family::FibSum, Family::SetGraph, Family::FibSumSet, Family::SetGraphOfGraph, Family::Popped}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

inline std::optional<EdgeSemantics> parse_semantics(std::string_view s) {
  if (s == "strict") return EdgeSemantics::Strict;
  if (s == "inclusive") return EdgeSemantics::Inclusive;
  return std::nullopt;
}

inline std::optional<SequenceKind> parse_sequence_kind(std::string_view s) {
  if (s == "fibonacci") return SequenceKind::Fibonacci;
  if (s == "lucas") return SequenceKind::Lucas;
  if (s == "custom") return SequenceKind::Custom;
  return std::nullopt;
}

/// A generated graph plus everything needed to say what it is. Simple
/// families are stored with multiplicity 1; vertices of fib_sum are the
/// singletons {j}, so every vertex carries a subset and a label.
struct GraphDocument {
  int format_version = kFormatVersion;
  Family family = Family::FibSumSet;
  int n = 0;
  std::string host;
  EdgeSemantics semantics = EdgeSemantics::Strict;
  SequenceKind sequence = SequenceKind::Fibonacci;
  std::vector<std::uint64_t> sequence_members;  // custom sequences only
  MultiGraph graph;
};

inline std::string header_line(const GraphDocument& d) {
  std::string s = "family=" + std::string(to_string(d.family)) + " n=" + std::to_string(d.n) +
                  " semantics=" + std::string(to_string(d.semantics)) +
                  " sequence=" + std::string(to_string(d.sequence));
  if (!d.host.empty()) s += " host=" + d.host;
  return s;
}

inline nlohmann::json to_json(const GraphDocument& d) {
  using nlohmann::json;
  json j;
  j["format_version"] = d.format_version;
  j["family"] = to_string(d.family);
  j["n"] = d.n;
  j["host"] = d.host.empty() ? json(nullptr) : json(d.host);
  j["semantics"] = to_string(d.semantics);
  j["sequence"] = to_string(d.sequence);
  if (d.sequence == SequenceKind::Custom) j["sequence_members"] = d.sequence_members;
  const auto& g = d.graph;
  json vertices = json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    json jv{{"index", v}};
    if (g.has_meta()) {
      const auto label = label_of(g.meta()[v]);
      jv["s"] = label.s;
      jv["i"] = label.i;
      jv["elements"] = g.meta()[v].elements();
    }
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (const auto m = g.eps(u, v); m > 0) edges.push_back({{"u", u}, {"v", v}, {"multiplicity", m}});
    }
  }
  json loops = json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.loops(v) > 0) loops.push_back({{"v", v}, {"count", g.loops(v)}});
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  j["loops"] = std::move(loops);
  return j;
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline GraphDocument graph_document_from_json(const nlohmann::json& j) {
  try {
    GraphDocument d;
    d.format_version = j.at("format_version").get<int>();
    if (d.format_version != kFormatVersion) throw ParseError("unsupported format_version");
    const auto fam = parse_family(j.at("family").get<std::string>());
    const auto sem = parse_semantics(j.at("semantics").get<std::string>());
    const auto seq = parse_sequence_kind(j.at("sequence").get<std::string>());
    if (!fam || !sem || !seq) throw ParseError("unknown family, semantics or sequence");
    d.family = *fam;
    d.semantics = *sem;
    d.sequence = *seq;
    d.n = j.at("n").get<int>();
    if (j.contains("host") && !j["host"].is_null()) d.host = j["host"].get<std::string>();
    if (j.contains("sequence_members")) d.sequence_members = j["sequence_members"].get<std::vector<std::uint64_t>>();

    const auto& vs = j.at("vertices");
    MultiGraph g(vs.size());
    std::vector<SubsetId> meta;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (vs[k].at("index").get<std::size_t>() != k) throw ParseError("vertex indices must be 0..order-1 in order");
      if (vs[k].contains("elements")) {
        const auto subset = SubsetId::from_elements(vs[k]["elements"].get<std::vector<int>>(), d.n);
        if (vs[k].contains("s") && label_of(subset) != VertexLabel{vs[k]["s"].get<int>(), vs[k]["i"].get<std::uint64_t>()}) {
          throw ParseError("vertex label does not match its elements");
        }
        meta.push_back(subset);
      }
    }
    for (const auto& e : j.at("edges")) {
      const auto u = e.at("u").get<Vertex>();
      const auto v = e.at("v").get<Vertex>();
      const auto m = e.at("multiplicity").get<std::uint32_t>();
      if (u >= v || v >= g.order() || m == 0) throw ParseError("edges need u < v < order and multiplicity >= 1");
      g.set_eps(u, v, m);
    }
    for (const auto& l : j.at("loops")) {
      const auto v = l.at("v").get<Vertex>();
      if (v >= g.order()) throw ParseError("loop vertex out of range");
      g.set_loops(v, l.at("count").get<std::uint32_t>());
    }
    if (!meta.empty()) {
      if (meta.size() != g.order()) throw ParseError("either all or no vertices carry elements");
      g.set_meta(std::move(meta));
    }
    d.graph = std::move(g);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid graph document: ") + e.what());
  }
}

inline GraphDocument parse_graph_document(std::string_view text) {
  try {
    return graph_document_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("not JSON: ") + e.what());
  }
}

inline std::string vertex_caption(const MultiGraph& g, Vertex v) {
  if (!g.has_meta()) return std::to_string(v);
  std::string s = label_of(g.meta()[v]).str() + " {";
  bool first = true;
  for (int e : g.meta()[v].elements()) {
    s += (first ? "" : ",") + std::to_string(e);
    first = false;
  }
  return s + "}";
}

/// Undirected DOT. Parallel edges and loops are drawn as repeated lines, at
/// most kDotParallelCap per pair; every line carries the true count.
inline void write_dot(std::ostream& os, const GraphDocument& d) {
  const auto& g = d.graph;
  os << "// " << header_line(d) << "\n";
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  v" << v << " [label=\"" << vertex_caption(g, v) << "\"];\n";
  }
  auto emit = [&](Vertex u, Vertex v, std::uint32_t m) {
    for (std::uint32_t k = 0; k < std::min(m, kDotParallelCap); ++k) {
      os << "  v" << u << " -- v" << v << " [multiplicity=" << m << "];\n";
    }
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) emit(u, v, g.eps(u, v));
  }
  for (Vertex v = 0; v < g.order(); ++v) emit(v, v, g.loops(v));
  os << "}\n";
}

// "u v multiplicity" per line; loops appear as "v v count".
inline void write_edge_list(std::ostream& os, const GraphDocument& d) {
  const auto& g = d.graph;
  os << "# " << header_line(d) << "\n";
  os << "# order " << g.order() << "\n";
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (const auto m = g.eps(u, v); m > 0) os << u << ' ' << v << ' ' << m << '\n';
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.loops(v) > 0) os << v << ' ' << v << ' ' << g.loops(v) << '\n';
  }
}

inline nlohmann::json to_json(const ClaimReport& r) {
  return {{"claim", r.claim_id},
          {"n", r.n},
          {"semantics", to_string(r.semantics)},
          {"status", to_string(r.status)},
          {"expected", expectation(r.claim_id, r.semantics) == Expectation::Pass ? "pass" : "unasserted"},
          {"deviation", deviates(r)},
          {"witness", r.witness},
          {"detail", r.detail},
          {"runtime_ms", r.runtime_ms}};
}

inline void write_report_lines(std::ostream& os, const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports) os << to_json(r).dump() << '\n';
}

inline void write_report_table(std::ostream& os, const std::vector<ClaimReport>& reports) {
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  os << pad("claim", 23) << pad("n", 4) << pad("semantics", 11) << pad("status", 16) << "detail\n";
  for (const auto& r : reports) {
    std::string status(to_string(r.status));
    if (r.status == ClaimStatus::Fail) status += deviates(r) ? " !" : " (exp)";
    std::string note = r.detail;
    if (!r.witness.empty() && r.witness != r.detail) note += (note.empty() ? "" : "; ") + std::string("witness: ") + r.witness;
    os << pad(r.claim_id, 23) << pad(std::to_string(r.n), 4) << pad(std::string(to_string(r.semantics)), 11)
       << pad(status, 16) << note << '\n';
  }
}

}  // namespace fibset
