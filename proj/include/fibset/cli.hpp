#pragma once

// Command-line front end: generate / analyze / verify.
//
// Exit codes: 0 ok, 1 usage error, 2 instance above the materialization
// cap, 3 solver budget exhausted, 4 I/O failure, 5 verification deviated
// from the expectation table.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibset/analysis.hpp"
#include "fibset/generators.hpp"
#include "fibset/io.hpp"
#include "fibset/numseq.hpp"
#include "fibset/verify.hpp"

namespace fibset::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCap = 2, kUnknown = 3, kIo = 4, kDeviation = 5 };

inline constexpr int kDefaultCap = 7;
inline constexpr const char* kCapEnv = "FIBSET_MAX_N";

// Default 7, overridden by FIBSET_MAX_N, never above the hard limit.
inline int materialization_cap() {
  int cap = kDefaultCap;
  if (const char* env = std::getenv(kCapEnv); env != nullptr && *env != '\0') {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      cap = kDefaultCap;
    }
  }
  return std::clamp(cap, 1, kHardCap);
}

struct Failure {
  int code;
  std::string message;
};

inline SumSequence make_sequence(const std::string& spec, SequenceKind& kind,
                                 std::vector<std::uint64_t>& members, int n) {
  const auto bound = 2 * static_cast<std::uint64_t>(std::max(n, 1));
  if (spec == "fibonacci") {
    kind = SequenceKind::Fibonacci;
    return SumSequence::fibonacci(bound);
  }
  if (spec == "lucas") {
    kind = SequenceKind::Lucas;
    return SumSequence::lucas(bound);
  }
  if (spec.rfind("custom:", 0) == 0) {
    kind = SequenceKind::Custom;
    std::stringstream ss(spec.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        members.push_back(std::stoull(item));
      } catch (const std::exception&) {
        throw Failure{kUsage, "bad custom sequence member '" + item + "'"};
      }
    }
    return SumSequence::custom(members, bound);
  }
  throw Failure{kUsage, "unknown sequence '" + spec + "' (fibonacci, lucas, custom:a,b,...)"};
}

struct FamilySpec {
  std::string family;
  int n = 0;
  std::string semantics = "strict";
  std::string sequence = "fibonacci";
  std::string host_path;
};

inline GraphDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kIo, "cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_document(buf.str());
  } catch (const ParseError& e) {
    throw Failure{kUsage, e.what()};
  }
}

inline GraphDocument build_document(const FamilySpec& spec) {
  const auto family = parse_family(spec.family);
  if (!family) throw Failure{kUsage, "unknown family '" + spec.family + "'"};
  const auto sem = parse_semantics(spec.semantics);
  if (!sem) throw Failure{kUsage, "semantics must be strict or inclusive"};
  if (spec.n < 1) throw Failure{kUsage, "n must be >= 1"};

  GraphDocument d;
  d.family = *family;
  d.n = spec.n;
  d.semantics = *sem;
  const auto seq = make_sequence(spec.sequence, d.sequence, d.sequence_members, spec.n);

  const int cap = materialization_cap();
  const bool set_family = d.family != Family::FibSum;
  if (set_family && spec.n > cap) {
    throw Failure{kCap, "n=" + std::to_string(spec.n) + " exceeds materialization cap " + std::to_string(cap) +
                            " (set " + kCapEnv + " to raise it, max " + std::to_string(kHardCap) + ")"};
  }

  switch (d.family) {
    case Family::FibSum: {
      d.graph = as_multigraph(gen_fib_sum_graph(spec.n, seq));
      // Singleton labels need the ground set to fit a mask.
      if (spec.n <= kMaxGround) {
        std::vector<SubsetId> meta;
        for (int j = 1; j <= spec.n; ++j) meta.push_back(SubsetId::make(std::uint64_t{1} << j, spec.n));
        d.graph.set_meta(std::move(meta));
      }
      break;
    }
    case Family::SetGraph:
      d.graph = as_multigraph(gen_set_graph(spec.n, cap));
      d.graph.set_meta(enumerate_subsets(spec.n, cap));
      break;
    case Family::FibSumSet:
      d.graph = gen_fib_sum_set_graph(spec.n, seq, *sem, cap);
      break;
    case Family::Popped: {
      const auto g = gen_fib_sum_set_graph(spec.n, seq, *sem, cap);
      d.graph = as_multigraph(popped(g));
      d.graph.set_meta(g.meta());
      break;
    }
    case Family::SetGraphOfGraph: {
      SimpleGraph host;
      if (!spec.host_path.empty()) {
        host = popped(load_document(spec.host_path).graph);
        d.host = spec.host_path;
      } else {
        host = gen_fib_sum_graph(spec.n, seq);
        d.host = "fib_sum:" + std::to_string(spec.n);
      }
      if (static_cast<int>(host.order()) > cap) {
        throw Failure{kCap, "host order " + std::to_string(host.order()) + " exceeds materialization cap " +
                                std::to_string(cap)};
      }
      d.n = static_cast<int>(host.order());
      d.graph = gen_set_graph_of_graph(host, *sem, cap);
      break;
    }
  }
  return d;
}

inline int report(std::ostream& err, const Failure& f) {
  err << "error: " << f.message << '\n';
  return f.code;
}

inline int cmd_generate(const FamilySpec& spec, const std::string& format, const std::string& out_path,
                        std::ostream& out, std::ostream& err) {
  try {
    const auto doc = build_document(spec);
    std::ostringstream text;
    if (format == "json") {
      text << to_json(doc).dump(2) << '\n';
    } else if (format == "dot") {
      write_dot(text, doc);
    } else if (format == "edges") {
      write_edge_list(text, doc);
    } else {
      return report(err, {kUsage, "format must be json, dot or edges"});
    }
    if (out_path.empty() || out_path == "-") {
      out << text.str();
    } else {
      std::ofstream f(out_path);
      if (!(f << text.str())) return report(err, {kIo, "cannot write " + out_path});
    }
    return kOk;
  } catch (const Failure& f) {
    return report(err, f);
  } catch (const CapacityError& e) {
    return report(err, {kCap, e.what()});
  } catch (const std::logic_error& e) {
    return report(err, {kUsage, e.what()});
  }
}

inline const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "degrees", "loops", "connected", "pendant", "eulerian", "hamiltonian",
      "bipartite", "clique", "eared_clique", "chromatic", "loop_sequence"};
  return names;
}

inline int cmd_analyze(const FamilySpec& spec, const std::string& input, const std::string& invariant,
                       std::int64_t budget, std::ostream& out, std::ostream& err) {
  if (std::find(invariant_names().begin(), invariant_names().end(), invariant) == invariant_names().end()) {
    return report(err, {kUsage, "unknown invariant '" + invariant + "'"});
  }
  if (budget <= 0) return report(err, {kUsage, "budget must be positive"});
  try {
    const auto doc = input.empty() ? build_document(spec) : load_document(input);
    const auto& g = doc.graph;
    out << "# " << header_line(doc) << " invariant=" << invariant << " budget=" << budget << '\n';
    auto yes_no = [&](bool b) { out << (b ? "true" : "false") << '\n'; };
    if (invariant == "degrees") {
      const auto d = degrees(g);
      for (Vertex v = 0; v < g.order(); ++v) out << g.vertex_name(v) << ' ' << d[v] << '\n';
    } else if (invariant == "loops") {
      for (Vertex v = 0; v < g.order(); ++v) out << g.vertex_name(v) << ' ' << g.loops(v) << '\n';
    } else if (invariant == "loop_sequence") {
      const auto s = loop_sequence(g);
      for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << s[k];
      out << '\n';
    } else if (invariant == "connected") {
      yes_no(is_connected(g));
    } else if (invariant == "pendant") {
      const auto p = pendant_vertices(g);
      if (p.empty()) out << "none\n";
      for (Vertex v : p) out << g.vertex_name(v) << '\n';
    } else if (invariant == "eulerian") {
      yes_no(is_eulerian(g));
    } else if (invariant == "bipartite") {
      yes_no(is_bipartite(popped(g)));
    } else if (invariant == "hamiltonian") {
      const auto r = hamiltonian_cycle(popped(g), budget);
      out << "# expansions=" << r.expansions << '\n';
      if (r.status == SearchStatus::Unknown) {
        out << "unknown\n";
        return kUnknown;
      }
      if (r.status == SearchStatus::None) {
        out << "none\n";
      } else {
        for (std::size_t k = 0; k < r.cycle.size(); ++k) out << (k ? " " : "") << g.vertex_name(r.cycle[k]);
        out << '\n';
      }
    } else if (invariant == "clique" || invariant == "eared_clique") {
      const auto r = invariant == "clique" ? clique_number(popped(g), budget) : eared_clique_number(g, budget);
      out << "# expansions=" << r.expansions << '\n';
      if (!r.number) {
        out << "unknown (best " << r.clique.size() << ")\n";
        return kUnknown;
      }
      out << *r.number << '\n';
    } else if (invariant == "chromatic") {
      const auto r = chromatic_number(popped(g), budget);
      out << "# expansions=" << r.expansions << '\n';
      if (!r.number) {
        out << "unknown (between " << r.lower_bound << " and "
            << *std::max_element(r.colors.begin(), r.colors.end()) + 1 << ")\n";
        return kUnknown;
      }
      out << *r.number << '\n';
    }
    return kOk;
  } catch (const Failure& f) {
    return report(err, f);
  } catch (const CapacityError& e) {
    return report(err, {kCap, e.what()});
  } catch (const std::logic_error& e) {
    return report(err, {kUsage, e.what()});
  }
}

struct VerifyArgs {
  int n_from = 1;
  int n_to = 6;
  std::string semantics = "both";
  std::int64_t budget = kDefaultBudget;
  std::string report_path;
  int hamiltonian_max_n = 6;
  int solver_max_n = 4;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n_from < 1 || a.n_to < a.n_from) return report(err, {kUsage, "need 1 <= n-from <= n-to"});
  if (a.budget <= 0) return report(err, {kUsage, "budget must be positive"});
  SuiteOptions opt;
  opt.n_from = a.n_from;
  opt.n_to = a.n_to;
  opt.budget = a.budget;
  opt.materialize_cap = materialization_cap();
  opt.hamiltonian_max_n = a.hamiltonian_max_n;
  opt.solver_max_n = a.solver_max_n;
  if (a.semantics == "strict") {
    opt.semantics = {EdgeSemantics::Strict};
  } else if (a.semantics == "inclusive") {
    opt.semantics = {EdgeSemantics::Inclusive};
  } else if (a.semantics != "both") {
    return report(err, {kUsage, "semantics must be both, strict or inclusive"});
  }

  const auto reports = run_suite(opt);
  out << "# verify n=" << a.n_from << ".." << a.n_to << " semantics=" << a.semantics
      << " budget=" << a.budget << " cap=" << opt.materialize_cap << '\n';
  write_report_table(out, reports);
  if (!a.report_path.empty()) {
    std::ofstream f(a.report_path);
    if (!f) return report(err, {kIo, "cannot write " + a.report_path});
    write_report_lines(f, reports);
    if (!f) return report(err, {kIo, "cannot write " + a.report_path});
  }
  const auto deviations = std::count_if(reports.begin(), reports.end(), deviates);
  out << "# " << reports.size() << " reports, " << deviations << " deviation(s) from expectation\n";
  return deviations == 0 ? kOk : kDeviation;
}

/// Parses argv and dispatches; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Fibonacci-sum set-graph toolkit"};
  app.require_subcommand(1);

  FamilySpec gen_spec;
  std::string format = "json", out_path;
  auto* gen = app.add_subcommand("generate", "Build a graph and write it as JSON, DOT or an edge list");
  gen->add_option("family", gen_spec.family, "fib_sum | set_graph | fib_sum_set | set_graph_of_graph | popped")->required();
  gen->add_option("n", gen_spec.n, "Ground-set size")->required();
  gen->add_option("--semantics", gen_spec.semantics, "strict | inclusive")->capture_default_str();
  gen->add_option("--sequence", gen_spec.sequence, "fibonacci | lucas | custom:a,b,...")->capture_default_str();
  gen->add_option("--host", gen_spec.host_path, "Host graph document for set_graph_of_graph");
  gen->add_option("--format", format, "json | dot | edges")->capture_default_str();
  gen->add_option("--out", out_path, "Output path (default stdout)");

  FamilySpec an_spec;
  std::string input, invariant;
  std::int64_t budget = kDefaultBudget;
  auto* an = app.add_subcommand("analyze", "Compute an invariant of a generated or loaded graph");
  an->add_option("family", an_spec.family, "Graph family (omit with --input)");
  an->add_option("n", an_spec.n, "Ground-set size");
  an->add_option("--input", input, "Graph document to analyze");
  an->add_option("--semantics", an_spec.semantics)->capture_default_str();
  an->add_option("--sequence", an_spec.sequence)->capture_default_str();
  an->add_option("--host", an_spec.host_path);
  an->add_option("--invariant", invariant, "Invariant name")->required();
  an->add_option("--budget", budget, "Node-expansion budget for exact solvers")->capture_default_str();

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Run the claim suite over a range of n");
  ve->add_option("--n-from", va.n_from)->capture_default_str();
  ve->add_option("--n-to", va.n_to)->capture_default_str();
  ve->add_option("--semantics", va.semantics, "both | strict | inclusive")->capture_default_str();
  ve->add_option("--budget", va.budget)->capture_default_str();
  ve->add_option("--report", va.report_path, "Write line-delimited JSON records here");
  ve->add_option("--hamiltonian-max-n", va.hamiltonian_max_n)->capture_default_str();
  ve->add_option("--solver-max-n", va.solver_max_n)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  if (gen->parsed()) return cmd_generate(gen_spec, format, out_path, out, err);
  if (an->parsed()) {
    if (input.empty() && an_spec.family.empty()) return report(err, {kUsage, "give a family and n, or --input"});
    return cmd_analyze(an_spec, input, invariant, budget, out, err);
  }
  return cmd_verify(va, out, err);
}

}  // namespace fibset::cli
