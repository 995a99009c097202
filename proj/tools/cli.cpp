#include "cli.hpp"

#include "avgconn/avgconn.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace avgconn::cli {

namespace {

/// Bad invocation or unusable input; reported with exit status 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string in;
  std::string edges;
  std::string inline_text;
  std::string format = "graph6";
  std::optional<int> n;
  std::optional<int> vertex;
  int jobs = 1;
  std::string out;
  std::string emit = "text";

  // tree
  bool all_vertices = false;
  // aux
  std::string component;
  bool dump = false;
  bool tops = false;
  bool relaxed = false;
  std::string labels;
  int max_order = AuxOptions{}.max_order;
  // scan
  std::string check = "lemmas";
  // conjecture
  std::optional<int> complete_up_to;
  // verify, scan, aux
  bool inject_fault = false;
};

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

GraphFormat parse_format(const std::string& name) {
  return name == "edges" ? GraphFormat::edge_list : GraphFormat::graph6;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

// A "# labels: v0 v1 ..." line in an edge list names the vertices.
std::vector<std::string> labels_from_comment(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line.compare(start, 8, "# labels") != 0) continue;
    const auto colon = line.find(':', start);
    if (colon == std::string::npos) continue;
    std::istringstream words(line.substr(colon + 1));
    std::vector<std::string> labels;
    for (std::string w; words >> w;) labels.push_back(w);
    return labels;
  }
  return {};
}

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
};

int source_count(const Invocation& inv) {
  return !inv.in.empty() + !inv.edges.empty() + !inv.inline_text.empty();
}

LoadedGraph load_graph(const Invocation& inv) {
  if (source_count(inv) != 1) throw UsageError("exactly one of --in, --edges, --inline is required");
  GraphFormat format = parse_format(inv.format);
  std::string text;
  if (!inv.edges.empty()) {
    format = GraphFormat::edge_list;
    text = read_file(inv.edges);
  } else if (!inv.in.empty()) {
    text = read_file(inv.in);
  } else {
    text = inv.inline_text;
  }
  LoadedGraph loaded{parse_graph(text, format), {}};
  loaded.labels = inv.labels.empty() ? labels_from_comment(text) : split(inv.labels, ',');
  if (!loaded.labels.empty() && static_cast<int>(loaded.labels.size()) != loaded.graph.order()) {
    throw UsageError("expected " + std::to_string(loaded.graph.order()) + " vertex labels, got " +
                     std::to_string(loaded.labels.size()));
  }
  return loaded;
}

std::vector<Graph> load_corpus(const Invocation& inv, int& n) {
  if (source_count(inv) > 1) throw UsageError("at most one of --in, --edges, --inline may be given");
  std::vector<Graph> graphs;
  if (source_count(inv) == 1) {
    if (!inv.in.empty() && parse_format(inv.format) == GraphFormat::graph6) {
      std::ifstream file(inv.in, std::ios::binary);
      if (!file) throw UsageError("cannot read '" + inv.in + "'");
      graphs = read_graph6_corpus(file);
    } else if (!inv.inline_text.empty() && parse_format(inv.format) == GraphFormat::graph6) {
      std::istringstream stream(inv.inline_text);
      graphs = read_graph6_corpus(stream);
    } else {
      graphs.push_back(load_graph(inv).graph);
    }
    if (inv.n) {
      n = *inv.n;
    } else if (!graphs.empty()) {
      n = graphs.front().order();
    } else {
      throw UsageError("empty corpus; pass --n to state its order");
    }
  } else if (inv.n) {
    n = *inv.n;
    graphs = generate_connected_graphs(n);
  } else {
    throw UsageError("need --n or an input corpus");
  }
  return graphs;
}

VertexSet resolve_set(const std::string& members, const LoadedGraph& loaded) {
  VertexSet s;
  for (const std::string& token : split(members, ',')) {
    int v = -1;
    for (std::size_t i = 0; i < loaded.labels.size(); ++i) {
      if (loaded.labels[i] == token) v = static_cast<int>(i);
    }
    if (v < 0) {
      try {
        std::size_t used = 0;
        v = std::stoi(token, &used);
        if (used != token.size()) v = -1;
      } catch (const std::exception&) {
        v = -1;
      }
    }
    if (v < 0 || v >= loaded.graph.order()) throw UsageError("unknown vertex '" + token + "'");
    s.insert(v);
  }
  if (s.empty()) throw UsageError("empty --component");
  return s;
}

std::string vertex_name(int v, const std::vector<std::string>& labels) {
  return labels.empty() ? std::to_string(v) : labels[static_cast<std::size_t>(v)];
}

nlohmann::json fraction_json(const Rational& q) {
  return {{"num", boost::multiprecision::numerator(q).str()},
          {"den", boost::multiprecision::denominator(q).str()},
          {"text", format_exact(q)}};
}

void require_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw UsageError("--vertex " + std::to_string(v) + " is out of range");
}

// ---- subcommands ----------------------------------------------------------

int cmd_stats(const Invocation& inv, std::ostream& out) {
  const LoadedGraph loaded = load_graph(inv);
  const ConnStats s = stats(loaded.graph);
  if (inv.emit == "json") {
    nlohmann::json j{{"n", loaded.graph.order()},
                     {"N", s.count.str()},
                     {"total", s.total_order.str()},
                     {"A", fraction_json(s.average)}};
    out << j.dump(2) << '\n';
  } else if (inv.emit == "csv") {
    out << "n,N,total,A_num,A_den\n"
        << loaded.graph.order() << ',' << s.count << ',' << s.total_order << ','
        << boost::multiprecision::numerator(s.average) << ',' << boost::multiprecision::denominator(s.average)
        << '\n';
  } else {
    out << "N=" << s.count << " total=" << s.total_order << " A=" << format_exact(s.average) << '\n';
  }
  return kExitOk;
}

int cmd_local(const Invocation& inv, std::ostream& out) {
  const LoadedGraph loaded = load_graph(inv);
  const Graph& g = loaded.graph;
  if (inv.vertex) require_vertex(g, *inv.vertex);
  const std::vector<LocalStats> locals = local_stats_all(g);
  const Rational bound(g.order() + 1, 2);
  bool all_pass = true;

  std::optional<HeavyVertexWitness> heavy;
  if (g.order() >= 3) heavy = heavy_vertex_witness(g);

  if (inv.emit == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const LocalStats& l : locals) {
      if (inv.vertex && l.vertex != *inv.vertex) continue;
      all_pass = all_pass && l.average >= bound;
      rows.push_back({{"vertex", l.vertex},
                      {"N", l.count.str()},
                      {"total", l.total_order.str()},
                      {"A", fraction_json(l.average)},
                      {"bound", fraction_json(bound)},
                      {"pass", l.average >= bound},
                      {"equality", l.average == bound}});
    }
    nlohmann::json j{{"n", g.order()}, {"vertices", rows}};
    if (heavy) {
      j["heavy_vertex"] = {{"vertex", heavy->vertex},
                           {"ratio", fraction_json(heavy->ratio)},
                           {"bound", fraction_json(heavy->bound)},
                           {"cutvertex", heavy->cutvertex},
                           {"equality", heavy->equality},
                           {"holds", heavy->holds}};
    }
    out << j.dump(2) << '\n';
  } else if (inv.emit == "csv") {
    out << "vertex,N,total,A_num,A_den,pass,equality\n";
    for (const LocalStats& l : locals) {
      if (inv.vertex && l.vertex != *inv.vertex) continue;
      all_pass = all_pass && l.average >= bound;
      out << l.vertex << ',' << l.count << ',' << l.total_order << ','
          << boost::multiprecision::numerator(l.average) << ',' << boost::multiprecision::denominator(l.average)
          << ',' << (l.average >= bound) << ',' << (l.average == bound) << '\n';
    }
  } else {
    for (const LocalStats& l : locals) {
      if (inv.vertex && l.vertex != *inv.vertex) continue;
      const bool pass = l.average >= bound;
      all_pass = all_pass && pass;
      out << "v=" << vertex_name(l.vertex, loaded.labels) << " N=" << l.count << " total=" << l.total_order
          << " A=" << format_exact(l.average) << " bound=" << format_exact(bound) << ' '
          << (!pass ? "FAIL" : l.average == bound ? "equality" : "strict") << '\n';
    }
    if (heavy) {
      out << "heavy vertex: v=" << vertex_name(heavy->vertex, loaded.labels)
          << " N(G;v)/N(G)=" << format_exact(heavy->ratio) << " bound=" << format_exact(heavy->bound) << ' '
          << (!heavy->holds ? "FAIL" : heavy->equality ? "equality" : "strict") << '\n';
    }
  }
  if (heavy && !heavy->holds) all_pass = false;
  return all_pass ? kExitOk : kExitViolation;
}

int cmd_tree(const Invocation& inv, std::ostream& out) {
  const bool path_mode = source_count(inv) == 0;
  if (path_mode && !inv.n) throw UsageError("tree needs an input tree or --n for the path P_n");
  const Graph t = path_mode ? make_path(*inv.n) : load_graph(inv).graph;
  if (inv.vertex) require_vertex(t, *inv.vertex);
  const ConnStats s = tree_stats(t);
  bool ok = true;
  if (inv.emit == "json") {
    nlohmann::json j{{"n", t.order()}, {"N", s.count.str()}, {"total", s.total_order.str()}, {"A", fraction_json(s.average)}};
    if (path_mode) {
      ok = s == path_closed_form(*inv.n);
      j["closed_form_match"] = ok;
    }
    if (inv.vertex || inv.all_vertices) {
      nlohmann::json rows = nlohmann::json::array();
      for (const LocalStats& l : tree_local_stats_all(t)) {
        if (inv.vertex && l.vertex != *inv.vertex) continue;
        rows.push_back({{"vertex", l.vertex}, {"N", l.count.str()}, {"total", l.total_order.str()}, {"A", fraction_json(l.average)}});
      }
      j["vertices"] = rows;
    }
    out << j.dump(2) << '\n';
    return ok ? kExitOk : kExitViolation;
  }
  out << (path_mode ? "P_" + std::to_string(*inv.n) + ": " : "") << "N=" << s.count << " total=" << s.total_order
      << " A=" << format_exact(s.average) << '\n';
  if (path_mode) {
    ok = s == path_closed_form(*inv.n);
    out << "closed form " << (ok ? "MATCH" : "MISMATCH") << '\n';
  }
  if (inv.vertex || inv.all_vertices) {
    for (const LocalStats& l : tree_local_stats_all(t)) {
      if (inv.vertex && l.vertex != *inv.vertex) continue;
      out << "v=" << l.vertex << " N=" << l.count << " total=" << l.total_order << " A=" << format_exact(l.average) << '\n';
    }
  }
  return ok ? kExitOk : kExitViolation;
}

void corrupt_one_red_edge(AuxDigraph& h) {
  for (int& succ : h.red_succ) {
    if (succ != kNoNode) {
      succ = kNoNode;
      return;
    }
  }
}

int cmd_aux(const Invocation& inv, std::ostream& out) {
  const LoadedGraph loaded = load_graph(inv);
  const Graph& g = loaded.graph;
  AuxOptions options;
  options.relaxed = inv.relaxed;
  options.max_order = inv.max_order;
  AuxDigraph h = build_aux_digraph(g, options);
  if (inv.inject_fault) corrupt_one_red_edge(h);

  if (inv.dump) {
    if (inv.component.empty()) throw UsageError("--dump needs --component");
    const VertexSet member = resolve_set(inv.component, loaded);
    if (h.find(member) == kNoNode) throw UsageError("--component is not a connected set");
    out << dump_component(h, member, loaded.labels);
    return kExitOk;
  }

  const auto name = [&](int v) { return vertex_name(v, loaded.labels); };
  const StructureReport structure = verify_structure(h);
  const TopCensus census = classify_tops(h);
  std::optional<ClaimReport> claims;
  const int diam = h.path.length();
  if (diam >= 2 && diam <= g.order() - 2) claims = verify_claims(h, census);

  out << "diametral path:";
  for (int v : h.path.vertices) out << ' ' << name(v);
  out << " (length " << diam << ")\n";
  out << "connected sets: " << h.size() << '\n';
  out << "red chains: " << structure.red_paths << " (N(G;" << name(h.path.front()) << ")=" << structure.containing_start
      << "), mean length " << format_exact(structure.mean_red_length) << '\n';
  out << "blue chains: " << structure.blue_paths << " (N(G;" << name(h.path.back()) << ")=" << structure.containing_end
      << "), mean length " << format_exact(structure.mean_blue_length) << '\n';
  out << "tops: " << census.mu.all.count << " (red " << census.mu.red.count << ", blue " << census.mu.blue.count
      << "; high " << census.mu.high.count << ", normal " << census.mu.normal.count << ", low " << census.mu.low.count
      << ")\n";
  out << "mean top length: " << format_exact(census.mu.all.mean()) << '\n';
  if (inv.tops) {
    for (const Top& t : census.tops) {
      out << "  " << format_set(t.set, loaded.labels) << ' ' << to_string(t.color) << ' ' << to_string(t.kind)
          << " length=" << t.length << '\n';
    }
  }
  out << "structure: " << (structure.ok() ? "PASS" : "FAIL") << '\n';
  for (const CheckFailure& f : structure.failures) {
    out << "  " << f.rule << ' ' << format_set(f.set, loaded.labels) << ": " << f.detail << '\n';
  }
  if (claims) {
    out << "claims: " << (claims->ok() ? "PASS" : "FAIL") << " (mean " << format_exact(claims->mean_all) << " < "
        << format_exact(claims->bound) << ")\n";
    for (const CheckFailure& f : claims->failures) {
      out << "  " << f.rule << ' ' << format_set(f.set, loaded.labels) << ": " << f.detail << '\n';
    }
  } else {
    out << "claims: skipped (diameter outside [2, n-2])\n";
  }
  return structure.ok() && (!claims || claims->ok()) ? kExitOk : kExitViolation;
}

ScanOptions scan_options(const Invocation& inv) {
  ScanOptions options;
  options.jobs = inv.jobs;
  options.aux.max_order = inv.max_order;
  options.inject_fault = inv.inject_fault;
  return options;
}

void print_violations(const ScanReport& report, std::ostream& out) {
  for (const Violation& v : report.violations) {
    out << "violation: " << v.graph6 << ' ' << v.check << ": " << v.detail << '\n';
  }
}

bool none_with_prefix(const ScanReport& report, std::string_view prefix) {
  return std::none_of(report.violations.begin(), report.violations.end(),
                      [&](const Violation& v) { return v.check.starts_with(prefix); });
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  int n = 0;
  const std::vector<Graph> graphs = load_corpus(inv, n);
  const ScanOptions options = scan_options(inv);
  const ScanReport theorem = scan_theorem(graphs, n, options);
  const ScanReport lemmas = scan_lemmas(graphs, n, options);

  if (inv.emit == "json") {
    out << nlohmann::json{{"theorem", to_json(theorem)}, {"lemmas", to_json(lemmas)}}.dump(2) << '\n';
  } else if (inv.emit == "csv") {
    write_csv(out, lemmas);
  } else {
    const auto status = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    out << theorem.graphs_checked << " graphs; global bound " << status(theorem.passed());
    if (theorem.min_average) {
      const bool path_only = theorem.minimizers.size() == 1 &&
                             is_path(parse_graph(theorem.minimizers.front(), GraphFormat::graph6));
      if (path_only) {
        out << "; unique minimizer = path";
      } else {
        out << "; minimizers =";
        for (const std::string& m : theorem.minimizers) out << ' ' << m;
      }
      out << " (A=" << format_fraction(*theorem.min_average) << ')';
    }
    out << "; local bound " << status(none_with_prefix(lemmas, "local"));
    if (n >= 3) {
      out << "; heavy vertex " << status(none_with_prefix(lemmas, "heavy"));
    }
    const auto aux = lemmas.counters.find("aux_checked");
    if (aux != lemmas.counters.end()) {
      out << "; auxiliary digraph " << status(none_with_prefix(lemmas, "aux")) << " (" << aux->second
          << " in regime)";
    }
    out << '\n';
    print_violations(theorem, out);
    print_violations(lemmas, out);
  }
  return theorem.passed() && lemmas.passed() ? kExitOk : kExitViolation;
}

void print_scan_text(const ScanReport& report, std::ostream& out) {
  out << "scan " << to_string(report.kind) << " n=" << report.n << '\n';
  out << "graphs checked: " << report.graphs_checked << '\n';
  if (report.min_average) {
    out << "min A: " << format_exact(*report.min_average) << '\n';
    out << "minimizers:";
    for (const std::string& m : report.minimizers) out << ' ' << m;
    out << '\n';
  }
  for (const auto& [name, value] : report.counters) out << name << ": " << value << '\n';
  std::map<std::string, std::size_t> findings;
  for (const Finding& f : report.findings) ++findings[f.kind];
  for (const auto& [kind, count] : findings) out << "findings " << kind << ": " << count << '\n';
  out << "violations: " << report.violations.size() << '\n';
  print_violations(report, out);
}

void emit_report(const Invocation& inv, const ScanReport& report, std::ostream& out) {
  if (inv.emit == "json") {
    out << to_json(report).dump(2) << '\n';
  } else if (inv.emit == "csv") {
    write_csv(out, report);
  } else {
    print_scan_text(report, out);
  }
}

int cmd_scan(const Invocation& inv, std::ostream& out) {
  int n = 0;
  const std::vector<Graph> graphs = load_corpus(inv, n);
  const ScanOptions options = scan_options(inv);
  const ScanReport report = inv.check == "theorem" ? scan_theorem(graphs, n, options) : scan_lemmas(graphs, n, options);
  emit_report(inv, report, out);
  return report.passed() ? kExitOk : kExitViolation;
}

int cmd_conjecture(const Invocation& inv, std::ostream& out) {
  const bool has_corpus = inv.n || source_count(inv) > 0;
  if (!has_corpus && !inv.complete_up_to) throw UsageError("need --n, an input corpus, or --complete");
  bool ok = true;
  if (inv.complete_up_to) {
    if (*inv.complete_up_to < 1 || *inv.complete_up_to > kMaxMaskOrder) {
      throw UsageError("--complete must lie in [1, 64]");
    }
    for (int k = 1; k <= *inv.complete_up_to; ++k) {
      const Rational measured = stats(make_complete(k)).average;
      const bool match = measured == complete_graph_average(k);
      ok = ok && match;
      if (inv.emit == "text") {
        out << "K_" << k << ": A=" << format_exact(measured) << " closed form " << (match ? "MATCH" : "MISMATCH") << '\n';
      }
    }
  }
  if (has_corpus) {
    int n = 0;
    const std::vector<Graph> graphs = load_corpus(inv, n);
    const ScanReport report = scan_conjectures(graphs, n, scan_options(inv));
    ok = ok && report.passed();
    if (inv.emit != "text") {
      emit_report(inv, report, out);
    } else {
      const auto count = [&](const char* key) {
        const auto it = report.counters.find(key);
        return it == report.counters.end() ? std::size_t{0} : it->second;
      };
      out << "conjecture scan n=" << n << ": " << report.graphs_checked << " graphs\n";
      out << "min degree >= 3: " << count("min_degree_3") << " graphs, " << count("min_degree_3_below_half")
          << " below n/2\n";
      for (const Finding& f : report.findings) {
        if (f.kind == "min-degree-3-min-gap") {
          out << "min A(G) - n/2 = " << format_exact(*f.value) << " at " << f.graph6 << '\n';
        } else if (f.kind == "min-degree-3-counterexample") {
          out << "counterexample: " << f.graph6 << " A(G) - n/2 = " << format_exact(*f.value) << '\n';
        } else if (f.kind == "vertex-transitive-cubic") {
          out << "vertex-transitive cubic " << f.graph6 << ": A/n = " << format_exact(*f.value) << " < "
              << format_exact(cubic_ratio_ceiling()) << '\n';
        }
      }
      if (count("complete") > 0) out << "complete graph closed form: checked " << count("complete") << '\n';
      out << "violations: " << report.violations.size() << '\n';
      print_violations(report, out);
    }
  }
  return ok ? kExitOk : kExitViolation;
}

// ---- argument grammar -----------------------------------------------------

void add_input_options(CLI::App& cmd, Invocation& inv) {
  cmd.add_option("--in", inv.in, "Input file (graph6 by default)");
  cmd.add_option("--edges", inv.edges, "Edge-list input file (same as --in FILE --format edges)");
  cmd.add_option("--inline", inv.inline_text, "Graph given on the command line");
  cmd.add_option("--format", inv.format, "Input format")->check(CLI::IsMember({"graph6", "edges"}));
}

void add_output_options(CLI::App& cmd, Invocation& inv) {
  cmd.add_option("--out", inv.out, "Write the report to FILE instead of stdout");
  cmd.add_option("--emit", inv.emit, "Report format")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_scan_options(CLI::App& cmd, Invocation& inv) {
  cmd.add_option("--n", inv.n, "Graph order; without an input corpus, scan every connected graph of this order")
      ->check(CLI::Range(1, 64));
  cmd.add_option("--jobs", inv.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  cmd.add_option("--max-order", inv.max_order, "Largest order for auxiliary digraph checks")->check(CLI::Range(1, 64));
  cmd.add_flag("--inject-fault", inv.inject_fault, "Corrupt each auxiliary digraph (test fixture)")->group("");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact statistics of connected induced subgraphs", "avgconn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "avgconn 0.1.0");

  Invocation inv;

  CLI::App* stats_cmd = app.add_subcommand("stats", "N(G), total order and A(G)");
  add_input_options(*stats_cmd, inv);
  add_output_options(*stats_cmd, inv);

  CLI::App* local_cmd = app.add_subcommand("local", "N(G;v) and A(G;v) against (n+1)/2, and the heavy vertex");
  add_input_options(*local_cmd, inv);
  add_output_options(*local_cmd, inv);
  local_cmd->add_option("--vertex", inv.vertex, "Report only this vertex");

  CLI::App* tree_cmd = app.add_subcommand("tree", "Subtree statistics of a tree by dynamic programming");
  add_input_options(*tree_cmd, inv);
  add_output_options(*tree_cmd, inv);
  tree_cmd->add_option("--n", inv.n, "Use the path on n vertices and compare with the closed form")
      ->check(CLI::PositiveNumber);
  tree_cmd->add_option("--vertex", inv.vertex, "Also report N(T;v) for this vertex");
  tree_cmd->add_flag("--all-vertices", inv.all_vertices, "Also report N(T;v) for every vertex");

  CLI::App* aux_cmd = app.add_subcommand("aux", "Build and check the red/blue digraph on connected sets");
  add_input_options(*aux_cmd, inv);
  add_output_options(*aux_cmd, inv);
  aux_cmd->add_option("--component", inv.component, "Comma-separated vertices (labels or indices) of a connected set");
  aux_cmd->add_flag("--dump", inv.dump, "List the weakly connected component containing --component");
  aux_cmd->add_flag("--tops", inv.tops, "List every top with its colour, class and length");
  aux_cmd->add_flag("--relaxed", inv.relaxed, "Accept graphs outside 2 <= diam <= n-2");
  aux_cmd->add_option("--labels", inv.labels, "Comma-separated vertex names");
  aux_cmd->add_option("--max-order", inv.max_order, "Largest accepted order")->check(CLI::Range(1, 64));
  aux_cmd->add_flag("--inject-fault", inv.inject_fault, "Corrupt the digraph (test fixture)")->group("");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check every bound on all connected graphs of one order");
  add_input_options(*verify_cmd, inv);
  add_output_options(*verify_cmd, inv);
  add_scan_options(*verify_cmd, inv);

  CLI::App* scan_cmd = app.add_subcommand("scan", "Per-graph report over a corpus");
  add_input_options(*scan_cmd, inv);
  add_output_options(*scan_cmd, inv);
  add_scan_options(*scan_cmd, inv);
  scan_cmd->add_option("--check", inv.check, "Which checks to run")->check(CLI::IsMember({"theorem", "lemmas"}));

  CLI::App* conjecture_cmd = app.add_subcommand("conjecture", "Minimum-degree-3 gap, complete graphs, cubic ratio");
  add_input_options(*conjecture_cmd, inv);
  add_output_options(*conjecture_cmd, inv);
  add_scan_options(*conjecture_cmd, inv);
  conjecture_cmd->add_option("--complete", inv.complete_up_to, "Check A(K_k) against its closed form for k <= N");

  std::vector<const char*> argv{"avgconn"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream body;
  int status = kExitOk;
  try {
    if (*stats_cmd) status = cmd_stats(inv, body);
    else if (*local_cmd) status = cmd_local(inv, body);
    else if (*tree_cmd) status = cmd_tree(inv, body);
    else if (*aux_cmd) status = cmd_aux(inv, body);
    else if (*verify_cmd) status = cmd_verify(inv, body);
    else if (*scan_cmd) status = cmd_scan(inv, body);
    else status = cmd_conjecture(inv, body);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (inv.out.empty()) {
    out << body.str();
  } else {
    std::ofstream file(inv.out, std::ios::binary);
    if (!file || !(file << body.str())) {
      err << "error: cannot write '" << inv.out << "'\n";
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace avgconn::cli
