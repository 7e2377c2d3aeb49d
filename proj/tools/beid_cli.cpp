// Command-line front door: per-graph analysis, family generation, dual-graph
// export, and the exhaustive census.  Graph inputs are graph6 strings or
// block expressions ("F3 o F4 * F1"); the two syntaxes never collide because
// every expression contains a digit and the graph6 alphabet starts above the
// digits.
//
// Exit codes: 0 = CM / success, 1 = not-CM, 2 = not-applicable (also: dual
// requested for a non-unmixed ideal), 3 = input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "beid/census.hpp"
#include "beid/classify.hpp"
#include "beid/constructions.hpp"
#include "beid/cutsets.hpp"
#include "beid/dual.hpp"
#include "beid/graph.hpp"
#include "beid/graph6.hpp"

namespace {

using namespace beid;

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

struct Input {
  Graph graph;
  std::vector<std::string> warnings;  // elaboration notes, expressions only
};

Input resolve_input(const std::string& text) {
  if (text.find_first_of("0123456789") != std::string::npos) {
    Elaboration e = elaborate(parse_expr(text));  // throws with a position
    return {std::move(e.graph), std::move(e.warnings)};
  }
  return {graph6_decode(text), {}};
}

// Reads non-empty input lines from the positional argument or, when it is
// missing or "-", from stdin.
std::vector<std::string> gather_inputs(const std::string& arg) {
  if (!arg.empty() && arg != "-") return {arg};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    line = trimmed(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Stream selection for --out; the file is opened lazily so usage errors do
// not leave empty files behind.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  std::ostream& stream() {
    if (path_.empty() || path_ == "-") return std::cout;
    if (!file_.is_open()) {
      file_.open(path_);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path_);
    }
    return file_;
  }

 private:
  std::string path_;
  std::ofstream file_;
};

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::CM: return 0;
    case Verdict::NotCM: return 1;
    case Verdict::NotApplicable: return 2;
  }
  return 2;
}

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const std::string& input_arg, const std::string& format,
                Output& out) {
  const std::vector<std::string> inputs = gather_inputs(input_arg);
  if (inputs.empty()) {
    std::cerr << "analyze: no input\n";
    return 3;
  }
  int code = 0;
  bool first = true;
  for (const std::string& text : inputs) {
    const Input in = resolve_input(text);
    const ClassificationReport report = classify(in.graph);
    for (const std::string& w : in.warnings) std::cerr << "warning: " << w << "\n";
    if (format == "json") {
      nlohmann::json j = report_to_json(in.graph, report);
      j["input"] = text;
      if (!in.warnings.empty()) j["warnings"] = in.warnings;
      out.stream() << j.dump() << "\n";
    } else if (format == "dot") {
      if (report.unmixed.unmixed) {
        out.stream() << dual_to_dot(build_dual(in.graph));
      } else {
        out.stream() << "// ideal not unmixed: no dual graph; primal shown\n"
                     << to_dot(in.graph);
      }
    } else {
      if (!first) out.stream() << "\n";
      out.stream() << report_to_text(in.graph, report);
    }
    first = false;
    code = verdict_code(report.verdict);
  }
  return code;
}

// ---------------------------------------------------------------------------
// generate

std::vector<int> parse_size_list(const std::vector<std::string>& toks) {
  std::string joined;
  for (const std::string& t : toks) joined += t + " ";
  for (char& ch : joined)
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  std::istringstream is(joined);
  std::vector<int> sizes;
  int v;
  while (is >> v) sizes.push_back(v);
  if (sizes.empty()) throw std::invalid_argument("fan: expected a size list");
  return sizes;
}

int run_generate(const std::string& spec, const std::string& format, Output& out) {
  std::vector<std::string> toks;
  {
    std::istringstream is(spec);
    std::string t;
    while (is >> t) toks.push_back(t);
  }
  if (toks.empty()) throw std::invalid_argument("generate: empty spec");

  Graph g;
  std::optional<CutSetFamily> fam;
  std::vector<std::string> warnings;

  if (toks[0] == "F" && toks.size() == 2) {
    const int m = std::stoi(toks[1]);
    g = make_F(m);
    fam = predict_cutsets_F(m);
  } else if (toks[0] == "M" && toks.size() == 3) {
    if (toks[2] != "square" && toks[2] != "offset")
      throw std::invalid_argument("M: variant must be 'square' or 'offset'");
    g = make_M(std::stoi(toks[1]), toks[2] == "square");
    // no closed form: these families are the counterexamples, enumeration is
    // cheap at the sizes the guard admits
    fam = enumerate_cut_sets(g);
  } else if (toks[0] == "fan" && toks.size() >= 3) {
    const int n = std::stoi(toks[1]);
    const std::vector<int> sizes =
        parse_size_list({toks.begin() + 2, toks.end()});
    // sizes name consecutive vertex blocks {1..s1}, {s1+1..s1+s2}, ...
    std::vector<std::vector<int>> sets;
    int next = 1;
    for (int s : sizes) {
      std::vector<int> w;
      for (int i = 0; i < s; ++i) w.push_back(next++);
      sets.push_back(std::move(w));
    }
    g = fan_graph(n, sets);
    fam = predict_cutsets_fan(n, sets);
  } else if (toks[0] == "semicone-of" && toks.size() >= 2) {
    std::string rest;
    for (std::size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
    Elaboration e = elaborate(parse_expr(rest));
    warnings = e.warnings;
    const auto bip = bipartition(e.graph);
    g = semicone(e.graph);
    try {
      fam = predict_cutsets_semicone(e.graph, *bip);
    } catch (const std::invalid_argument& err) {
      warnings.push_back(std::string("no closed-form cut sets: ") + err.what());
    }
  } else {
    const BlockExpr expr = parse_expr(spec);
    Elaboration e = elaborate(expr);
    g = e.graph;
    warnings = e.warnings;
    try {
      fam = predict_cutsets(expr);
    } catch (const std::invalid_argument& err) {
      warnings.push_back(std::string("no closed-form cut sets: ") + err.what());
    }
  }

  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  if (format == "graph6") {
    out.stream() << graph6_encode(g) << "\n";
  } else if (format == "dot") {
    out.stream() << to_dot(g);
  } else if (format == "json") {
    nlohmann::json j;
    j["graph6"] = graph6_encode(g);
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edge_list()) j["edges"].push_back({u, v});
    j["cut_sets"] = fam ? cutsets_to_json(g, *fam) : nlohmann::json();
    if (!warnings.empty()) j["warnings"] = warnings;
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << graph6_encode(g) << "\n";
    out.stream() << "n " << g.n() << ", " << g.edge_count() << " edges:";
    for (const auto& [u, v] : g.edge_list())
      out.stream() << " {" << u << "," << v << "}";
    out.stream() << "\n";
    if (fam) {
      out.stream() << "cut sets (" << fam->size() << "):";
      for (const VertexSet& s : fam->all) out.stream() << " " << s.to_string();
      out.stream() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// census

int run_census_cmd(int max_n, bool bipartite_only, int jobs,
                   const std::string& stream_arg, const std::string& format,
                   Output& out) {
  std::vector<CensusRow> rows;
  std::vector<std::string> violations;

  if (!stream_arg.empty()) {
    // externally generated stream: one graph6 string per line
    std::ifstream file;
    std::istream* in = &std::cin;
    if (stream_arg != "-") {
      file.open(stream_arg);
      if (!file) throw std::invalid_argument("cannot open " + stream_arg);
      in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
      line = trimmed(line);
      if (line.empty()) continue;
      const Graph g = graph6_decode(line);
      const CensusRow row = census_row(g);
      if (row.n >= 2 && row.bipartite && is_connected(g)) {
        const bool both = row.unmixed && row.peeling;
        if (row.dual_connected != both || both != row.certified)
          violations.push_back("route disagreement on " + row.graph6);
      }
      rows.push_back(row);
    }
  } else {
    rows = run_census(max_n, bipartite_only, jobs, &violations);
  }

  if (format == "csv") {
    out.stream() << census_to_csv(rows);
  } else if (format == "json") {
    nlohmann::json j;
    j["rows"] = census_to_json(rows);
    j["violations"] = violations;
    out.stream() << j.dump(2) << "\n";
  } else {
    int certified = 0, unmixed = 0;
    int max_seen = 0;
    for (const CensusRow& r : rows) {
      certified += r.certified;
      unmixed += r.unmixed;
      max_seen = std::max(max_seen, r.n);
    }
    out.stream() << rows.size() << " graphs up to n = " << max_seen << ", "
                 << unmixed << " unmixed, " << certified << " certified\n";
    for (int n = 1; n <= max_seen; ++n) {
      int total = 0, cert = 0;
      for (const CensusRow& r : rows)
        if (r.n == n) {
          ++total;
          cert += r.certified;
        }
      if (total > 0)
        out.stream() << "  n = " << n << ": " << total << " graphs, " << cert
                     << " certified\n";
    }
    for (const std::string& v : violations) out.stream() << "violation: " << v << "\n";
    if (violations.empty()) out.stream() << "no violations\n";
  }
  std::cerr << "census: " << rows.size() << " rows, " << violations.size()
            << " violations\n";
  return 0;
}

// ---------------------------------------------------------------------------
// dual

int run_dual(const std::string& input_arg, const std::string& format, Output& out) {
  const std::vector<std::string> inputs = gather_inputs(input_arg);
  if (inputs.empty()) {
    std::cerr << "dual: no input\n";
    return 3;
  }
  for (const std::string& text : inputs) {
    const Input in = resolve_input(text);
    for (const std::string& w : in.warnings) std::cerr << "warning: " << w << "\n";
    const CutSetFamily fam = enumerate_cut_sets(in.graph);
    const UnmixedReport u = is_unmixed(fam);
    if (!u.unmixed) {
      std::cerr << "dual graph undefined: ideal not unmixed (cut set "
                << u.witness.to_string() << " has " << u.witness_c
                << " components instead of " << u.witness.size() + c(in.graph, VertexSet())
                << ")\n";
      return 2;
    }
    const DualGraph d = build_dual(in.graph, fam);
    if (format == "json") {
      out.stream() << dual_to_json(d).dump(2) << "\n";
    } else if (format == "dot") {
      out.stream() << dual_to_dot(d);
    } else {
      out.stream() << d.nodes.size() << " nodes, " << d.edges.size()
                   << " edges, height " << d.height << "\n";
      for (std::size_t i = 0; i < d.nodes.size(); ++i)
        out.stream() << "  " << i << ": " << d.nodes[i].to_string() << "\n";
      for (const auto& [i, j] : d.edges)
        out.stream() << "  " << i << " -- " << j << "\n";
      const std::optional<int> diam = diameter(d);
      out.stream() << (is_connected(d) ? "connected" : "disconnected");
      if (diam) out.stream() << ", diameter " << *diam;
      out.stream() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "binomial edge ideal toolkit: cut sets, dual graphs, and the\n"
      "Cohen-Macaulay classification of bipartite graphs"};
  app.require_subcommand(1);
  app.footer(
      "Graph inputs are graph6 strings or block expressions like \"F3 o F4 * "
      "F1\".\nBEID_GUARD_N raises the built-in size guards.\nExit codes: 0 "
      "CM/success, 1 not-CM, 2 not-applicable, 3 input error.");

  std::string input, format = "text", out_path, stream_file;
  int max_n = 8, jobs = 1;
  bool bipartite_only = false;

  CLI::App* analyze = app.add_subcommand("analyze", "classify a graph");
  analyze->add_option("input", input, "graph6 or expression; '-' or absent reads stdin");
  analyze->add_option("--format", format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  analyze->add_option("--out", out_path, "write output to a file");

  CLI::App* generate = app.add_subcommand(
      "generate", "construct a family member: an expression, or 'F m', "
                  "'M k square|offset', 'fan n [s1,s2,...]', 'semicone-of EXPR'");
  generate->add_option("spec", input, "family spec or expression")->required();
  generate->add_option("--format", format, "text|json|dot|graph6")
      ->check(CLI::IsMember({"text", "json", "dot", "graph6"}));
  generate->add_option("--out", out_path, "write output to a file");

  CLI::App* census = app.add_subcommand(
      "census", "classify every connected graph up to isomorphism");
  census->add_option("--max-n", max_n, "largest vertex count (default 8)");
  census->add_flag("--bipartite-only", bipartite_only, "bipartite graphs only");
  census->add_option("--jobs", jobs, "worker threads (default 1)");
  census->add_option("--input", stream_file,
                     "read a graph6 stream ('-' = stdin) instead of generating");
  census->add_option("--format", format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  census->add_option("--out", out_path, "write output to a file");

  CLI::App* dual = app.add_subcommand("dual", "print the dual graph");
  dual->add_option("input", input, "graph6 or expression; '-' or absent reads stdin");
  dual->add_option("--format", format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  dual->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    Output out(out_path);
    if (*analyze) return run_analyze(input, format, out);
    if (*generate) return run_generate(input, format, out);
    if (*census)
      return run_census_cmd(max_n, bipartite_only, jobs, stream_file, format, out);
    if (*dual) return run_dual(input, format, out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
  return 3;
}
