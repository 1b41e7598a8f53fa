#pragma once

// The cutscope command line. run_cli is kept separate from main so the tests
// can drive every command in-process.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutscope/betti.hpp"
#include "cutscope/cut.hpp"
#include "cutscope/cycle_formulas.hpp"
#include "cutscope/decomposition.hpp"
#include "cutscope/error.hpp"
#include "cutscope/freiman.hpp"
#include "cutscope/graph.hpp"
#include "cutscope/json_io.hpp"
#include "cutscope/verify.hpp"

namespace cutscope::cli {

enum Exit : int {
  ok = 0,
  claim_failed = 1,
  usage = 2,
  invalid_input = 3,
  method_mismatch = 4,
  budget = 5,
};

inline int exit_code(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::invalid_field: return usage;
    case Errc::method_mismatch: return method_mismatch;
    case Errc::resource_exhausted: return budget;
    default: return invalid_input;
  }
}

struct Globals {
  std::string format = "json";
  std::uint32_t prime = 32003;
  unsigned threads = Parallelism::hardware().threads;
  std::size_t budget = 0;  // 0 keeps each command's default

  Parallelism par() const { return {std::max(1u, threads)}; }

  BettiOptions betti() const {
    BettiOptions o;
    o.prime = prime;
    o.par = par();
    if (budget) o.element_budget = budget;
    return o;
  }
};

inline Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_json(parse_json_text(buf.str()));
}

inline void print_betti_table(std::ostream& out, const BettiTable& t) {
  if (t.empty()) {
    out << "(empty)\n";
    return;
  }
  const int top = pd(t);
  int lo = t.entries().begin()->first.second, hi = lo;
  for (const auto& [key, v] : t.entries()) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  out << std::setw(8) << "";
  for (int i = 0; i <= top; ++i) out << std::setw(6) << i;
  out << "\n" << std::setw(8) << "total:";
  for (int i = 0; i <= top; ++i) out << std::setw(6) << t.total(i);
  out << "\n";
  for (int row = lo; row <= hi; ++row) {
    out << std::setw(7) << row << ":";
    for (int i = 0; i <= top; ++i) {
      const auto v = t.at(i, i + row);
      if (v)
        out << std::setw(6) << v;
      else
        out << std::setw(6) << "-";
    }
    out << "\n";
  }
}

inline int cmd_gens(const Globals& g, const std::string& file, bool count_only, std::ostream& out) {
  const MonomialIdeal I = cut_ideal(read_graph(file), g.par());
  if (count_only) {
    out << I.mu() << "\n";
  } else if (g.format == "table") {
    for (const auto& m : I.gens()) out << m.to_string() << "\n";
  } else {
    out << ideal_to_json(I).dump() << "\n";
  }
  return ok;
}

struct BettiRequest {
  std::string method = "oracle";
  bool check = false;
  std::vector<std::uint64_t> base;
  std::string closed_sum = "from-four";
};

inline int cmd_betti(const Globals& g, const std::string& file, const BettiRequest& req, std::ostream& out) {
  const Graph graph = read_graph(file);
  const BettiOptions opt = g.betti();
  BettiTable table(opt.prime);
  if (req.method == "oracle") {
    table = betti(cut_ideal(graph, opt.par), opt);
  } else {
    if (!is_labeled_cycle(graph))
      throw Error(Errc::method_mismatch, "method '" + req.method + "' needs the labeled cycle C_n as input");
    const int n = graph.vertex_count();
    const BettiTable c3 = betti(cut_ideal(cycle(3)), opt);
    if (req.method == "cycle-recursion" || req.method == "quotients") {
      table = n == 3 ? c3
                     : betti_recursion_graded(n, opt,
                                              req.method == "quotients" ? LambdaSource::measured
                                                                        : LambdaSource::formula);
    } else {
      BaseTriple base{c3.total(0), c3.total(1), c3.total(2)};
      if (!req.base.empty()) {
        if (req.base.size() != 3) throw Error(Errc::parse_error, "--base takes three numbers");
        base = {req.base[0], req.base[1], req.base[2]};
      }
      const auto sum = req.closed_sum == "from-three" ? ClosedFormSum::from_three : ClosedFormSum::from_four;
      if (n == 3) {
        table = BettiTable(opt.prime);
        for (const auto& [key, v] : c3.entries()) table.add(key.first, key.second, base[std::size_t(key.first)]);
      } else {
        table = betti_closed_graded(n, base, c3, sum);
      }
    }
  }
  Json j = betti_to_json(table);
  j["method"] = req.method;
  std::optional<bool> agrees;
  if (req.check && req.method != "oracle") {
    agrees = betti(cut_ideal(graph, opt.par), opt).same_entries(table);
    j["check"] = {{"against", "oracle"}, {"agrees", *agrees}};
  }
  if (g.format == "table") {
    out << "method: " << req.method << "  p = " << table.prime() << "\n";
    print_betti_table(out, table);
    if (agrees) out << "oracle check: " << (*agrees ? "agrees" : "DIFFERS") << "\n";
  } else {
    out << j.dump() << "\n";
  }
  return ok;
}

/// Poincare polynomial computed directly and as the product over blocks.
inline int cmd_poincare(const Globals& g, const std::string& file, std::ostream& out) {
  const Graph graph = read_graph(file);
  const BettiOptions opt = g.betti();
  const BivariatePoly direct = poincare(betti(cut_ideal(graph, opt.par), opt));
  BivariatePoly product_form = BivariatePoly::one();
  const auto parts = blocks(graph);
  for (const auto& labels : parts) product_form = product_form * poincare(betti(cut_ideal(edge_subgraph(graph, labels)), opt));
  const bool agree = direct == product_form;
  if (g.format == "table") {
    out << "direct:  " << direct.to_string() << "\n"
        << "product: " << product_form.to_string() << "  (" << parts.size() << " blocks)\n"
        << "agree:   " << (agree ? "yes" : "no") << "\n";
  } else {
    out << Json{{"direct", direct.to_string()},
                {"product", product_form.to_string()},
                {"blocks", parts.size()},
                {"agree", agree}}
               .dump()
        << "\n";
  }
  return ok;
}

inline int cmd_decompose(const Globals& g, const std::string& file, std::ostream& out) {
  const Decomposition d = decompose(read_graph(file));
  if (g.format == "table") {
    for (const auto& p : d.primes) {
      out << "(";
      const auto names = p.names();
      for (std::size_t k = 0; k < names.size(); ++k) out << (k ? ", " : "") << names[k];
      out << ")\n";
    }
    out << "height " << d.height << ", dim " << d.dim_edge_ring << " (vertex convention " << d.dim_vertex_ring
        << ")\n";
  } else {
    out << decomposition_to_json(d).dump() << "\n";
  }
  return ok;
}

struct FreimanRequest {
  std::string graph;
  int max_power = 2;
  bool classify = false;
  int max_vertices = 5;
  int max_edges = 6;
};

inline int cmd_freiman(const Globals& g, const FreimanRequest& req, std::ostream& out) {
  const std::size_t budget = g.budget ? g.budget : 2'000'000;
  if (req.classify) {
    const Classification c = classify_small(req.max_vertices, req.max_edges, budget, g.par());
    if (g.format == "table") {
      out << c.examined << " graphs examined, min defect " << c.min_defect << (c.partial ? " (partial)" : "") << "\n";
      for (const auto& cg : c.freiman) {
        const auto name = listed_name(cg.graph);
        out << std::setw(8) << (name ? *name : "unlisted") << "  " << describe(cg.graph) << "\n";
      }
    } else {
      out << classification_to_json(c).dump() << "\n";
    }
    return ok;
  }
  if (req.graph.empty()) throw Error(Errc::parse_error, "freiman needs --graph or --classify");
  const FreimanReport r = freiman_report(read_graph(req.graph), req.max_power, budget, g.par());
  if (g.format == "table") {
    out << r.graph << "\nell " << r.ell << ", mu " << r.mu << ", mu(I^2) " << r.mu2 << ", bound " << r.bound
        << ", defect " << r.defect << (r.freiman() ? "  Freiman" : "  not Freiman") << (r.partial ? " (partial)" : "")
        << "\n";
    for (const auto& p : r.powers)
      out << "  k=" << p.k << "  mu " << p.mu << "  bound " << p.bound << (p.attains_bound() ? "  =" : "") << "\n";
  } else {
    out << freiman_report_to_json(r).dump() << "\n";
  }
  return ok;
}

inline Json ledger_to_json(const VerificationLedger& ledger) {
  Json records = Json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"adjudicated", 0}};
  for (const auto& r : ledger.records) {
    const std::string status(to_string(r.status));
    ++counts[status];
    records.push_back(
        {{"id", r.id}, {"anchor", r.anchor}, {"status", status}, {"details", r.details}, {"seconds", r.seconds}});
  }
  return {{"suite", ledger.suite}, {"records", records}, {"summary", counts}};
}

inline void print_ledger(std::ostream& out, const VerificationLedger& ledger) {
  for (const auto& r : ledger.records) {
    out << std::left << std::setw(12) << to_string(r.status) << std::setw(26) << r.id << std::right << std::fixed
        << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.anchor << "\n";
    out << std::setw(12) << "" << r.details << "\n";
  }
}

inline int cmd_verify(const Globals& g, const std::string& suite, bool stretch, const std::string& ledger_file,
                      std::ostream& out) {
  VerifyOptions opt;
  opt.prime = g.prime;
  opt.par = g.par();
  opt.stretch = stretch;
  if (g.budget) opt.element_budget = g.budget;
  const VerificationLedger ledger = run_verification(suite, opt);
  const Json j = ledger_to_json(ledger);
  if (!ledger_file.empty()) {
    std::ofstream f(ledger_file);
    if (!f) throw Error(Errc::parse_error, "cannot write " + ledger_file);
    f << j.dump(2) << "\n";
  }
  if (g.format == "table")
    print_ledger(out, ledger);
  else
    out << j.dump(2) << "\n";
  return ledger.any_failed() ? claim_failed : ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cutscope: monomial cut ideals of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--field-prime", g.prime, "prime p of the coefficient field F_p");
  app.add_option("--threads", g.threads, "worker threads");
  app.add_option("--budget", g.budget, "lcm-lattice element budget (candidate budget for freiman)");

  std::string graph_file;
  auto* gens = app.add_subcommand("gens", "minimal generators of I(G)");
  bool count_only = false;
  gens->add_option("--graph,graph", graph_file, "graph JSON file")->required();
  gens->add_flag("--count-only", count_only, "print only the number of generators");

  auto* bet = app.add_subcommand("betti", "graded Betti numbers of I(G)");
  BettiRequest breq;
  bet->add_option("--graph,graph", graph_file, "graph JSON file")->required();
  bet->add_option("--method", breq.method, "oracle, cycle-recursion, cycle-closed or quotients")
      ->check(CLI::IsMember({"oracle", "cycle-recursion", "cycle-closed", "quotients"}));
  bet->add_flag("--check", breq.check, "compare a formula method with the oracle");
  bet->add_option("--base", breq.base, "closed form base beta_0^3 beta_1^3 beta_2^3")->delimiter(',');
  bet->add_option("--closed-sum", breq.closed_sum, "first lambda term of the closed form")
      ->check(CLI::IsMember({"from-four", "from-three"}));

  auto* poi = app.add_subcommand("poincare", "Poincare polynomial, direct and as a product over blocks");
  poi->add_option("--graph,graph", graph_file, "graph JSON file")->required();

  auto* dec = app.add_subcommand("decompose", "minimal primes, height and dimension");
  dec->add_option("--graph,graph", graph_file, "graph JSON file")->required();

  auto* fre = app.add_subcommand("freiman", "Freiman test by power generator counts");
  FreimanRequest freq;
  fre->add_option("--graph", freq.graph, "graph JSON file");
  fre->add_option("--max-power", freq.max_power, "largest power k");
  fre->add_flag("--classify", freq.classify, "enumerate small graphs");
  fre->add_option("--max-vertices", freq.max_vertices, "classification vertex bound");
  fre->add_option("--max-edges", freq.max_edges, "classification edge bound");

  auto* ver = app.add_subcommand("verify", "rerun the registered claims");
  std::string suite = "all", ledger_file;
  bool stretch = false;
  ver->add_option("--suite", suite, "all, generators, clique-sum, cycle, freiman or decomposition");
  ver->add_flag("--stretch", stretch, "include the n = 6 recursion check");
  ver->add_option("--ledger", ledger_file, "also write the JSON ledger to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "cutscope: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*gens) return cmd_gens(g, graph_file, count_only, out);
    if (*bet) return cmd_betti(g, graph_file, breq, out);
    if (*poi) return cmd_poincare(g, graph_file, out);
    if (*dec) return cmd_decompose(g, graph_file, out);
    if (*fre) return cmd_freiman(g, freq, out);
    if (*ver) return cmd_verify(g, suite, stretch, ledger_file, out);
  } catch (const Error& e) {
    err << "cutscope: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const Json::exception& e) {
    err << "cutscope: parse-error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace cutscope::cli
