#pragma once

// JSON forms of graphs, ideals, Betti tables and reports.
//
//   graph:  {"edges": [[u, v], ...], "vertices": n}
//   ideal:  {"gens": ["s1*t2", ...], "m": m}            canonical order
//   betti:  {"entries": [{"beta": b, "i": i, "j": j}, ...], "p": p, "pd": .., "reg": ..}

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutscope/betti.hpp"
#include "cutscope/decomposition.hpp"
#include "cutscope/error.hpp"
#include "cutscope/freiman.hpp"
#include "cutscope/graph.hpp"
#include "cutscope/ideal.hpp"

namespace cutscope {

using Json = nlohmann::json;

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

/// Shape errors raise Errc::parse_error; a well-formed document describing
/// an invalid graph raises Errc::invalid_graph.
inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error(Errc::parse_error, "graph JSON needs \"vertices\" and \"edges\"");
  if (!j["vertices"].is_number_integer() || !j["edges"].is_array())
    throw Error(Errc::parse_error, "\"vertices\" must be an integer and \"edges\" an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(Errc::parse_error, "each edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(j["vertices"].get<int>(), std::move(edges));
}

inline Json ideal_to_json(const MonomialIdeal& I) {
  Json gens = Json::array();
  for (const auto& g : I.gens()) gens.push_back(g.to_string());
  return {{"m", I.edges()}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("gens") || !j["m"].is_number_integer() ||
      !j["gens"].is_array())
    throw Error(Errc::parse_error, "ideal JSON needs integer \"m\" and array \"gens\"");
  const int m = j["m"].get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_string()) throw Error(Errc::parse_error, "generators must be strings");
    gens.push_back(Monomial::parse(g.get<std::string>(), m));
  }
  return MonomialIdeal::minimalize(m, std::move(gens));
}

inline Json betti_to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, v] : t.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  Json out = {{"p", t.prime()}, {"entries", entries}};
  if (!t.empty()) {
    out["pd"] = pd(t);
    out["reg"] = reg(t);
  }
  return out;
}

inline BettiTable betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("entries") || !j["entries"].is_array())
    throw Error(Errc::parse_error, "Betti JSON needs \"p\" and \"entries\"");
  BettiTable t(j["p"].get<std::uint32_t>());
  for (const auto& e : j["entries"]) {
    if (!e.contains("i") || !e.contains("j") || !e.contains("beta"))
      throw Error(Errc::parse_error, "Betti entries need i, j and beta");
    t.add(e["i"].get<int>(), e["j"].get<int>(), e["beta"].get<std::uint64_t>());
  }
  return t;
}

inline Json freiman_report_to_json(const FreimanReport& r) {
  Json powers = Json::array();
  for (const auto& p : r.powers)
    powers.push_back({{"k", p.k}, {"mu", p.mu}, {"bound", p.bound}, {"equal", p.attains_bound()}});
  return {{"graph", r.graph},       {"vertices", r.vertices}, {"m", r.edges},
          {"ell", r.ell},           {"ell_source", r.ell_cited ? "cited" : "computed"},
          {"mu", r.mu},             {"mu2", r.mu2},           {"bound", r.bound},
          {"defect", r.defect},     {"freiman", r.freiman()}, {"partial", r.partial},
          {"powers", powers}};
}

inline Json classification_to_json(const Classification& c) {
  Json graphs = Json::array();
  for (const auto& cg : c.freiman) {
    Json entry = graph_to_json(cg.graph);
    entry["degrees"] = cg.degree_sequence;
    entry["mu"] = cg.report.mu;
    entry["mu2"] = cg.report.mu2;
    const auto name = listed_name(cg.graph);
    entry["shape"] = name ? *name : "unlisted";
    graphs.push_back(std::move(entry));
  }
  return {{"examined", c.examined}, {"min_defect", c.min_defect}, {"partial", c.partial}, {"freiman", graphs}};
}

inline Json decomposition_to_json(const Decomposition& d) {
  Json primes = Json::array();
  for (const auto& p : d.primes) primes.push_back(p.names());
  return {{"primes", primes},
          {"height", d.height},
          {"dim", d.dim_edge_ring},
          {"dim_vertex_convention", d.dim_vertex_ring}};
}

}  // namespace cutscope
