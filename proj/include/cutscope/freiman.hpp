#pragma once

// Freiman testing of cut ideals by direct generator counts of powers.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cutscope/cut.hpp"
#include "cutscope/cycle_formulas.hpp"
#include "cutscope/error.hpp"
#include "cutscope/graph.hpp"
#include "cutscope/ideal.hpp"

namespace cutscope {

/// ell(I(G)) = |E(G)| + 1, the known closed formula for cut ideals (not
/// computed from the fiber ring).
inline int analytic_spread(const Graph& g) { return g.edge_count() + 1; }

/// C(l+k-2, k-1) mu - (k-1) C(l+k-2, k): the lower bound for mu(I^k), attained
/// for every k exactly when I is Freiman. k = 2 gives l mu - C(l, 2).
inline std::int64_t freiman_power_bound(int ell, std::uint64_t mu, int k) {
  return static_cast<std::int64_t>(binomial(ell + k - 2, k - 1) * mu) -
         static_cast<std::int64_t>(static_cast<std::uint64_t>(k - 1) * binomial(ell + k - 2, k));
}

struct PowerRecord {
  int k = 1;
  std::uint64_t mu = 0;
  std::int64_t bound = 0;
  bool attains_bound() const { return static_cast<std::int64_t>(mu) == bound; }
};

struct FreimanReport {
  std::string graph;  // short descriptor
  int vertices = 0;
  int edges = 0;
  int ell = 0;
  bool ell_cited = true;
  std::uint64_t mu = 0;
  std::uint64_t mu2 = 0;
  std::int64_t bound = 0;
  std::int64_t defect = 0;
  std::vector<PowerRecord> powers;  // k = 1 .. reached power
  bool partial = false;             // a power step exceeded the budget

  bool freiman() const { return !partial && defect == 0; }
};

/// mu(I^k) for k = 1..max_power with the bound comparisons. When a power
/// step would expand more than `budget` candidate generators the report is
/// returned with partial = true and the powers reached so far.
inline FreimanReport freiman_report(const Graph& g, int max_power, std::size_t budget = 2'000'000,
                                    Parallelism par = {}) {
  if (max_power < 2) throw Error(Errc::invalid_exponent, "freiman_report needs max_power >= 2");
  FreimanReport r;
  r.graph = describe(g);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.ell = analytic_spread(g);
  const MonomialIdeal I = cut_ideal(g, par);
  r.mu = I.mu();
  r.powers.push_back({1, r.mu, freiman_power_bound(r.ell, r.mu, 1)});
  MonomialIdeal current = I;
  for (int k = 2; k <= max_power; ++k) {
    try {
      current = product(current, I, par, budget);
    } catch (const Error& e) {
      if (e.code() != Errc::resource_exhausted) throw;
      r.partial = true;
      break;
    }
    r.powers.push_back({k, current.mu(), freiman_power_bound(r.ell, r.mu, k)});
  }
  if (r.powers.size() >= 2) {
    r.mu2 = r.powers[1].mu;
    r.bound = r.powers[1].bound;
    r.defect = static_cast<std::int64_t>(r.mu2) - r.bound;
  }
  return r;
}

/// The six graphs whose cut ideals are Freiman.
struct NamedGraph {
  std::string name;
  Graph graph;
};

inline std::vector<NamedGraph> listed_freiman_graphs() {
  return {
      {"K2", complete(2)},
      {"K3", complete(3)},
      {"P3", path(3)},
      {"K2+K2", clique_sum(complete(2), complete(2), VertexPairing::disjoint())},
      {"K2+K3", clique_sum(complete(2), complete(3), VertexPairing::disjoint())},
      {"K2#K3", clique_sum(complete(2), complete(3), VertexPairing::glue(2, 1))},
  };
}

/// Brute-force isomorphism over all vertex permutations; small graphs only.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.vertex_count() > 9) throw Error(Errc::resource_exhausted, "isomorphism check limited to 9 vertices");
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const bool all = std::all_of(a.edges().begin(), a.edges().end(), [&](const Edge& e) {
      return b.has_edge(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)]);
    });
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Name of the listed Freiman graph isomorphic to g, if any.
inline std::optional<std::string> listed_name(const Graph& g) {
  for (const auto& named : listed_freiman_graphs())
    if (isomorphic(g, named.graph)) return named.name;
  return std::nullopt;
}

struct ClassifiedGraph {
  Graph graph;
  FreimanReport report;
  std::vector<int> degree_sequence;  // sorted descending
};

struct Classification {
  std::size_t examined = 0;
  std::vector<ClassifiedGraph> freiman;
  std::int64_t min_defect = 0;  // smallest mu(I^2) - bound over every examined graph
  bool partial = false;         // some report hit the power budget
};

/// Every labeled graph on 2..max_vertices vertices with 1..max_edges edges
/// and no isolated vertex, tested with max_power = 2. Returns the Freiman
/// ones in enumeration order (vertex count, then edge subset bitmask).
inline Classification classify_small(int max_vertices, int max_edges, std::size_t budget = 2'000'000,
                                     Parallelism par = {}) {
  if (max_vertices < 2 || max_edges < 1) throw Error(Errc::invalid_family, "classification bounds too small");
  if (max_vertices > 7) throw Error(Errc::resource_exhausted, "classification limited to 7 vertices");
  Classification out;
  bool first = true;
  for (int n = 2; n <= max_vertices; ++n) {
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    std::vector<Graph> candidates;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << all.size()); ++pick) {
      if (std::popcount(pick) > max_edges) continue;
      std::vector<Edge> edges;
      std::uint32_t touched = 0;
      for (std::size_t k = 0; k < all.size(); ++k)
        if ((pick >> k) & 1u) {
          edges.push_back(all[k]);
          touched |= (1u << (all[k].u - 1)) | (1u << (all[k].v - 1));
        }
      if (touched != (1u << n) - 1) continue;
      candidates.emplace_back(n, std::move(edges));
    }
    std::vector<std::optional<FreimanReport>> reports(candidates.size());
    parallel_for(candidates.size(), par,
                 [&](std::size_t c) { reports[c] = freiman_report(candidates[c], 2, budget); });
    out.examined += candidates.size();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (reports[c]->partial) {
        out.partial = true;
        continue;
      }
      if (first || reports[c]->defect < out.min_defect) out.min_defect = reports[c]->defect;
      first = false;
      if (!reports[c]->freiman()) continue;
      auto deg = candidates[c].degrees();
      std::sort(deg.rbegin(), deg.rend());
      out.freiman.push_back({candidates[c], *reports[c], std::move(deg)});
    }
  }
  return out;
}

}  // namespace cutscope
