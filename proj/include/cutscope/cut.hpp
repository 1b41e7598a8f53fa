#pragma once

// Cut monomials and monomial cut ideals, plus the cycle-specific generator
// descriptions (parity form, smaller-cycle splitting, L(C_n)).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cutscope/error.hpp"
#include "cutscope/graph.hpp"
#include "cutscope/ideal.hpp"
#include "cutscope/monomial.hpp"
#include "cutscope/parallel.hpp"

namespace cutscope {

/// A vertex subset A. u_A = u_{A^c}, so canonical() picks the representative
/// that avoids the highest-labeled vertex.
class CutAssignment {
 public:
  CutAssignment() = default;
  explicit CutAssignment(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  const std::vector<int>& vertices() const { return vertices_; }
  bool contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  CutAssignment complement(int n) const {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
      if (!contains(v)) rest.push_back(v);
    return CutAssignment(std::move(rest));
  }

  CutAssignment canonical(int n) const { return contains(n) ? complement(n) : *this; }

  friend bool operator==(const CutAssignment&, const CutAssignment&) = default;

 private:
  std::vector<int> vertices_;
};

/// u_A: s_i when e_i crosses (A, A^c), t_i otherwise.
inline Monomial cut_monomial(const Graph& g, const CutAssignment& a) {
  for (int v : a.vertices())
    if (v < 1 || v > g.vertex_count())
      throw Error(Errc::invalid_subset, "vertex " + std::to_string(v) + " is not in the graph");
  std::vector<Exponent> exps(2 * static_cast<std::size_t>(g.edge_count()), 0);
  for (int k = 1; k <= g.edge_count(); ++k) {
    const bool crosses = a.contains(g.edge(k).u) != a.contains(g.edge(k).v);
    exps[2 * static_cast<std::size_t>(k - 1) + (crosses ? 0 : 1)] = 1;
  }
  return Monomial::from_exponents(std::move(exps));
}

namespace detail {

/// Cut monomial for the subset encoded by `subset` (bit v-1 set iff v in A),
/// touching only the listed edge labels; other slots stay zero.
inline Monomial cut_monomial_masked(const Graph& g, std::uint64_t subset, const std::vector<int>& labels) {
  std::vector<Exponent> exps(2 * static_cast<std::size_t>(g.edge_count()), 0);
  for (int k : labels) {
    const Edge& e = g.edge(k);
    const bool crosses = ((subset >> (e.u - 1)) & 1u) != ((subset >> (e.v - 1)) & 1u);
    exps[2 * static_cast<std::size_t>(k - 1) + (crosses ? 0 : 1)] = 1;
  }
  return Monomial::from_exponents(std::move(exps));
}

inline constexpr int max_enumerated_vertices = 31;

}  // namespace detail

/// I(G), enumerating the 2^{n-1} subsets that avoid vertex n. Duplicates from
/// disconnected graphs collapse in minimalize.
inline MonomialIdeal cut_ideal(const Graph& g, Parallelism par = {}) {
  const int n = g.vertex_count();
  if (n - 1 > detail::max_enumerated_vertices)
    throw Error(Errc::resource_exhausted, "cut enumeration over " + std::to_string(n) + " vertices");
  std::vector<int> labels(static_cast<std::size_t>(g.edge_count()));
  for (int k = 1; k <= g.edge_count(); ++k) labels[static_cast<std::size_t>(k - 1)] = k;
  const std::size_t count = std::size_t{1} << (n - 1);
  std::vector<Monomial> gens(count);
  parallel_for(count, par, [&](std::size_t subset) {
    gens[subset] = detail::cut_monomial_masked(g, subset, labels);
  });
  return MonomialIdeal::minimalize(g.edge_count(), std::move(gens));
}

/// I(G) as the product of its components' cut ideals, each enumerated over
/// its own 2^{n_C - 1} subsets. Must agree with cut_ideal.
inline MonomialIdeal cut_ideal_componentwise(const Graph& g) {
  MonomialIdeal result = MonomialIdeal::unit(g.edge_count());
  for (const auto& comp : components(g)) {
    std::vector<int> labels;
    for (int k = 1; k <= g.edge_count(); ++k)
      if (std::binary_search(comp.begin(), comp.end(), g.edge(k).u)) labels.push_back(k);
    if (labels.empty()) continue;
    if (comp.size() - 1 > static_cast<std::size_t>(detail::max_enumerated_vertices))
      throw Error(Errc::resource_exhausted, "component too large to enumerate");
    const std::vector<int> free_vertices(comp.begin(), comp.end() - 1);
    std::vector<Monomial> gens;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free_vertices.size()); ++pick) {
      std::uint64_t subset = 0;
      for (std::size_t b = 0; b < free_vertices.size(); ++b)
        if ((pick >> b) & 1u) subset |= std::uint64_t{1} << (free_vertices[b] - 1);
      gens.push_back(detail::cut_monomial_masked(g, subset, labels));
    }
    result = product(result, MonomialIdeal::minimalize(g.edge_count(), std::move(gens)));
  }
  return result;
}

/// s_I t_J over all splittings [n] = I ⊔ J with |J| ≡ n (mod 2).
inline MonomialIdeal cycle_generators_formula(int n) {
  if (n < 3) throw Error(Errc::invalid_family, "cycle needs n >= 3");
  if (n > detail::max_enumerated_vertices) throw Error(Errc::resource_exhausted, "cycle too long to enumerate");
  std::vector<Monomial> gens;
  for (std::uint64_t tset = 0; tset < (std::uint64_t{1} << n); ++tset) {
    if (std::popcount(tset) % 2 != n % 2) continue;
    std::vector<Exponent> exps(2 * static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k)
      exps[2 * static_cast<std::size_t>(k - 1) + ((tset >> (k - 1)) & 1u)] = 1;
    gens.push_back(Monomial::from_exponents(std::move(exps)));
  }
  return MonomialIdeal::minimalize(n, std::move(gens));
}

/// I' from I: exchange s and t in the given edge slot.
inline MonomialIdeal swap_last_edge(const MonomialIdeal& I, int edge) { return swap_edge(I, edge); }

/// The two summands I(C_{n-1}) t_n and I'(C_{n-1}) s_n, embedded in the ring
/// of C_n.
struct SmallerCycleSplit {
  MonomialIdeal t_part;
  MonomialIdeal s_part;
};

inline SmallerCycleSplit smaller_cycle_split(int n, Parallelism par = {}) {
  if (n < 4) throw Error(Errc::invalid_family, "smaller-cycle splitting needs n >= 4");
  const MonomialIdeal prev = cut_ideal(cycle(n - 1), par);
  const MonomialIdeal prev_swapped = swap_edge(prev, n - 1);
  return {times(embed(prev, 0, n), Monomial::variable(n, {n, Letter::t})),
          times(embed(prev_swapped, 0, n), Monomial::variable(n, {n, Letter::s}))};
}

/// Whether I(C_n) = I(C_{n-1}) t_n + I'(C_{n-1}) s_n holds generator for
/// generator.
inline bool smaller_cycle_identity(int n, Parallelism par = {}) {
  if (n < 4) throw Error(Errc::invalid_family, "smaller-cycle identity needs n >= 4");
  const auto split = smaller_cycle_split(n, par);
  return equals(cut_ideal(cycle(n), par), ideal_sum(split.t_part, split.s_part));
}

/// L(C_n) = I(C_{n-1}) ∩ I'(C_{n-1}) in the ring of C_{n-1}.
inline MonomialIdeal L_ideal(int n, Parallelism par = {}) {
  if (n < 4) throw Error(Errc::invalid_family, "L(C_n) needs n >= 4");
  const MonomialIdeal prev = cut_ideal(cycle(n - 1), par);
  return intersection(prev, swap_edge(prev, n - 1), par);
}

}  // namespace cutscope
