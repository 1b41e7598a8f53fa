#pragma once

// Minimal primes of squarefree monomial ideals as minimal transversals of the
// generator supports.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cutscope/cut.hpp"
#include "cutscope/error.hpp"
#include "cutscope/graph.hpp"
#include "cutscope/ideal.hpp"

namespace cutscope {

/// A monomial prime, stored as its sorted generating variables.
struct VariablePrime {
  std::vector<Variable> vars;

  std::size_t size() const { return vars.size(); }

  MonomialIdeal as_ideal(int edges) const { return MonomialIdeal::variables(edges, vars); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& v : vars) out.push_back(v.name());
    return out;
  }

  VariablePrime shifted(int edge_offset) const {
    VariablePrime p;
    for (const auto& v : vars) p.vars.push_back({v.edge + edge_offset, v.letter});
    return p;
  }

  friend bool operator==(const VariablePrime&, const VariablePrime&) = default;

  /// Size first, then lexicographic by slot.
  friend bool operator<(const VariablePrime& a, const VariablePrime& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
  }
};

namespace detail {

inline VariablePrime prime_from_mask(std::uint64_t mask) {
  VariablePrime p;
  for (std::size_t k = 0; k < 64; ++k)
    if ((mask >> k) & 1u) p.vars.push_back(Variable::from_slot(k));
  return p;
}

class TransversalSearch {
 public:
  explicit TransversalSearch(std::vector<std::uint64_t> edges) : edges_(std::move(edges)) {}

  std::set<std::uint64_t> run() {
    branch(0);
    return found_;
  }

 private:
  // Every chosen variable must keep a generator that it alone hits; adding
  // variables only shrinks those private sets, so a violation is final.
  bool all_private(std::uint64_t chosen) const {
    for (std::uint64_t rest = chosen; rest; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      const bool has_private =
          std::any_of(edges_.begin(), edges_.end(), [&](std::uint64_t e) { return (e & chosen) == bit; });
      if (!has_private) return false;
    }
    return true;
  }

  void branch(std::uint64_t chosen) {
    if (!visited_.insert(chosen).second) return;
    const auto open = std::find_if(edges_.begin(), edges_.end(), [&](std::uint64_t e) { return (e & chosen) == 0; });
    if (open == edges_.end()) {
      found_.insert(chosen);
      return;
    }
    for (std::uint64_t rest = *open; rest; rest &= rest - 1) {
      const std::uint64_t next = chosen | (rest & (~rest + 1));
      if (all_private(next)) branch(next);
    }
  }

  std::vector<std::uint64_t> edges_;
  std::set<std::uint64_t> visited_;
  std::set<std::uint64_t> found_;
};

}  // namespace detail

/// Minimal primes of a squarefree monomial ideal, sorted by size then
/// variables. Throws Errc::unsupported_input for non-squarefree ideals or
/// rings with more than 32 edges.
inline std::vector<VariablePrime> minimal_primes(const MonomialIdeal& I) {
  if (!I.is_squarefree())
    throw Error(Errc::unsupported_input, "minimal primes are only computed for squarefree ideals");
  if (2 * I.edges() > 64) throw Error(Errc::unsupported_input, "minimal primes limited to 32 edges");
  if (I.gens().front().is_unit()) return {};
  std::vector<std::uint64_t> supports;
  for (const auto& g : I.gens()) supports.push_back(g.support_mask());
  std::vector<VariablePrime> primes;
  for (auto mask : detail::TransversalSearch(std::move(supports)).run()) primes.push_back(detail::prime_from_mask(mask));
  std::sort(primes.begin(), primes.end());
  return primes;
}

/// Smallest minimal prime size.
inline std::size_t height(const std::vector<VariablePrime>& primes) {
  if (primes.empty()) throw Error(Errc::undefined, "the unit ideal has no minimal primes");
  std::size_t h = primes.front().size();
  for (const auto& p : primes) h = std::min(h, p.size());
  return h;
}

struct Decomposition {
  std::vector<VariablePrime> primes;
  std::size_t height = 0;
  int dim_edge_ring = 0;    // 2|E| - height, the ring this library works in
  int dim_vertex_ring = 0;  // 2|V| - height, the vertex-indexed convention
};

inline Decomposition decompose(const Graph& g) {
  Decomposition d;
  d.primes = minimal_primes(cut_ideal(g));
  d.height = height(d.primes);
  d.dim_edge_ring = 2 * g.edge_count() - static_cast<int>(d.height);
  d.dim_vertex_ring = 2 * g.vertex_count() - static_cast<int>(d.height);
  return d;
}

struct DimFormulaReport {
  bool primes_are_union = false;      // primes(I(G)) = ⊎ embedded primes(I(G_k))
  bool factors_incomparable = false;  // primes from different factors share no variable
  std::size_t height_whole = 0;
  std::size_t height_min_of_parts = 0;

  bool ok() const { return primes_are_union && factors_incomparable && height_whole == height_min_of_parts; }
};

/// Checks the decomposition of I(G) for G = parts[0] # parts[1] # ..., where
/// glue[k-1] attaches parts[k] to the union built so far along at most one
/// vertex.
inline DimFormulaReport dim_formula_report(const std::vector<Graph>& parts, const std::vector<VertexPairing>& glue) {
  if (parts.empty()) throw Error(Errc::invalid_decomposition, "no graphs given");
  if (glue.size() + 1 != parts.size())
    throw Error(Errc::invalid_decomposition, "need one pairing per graph after the first");
  Graph whole = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (glue[k - 1].pairs.size() > 1)
      throw Error(Errc::invalid_decomposition, "factor " + std::to_string(k + 1) + " overlaps in more than one vertex");
    whole = clique_sum(whole, parts[k], glue[k - 1]);
  }
  DimFormulaReport r;
  const auto whole_primes = minimal_primes(cut_ideal(whole));
  r.height_whole = height(whole_primes);
  std::vector<VariablePrime> joined;
  std::vector<std::set<std::size_t>> slots_per_part;
  int offset = 0;
  r.height_min_of_parts = SIZE_MAX;
  for (const auto& part : parts) {
    const auto primes = minimal_primes(cut_ideal(part));
    r.height_min_of_parts = std::min(r.height_min_of_parts, height(primes));
    std::set<std::size_t> slots;
    for (const auto& p : primes) {
      joined.push_back(p.shifted(offset));
      for (const auto& v : joined.back().vars) slots.insert(v.slot());
    }
    slots_per_part.push_back(std::move(slots));
    offset += part.edge_count();
  }
  std::sort(joined.begin(), joined.end());
  r.primes_are_union = joined == whole_primes;
  r.factors_incomparable = true;
  for (std::size_t a = 0; a < slots_per_part.size(); ++a)
    for (std::size_t b = a + 1; b < slots_per_part.size(); ++b)
      for (auto s : slots_per_part[a])
        if (slots_per_part[b].count(s)) r.factors_incomparable = false;
  return r;
}

inline bool dim_formula_check(const std::vector<Graph>& parts, const std::vector<VertexPairing>& glue) {
  return dim_formula_report(parts, glue).ok();
}

}  // namespace cutscope
