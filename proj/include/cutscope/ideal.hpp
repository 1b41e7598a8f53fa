#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutscope/error.hpp"
#include "cutscope/monomial.hpp"
#include "cutscope/parallel.hpp"

namespace cutscope {

/// A nonzero monomial ideal held by its unique minimal generating set, kept
/// in CanonicalLess order. Two ideals are equal iff their generator lists are.
class MonomialIdeal {
 public:
  /// Reduces `gens` to the minimal generating set of the ideal they span.
  static MonomialIdeal minimalize(int edges, std::vector<Monomial> gens) {
    if (gens.empty()) throw Error(Errc::empty_ideal, "an ideal needs at least one generator");
    for (const auto& g : gens)
      if (g.edges() != edges)
        throw Error(Errc::ring_mismatch, "generator " + g.to_string() + " is not in the ring with " +
                                             std::to_string(edges) + " edges");
    std::sort(gens.begin(), gens.end(), CanonicalLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal ideal(edges);
    // After sorting by degree every proper divisor precedes its multiples.
    const bool packed = 2 * static_cast<std::size_t>(edges) <= 64 &&
                        std::all_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_squarefree(); });
    if (packed) {
      std::vector<std::uint64_t> kept;
      for (auto& g : gens) {
        const std::uint64_t mask = g.support_mask();
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [mask](std::uint64_t k) { return (k & ~mask) == 0; });
        if (redundant) continue;
        kept.push_back(mask);
        ideal.gens_.push_back(std::move(g));
      }
    } else {
      for (auto& g : gens) {
        const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                           [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) ideal.gens_.push_back(std::move(g));
      }
    }
    return ideal;
  }

  /// Minimalization without the packed squarefree path; kept for agreement
  /// checks between the two code paths.
  static MonomialIdeal minimalize_generic(int edges, std::vector<Monomial> gens) {
    if (gens.empty()) throw Error(Errc::empty_ideal, "an ideal needs at least one generator");
    std::sort(gens.begin(), gens.end(), CanonicalLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal ideal(edges);
    for (auto& g : gens) {
      if (g.edges() != edges) throw Error(Errc::ring_mismatch, "generator outside the ring");
      const bool redundant =
          std::any_of(ideal.gens_.begin(), ideal.gens_.end(), [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) ideal.gens_.push_back(std::move(g));
    }
    return ideal;
  }

  static MonomialIdeal unit(int edges) { return minimalize(edges, {Monomial(edges)}); }

  static MonomialIdeal principal(const Monomial& m) { return minimalize(m.edges(), {m}); }

  /// The ideal generated by the given variables.
  static MonomialIdeal variables(int edges, std::span<const Variable> vars) {
    std::vector<Monomial> gens;
    for (const auto& v : vars) gens.push_back(Monomial::variable(edges, v));
    return minimalize(edges, std::move(gens));
  }

  int edges() const { return edges_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t mu() const { return gens_.size(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
  }

  /// The common generator degree, or nullopt for mixed degrees.
  std::optional<int> generating_degree() const {
    const int d = gens_.front().degree();
    for (const auto& g : gens_)
      if (g.degree() != d) return std::nullopt;
    return d;
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  void require_same_ring(const MonomialIdeal& other) const {
    if (edges_ != other.edges_)
      throw Error(Errc::ring_mismatch, "ideals live in rings with " + std::to_string(edges_) + " and " +
                                           std::to_string(other.edges_) + " edges");
  }

  friend bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.require_same_ring(b);
    return a.gens_ == b.gens_;
  }
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return equals(a, b); }

 private:
  explicit MonomialIdeal(int edges) : edges_(edges) {}

  int edges_;
  std::vector<Monomial> gens_;
};

namespace detail {

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

/// All combine(a, b) for a in I, b in J, in row-major order whatever the
/// worker count.
template <class Combine>
std::vector<Monomial> pairwise(const MonomialIdeal& I, const MonomialIdeal& J, Parallelism par,
                               std::size_t budget, Combine combine) {
  I.require_same_ring(J);
  const std::size_t total = I.mu() * J.mu();
  if (total > budget)
    throw Error(Errc::resource_exhausted, std::to_string(total) + " candidate generators exceed the budget of " +
                                              std::to_string(budget));
  std::vector<std::vector<Monomial>> rows(I.mu());
  parallel_for(I.mu(), par, [&](std::size_t r) {
    rows[r].reserve(J.mu());
    for (const auto& b : J.gens()) rows[r].push_back(combine(I.gens()[r], b));
  });
  std::vector<Monomial> out;
  out.reserve(total);
  for (auto& row : rows)
    for (auto& m : row) out.push_back(std::move(m));
  return out;
}

}  // namespace detail

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J, Parallelism par = {},
                             std::size_t budget = detail::unlimited) {
  return MonomialIdeal::minimalize(
      I.edges(), detail::pairwise(I, J, par, budget, [](const Monomial& a, const Monomial& b) { return a * b; }));
}

/// I ∩ J = < lcm(u, v) : u in G(I), v in G(J) >.
inline MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J, Parallelism par = {},
                                  std::size_t budget = detail::unlimited) {
  return MonomialIdeal::minimalize(
      I.edges(), detail::pairwise(I, J, par, budget, [](const Monomial& a, const Monomial& b) { return lcm(a, b); }));
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  I.require_same_ring(J);
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::minimalize(I.edges(), std::move(gens));
}

/// I : v = < u : v : u in G(I) >.
inline MonomialIdeal colon_ideal(const MonomialIdeal& I, const Monomial& v) {
  if (v.edges() != I.edges()) throw Error(Errc::ring_mismatch, "colon by a monomial from another ring");
  std::vector<Monomial> gens;
  gens.reserve(I.mu());
  for (const auto& u : I.gens()) gens.push_back(colon(u, v));
  return MonomialIdeal::minimalize(I.edges(), std::move(gens));
}

/// I * v for a single monomial v.
inline MonomialIdeal times(const MonomialIdeal& I, const Monomial& v) {
  if (v.edges() != I.edges()) throw Error(Errc::ring_mismatch, "product with a monomial from another ring");
  std::vector<Monomial> gens;
  for (const auto& u : I.gens()) gens.push_back(u * v);
  return MonomialIdeal::minimalize(I.edges(), std::move(gens));
}

/// I^k by repeated multiplication, minimalizing after each step. `budget`
/// bounds the candidate count of any single step.
inline MonomialIdeal power(const MonomialIdeal& I, int k, Parallelism par = {},
                           std::size_t budget = detail::unlimited) {
  if (k < 1) throw Error(Errc::invalid_exponent, "power needs k >= 1, got " + std::to_string(k));
  MonomialIdeal result = I;
  for (int step = 2; step <= k; ++step) result = product(result, I, par, budget);
  return result;
}

/// Applies the s/t exchange in one edge slot to every generator.
inline MonomialIdeal swap_edge(const MonomialIdeal& I, int edge) {
  if (edge < 1 || edge > I.edges())
    throw Error(Errc::invalid_subset, "edge " + std::to_string(edge) + " outside the ring");
  std::vector<Monomial> gens;
  for (const auto& u : I.gens()) gens.push_back(u.swapped(edge));
  return MonomialIdeal::minimalize(I.edges(), std::move(gens));
}

/// Copies I into a ring with `total_edges` edges, shifting edge labels by
/// `edge_offset`.
inline MonomialIdeal embed(const MonomialIdeal& I, int edge_offset, int total_edges) {
  std::vector<Monomial> gens;
  for (const auto& u : I.gens()) gens.push_back(u.embedded(edge_offset, total_edges));
  return MonomialIdeal::minimalize(total_edges, std::move(gens));
}

}  // namespace cutscope
