#pragma once

// Graded Betti numbers of monomial ideals from the lcm lattice: for every
// lattice element b, beta_{i,b}(I) = dim H~_{i-1}(open interval (0, b); F_p),
// the reduced homology of the order complex of the elements strictly below b.
// The graded table sums these over elements of equal total degree.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cutscope/error.hpp"
#include "cutscope/ideal.hpp"
#include "cutscope/linalg.hpp"
#include "cutscope/monomial.hpp"
#include "cutscope/parallel.hpp"

namespace cutscope {

struct BettiOptions {
  std::uint32_t prime = 32003;
  std::size_t element_budget = 20000;
  std::size_t chain_budget = 10'000'000;
  Parallelism par{};
};

/// All lcms of nonempty generator subsets (the bottom element is implicit),
/// sorted by CanonicalLess so that strict divisors precede multiples.
class LcmLattice {
 public:
  static LcmLattice build(const MonomialIdeal& I, std::size_t element_budget) {
    LcmLattice lat;
    std::unordered_map<Monomial, int, MonomialHash> index;
    std::vector<Monomial> frontier = I.gens();
    std::vector<Monomial> all = I.gens();
    for (const auto& g : all) index.emplace(g, 0);
    // Joining with one atom at a time reaches every subset lcm.
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& x : frontier) {
        for (const auto& a : I.gens()) {
          Monomial y = lcm(x, a);
          if (index.emplace(y, 0).second) {
            if (index.size() > element_budget)
              throw Error(Errc::resource_exhausted, "lcm lattice exceeds " + std::to_string(element_budget) +
                                                        " elements");
            next.push_back(y);
            all.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), CanonicalLess{});
    lat.elements_ = std::move(all);
    lat.atoms_ = I.mu();
    const std::size_t n = lat.elements_.size();
    lat.below_.resize(n);
    const bool packed = I.edges() * 2 <= 64 && I.is_squarefree();
    std::vector<std::uint64_t> masks;
    if (packed)
      for (const auto& e : lat.elements_) masks.push_back(e.support_mask());
    for (std::size_t b = 0; b < n; ++b) {
      const int db = lat.elements_[b].degree();
      for (std::size_t c = 0; c < b; ++c) {
        if (lat.elements_[c].degree() >= db) break;
        const bool divides = packed ? (masks[c] & ~masks[b]) == 0 : lat.elements_[c].divides(lat.elements_[b]);
        if (divides) lat.below_[b].push_back(static_cast<int>(c));
      }
    }
    return lat;
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t atom_count() const { return atoms_; }
  const Monomial& element(std::size_t k) const { return elements_[k]; }
  const std::vector<Monomial>& elements() const { return elements_; }
  /// Indices of lattice elements strictly dividing element k, ascending.
  const std::vector<int>& below(std::size_t k) const { return below_[k]; }

 private:
  std::vector<Monomial> elements_;
  std::vector<std::vector<int>> below_;
  std::size_t atoms_ = 0;
};

namespace detail {

/// Reduced Betti numbers dim H~_k, k = -1, 0, 1, ..., of the order complex of
/// the given poset (elements listed in a linear extension, with `up[x]` the
/// strictly larger elements, ascending). Index 0 of the result is k = -1.
inline std::vector<std::uint64_t> reduced_homology_of_order_complex(const std::vector<std::vector<int>>& up,
                                                                    const PrimeField& field,
                                                                    std::size_t chain_budget,
                                                                    std::size_t& chains_used) {
  const std::size_t n = up.size();
  // levels[k] holds the k-simplices (chains of k+1 elements) flattened, in
  // lexicographic order.
  std::vector<std::vector<int>> levels;
  std::vector<std::size_t> counts;
  chains_used = 0;
  if (n > 0) {
    std::vector<int> level0(n);
    for (std::size_t x = 0; x < n; ++x) level0[x] = static_cast<int>(x);
    levels.push_back(std::move(level0));
    counts.push_back(n);
    chains_used = n;
  }
  while (!levels.empty() && counts.back() > 0) {
    const std::size_t len = levels.size();  // elements per chain in the last level
    const auto& prev = levels.back();
    std::vector<int> next;
    std::size_t made = 0;
    for (std::size_t c = 0; c < counts.back(); ++c) {
      const int* chain = prev.data() + c * len;
      for (int y : up[static_cast<std::size_t>(chain[len - 1])]) {
        next.insert(next.end(), chain, chain + len);
        next.push_back(y);
        ++made;
      }
    }
    chains_used += made;
    if (chains_used > chain_budget)
      throw Error(Errc::resource_exhausted, "order complex exceeds " + std::to_string(chain_budget) + " simplices");
    if (made == 0) break;
    levels.push_back(std::move(next));
    counts.push_back(made);
  }

  // rank_of[k] = rank of the boundary C_k -> C_{k-1}, k >= 0; C_{-1} = F_p.
  const std::size_t top = counts.size();
  std::vector<std::size_t> rank_of(top + 1, 0);
  if (top > 0) rank_of[0] = 1;
  for (std::size_t k = 1; k < top; ++k) {
    const std::size_t len = k + 1;
    const auto& faces = levels[k - 1];
    const std::size_t face_count = counts[k - 1];
    auto face_index = [&](const std::vector<int>& face) {
      std::size_t lo = 0, hi = face_count;
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const int* f = faces.data() + mid * k;
        if (std::lexicographical_compare(f, f + k, face.begin(), face.end()))
          lo = mid + 1;
        else
          hi = mid;
      }
      return static_cast<std::uint32_t>(lo);
    };
    std::vector<SparseColumn> cols(counts[k]);
    std::vector<int> face(k);
    for (std::size_t c = 0; c < counts[k]; ++c) {
      const int* chain = levels[k].data() + c * len;
      for (std::size_t r = 0; r < len; ++r) {
        std::size_t w = 0;
        for (std::size_t q = 0; q < len; ++q)
          if (q != r) face[w++] = chain[q];
        cols[c].push_back({face_index(face), r % 2 == 0 ? 1u : field.reduce(-1)});
      }
      std::sort(cols[c].begin(), cols[c].end());
    }
    rank_of[k] = rank_mod_p(std::move(cols), field);
  }

  std::vector<std::uint64_t> reduced(top + 1, 0);
  reduced[0] = 1 - rank_of.front() * (top > 0 ? 1 : 0);  // H~_{-1}
  for (std::size_t k = 0; k < top; ++k)
    reduced[k + 1] = counts[k] - rank_of[k] - (k + 1 < top ? rank_of[k + 1] : 0);
  return reduced;
}

}  // namespace detail

/// One nonzero multigraded Betti number beta_{i, b}.
struct MultigradedBetti {
  Monomial degree;
  int homological = 0;
  std::uint64_t value = 0;
};

inline std::vector<MultigradedBetti> multigraded_betti(const MonomialIdeal& I, const BettiOptions& opt = {}) {
  const PrimeField field(opt.prime);
  const LcmLattice lat = LcmLattice::build(I, opt.element_budget);
  std::vector<std::vector<std::uint64_t>> per_element(lat.size());
  std::atomic<std::size_t> total_chains{0};
  parallel_for(lat.size(), opt.par, [&](std::size_t b) {
    const auto& interval = lat.below(b);
    std::unordered_map<int, int> local;
    for (std::size_t x = 0; x < interval.size(); ++x) local.emplace(interval[x], static_cast<int>(x));
    std::vector<std::vector<int>> up(interval.size());
    for (std::size_t y = 0; y < interval.size(); ++y)
      for (int x : lat.below(static_cast<std::size_t>(interval[y])))
        up[static_cast<std::size_t>(local.at(x))].push_back(static_cast<int>(y));
    std::size_t used = 0;
    per_element[b] = detail::reduced_homology_of_order_complex(up, field, opt.chain_budget, used);
    if (total_chains.fetch_add(used) + used > opt.chain_budget)
      throw Error(Errc::resource_exhausted, "order complexes exceed " + std::to_string(opt.chain_budget) +
                                                " simplices in total");
  });
  std::vector<MultigradedBetti> out;
  for (std::size_t b = 0; b < lat.size(); ++b)
    for (std::size_t k = 0; k < per_element[b].size(); ++k)
      if (per_element[b][k] != 0) out.push_back({lat.element(b), static_cast<int>(k), per_element[b][k]});
  return out;
}

/// beta_{ij}: homological degree i, internal degree j.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  BettiTable() = default;
  explicit BettiTable(std::uint32_t prime) : prime_(prime) {}

  std::uint32_t prime() const { return prime_; }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  void add(int i, int j, std::uint64_t beta) {
    if (beta == 0) return;
    entries_[{i, j}] += beta;
  }

  std::uint64_t at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  /// beta_i = sum over j.
  std::uint64_t total(int i) const {
    std::uint64_t s = 0;
    for (const auto& [key, v] : entries_)
      if (key.first == i) s += v;
    return s;
  }

  /// Total Betti numbers beta_0, ..., beta_pd.
  std::vector<std::uint64_t> totals() const {
    std::vector<std::uint64_t> t;
    for (const auto& [key, v] : entries_) {
      if (t.size() <= static_cast<std::size_t>(key.first)) t.resize(static_cast<std::size_t>(key.first) + 1, 0);
      t[static_cast<std::size_t>(key.first)] += v;
    }
    return t;
  }

  /// Sum of (-1)^i beta_i; equals 1 for any nonzero ideal.
  std::int64_t euler_characteristic() const {
    std::int64_t s = 0;
    for (const auto& [key, v] : entries_) s += (key.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v);
    return s;
  }

  /// Graded tables compare entry by entry; the field is metadata.
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

 private:
  std::uint32_t prime_ = 0;
  std::map<Key, std::uint64_t> entries_;
};

inline BettiTable betti(const MonomialIdeal& I, const BettiOptions& opt = {}) {
  BettiTable table(opt.prime);
  for (const auto& mb : multigraded_betti(I, opt)) table.add(mb.homological, mb.degree.degree(), mb.value);
  return table;
}

inline int pd(const BettiTable& t) {
  if (t.empty()) throw Error(Errc::undefined, "projective dimension of an empty table");
  int best = 0;
  for (const auto& [key, v] : t.entries()) best = std::max(best, key.first);
  return best;
}

inline int reg(const BettiTable& t) {
  if (t.empty()) throw Error(Errc::undefined, "regularity of an empty table");
  int best = t.entries().begin()->first.second - t.entries().begin()->first.first;
  for (const auto& [key, v] : t.entries()) best = std::max(best, key.second - key.first);
  return best;
}

/// Whether every nonzero beta_{ij} sits at j = i + d. Throws
/// Errc::not_equigenerated when the generators (row i = 0) are not all of
/// degree d.
inline bool linear_resolution_check(const BettiTable& t, int d) {
  for (const auto& [key, v] : t.entries())
    if (key.first == 0 && key.second != d)
      throw Error(Errc::not_equigenerated, "generators in degree " + std::to_string(key.second) + ", expected " +
                                               std::to_string(d));
  return std::all_of(t.entries().begin(), t.entries().end(),
                     [d](const auto& kv) { return kv.first.second == kv.first.first + d; });
}

/// Polynomial in x (homological degree) and y (internal degree) with
/// nonnegative integer coefficients.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (x exponent, y exponent)

  BivariatePoly() = default;
  static BivariatePoly one() {
    BivariatePoly p;
    p.coeffs_[{0, 0}] = 1;
    return p;
  }
  static BivariatePoly monomial(std::uint64_t c, int xe, int ye) {
    BivariatePoly p;
    if (c != 0) p.coeffs_[{xe, ye}] = c;
    return p;
  }

  const std::map<Key, std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t coeff(int xe, int ye) const {
    const auto it = coeffs_.find({xe, ye});
    return it == coeffs_.end() ? 0 : it->second;
  }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [k, c] : b.coeffs_) r.coeffs_[k] += c;
    return r;
  }

  friend BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) r.coeffs_[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return r;
  }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) { return poly_mul(a, b); }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// Terms by descending x power, then descending y power, e.g.
  /// "3x^2y^6 + 6xy^5 + 4y^3".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const auto [xe, ye] = it->first;
      if (!out.empty()) out += " + ";
      if (it->second != 1 || (xe == 0 && ye == 0)) out += std::to_string(it->second);
      if (xe > 0) out += xe == 1 ? std::string("x") : "x^" + std::to_string(xe);
      if (ye > 0) out += ye == 1 ? std::string("y") : "y^" + std::to_string(ye);
    }
    return out;
  }

 private:
  std::map<Key, std::uint64_t> coeffs_;
};

/// P(x, y) = sum beta_{ij} x^i y^j, generators at x^0.
inline BivariatePoly poincare(const BettiTable& t) {
  BivariatePoly p;
  for (const auto& [key, v] : t.entries()) p = p + BivariatePoly::monomial(v, key.first, key.second);
  return p;
}

}  // namespace cutscope
