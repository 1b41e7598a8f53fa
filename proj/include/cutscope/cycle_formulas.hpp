#pragma once

// Linear quotients of L(C_n) and the Betti-number formulas for cycles built
// on them: the quotient order, the exponents r_{I,i}, the lambda sums, the
// recursion beta^n = 2 beta^{n-1} + lambda^n_{i-1} and its unrolled form.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutscope/betti.hpp"
#include "cutscope/cut.hpp"
#include "cutscope/error.hpp"
#include "cutscope/graph.hpp"
#include "cutscope/ideal.hpp"
#include "cutscope/monomial.hpp"

namespace cutscope {

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t q = 1; q <= k; ++q) r = r * static_cast<std::uint64_t>(n - k + q) / static_cast<std::uint64_t>(q);
  return r;
}

/// Subset of [n-1] as a bitmask (bit k-1 for element k).
using IndexSet = std::uint32_t;

inline std::vector<int> elements_of(IndexSet set) {
  std::vector<int> out;
  for (int k = 1; k <= 32; ++k)
    if ((set >> (k - 1)) & 1u) out.push_back(k);
  return out;
}

/// v_{I,i} = s_I t_J with J = ([n-1] \ I) ∪ {i}, a degree-n generator of
/// L(C_n) in the ring of C_{n-1}.
struct QuotientGenerator {
  int n = 4;
  IndexSet subset = 0;
  int pivot = 0;

  Monomial monomial() const {
    const int edges = n - 1;
    std::vector<Exponent> exps(2 * static_cast<std::size_t>(edges), 0);
    for (int k = 1; k <= edges; ++k) {
      const bool in_I = (subset >> (k - 1)) & 1u;
      if (in_I) exps[2 * static_cast<std::size_t>(k - 1)] = 1;
      if (!in_I || k == pivot) exps[2 * static_cast<std::size_t>(k - 1) + 1] = 1;
    }
    return Monomial::from_exponents(std::move(exps));
  }

  friend bool operator==(const QuotientGenerator&, const QuotientGenerator&) = default;
};

/// How two equal-size subsets compare lexicographically: walk the sorted
/// elements and decide at the first position where they differ.
enum class LexConvention {
  larger_element_is_greater,   // I > L when I's element exceeds L's
  smaller_element_is_greater,  // I > L when I's element is the smaller one
};

inline bool lex_greater(IndexSet a, IndexSet b, LexConvention conv) {
  const auto ea = elements_of(a), eb = elements_of(b);
  for (std::size_t q = 0; q < std::min(ea.size(), eb.size()); ++q) {
    if (ea[q] == eb[q]) continue;
    return conv == LexConvention::larger_element_is_greater ? ea[q] > eb[q] : ea[q] < eb[q];
  }
  return false;
}

/// v_{L,l} < v_{I,i} iff |L| > |I|, or |L| = |I| and I > L lexicographically,
/// or L = I and l < i.
inline bool quotient_precedes(const QuotientGenerator& a, const QuotientGenerator& b,
                              LexConvention conv = LexConvention::larger_element_is_greater) {
  const int sa = std::popcount(a.subset), sb = std::popcount(b.subset);
  if (sa != sb) return sa > sb;
  if (a.subset != b.subset) return lex_greater(b.subset, a.subset, conv);
  return a.pivot < b.pivot;
}

inline void require_cycle_order(int n, int minimum, const char* what) {
  if (n < minimum) throw Error(Errc::invalid_family, std::string(what) + " needs n >= " + std::to_string(minimum));
  if (n > 26) throw Error(Errc::resource_exhausted, std::string(what) + " limited to n <= 26");
}

/// All (n-1) 2^{n-2} generators of L(C_n) in the linear-quotients order.
inline std::vector<QuotientGenerator> quotient_order(int n,
                                                     LexConvention conv = LexConvention::larger_element_is_greater) {
  require_cycle_order(n, 4, "quotient order");
  std::vector<QuotientGenerator> gens;
  for (IndexSet set = 1; set < (IndexSet{1} << (n - 1)); ++set)
    for (int i : elements_of(set)) gens.push_back({n, set, i});
  std::sort(gens.begin(), gens.end(),
            [conv](const QuotientGenerator& a, const QuotientGenerator& b) { return quotient_precedes(a, b, conv); });
  return gens;
}

/// L(C_n) from the v_{I,i} description.
inline MonomialIdeal L_ideal_by_description(int n) {
  std::vector<Monomial> gens;
  for (const auto& q : quotient_order(n)) gens.push_back(q.monomial());
  return MonomialIdeal::minimalize(n - 1, std::move(gens));
}

/// The variable ideal < t_k : k in I, k < i > + < s_k : k in [n-1] \ I >
/// expected as the colon at v_{I,i}.
inline std::optional<MonomialIdeal> expected_quotient_colon(const QuotientGenerator& q) {
  std::vector<Variable> vars;
  for (int k = 1; k <= q.n - 1; ++k) {
    const bool in_I = (q.subset >> (k - 1)) & 1u;
    if (in_I && k < q.pivot) vars.push_back({k, Letter::t});
    if (!in_I) vars.push_back({k, Letter::s});
  }
  if (vars.empty()) return std::nullopt;
  return MonomialIdeal::variables(q.n - 1, vars);
}

struct QuotientColonFailure {
  std::size_t position = 0;
  QuotientGenerator generator;
  MonomialIdeal computed;
};

/// First position whose colon (earlier generators) : v differs from the
/// expected variable ideal, or nullopt when every position matches.
inline std::optional<QuotientColonFailure> quotient_colon_failure(
    int n, LexConvention conv = LexConvention::larger_element_is_greater) {
  const auto order = quotient_order(n, conv);
  std::vector<Monomial> earlier{order.front().monomial()};
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    const Monomial v = order[pos].monomial();
    const MonomialIdeal colon = colon_ideal(MonomialIdeal::minimalize(n - 1, earlier), v);
    const auto expected = expected_quotient_colon(order[pos]);
    if (!expected || !equals(colon, *expected)) return QuotientColonFailure{pos, order[pos], colon};
    earlier.push_back(v);
  }
  return std::nullopt;
}

inline bool quotient_colon_check(int n, LexConvention conv = LexConvention::larger_element_is_greater) {
  return !quotient_colon_failure(n, conv).has_value();
}

/// r_{I,i} = |{k in I : k < i}| + |[n-1] \ I|.
inline int r_value(int n, IndexSet subset, int i) {
  require_cycle_order(n, 3, "r_value");
  if (subset == 0 || subset >= (IndexSet{1} << (n - 1)))
    throw Error(Errc::invalid_pair, "subset must be a nonempty subset of [n-1]");
  if (i < 1 || i > n - 1 || !((subset >> (i - 1)) & 1u))
    throw Error(Errc::invalid_pair, std::to_string(i) + " is not an element of the subset");
  const int below = std::popcount(subset & ((IndexSet{1} << (i - 1)) - 1));
  return below + (n - 1 - std::popcount(subset));
}

/// beta_j(L(C_n)) from the linear quotients: sum over I, i of C(r_{I,i}, j).
/// Negative j gives 0.
inline std::uint64_t lambda_betti(int n, int j) {
  require_cycle_order(n, 3, "lambda_betti");
  if (j < 0) return 0;
  std::uint64_t sum = 0;
  for (IndexSet set = 1; set < (IndexSet{1} << (n - 1)); ++set)
    for (int i : elements_of(set)) sum += binomial(r_value(n, set, i), j);
  return sum;
}

/// Graded table of L(C_n) implied by the linear quotients: lambda_j sits in
/// internal degree n + j.
inline BettiTable lambda_table(int n, std::uint32_t prime = 0) {
  BettiTable t(prime);
  for (int j = 0; j <= n - 1; ++j) t.add(j, n + j, lambda_betti(n, j));
  return t;
}

/// The number of variables generating each colon ideal along the quotient
/// order, computed from the ideals rather than the r-formula. Throws
/// Errc::undefined if some colon is not generated by variables.
inline std::vector<int> measured_quotient_exponents(int n) {
  const auto order = quotient_order(n);
  std::vector<int> out{0};
  std::vector<Monomial> earlier{order.front().monomial()};
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    const Monomial v = order[pos].monomial();
    const MonomialIdeal colon = colon_ideal(MonomialIdeal::minimalize(n - 1, earlier), v);
    for (const auto& g : colon.gens())
      if (g.degree() != 1) throw Error(Errc::undefined, "colon at position " + std::to_string(pos) + " is not linear");
    out.push_back(static_cast<int>(colon.mu()));
    earlier.push_back(v);
  }
  return out;
}

/// Where the lambda terms come from: the r-formula, or the colon ideals
/// measured along the quotient order.
enum class LambdaSource { formula, measured };

inline BettiTable lambda_table_measured(int n, std::uint32_t prime = 0) {
  const auto r = measured_quotient_exponents(n);
  BettiTable t(prime);
  for (int j = 0; j <= n - 1; ++j) {
    std::uint64_t sum = 0;
    for (int x : r) sum += binomial(x, j);
    t.add(j, n + j, sum);
  }
  return t;
}

/// Graded Betti table of I(C_n) by the recursion, starting from the oracle
/// table of I(C_3). I(C_{n-1}) t_n and I'(C_{n-1}) s_n each contribute the
/// previous table shifted one internal degree; lambda^n_{i-1} lands in
/// internal degree n + 1 + i.
inline BettiTable betti_recursion_graded(int n, const BettiOptions& opt = {},
                                         LambdaSource source = LambdaSource::formula) {
  require_cycle_order(n, 4, "Betti recursion");
  BettiTable table = betti(cut_ideal(cycle(3)), opt);
  for (int m = 4; m <= n; ++m) {
    BettiTable next(opt.prime);
    for (const auto& [key, v] : table.entries()) next.add(key.first, key.second + 1, 2 * v);
    const BettiTable lambda = source == LambdaSource::formula ? lambda_table(m) : lambda_table_measured(m);
    for (int i = 1; i <= m; ++i) next.add(i, m + 1 + i, lambda.total(i - 1));
    table = next;
  }
  return table;
}

/// Total Betti numbers beta_i^n of I(C_n) by the recursion.
inline std::vector<std::uint64_t> betti_recursion(int n, const BettiOptions& opt = {}) {
  return betti_recursion_graded(n, opt).totals();
}

using BaseTriple = std::array<std::uint64_t, 3>;

/// Which lambda terms the unrolled sum includes. The recursion starts at
/// n = 4, so from_four is its exact unrolling; from_three adds the j = 3 term
/// with lambda^3 evaluated by the r-formula.
enum class ClosedFormSum { from_four, from_three };

/// beta_i^n = 2^{n-3} beta_i^3 + sum_j 2^{n-j} lambda^j_{i-1}, with the base
/// triple (beta_0^3, beta_1^3, beta_2^3) supplied by the caller.
inline std::uint64_t betti_closed(int n, int i, const BaseTriple& base, ClosedFormSum sum = ClosedFormSum::from_four) {
  require_cycle_order(n, 4, "closed form");
  if (i < 0) return 0;
  std::uint64_t value = (i <= 2 ? base[static_cast<std::size_t>(i)] : 0) << (n - 3);
  for (int j = sum == ClosedFormSum::from_four ? 4 : 3; j <= n; ++j)
    value += lambda_betti(j, i - 1) << (n - j);
  return value;
}

inline std::vector<std::uint64_t> betti_closed_totals(int n, const BaseTriple& base,
                                                      ClosedFormSum sum = ClosedFormSum::from_four) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i <= n; ++i) out.push_back(betti_closed(n, i, base, sum));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Graded version of the unrolled form. base[i] is placed in the internal
/// degree that beta_i^3 occupies in `c3` (the oracle table of I(C_3)),
/// shifted by n - 3; lambda^j_{i-1} lands in degree n + 1 + i.
inline BettiTable betti_closed_graded(int n, const BaseTriple& base, const BettiTable& c3,
                                      ClosedFormSum sum = ClosedFormSum::from_four) {
  require_cycle_order(n, 4, "closed form");
  BettiTable t(c3.prime());
  for (const auto& [key, v] : c3.entries())
    if (key.first <= 2) t.add(key.first, key.second + n - 3, base[static_cast<std::size_t>(key.first)] << (n - 3));
  for (int j = sum == ClosedFormSum::from_four ? 4 : 3; j <= n; ++j)
    for (int i = 1; i <= j; ++i) t.add(i, n + 1 + i, lambda_betti(j, i - 1) << (n - j));
  return t;
}

/// Whether g carries exactly the labeled cycle C_n edge list.
inline bool is_labeled_cycle(const Graph& g) { return g.vertex_count() >= 3 && g == cycle(g.vertex_count()); }

}  // namespace cutscope
