#pragma once

// Exact rank of sparse matrices over a prime field F_p by column reduction.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cutscope/error.hpp"

namespace cutscope {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Arithmetic in F_p for p < 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
      throw Error(Errc::invalid_field, std::to_string(p) + " is not a prime below 2^32");
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t reduce(std::int64_t x) const {
    const auto p = static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(((x % p) + p) % p);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }
  std::uint32_t inv(std::uint32_t a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1u) result = result * base % p_;
      base = base * base % p_;
      e >>= 1u;
    }
    return static_cast<std::uint32_t>(result);
  }

 private:
  std::uint64_t p_;
};

/// Column of a sparse matrix: (row, value) pairs sorted by row, values
/// nonzero and reduced mod p.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rank over F_p. Each column is reduced against earlier pivots keyed by
/// their lowest (largest-row) entry; a column left nonzero adds one to the
/// rank.
inline std::size_t rank_mod_p(std::vector<SparseColumn> columns, const PrimeField& field) {
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
  std::size_t rank = 0;
  SparseColumn scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseColumn& col = columns[c];
    while (!col.empty()) {
      const auto [low_row, low_val] = col.back();
      const auto it = pivot_of_row.find(low_row);
      if (it == pivot_of_row.end()) {
        pivot_of_row.emplace(low_row, c);
        ++rank;
        break;
      }
      const SparseColumn& piv = columns[it->second];
      // col -= factor * piv, with factor chosen to cancel the low entry.
      const std::uint32_t factor = field.mul(low_val, field.inv(piv.back().second));
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          scratch.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          scratch.push_back({piv[b].first, field.sub(0, field.mul(factor, piv[b].second))});
          ++b;
        } else {
          const std::uint32_t v = field.sub(col[a].second, field.mul(factor, piv[b].second));
          if (v != 0) scratch.push_back({col[a].first, v});
          ++a;
          ++b;
        }
      }
      col.swap(scratch);
    }
  }
  return rank;
}

}  // namespace cutscope
