#pragma once

// Monomials of S = K[s_1, t_1, ..., s_m, t_m]. Slot 2(k-1) holds the exponent
// of s_k and slot 2(k-1)+1 the exponent of t_k, so the edge label k owns the
// adjacent slot pair.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutscope/error.hpp"

namespace cutscope {

enum class Letter : std::uint8_t { s = 0, t = 1 };

struct Variable {
  int edge = 1;  // 1..m
  Letter letter = Letter::s;

  std::size_t slot() const { return 2 * static_cast<std::size_t>(edge - 1) + static_cast<std::size_t>(letter); }

  static Variable from_slot(std::size_t slot) {
    return {static_cast<int>(slot / 2) + 1, slot % 2 == 0 ? Letter::s : Letter::t};
  }

  std::string name() const { return (letter == Letter::s ? "s" : "t") + std::to_string(edge); }

  friend auto operator<=>(const Variable& a, const Variable& b) { return a.slot() <=> b.slot(); }
  friend bool operator==(const Variable&, const Variable&) = default;
};

using Exponent = std::uint8_t;

class Monomial {
 public:
  /// The unit monomial 1 in the ring with `edges` slot pairs.
  explicit Monomial(int edges = 0) : exps_(2 * static_cast<std::size_t>(edges), 0) {
    if (edges < 0) throw Error(Errc::ring_mismatch, "negative edge count");
  }

  static Monomial from_exponents(std::vector<Exponent> exps) {
    if (exps.size() % 2 != 0) throw Error(Errc::ring_mismatch, "exponent vector must have even length");
    Monomial m;
    m.exps_ = std::move(exps);
    return m;
  }

  static Monomial variable(int edges, Variable v) {
    if (v.edge < 1 || v.edge > edges) throw Error(Errc::ring_mismatch, "variable " + v.name() + " outside the ring");
    Monomial m(edges);
    m.exps_[v.slot()] = 1;
    return m;
  }

  /// Squarefree monomial from a bitmask over slots (bit k = slot k).
  static Monomial from_mask(int edges, std::uint64_t mask) {
    Monomial m(edges);
    for (std::size_t k = 0; k < m.exps_.size(); ++k) m.exps_[k] = (mask >> k) & 1u;
    return m;
  }

  int edges() const { return static_cast<int>(exps_.size() / 2); }
  std::size_t slots() const { return exps_.size(); }
  std::span<const Exponent> exponents() const { return exps_; }
  Exponent operator[](std::size_t slot) const { return exps_[slot]; }
  Exponent exponent(Variable v) const { return exps_.at(v.slot()); }

  int degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  /// Bitmask of the support; only meaningful for at most 64 slots.
  std::uint64_t support_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < exps_.size() && k < 64; ++k)
      if (exps_[k] != 0) mask |= std::uint64_t{1} << k;
    return mask;
  }

  std::vector<Variable> support() const {
    std::vector<Variable> vars;
    for (std::size_t k = 0; k < exps_.size(); ++k)
      if (exps_[k] != 0) vars.push_back(Variable::from_slot(k));
    return vars;
  }

  bool divides(const Monomial& other) const {
    require_same_ring(other);
    for (std::size_t k = 0; k < exps_.size(); ++k)
      if (exps_[k] > other.exps_[k]) return false;
    return true;
  }

  void require_same_ring(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
      throw Error(Errc::ring_mismatch, "monomials live in rings with " + std::to_string(edges()) + " and " +
                                           std::to_string(other.edges()) + " edges");
  }

  /// Exchanges the s and t exponents in one edge slot pair.
  Monomial swapped(int edge) const {
    if (edge < 1 || edge > edges()) throw Error(Errc::invalid_subset, "edge " + std::to_string(edge) + " out of range");
    Monomial m = *this;
    std::swap(m.exps_[2 * static_cast<std::size_t>(edge - 1)], m.exps_[2 * static_cast<std::size_t>(edge - 1) + 1]);
    return m;
  }

  /// Copy into a ring with `total_edges` edges, shifting edge k to k + offset.
  Monomial embedded(int edge_offset, int total_edges) const {
    if (edge_offset < 0 || edge_offset + edges() > total_edges)
      throw Error(Errc::ring_mismatch, "embedding does not fit the target ring");
    Monomial m(total_edges);
    std::copy(exps_.begin(), exps_.end(), m.exps_.begin() + 2 * edge_offset);
    return m;
  }

  /// Text form: factors in slot order joined by '*', "^e" for e > 1, "1" for
  /// the unit.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += Variable::from_slot(k).name();
      if (exps_[k] > 1) out += '^' + std::to_string(exps_[k]);
    }
    return out.empty() ? "1" : out;
  }

  /// Inverse of to_string for a ring with `edges` edges. Repeated factors
  /// multiply.
  static Monomial parse(std::string_view text, int edges) {
    Monomial m(edges);
    if (text == "1") return m;
    if (text.empty()) throw Error(Errc::parse_error, "empty monomial text");
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('*', pos), text.size());
      const std::string_view factor = text.substr(pos, end - pos);
      if (factor.size() < 2 || (factor[0] != 's' && factor[0] != 't'))
        throw Error(Errc::parse_error, "bad factor '" + std::string(factor) + "'");
      const std::size_t caret = factor.find('^');
      const std::string_view idx = factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
      int edge = 0;
      unsigned power = 1;
      auto [p1, ec1] = std::from_chars(idx.data(), idx.data() + idx.size(), edge);
      if (ec1 != std::errc{} || p1 != idx.data() + idx.size())
        throw Error(Errc::parse_error, "bad variable index in '" + std::string(factor) + "'");
      if (caret != std::string_view::npos) {
        const std::string_view pw = factor.substr(caret + 1);
        auto [p2, ec2] = std::from_chars(pw.data(), pw.data() + pw.size(), power);
        if (ec2 != std::errc{} || p2 != pw.data() + pw.size() || power == 0)
          throw Error(Errc::parse_error, "bad exponent in '" + std::string(factor) + "'");
      }
      if (edge < 1 || edge > edges)
        throw Error(Errc::parse_error, "variable index out of range in '" + std::string(factor) + "'");
      const Variable v{edge, factor[0] == 's' ? Letter::s : Letter::t};
      const unsigned total = m.exps_[v.slot()] + power;
      if (total > std::numeric_limits<Exponent>::max()) throw Error(Errc::invalid_exponent, "exponent overflow");
      m.exps_[v.slot()] = static_cast<Exponent>(total);
      if (end == text.size()) break;
      pos = end + 1;
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.require_same_ring(b);
    Monomial m = a;
    for (std::size_t k = 0; k < m.exps_.size(); ++k) {
      const unsigned sum = unsigned{a.exps_[k]} + b.exps_[k];
      if (sum > std::numeric_limits<Exponent>::max()) throw Error(Errc::invalid_exponent, "exponent overflow");
      m.exps_[k] = static_cast<Exponent>(sum);
    }
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.require_same_ring(b);
    Monomial m = a;
    for (std::size_t k = 0; k < m.exps_.size(); ++k) m.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
    return m;
  }

  /// a : b = lcm(a, b) / b, slotwise max(a - b, 0).
  friend Monomial colon(const Monomial& a, const Monomial& b) {
    a.require_same_ring(b);
    Monomial m = a;
    for (std::size_t k = 0; k < m.exps_.size(); ++k)
      m.exps_[k] = a.exps_[k] > b.exps_[k] ? static_cast<Exponent>(a.exps_[k] - b.exps_[k]) : Exponent{0};
    return m;
  }

 private:
  std::vector<Exponent> exps_;
};

/// Canonical generator order: total degree ascending, then lexicographic with
/// s_1 > t_1 > s_2 > ... (larger exponent in an earlier slot sorts first).
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto ea = a.exponents(), eb = b.exponents();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), std::greater<>{});
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

}  // namespace cutscope
