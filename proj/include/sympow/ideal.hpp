#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/monomial.hpp"
#include "sympow/ring.hpp"

namespace sympow {

class MonomialIdeal;
MonomialIdeal minimalize(std::vector<Monomial> gens, Ring ring);

/// A monomial ideal stored by its minimal generating set, sorted in graded
/// lex order. Two ideals are equal iff their generator lists are equal.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
public:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens) : MonomialIdeal(minimalize(std::move(gens), std::move(ring))) {}

  static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring), {}, Canonical{}); }

  static MonomialIdeal unit(Ring ring) {
    auto d = ring->var_count();
    return MonomialIdeal(std::move(ring), {Monomial::one(d)}, Canonical{});
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t var_count() const noexcept { return ring_->var_count(); }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    if (m.size() != var_count())
      throw DimensionMismatch("monomial has " + std::to_string(m.size()) + " exponents, ring has " +
                              std::to_string(var_count()) + " variables");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
  }

  bool operator==(const MonomialIdeal& other) const {
    return same_ring(ring_, other.ring_) && gens_ == other.gens_;
  }

private:
  struct Canonical {};
  MonomialIdeal(Ring ring, std::vector<Monomial> gens, Canonical)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  friend MonomialIdeal minimalize(std::vector<Monomial> gens, Ring ring);

  Ring ring_;
  std::vector<Monomial> gens_;
};

namespace detail {

/// Bit signature with mask(a) ⊆ mask(b) whenever a | b: each variable owns
/// a few bits, bit j set when the exponent reaches the j-th threshold.
class DivMask {
public:
  explicit DivMask(std::size_t var_count) : bits_per_var_(var_count == 0 ? 0 : std::min<std::size_t>(8, 64 / var_count)) {}

  std::uint64_t operator()(const Monomial& m) const {
    static constexpr Exponent thresholds[8] = {1, 2, 3, 4, 6, 8, 12, 16};
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < m.size() && bit < 64; ++i)
      for (std::size_t j = 0; j < bits_per_var_ && bit < 64; ++j, ++bit)
        if (m[i] >= thresholds[j])
          mask |= std::uint64_t{1} << bit;
    return mask;
  }

private:
  std::size_t bits_per_var_;
};

} // namespace detail

inline MonomialIdeal minimalize(std::vector<Monomial> gens, Ring ring) {
  if (!ring)
    throw DomainError("null ring context");
  const auto d = ring->var_count();
  for (const auto& g : gens)
    if (g.size() != d)
      throw DimensionMismatch("generator has " + std::to_string(g.size()) + " exponents, ring has " +
                              std::to_string(d) + " variables");
  std::sort(gens.begin(), gens.end(), GradedLexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so only earlier entries can divide later ones.
  const detail::DivMask mask_of(d);
  std::vector<Monomial> kept;
  std::vector<std::uint64_t> masks;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const auto mg = mask_of(g);
    bool redundant = false;
    for (std::size_t k = 0; k < kept.size() && !redundant; ++k)
      redundant = (masks[k] & ~mg) == 0 && kept[k].degree() < g.degree() && divides(kept[k], g);
    if (!redundant) {
      masks.push_back(mg);
      kept.push_back(std::move(g));
    }
  }
  return MonomialIdeal(std::move(ring), std::move(kept), MonomialIdeal::Canonical{});
}

inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw DimensionMismatch("ideals live in different rings");
}

inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

inline bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

/// a ⊆ b.
inline bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return std::all_of(a.gens().begin(), a.gens().end(), [&](const Monomial& g) { return b.contains(g); });
}

inline bool is_equigenerated(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  return std::all_of(g.begin(), g.end(), [&](const Monomial& m) { return m.degree() == g.front().degree(); });
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return minimalize(std::move(gens), a.ring());
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens())
      gens.push_back(u * v);
  return minimalize(std::move(gens), a.ring());
}

/// I^n by repeated multiplication, minimalizing after every step.
inline MonomialIdeal power(const MonomialIdeal& ideal, std::size_t n) {
  auto result = MonomialIdeal::unit(ideal.ring());
  for (std::size_t i = 0; i < n; ++i)
    result = multiply(result, ideal);
  return result;
}

/// Generators of a ∩ b: the generators of either ideal lying in the other,
/// plus lcm(u, v) for the remaining pairs.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  std::vector<const Monomial*> rest_a, rest_b;
  for (const auto& u : a.gens())
    if (b.contains(u))
      gens.push_back(u);
    else
      rest_a.push_back(&u);
  for (const auto& v : b.gens())
    if (a.contains(v))
      gens.push_back(v);
    else
      rest_b.push_back(&v);
  for (const auto* u : rest_a)
    for (const auto* v : rest_b)
      gens.push_back(lcm(*u, *v));
  return minimalize(std::move(gens), a.ring());
}

/// (I : m) = { w : w m in I }.
inline MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.size() != ideal.var_count())
    throw DimensionMismatch("monomial does not belong to the ideal's ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& u : ideal.gens())
    gens.push_back(colon_quotient(u, m));
  return minimalize(std::move(gens), ideal.ring());
}

/// (I : J) as the intersection of (I : m) over the generators m of J.
inline MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal, by);
  if (by.is_zero())
    throw DomainError("colon by the zero ideal");
  auto result = MonomialIdeal::unit(ideal.ring());
  for (const auto& m : by.gens())
    result = intersect(result, colon_monomial(ideal, m));
  return result;
}

/// (I : m^∞): drop the exponents of every variable in supp(m).
inline MonomialIdeal saturate_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.size() != ideal.var_count())
    throw DimensionMismatch("monomial does not belong to the ideal's ring");
  const auto supp = m.support();
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& u : ideal.gens()) {
    std::vector<Exponent> e(u.exponents().begin(), u.exponents().end());
    for (auto i : supp)
      e[i] = 0;
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), ideal.ring());
}

/// (I : J^∞) = ∩_m (I : m^∞) over the generators m of J.
inline MonomialIdeal saturate_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal, by);
  if (by.is_zero())
    throw DomainError("saturation by the zero ideal");
  auto result = MonomialIdeal::unit(ideal.ring());
  for (const auto& m : by.gens())
    result = intersect(result, saturate_monomial(ideal, m));
  return result;
}

} // namespace sympow
