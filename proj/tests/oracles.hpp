#pragma once

// Brute-force reference implementations used by the tests. They work on raw
// generator lists (never minimalized) and decide membership by enumeration,
// so they share no code path with the library operations they check.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "sympow/monomial.hpp"
#include "sympow/polynomial.hpp"

namespace sympow::oracle {

using Exps = std::vector<Exponent>;
using Gens = std::vector<Exps>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

inline bool member(const Gens& gens, const Exps& w) {
  for (const auto& g : gens)
    if (divides(g, w))
      return true;
  return false;
}

inline Exps mul(const Exps& a, const Exps& b) {
  Exps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i] + b[i];
  return c;
}

/// All exponent vectors of total degree <= bound in d variables.
inline std::vector<Exps> monomials_up_to(std::size_t d, std::size_t bound) {
  std::vector<Exps> out;
  Exps e(d, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos == d) {
      out.push_back(e);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      e[pos] = static_cast<Exponent>(k);
      rec(pos + 1, left - k);
    }
    e[pos] = 0;
  };
  rec(0, bound);
  return out;
}

inline std::size_t degree(const Exps& e) {
  std::size_t s = 0;
  for (auto x : e)
    s += x;
  return s;
}

/// w in I^n iff some product of n generators (with repetition) divides w.
inline bool member_of_power(const Gens& gens, std::size_t n, const Exps& w) {
  if (n == 0)
    return true;
  std::function<bool(std::size_t, std::size_t, const Exps&)> rec = [&](std::size_t start, std::size_t left,
                                                                        const Exps& acc) {
    if (!divides(acc, w))
      return false;
    if (left == 0)
      return true;
    for (std::size_t i = start; i < gens.size(); ++i)
      if (rec(i, left - 1, mul(acc, gens[i])))
        return true;
    return false;
  };
  return rec(0, n, Exps(w.size(), 0));
}

/// w in (I : m^∞) iff w m^k in I for some k <= max_k.
inline bool member_of_saturation(const Gens& gens, const Exps& m, const Exps& w, std::size_t max_k) {
  Exps acc = w;
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (member(gens, acc))
      return true;
    acc = mul(acc, m);
  }
  return false;
}

/// Hilbert function of A/I by enumeration of standard monomials.
inline std::vector<long> standard_counts(const Gens& gens, std::size_t d, std::size_t bound) {
  std::vector<long> counts(bound + 1, 0);
  for (const auto& w : monomials_up_to(d, bound))
    if (!member(gens, w))
      ++counts[degree(w)];
  return counts;
}

inline Gens gens_of(const std::vector<Monomial>& ms) {
  Gens g;
  for (const auto& m : ms)
    g.emplace_back(m.exponents().begin(), m.exponents().end());
  return g;
}

/// Random generator list: d variables, exponents in [0, max_exp], between
/// 1 and max_gens generators, never the constant monomial.
inline Gens random_gens(std::mt19937_64& rng, std::size_t d, Exponent max_exp, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<Exponent> exp(0, max_exp);
  Gens g(count(rng));
  for (auto& e : g) {
    do {
      e.assign(d, 0);
      for (auto& x : e)
        x = exp(rng);
    } while (degree(e) == 0);
  }
  return g;
}

inline std::vector<Monomial> to_monomials(const Gens& g) {
  std::vector<Monomial> ms;
  for (const auto& e : g)
    ms.emplace_back(e);
  return ms;
}

} // namespace sympow::oracle
