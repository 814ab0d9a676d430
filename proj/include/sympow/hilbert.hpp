#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "sympow/error.hpp"
#include "sympow/ideal.hpp"
#include "sympow/polynomial.hpp"

namespace sympow {

enum class PivotStrategy {
  MostFrequent, ///< variable occurring in the most generator supports
  LowestIndex,  ///< first variable occurring in at least two supports
};

/// Memo of Hilbert numerators keyed by canonical generator lists. Safe to
/// share between threads; concurrent stores of the same key are harmless
/// because the stored values are identical.
class NumeratorCache {
public:
  using Key = std::vector<Exponent>;

  static Key key_of(const MonomialIdeal& ideal) {
    Key k;
    k.reserve(1 + ideal.size() * ideal.var_count());
    k.push_back(static_cast<Exponent>(ideal.var_count()));
    for (const auto& g : ideal.gens())
      k.insert(k.end(), g.exponents().begin(), g.exponents().end());
    return k;
  }

  std::optional<IntegerPolynomial> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end())
      return std::nullopt;
    return it->second;
  }

  void store(Key key, IntegerPolynomial value) {
    std::unique_lock lock(mutex_);
    map_.insert_or_assign(std::move(key), std::move(value));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, IntegerPolynomial, KeyHash> map_;
};

namespace detail {

/// Variable used to split I, or nullopt when generator supports are
/// pairwise disjoint.
inline std::optional<std::size_t> choose_pivot(const MonomialIdeal& ideal, PivotStrategy strategy) {
  std::vector<std::size_t> counts(ideal.var_count(), 0);
  for (const auto& g : ideal.gens())
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0)
        ++counts[i];
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 2)
      continue;
    if (strategy == PivotStrategy::LowestIndex)
      return i;
    if (!best || counts[i] > counts[*best])
      best = i;
  }
  return best;
}

/// I + (x_v); the result is already minimal when I is proper.
inline MonomialIdeal add_variable(const MonomialIdeal& ideal, std::size_t v) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size() + 1);
  for (const auto& g : ideal.gens())
    if (g[v] == 0)
      gens.push_back(g);
  gens.push_back(Monomial::variable(ideal.var_count(), v));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

} // namespace detail

/// Numerator K(z) of the Hilbert series H_{A/I}(z) = K(z) / (1 - z)^d.
///
/// Splits on a variable x shared by two or more generator supports using
/// the exact sequence 0 -> A/(I : x)(-1) -> A/I -> A/(I + (x)) -> 0, i.e.
/// K(I) = K(I + (x)) + z K(I : x). Both branches strictly decrease the
/// generator degree sum, so the recursion terminates.
inline IntegerPolynomial numerator_of_quotient(const MonomialIdeal& ideal, NumeratorCache* cache = nullptr,
                                               PivotStrategy strategy = PivotStrategy::MostFrequent) {
  if (ideal.is_unit())
    return {};
  if (ideal.is_zero())
    return IntegerPolynomial::one();

  auto pivot = detail::choose_pivot(ideal, strategy);
  if (!pivot) {
    auto k = IntegerPolynomial::one();
    for (const auto& g : ideal.gens())
      k = k * IntegerPolynomial::one_minus_power(g.degree());
    return k;
  }

  NumeratorCache::Key key;
  if (cache) {
    key = NumeratorCache::key_of(ideal);
    if (auto hit = cache->find(key))
      return *hit;
  }

  const auto x = Monomial::variable(ideal.var_count(), *pivot);
  auto result = numerator_of_quotient(detail::add_variable(ideal, *pivot), cache, strategy) +
                numerator_of_quotient(colon_monomial(ideal, x), cache, strategy).shifted(1);
  if (cache)
    cache->store(std::move(key), result);
  return result;
}

/// Dimension and multiplicity of a graded module from its numerator.
/// `module_dim` is empty for the zero module.
struct DimAndMult {
  std::optional<long> module_dim;
  BigInt e0;

  bool is_empty() const noexcept { return !module_dim.has_value(); }
};

/// Strips factors of (1 - z) from K; with K = (1 - z)^s h and h(1) != 0,
/// dim = d - s and e0 = h(1).
inline DimAndMult dim_and_mult(const IntegerPolynomial& numerator, std::size_t ambient_d) {
  if (numerator.is_zero())
    return {std::nullopt, BigInt(0)};
  IntegerPolynomial h = numerator;
  std::size_t s = 0;
  while (auto q = h.divided_by_one_minus_z()) {
    h = std::move(*q);
    ++s;
  }
  if (s > ambient_d)
    throw InternalInconsistency("numerator vanishes to order " + std::to_string(s) + " at z = 1 with only " +
                                std::to_string(ambient_d) + " variables");
  BigInt e0 = h.value_at_one();
  if (e0 <= 0)
    throw InternalInconsistency("non-positive multiplicity " + e0.str() + " for a nonzero module");
  return {static_cast<long>(ambient_d - s), std::move(e0)};
}

/// Hilbert series data of a graded module M with H_M = numerator / (1 - z)^d.
struct HilbertData {
  IntegerPolynomial numerator;
  std::size_t ambient_d = 0;
  std::optional<long> module_dim;
  BigInt e0;

  bool is_empty() const noexcept { return !module_dim.has_value(); }
};

inline HilbertData make_hilbert_data(IntegerPolynomial numerator, std::size_t ambient_d) {
  auto dm = dim_and_mult(numerator, ambient_d);
  return {std::move(numerator), ambient_d, dm.module_dim, std::move(dm.e0)};
}

/// Hilbert data of A/I.
inline HilbertData quotient_ring_data(const MonomialIdeal& ideal, NumeratorCache* cache = nullptr) {
  return make_hilbert_data(numerator_of_quotient(ideal, cache), ideal.var_count());
}

/// Hilbert data of outer/inner, for monomial ideals inner ⊆ outer.
inline HilbertData quotient_module_data(const MonomialIdeal& inner, const MonomialIdeal& outer,
                                        NumeratorCache* cache = nullptr) {
  require_same_ring(inner, outer);
  for (const auto& g : inner.gens())
    if (!outer.contains(g)) {
      std::string e;
      for (std::size_t i = 0; i < g.size(); ++i)
        e += (i ? "," : "") + std::to_string(g[i]);
      throw DomainError("inner ideal not contained in outer: generator (" + e + ") is missing");
    }
  auto k = numerator_of_quotient(inner, cache) - numerator_of_quotient(outer, cache);
  return make_hilbert_data(std::move(k), inner.var_count());
}

/// Number of monomials of each degree t <= bound outside I, by enumeration.
inline std::vector<BigInt> hilbert_function_oracle(const MonomialIdeal& ideal, std::size_t bound) {
  std::vector<BigInt> counts(bound + 1, BigInt(0));
  for (std::size_t t = 0; t <= bound; ++t) {
    std::size_t c = 0;
    for_each_monomial_of_degree(ideal.var_count(), t, [&](const Monomial& m) {
      if (!ideal.contains(m))
        ++c;
    });
    counts[t] = c;
  }
  return counts;
}

} // namespace sympow
