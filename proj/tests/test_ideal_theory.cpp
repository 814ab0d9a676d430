#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sympow/hilbert.hpp"
#include "sympow/ideal_theory.hpp"
#include "sympow/io.hpp"

using namespace sympow;

namespace {

// Inclusion-minimal covers found by scanning all 2^d variable subsets.
std::vector<VariableSubset> brute_minimal_primes(const MonomialIdeal& ideal) {
  const auto d = ideal.var_count();
  std::vector<unsigned> covers;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    bool ok = true;
    for (const auto& g : ideal.gens()) {
      bool hit = false;
      for (std::size_t i = 0; i < d; ++i)
        hit = hit || ((mask >> i) & 1u && g[i] > 0);
      ok = ok && hit;
    }
    if (ok)
      covers.push_back(mask);
  }
  std::vector<VariableSubset> out;
  for (auto c : covers) {
    bool minimal = true;
    for (auto o : covers)
      minimal = minimal && !(o != c && (o & c) == o);
    if (!minimal)
      continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < d; ++i)
      if ((c >> i) & 1u)
        members.push_back(i);
    out.emplace_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(MinimalPrimes, Triangle) {
  auto ring = make_ring({"x", "y", "z"});
  auto i = parse_ideal("x*y, y*z, z*x", ring);
  auto primes = minimal_primes(i);
  std::vector<VariableSubset> expected{VariableSubset({0, 1}), VariableSubset({0, 2}), VariableSubset({1, 2})};
  EXPECT_EQ(primes, expected);
  EXPECT_EQ(primes, brute_minimal_primes(i));
  EXPECT_EQ(height(i), 2u);
  EXPECT_EQ(dim_quotient(i), 1u);
}

TEST(MinimalPrimes, SmallCases) {
  auto ring = make_ring({"x", "y"});
  EXPECT_EQ(minimal_primes(parse_ideal("x", ring)), std::vector<VariableSubset>{VariableSubset({0})});
  auto p = minimal_primes(parse_ideal("x^2*y^3", ring));
  EXPECT_EQ(p, (std::vector<VariableSubset>{VariableSubset({0}), VariableSubset({1})}));
  EXPECT_EQ(height(parse_ideal("x, y", ring)), 2u);
  EXPECT_EQ(height(parse_ideal("x^2*y^3", ring)), 1u);
}

TEST(MinimalPrimes, RejectsZeroAndUnit) {
  auto ring = make_ring({"x", "y"});
  EXPECT_THROW(minimal_primes(MonomialIdeal::zero(ring)), DomainError);
  EXPECT_THROW(minimal_primes(MonomialIdeal::unit(ring)), DomainError);
  EXPECT_THROW(height(MonomialIdeal::unit(ring)), DomainError);
  EXPECT_THROW(dim_quotient(MonomialIdeal::zero(ring)), DomainError);
}

TEST(VariableSubset, Deduplicates) {
  VariableSubset s({3, 1, 3, 0});
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
}

TEST(MinimalPrimesProperties, MatchBruteForceAndAreMinimalCovers) {
  std::mt19937_64 rng(21);
  for (std::size_t d = 2; d <= 6; ++d) {
    auto ring = make_indexed_ring(d);
    for (int trial = 0; trial < 25; ++trial) {
      MonomialIdeal i(ring, oracle::to_monomials(oracle::random_gens(rng, d, 2, 6)));
      auto primes = minimal_primes(i);
      ASSERT_EQ(primes, brute_minimal_primes(i));
      for (const auto& p : primes) {
        for (const auto& g : i.gens())
          ASSERT_TRUE(p.hits(g));
        for (auto drop : p.members()) {
          std::vector<std::size_t> smaller;
          for (auto v : p.members())
            if (v != drop)
              smaller.push_back(v);
          VariableSubset q(smaller);
          ASSERT_FALSE(std::all_of(i.gens().begin(), i.gens().end(), [&](const Monomial& g) { return q.hits(g); }));
        }
      }
    }
  }
}

TEST(MinimalPrimesProperties, DimensionAgreesWithHilbertSeries) {
  std::mt19937_64 rng(22);
  for (std::size_t d = 1; d <= 5; ++d) {
    auto ring = make_indexed_ring(d);
    for (int trial = 0; trial < 25; ++trial) {
      MonomialIdeal i(ring, oracle::to_monomials(oracle::random_gens(rng, d, 3, 5)));
      auto h = quotient_ring_data(i);
      ASSERT_TRUE(h.module_dim.has_value());
      ASSERT_EQ(static_cast<std::size_t>(*h.module_dim), dim_quotient(i));
    }
  }
}
