#pragma once

// Random instances shared by the property tests and the acceptance suite.

#include <random>
#include <vector>

#include "sympow/quasipoly.hpp"

namespace sympow::gen {

/// Random rational with numerator in [-num, num] and denominator in [1, den].
inline Rational random_rational(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num);
  std::uniform_int_distribution<long> d(1, den);
  return Rational(n(rng), d(rng));
}

/// Random quasi-polynomial of the given period and degree whose leading
/// coefficient is nonzero on every residue and whose period is minimal.
inline QuasiPolynomial random_quasi_polynomial(std::mt19937_64& rng, std::size_t period, std::size_t degree,
                                               long max_den) {
  for (;;) {
    std::vector<std::vector<Rational>> table(degree + 1, std::vector<Rational>(period));
    for (auto& row : table)
      for (auto& a : row)
        a = random_rational(rng, 5, max_den);
    for (auto& a : table.back())
      while (a == 0)
        a = random_rational(rng, 5, max_den);
    QuasiPolynomial qp(period, table);
    if (qp.with_minimal_period().period() == period)
      return qp;
  }
}

inline std::vector<SequenceSample> sample(const QuasiPolynomial& qp, long first, std::size_t count) {
  std::vector<SequenceSample> out;
  for (std::size_t k = 0; k < count; ++k) {
    long n = first + static_cast<long>(k);
    out.push_back({n, evaluate(qp, n)});
  }
  return out;
}

} // namespace sympow::gen
