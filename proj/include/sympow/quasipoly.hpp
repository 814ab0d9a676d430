#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sympow/error.hpp"
#include "sympow/polynomial.hpp"

namespace sympow {

using Rational = boost::multiprecision::cpp_rational;

/// A value of an integer-indexed sequence.
struct SequenceSample {
  long n = 0;
  Rational value;
};

/// f(n) = sum_i a_i(n mod g) n^i with exact rational coefficients a_i(r),
/// valid for n >= onset. The zero function has no coefficients and no
/// degree.
class QuasiPolynomial {
public:
  /// `coeffs[i][r]` is a_i(r); every row must have `period` entries.
  /// Leading all-zero rows are dropped.
  QuasiPolynomial(std::size_t period, std::vector<std::vector<Rational>> coeffs, long onset = 0)
      : period_(period), coeffs_(std::move(coeffs)), onset_(onset) {
    if (period_ == 0)
      throw DomainError("quasi-polynomial period must be positive");
    for (const auto& row : coeffs_)
      if (row.size() != period_)
        throw DomainError("coefficient row has " + std::to_string(row.size()) + " residues, period is " +
                          std::to_string(period_));
    while (!coeffs_.empty() &&
           std::all_of(coeffs_.back().begin(), coeffs_.back().end(), [](const Rational& a) { return a == 0; }))
      coeffs_.pop_back();
    if (coeffs_.empty())
      period_ = 1;
  }

  static QuasiPolynomial zero_function(long onset = 0) { return QuasiPolynomial(1, {}, onset); }

  std::size_t period() const noexcept { return period_; }
  bool is_zero_function() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty())
      return std::nullopt;
    return coeffs_.size() - 1;
  }
  long onset() const noexcept { return onset_; }
  const std::vector<std::vector<Rational>>& coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(std::size_t i, std::size_t residue) const { return coeffs_.at(i).at(residue); }

  std::size_t residue(long n) const {
    auto g = static_cast<long>(period_);
    return static_cast<std::size_t>(((n % g) + g) % g);
  }

  /// Same period, degree and coefficient table; the onset is not compared.
  bool same_function(const QuasiPolynomial& o) const { return period_ == o.period_ && coeffs_ == o.coeffs_; }

  /// Whether the table is invariant under r -> r mod `divisor`.
  bool collapses_to(std::size_t divisor) const {
    if (divisor == 0 || period_ % divisor != 0)
      return false;
    for (const auto& row : coeffs_)
      for (std::size_t r = 0; r < period_; ++r)
        if (row[r] != row[r % divisor])
          return false;
    return true;
  }

  /// Same function with the smallest period dividing the current one.
  QuasiPolynomial with_minimal_period() const {
    for (std::size_t h = 1; h < period_; ++h) {
      if (period_ % h != 0 || !collapses_to(h))
        continue;
      std::vector<std::vector<Rational>> reduced;
      for (const auto& row : coeffs_)
        reduced.emplace_back(row.begin(), row.begin() + static_cast<long>(h));
      return QuasiPolynomial(h, std::move(reduced), onset_);
    }
    return *this;
  }

  std::string to_string() const {
    std::ostringstream os;
    if (is_zero_function()) {
      os << "zero function (onset " << onset_ << ")";
      return os.str();
    }
    os << "period " << period_ << ", degree " << *degree() << ", onset " << onset_;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      os << "\n  a" << i << " = [";
      for (std::size_t r = 0; r < period_; ++r)
        os << (r ? ", " : "") << coeffs_[i][r];
      os << ']';
    }
    return os.str();
  }

private:
  std::size_t period_;
  std::vector<std::vector<Rational>> coeffs_;
  long onset_;
};

inline Rational evaluate(const QuasiPolynomial& qp, long n) {
  Rational acc = 0;
  const auto r = qp.residue(n);
  for (std::size_t i = qp.coeffs().size(); i-- > 0;)
    acc = acc * n + qp.coeff(i, r);
  return acc;
}

/// a_i(-) takes the same value on every residue.
inline bool coeff_is_constant(const QuasiPolynomial& qp, std::size_t i) {
  if (qp.is_zero_function() || i > *qp.degree())
    throw DomainError("coefficient index " + std::to_string(i) + " out of range");
  const auto& row = qp.coeffs()[i];
  return std::all_of(row.begin(), row.end(), [&](const Rational& a) { return a == row.front(); });
}

/// Smallest delta >= -1 such that a_j(-) is constant for every j > delta.
inline long grade(const QuasiPolynomial& qp) {
  for (std::size_t i = qp.coeffs().size(); i-- > 0;)
    if (!coeff_is_constant(qp, i))
      return static_cast<long>(i);
  return -1;
}

struct FitOptions {
  std::size_t g_max = 6;
  std::size_t min_tail = 3;
};

namespace detail {

using RationalPoly = std::vector<Rational>; // ascending powers of n

inline RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty())
    return {};
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

/// Polynomial fitted to the tail of one residue class.
struct ClassFit {
  std::size_t start = 0; ///< index of the first point the fit covers
  RationalPoly poly;     ///< in n
};

/// Finds the least degree c for which the (c+1)-th finite differences
/// vanish on a suffix of at least `min_tail` entries, and interpolates the
/// corresponding suffix of `values` (taken at n = first_n + k * stride).
inline std::optional<ClassFit> fit_class(std::span<const Rational> values, long first_n, long stride,
                                         std::size_t min_tail) {
  const std::size_t len = values.size();
  if (len < min_tail + 1)
    return std::nullopt;
  std::vector<Rational> row(values.begin(), values.end());
  for (std::size_t c = 0; c + 1 + min_tail <= len; ++c) {
    // row currently holds the c-th differences; advance to the (c+1)-th.
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      row[k] = row[k + 1] - row[k];
    row.pop_back();
    std::size_t zeros = 0;
    while (zeros < row.size() && row[row.size() - 1 - zeros] == 0)
      ++zeros;
    if (zeros < min_tail)
      continue;

    const std::size_t start = len - zeros - c - 1;
    // Newton forward differences at the first covered point.
    std::vector<Rational> diff(values.begin() + static_cast<long>(start), values.end());
    std::vector<Rational> newton;
    for (std::size_t j = 0; j <= c; ++j) {
      newton.push_back(diff.front());
      for (std::size_t k = 0; k + 1 < diff.size(); ++k)
        diff[k] = diff[k + 1] - diff[k];
      diff.pop_back();
    }
    // P(n) = sum_j newton[j] * binom(t, j),  t = (n - n_start) / stride.
    const Rational n_start = first_n + static_cast<long>(start) * stride;
    RationalPoly poly(1, Rational(0));
    RationalPoly binom{Rational(1)};
    for (std::size_t j = 0; j <= c; ++j) {
      if (binom.size() > poly.size())
        poly.resize(binom.size(), Rational(0));
      for (std::size_t i = 0; i < binom.size(); ++i)
        poly[i] += newton[j] * binom[i];
      // binom(t, j+1) = binom(t, j) * (t - j) / (j + 1)
      RationalPoly factor{(-n_start / stride - Rational(static_cast<long>(j))) / (j + 1),
                          Rational(1) / (Rational(stride) * (j + 1))};
      binom = poly_mul(binom, factor);
    }
    return ClassFit{start, std::move(poly)};
  }
  return std::nullopt;
}

} // namespace detail

/// Fits the minimal-period quasi-polynomial that exactly interpolates the
/// longest suffix of a run of consecutive samples. Periods 1..g_max are
/// tried in order; a period is accepted when every residue class is a
/// polynomial on its tail with at least `min_tail` points beyond those that
/// determine it. Throws InsufficientData when no period fits.
inline QuasiPolynomial fit(std::span<const SequenceSample> samples, const FitOptions& options = {}) {
  if (options.g_max < 1)
    throw DomainError("g_max must be at least 1");
  if (options.min_tail < 2)
    throw DomainError("min_tail must be at least 2");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].n != samples[i - 1].n + 1)
      throw DomainError("samples must be at consecutive n");
  if (samples.empty())
    throw InsufficientData("no samples");

  const long n0 = samples.front().n;
  for (std::size_t g = 1; g <= options.g_max; ++g) {
    if (samples.size() < g * (options.min_tail + 1))
      break;
    std::vector<std::vector<Rational>> table;
    long onset = n0;
    bool ok = true;
    for (std::size_t offset = 0; offset < g && ok; ++offset) {
      std::vector<Rational> values;
      for (std::size_t k = offset; k < samples.size(); k += g)
        values.push_back(samples[k].value);
      const long first_n = n0 + static_cast<long>(offset);
      auto cls = detail::fit_class(values, first_n, static_cast<long>(g), options.min_tail);
      if (!cls) {
        ok = false;
        break;
      }
      if (cls->start > 0)
        onset = std::max(onset, first_n + static_cast<long>((cls->start - 1) * g) + 1);
      const auto gl = static_cast<long>(g);
      const auto residue = static_cast<std::size_t>(((first_n % gl) + gl) % gl);
      if (cls->poly.size() > table.size())
        table.resize(cls->poly.size(), std::vector<Rational>(g, Rational(0)));
      for (std::size_t i = 0; i < cls->poly.size(); ++i)
        table[i][residue] = cls->poly[i];
    }
    if (ok)
      return QuasiPolynomial(g, std::move(table), onset).with_minimal_period();
  }
  throw InsufficientData("no quasi-polynomial of period <= " + std::to_string(options.g_max) +
                         " fits the window with " + std::to_string(options.min_tail) +
                         " verification points per residue class; increase nmax");
}

inline QuasiPolynomial fit(std::span<const std::pair<long, BigInt>> samples, const FitOptions& options = {}) {
  std::vector<SequenceSample> s;
  for (const auto& [n, v] : samples)
    s.push_back({n, Rational(v)});
  return fit(s, options);
}

} // namespace sympow
