#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sympow {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with exact integer coefficients, indexed by
/// degree. Trailing zeros are trimmed; the zero polynomial is empty.
class IntegerPolynomial {
public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntegerPolynomial(std::initializer_list<long long> coeffs) {
    for (auto c : coeffs)
      coeffs_.emplace_back(c);
    trim();
  }

  static IntegerPolynomial one() { return IntegerPolynomial({1}); }

  /// c z^k
  static IntegerPolynomial term(BigInt c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntegerPolynomial(std::move(v));
  }

  /// 1 - z^k
  static IntegerPolynomial one_minus_power(std::size_t k) {
    if (k == 0)
      return {};
    std::vector<BigInt> v(k + 1);
    v[0] = 1;
    v[k] = -1;
    return IntegerPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt value_at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_)
      s += c;
    return s;
  }

  /// Multiplication by z^k.
  IntegerPolynomial shifted(std::size_t k) const {
    if (is_zero())
      return {};
    std::vector<BigInt> v(k, BigInt(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntegerPolynomial(std::move(v));
  }

  /// Exact quotient by (1 - z), or nullopt when z = 1 is not a root.
  std::optional<IntegerPolynomial> divided_by_one_minus_z() const {
    if (is_zero())
      return IntegerPolynomial{};
    // K = (1 - z) h  =>  h_i = K_i + h_{i-1}, and h_deg(K) must vanish.
    std::vector<BigInt> h(coeffs_.size());
    BigInt running = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      running += coeffs_[i];
      h[i] = running;
    }
    if (h.back() != 0)
      return std::nullopt;
    h.pop_back();
    return IntegerPolynomial(std::move(h));
  }

  /// Coefficients of K(z) / (1 - z)^power up to degree `bound`.
  std::vector<BigInt> series_expansion(std::size_t power, std::size_t bound) const {
    std::vector<BigInt> s(bound + 1, BigInt(0));
    for (std::size_t i = 0; i <= bound && i < coeffs_.size(); ++i)
      s[i] = coeffs_[i];
    for (std::size_t p = 0; p < power; ++p)
      for (std::size_t i = 1; i <= bound; ++i)
        s[i] += s[i - 1];
    return s;
  }

  IntegerPolynomial& operator+=(const IntegerPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  IntegerPolynomial& operator-=(const IntegerPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }

  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntegerPolynomial(std::move(v));
  }

  bool operator==(const IntegerPolynomial&) const = default;

  /// Human-readable form, ascending degree, e.g. "1 - 3z^2 + 2z^3".
  std::string to_string(const std::string& var = "z") const {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const auto& c = coeffs_[i];
      if (c == 0)
        continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (i == 0 || mag != 1)
        os << mag;
      if (i >= 1)
        os << var;
      if (i >= 2)
        os << '^' << i;
    }
    return os.str();
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

} // namespace sympow
