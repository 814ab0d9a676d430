#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sympow/error.hpp"

namespace sympow {

using Exponent = std::uint32_t;
using Degree = std::uint64_t;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw DomainError("exponent overflow");
  return a + b;
}

} // namespace detail

/// A monic monomial x^a, stored as its exponent vector with the total
/// degree cached.
class Monomial {
public:
  Monomial() = default;

  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    Degree d = 0;
    for (Exponent e : exps_)
      d += e;
    degree_ = d;
  }

  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial one(std::size_t var_count) {
    return Monomial(std::vector<Exponent>(var_count, 0));
  }

  static Monomial variable(std::size_t var_count, std::size_t index, Exponent power = 1) {
    std::vector<Exponent> e(var_count, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Degree degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Indices of the variables with a positive exponent.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0)
        s.push_back(i);
    return s;
  }

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

private:
  std::vector<Exponent> exps_;
  Degree degree_ = 0;
};

inline void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("monomials have " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " exponents");
}

/// True iff a divides b, i.e. every exponent of a is at most that of b.
inline bool divides(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  if (a.degree() > b.degree())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    e[i] = detail::checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

/// u / gcd(u, m): the generator of (u) : m.
inline Monomial colon_quotient(const Monomial& u, const Monomial& m) {
  require_same_size(u, m);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    e[i] = u[i] > m[i] ? u[i] - m[i] : 0;
  return Monomial(std::move(e));
}

/// Graded lexicographic order: lower total degree first; within a degree,
/// x_0 > x_1 > ... so x^2 precedes xy precedes y^2.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    auto ea = a.exponents();
    auto eb = b.exponents();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                        std::greater<Exponent>{});
  }
};

/// Calls visit(m) for every monomial of total degree exactly `degree` in
/// `var_count` variables.
template <class Visitor>
void for_each_monomial_of_degree(std::size_t var_count, Degree degree, Visitor&& visit) {
  if (var_count == 0)
    return;
  std::vector<Exponent> e(var_count, 0);
  // Recursive composition enumeration, last variable takes the remainder.
  auto rec = [&](auto&& self, std::size_t pos, Degree left) -> void {
    if (pos + 1 == var_count) {
      e[pos] = static_cast<Exponent>(left);
      visit(Monomial(e));
      return;
    }
    for (Degree k = left + 1; k-- > 0;) {
      e[pos] = static_cast<Exponent>(k);
      self(self, pos + 1, left - k);
    }
    e[pos] = 0;
  };
  rec(rec, 0, degree);
}

} // namespace sympow
