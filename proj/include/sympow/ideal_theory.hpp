#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/ideal.hpp"

namespace sympow {

/// A set of variable indices; stands for the monomial prime it generates.
class VariableSubset {
public:
  VariableSubset() = default;
  explicit VariableSubset(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t i) const { return std::binary_search(members_.begin(), members_.end(), i); }

  bool is_subset_of(const VariableSubset& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  /// True iff the subset meets supp(m).
  bool hits(const Monomial& m) const {
    return std::any_of(members_.begin(), members_.end(), [&](std::size_t i) { return m[i] > 0; });
  }

  auto operator<=>(const VariableSubset&) const = default;

private:
  std::vector<std::size_t> members_;
};

namespace detail {

inline void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw DomainError("the zero ideal has no monomial minimal primes");
  if (ideal.is_unit())
    throw DomainError("the unit ideal has no minimal primes");
}

} // namespace detail

/// Minimal primes of a monomial ideal: the inclusion-minimal variable sets
/// meeting the support of every minimal generator.
inline std::vector<VariableSubset> minimal_primes(const MonomialIdeal& ideal) {
  detail::require_proper_nonzero(ideal);
  const auto& gens = ideal.gens();
  std::vector<std::vector<std::size_t>> covers;
  std::vector<std::size_t> chosen;
  std::vector<bool> in_cover(ideal.var_count(), false);

  // Branch on the variables of the first generator not yet hit.
  auto search = [&](auto&& self) -> void {
    auto open = std::find_if(gens.begin(), gens.end(), [&](const Monomial& g) {
      return std::none_of(chosen.begin(), chosen.end(), [&](std::size_t i) { return g[i] > 0; });
    });
    if (open == gens.end()) {
      auto c = chosen;
      std::sort(c.begin(), c.end());
      covers.push_back(std::move(c));
      return;
    }
    for (auto v : open->support()) {
      if (in_cover[v])
        continue;
      in_cover[v] = true;
      chosen.push_back(v);
      self(self);
      chosen.pop_back();
      in_cover[v] = false;
    }
  };
  search(search);

  std::vector<VariableSubset> subsets;
  for (auto& c : covers)
    subsets.emplace_back(std::move(c));
  std::sort(subsets.begin(), subsets.end());
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());

  std::vector<VariableSubset> minimal;
  for (const auto& s : subsets) {
    bool dominated = std::any_of(subsets.begin(), subsets.end(), [&](const VariableSubset& t) {
      return t.size() < s.size() && t.is_subset_of(s);
    });
    if (!dominated)
      minimal.push_back(s);
  }
  return minimal;
}

inline std::size_t height(const MonomialIdeal& ideal) {
  auto primes = minimal_primes(ideal);
  std::size_t h = ideal.var_count();
  for (const auto& p : primes)
    h = std::min(h, p.size());
  return h;
}

/// Krull dimension of A/I.
inline std::size_t dim_quotient(const MonomialIdeal& ideal) { return ideal.var_count() - height(ideal); }

} // namespace sympow
