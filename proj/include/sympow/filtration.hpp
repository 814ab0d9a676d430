#pragma once

#include <cstddef>
#include <functional>
#include <future>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympow/error.hpp"
#include "sympow/hilbert.hpp"
#include "sympow/ideal.hpp"

namespace sympow {

/// I_n(J) = (I^n : J^∞); the unit ideal for n = 0.
inline MonomialIdeal symbolic_power(const MonomialIdeal& base, const MonomialIdeal& by, std::size_t n) {
  require_same_ring(base, by);
  if (base.is_zero())
    throw DomainError("symbolic power of the zero ideal");
  if (by.is_zero())
    throw DomainError("symbolic power with respect to the zero ideal");
  if (n == 0)
    return MonomialIdeal::unit(base.ring());
  return saturate_ideal(power(base, n), by);
}

/// Ladder of ordinary powers I^0, I^1, ... built incrementally.
class PowerLadder {
public:
  explicit PowerLadder(MonomialIdeal base) : base_(std::move(base)) {
    powers_.push_back(MonomialIdeal::unit(base_.ring()));
  }

  const MonomialIdeal& base() const noexcept { return base_; }

  const MonomialIdeal& operator[](std::size_t n) {
    while (powers_.size() <= n)
      powers_.push_back(multiply(powers_.back(), base_));
    return powers_[n];
  }

  /// Read-only access to an already built rung.
  const MonomialIdeal& at(std::size_t n) const { return powers_.at(n); }

private:
  MonomialIdeal base_;
  std::vector<MonomialIdeal> powers_;
};

/// A rule n -> J_n, intended to be a multiplicative filtration.
struct FiltrationProvider {
  std::string name;
  std::function<MonomialIdeal(std::size_t)> ideal_at;
};

inline FiltrationProvider symbolic_filtration(const MonomialIdeal& base, const MonomialIdeal& by) {
  auto ladder = std::make_shared<PowerLadder>(base);
  return {"symbolic", [ladder, by](std::size_t n) {
            if (n == 0)
              return MonomialIdeal::unit(by.ring());
            return saturate_ideal((*ladder)[n], by);
          }};
}

/// One point of the series f(n) = e0(I_n(J) / I^n).
struct SeriesSample {
  std::size_t n = 0;
  MonomialIdeal symbolic_ideal;
  std::optional<long> module_dim; ///< empty when W_n = 0
  BigInt f;
};

/// Samples n = 1..nmax. Powers are built sequentially; the saturations and
/// Hilbert computations for different n run concurrently.
inline std::vector<SeriesSample> sample_series(const MonomialIdeal& base, const MonomialIdeal& by, std::size_t nmax,
                                               NumeratorCache* cache = nullptr, bool parallel = true) {
  require_same_ring(base, by);
  if (nmax < 1)
    throw DomainError("nmax must be at least 1");
  if (base.is_zero() || by.is_zero())
    throw DomainError("series needs nonzero I and J");

  NumeratorCache local;
  if (!cache)
    cache = &local;

  PowerLadder ladder(base);
  for (std::size_t n = 1; n <= nmax; ++n)
    ladder[n];

  auto compute = [&](std::size_t n) {
    const auto& ordinary = ladder.at(n);
    auto symbolic = saturate_ideal(ordinary, by);
    auto data = quotient_module_data(ordinary, symbolic, cache);
    return SeriesSample{n, std::move(symbolic), data.module_dim, std::move(data.e0)};
  };

  std::vector<SeriesSample> out;
  out.reserve(nmax);
  if (!parallel) {
    for (std::size_t n = 1; n <= nmax; ++n)
      out.push_back(compute(n));
    return out;
  }
  std::vector<std::future<SeriesSample>> jobs;
  for (std::size_t n = 1; n <= nmax; ++n)
    jobs.push_back(std::async(std::launch::async, compute, n));
  for (auto& j : jobs)
    out.push_back(j.get());
  return out;
}

struct FiltrationReport {
  bool ok = true;
  std::string violation; ///< first violation found, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Checks the filtration axioms on the window 0..nmax: J_0 = A,
/// J_{n+1} ⊆ J_n, I^n ⊆ J_n and J_a J_b ⊆ J_{a+b}.
inline FiltrationReport check_filtration(const FiltrationProvider& provider, const MonomialIdeal& base,
                                         std::size_t nmax) {
  std::vector<MonomialIdeal> j;
  for (std::size_t n = 0; n <= nmax; ++n) {
    j.push_back(provider.ideal_at(n));
    require_same_ring(j.back(), base);
  }
  auto fail = [](std::string what) { return FiltrationReport{false, std::move(what)}; };

  if (!j[0].is_unit())
    return fail("J_0 is not the unit ideal");
  for (std::size_t n = 0; n < nmax; ++n)
    if (!is_subset(j[n + 1], j[n]))
      return fail("J_" + std::to_string(n + 1) + " is not contained in J_" + std::to_string(n));
  PowerLadder ladder(base);
  for (std::size_t n = 1; n <= nmax; ++n)
    if (!is_subset(ladder[n], j[n]))
      return fail("I^" + std::to_string(n) + " is not contained in J_" + std::to_string(n));
  for (std::size_t a = 1; a <= nmax; ++a)
    for (std::size_t b = a; a + b <= nmax; ++b)
      if (!is_subset(multiply(j[a], j[b]), j[a + b]))
        return fail("J_" + std::to_string(a) + " J_" + std::to_string(b) + " is not contained in J_" +
                    std::to_string(a + b));
  return {};
}

/// Eventual value of dim W_n over the longest constant suffix, with the
/// first n of that suffix. An empty `dim` means W_n = 0 on the tail.
struct DimTail {
  std::optional<long> dim;
  std::size_t onset = 0;
};

inline DimTail dim_stabilization(std::span<const std::optional<long>> dims, std::size_t first_n = 1) {
  if (dims.size() < 3)
    throw InsufficientData("need at least 3 samples to observe dimension stabilization");
  std::size_t start = dims.size() - 1;
  while (start > 0 && dims[start - 1] == dims.back())
    --start;
  if (dims.size() - start < 3)
    throw InsufficientData("constant dimension tail has only " + std::to_string(dims.size() - start) +
                           " samples");
  return {dims.back(), first_n + start};
}

inline DimTail dim_stabilization(std::span<const SeriesSample> samples) {
  std::vector<std::optional<long>> dims;
  for (const auto& s : samples)
    dims.push_back(s.module_dim);
  return dim_stabilization(dims, samples.empty() ? 1 : samples.front().n);
}

} // namespace sympow
