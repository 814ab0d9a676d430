#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/error.hpp"

namespace sympow {

/// The ambient polynomial ring K[x_1, ..., x_d]. Only the variable names
/// matter; no coefficient field is ever materialized.
class RingContext {
public:
  explicit RingContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
      throw DomainError("ring must have at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i]))
        throw DomainError("invalid variable name '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw DomainError("duplicate variable name '" + names_[i] + "'");
    }
  }

  std::size_t var_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& var_names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool operator==(const RingContext&) const = default;

  static bool is_identifier(std::string_view s) {
    if (s.empty())
      return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!std::isalpha(head) && s.front() != '_')
      return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

private:
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const RingContext>;

inline Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const RingContext>(std::move(names));
}

/// Ring x_0, ..., x_{d-1}; handy for tests and random instances.
inline Ring make_indexed_ring(std::size_t d, std::string_view prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i)
    names.push_back(std::string(prefix) + std::to_string(i));
  return make_ring(std::move(names));
}

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

} // namespace sympow
