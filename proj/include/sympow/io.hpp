#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sympow/error.hpp"
#include "sympow/ideal.hpp"
#include "sympow/ring.hpp"

namespace sympow {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  return out;
}

inline Exponent parse_exponent(std::string_view digits, std::string_view context) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("malformed exponent '" + std::string(digits) + "' in '" + std::string(context) + "'");
  unsigned long long v = 0;
  for (char c : digits) {
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > std::numeric_limits<Exponent>::max())
      throw ParseError("exponent too large in '" + std::string(context) + "'");
  }
  return static_cast<Exponent>(v);
}

} // namespace detail

/// Parses a product of variable powers such as `x^2*y` or `1`.
/// Whitespace is ignored; repeated factors multiply.
inline Monomial parse_monomial(std::string_view text, const RingContext& ring) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty())
    throw ParseError("empty monomial");
  std::vector<Exponent> e(ring.var_count(), 0);
  for (auto factor : detail::split(s, '*')) {
    if (factor.empty())
      throw ParseError("empty factor in '" + s + "'");
    if (factor == "1")
      continue;
    auto caret = factor.find('^');
    auto name = factor.substr(0, caret);
    Exponent power = 1;
    if (caret != std::string_view::npos)
      power = detail::parse_exponent(factor.substr(caret + 1), s);
    auto idx = ring.index_of(name);
    if (!idx)
      throw ParseError("unknown variable '" + std::string(name) + "' in '" + s + "'");
    e[*idx] = detail::checked_add(e[*idx], power);
  }
  return Monomial(std::move(e));
}

/// Comma-separated list of monomials; at least one generator required.
inline MonomialIdeal parse_ideal(std::string_view text, const Ring& ring) {
  if (detail::trim(text).empty())
    throw ParseError("ideal needs at least one generator");
  std::vector<Monomial> gens;
  for (auto part : detail::split(text, ','))
    gens.push_back(parse_monomial(part, *ring));
  return MonomialIdeal(ring, std::move(gens));
}

inline std::string to_string(const Monomial& m, const RingContext& ring) {
  if (m.size() != ring.var_count())
    throw DimensionMismatch("monomial does not belong to the ring");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += ring.name(i);
    if (m[i] > 1)
      out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Generators joined by ", "; the zero ideal prints as "0".
inline std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    return "0";
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty())
      out += ", ";
    out += to_string(g, *ideal.ring());
  }
  return out;
}

/// Contents of an ideal file:
///
///     ring x y z
///     I: x*y, y*z, z*x
///     J: x*y*z
///
/// `#` starts a comment. The J line may be omitted.
struct IdealSpec {
  std::string name;
  Ring ring;
  MonomialIdeal base;
  std::optional<MonomialIdeal> by;

  const MonomialIdeal& require_by() const {
    if (!by)
      throw ParseError("ideal file " + (name.empty() ? std::string() : "'" + name + "' ") + "has no J line");
    return *by;
  }
};

inline IdealSpec parse_ideal_spec(std::string_view text, std::string name = {}) {
  Ring ring;
  std::optional<MonomialIdeal> base, by;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty())
      continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    try {
      if (line.starts_with("ring") && (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
        if (ring)
          throw ParseError("duplicate ring declaration");
        std::vector<std::string> names;
        std::istringstream ns{std::string(line.substr(4))};
        for (std::string v; ns >> v;)
          names.push_back(v);
        ring = make_ring(std::move(names));
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("expected 'ring ...', 'I: ...' or 'J: ...'");
      auto label = detail::trim(line.substr(0, colon));
      if (!ring)
        throw ParseError("ideal given before the ring declaration");
      auto& slot = label == "I" ? base : label == "J" ? by : throw ParseError("unknown block '" + std::string(label) + "'");
      if (slot)
        throw ParseError("duplicate block '" + std::string(label) + "'");
      slot = parse_ideal(line.substr(colon + 1), ring);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    } catch (const DomainError& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!ring)
    throw ParseError("missing ring declaration");
  if (!base)
    throw ParseError("missing 'I:' block");
  return IdealSpec{std::move(name), std::move(ring), std::move(*base), std::move(by)};
}

/// Canonical text form; parse_ideal_spec(serialize_ideal_spec(s)) == s.
inline std::string serialize_ideal_spec(const IdealSpec& spec) {
  std::string out = "ring";
  for (const auto& v : spec.ring->var_names())
    out += ' ' + v;
  out += "\nI: " + to_string(spec.base) + '\n';
  if (spec.by)
    out += "J: " + to_string(*spec.by) + '\n';
  return out;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline IdealSpec read_ideal_spec(const std::filesystem::path& path) {
  return parse_ideal_spec(read_text_file(path), path.stem().string());
}

/// A named (I, J) pair with optional expected hypothesis values.
struct CorpusEntry {
  IdealSpec spec;
  std::optional<std::size_t> expected_height;
  std::optional<bool> expected_equigenerated;
  std::string note;
  std::optional<std::size_t> nmax; ///< per-entry override of the sampling window
};

/// Corpus file:
///
///     {"entries": [{"name": "triangle", "ring": ["x","y","z"],
///                   "I": ["x*y","y*z","z*x"], "J": ["x","y","z"],
///                   "expected": {"height": 2, "equigenerated": true}}]}
inline std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("corpus must be an object with an 'entries' array");

  auto join = [](const nlohmann::json& list, const std::string& what) {
    if (!list.is_array() || list.empty())
      throw ParseError("'" + what + "' must be a non-empty array of monomials");
    std::string s;
    for (const auto& m : list) {
      if (!m.is_string())
        throw ParseError("'" + what + "' entries must be strings");
      s += (s.empty() ? "" : ",") + m.get<std::string>();
    }
    return s;
  };

  std::vector<CorpusEntry> out;
  for (const auto& e : doc["entries"]) {
    try {
      if (!e.is_object())
        throw ParseError("entry is not an object");
      auto name = e.value("name", std::string());
      if (name.empty())
        throw ParseError("entry without a name");
      try {
        if (!e.contains("ring") || !e["ring"].is_array())
          throw ParseError("'ring' must be an array of variable names");
        auto ring = make_ring(e["ring"].get<std::vector<std::string>>());
        CorpusEntry entry{IdealSpec{name, ring, parse_ideal(join(e.value("I", nlohmann::json()), "I"), ring),
                                    parse_ideal(join(e.value("J", nlohmann::json()), "J"), ring)},
                          std::nullopt, std::nullopt, e.value("note", std::string()), std::nullopt};
        if (e.contains("nmax"))
          entry.nmax = e["nmax"].get<std::size_t>();
        if (auto x = e.find("expected"); x != e.end()) {
          if (x->contains("height"))
            entry.expected_height = (*x)["height"].get<std::size_t>();
          if (x->contains("equigenerated"))
            entry.expected_equigenerated = (*x)["equigenerated"].get<bool>();
        }
        out.push_back(std::move(entry));
      } catch (const Error& err) {
        throw ParseError("entry '" + name + "': " + err.what());
      }
    } catch (const nlohmann::json::exception& err) {
      throw ParseError(std::string("malformed corpus entry: ") + err.what());
    }
  }
  return out;
}

inline std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_text_file(path));
}

} // namespace sympow
