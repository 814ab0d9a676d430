#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sympow/error.hpp"
#include "sympow/filtration.hpp"
#include "sympow/hilbert.hpp"
#include "sympow/ideal_theory.hpp"
#include "sympow/io.hpp"
#include "sympow/quasipoly.hpp"

namespace sympow {

struct RunOptions {
  std::size_t nmax = 12;
  FitOptions fit;
};

enum class ReportFormat { Table, Csv, Json };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "table")
    return ReportFormat::Table;
  if (s == "csv")
    return ReportFormat::Csv;
  if (s == "json")
    return ReportFormat::Json;
  throw ParseError("unknown format '" + std::string(s) + "' (expected table, csv or json)");
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string dim_string(const std::optional<long>& dim) { return dim ? std::to_string(*dim) : "empty"; }

inline std::vector<SeriesSample> run_series(const IdealSpec& spec, std::size_t nmax, NumeratorCache* cache = nullptr) {
  return sample_series(spec.base, spec.require_by(), nmax, cache);
}

inline std::vector<SequenceSample> to_sequence(const std::vector<SeriesSample>& samples) {
  std::vector<SequenceSample> seq;
  for (const auto& s : samples)
    seq.push_back({static_cast<long>(s.n), Rational(s.f)});
  return seq;
}

struct FitOutcome {
  std::vector<SeriesSample> samples;
  std::optional<QuasiPolynomial> qp;
  std::string failure; ///< reason when qp is empty
};

inline FitOutcome run_fit(const IdealSpec& spec, const RunOptions& options, NumeratorCache* cache = nullptr) {
  FitOutcome out{run_series(spec, options.nmax, cache), std::nullopt, {}};
  try {
    out.qp = fit(to_sequence(out.samples), options.fit);
  } catch (const InsufficientData& e) {
    out.failure = e.what();
  }
  return out;
}

enum class Verdict { Consistent, HypothesisNotMet, InsufficientData, Inconsistent };

inline std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Consistent:
    return "consistent-with-theorem";
  case Verdict::HypothesisNotMet:
    return "hypothesis-not-met";
  case Verdict::InsufficientData:
    return "insufficient-data";
  case Verdict::Inconsistent:
    return "inconsistent";
  }
  return "?";
}

/// One corpus entry checked against the stabilization results: the leading
/// coefficient a_c is a positive constant for every entry, and a_{c-1} is
/// constant when I is equigenerated of height >= 2.
struct VerifyRecord {
  std::string name;
  bool equigenerated = false;
  std::size_t height = 0;
  bool height_ok = false;

  bool dim_stable = false;
  std::optional<long> dim_tail;
  std::size_t dim_onset = 0;

  std::optional<QuasiPolynomial> qp;
  Rational a_c;
  bool a_c_const = false;
  bool a_c_positive = false;
  bool a_c1_const = false;
  long grade = -1;

  Verdict verdict = Verdict::InsufficientData;
  std::string note;

  bool hypotheses_hold() const noexcept { return equigenerated && height_ok; }
};

inline VerifyRecord verify_entry(const CorpusEntry& entry, const RunOptions& options) {
  const auto& spec = entry.spec;
  VerifyRecord rec;
  rec.name = spec.name;
  rec.equigenerated = is_equigenerated(spec.base);
  rec.height = height(spec.base);
  rec.height_ok = rec.height >= 2;

  std::vector<std::string> notes;
  bool mismatch = false;
  if (entry.expected_height && *entry.expected_height != rec.height) {
    mismatch = true;
    notes.push_back("expected height " + std::to_string(*entry.expected_height));
  }
  if (entry.expected_equigenerated && *entry.expected_equigenerated != rec.equigenerated) {
    mismatch = true;
    notes.push_back(std::string("expected equigenerated ") + (*entry.expected_equigenerated ? "true" : "false"));
  }

  auto effective = options;
  if (entry.nmax)
    effective.nmax = *entry.nmax;
  auto outcome = run_fit(spec, effective);
  try {
    auto tail = dim_stabilization(outcome.samples);
    rec.dim_stable = true;
    rec.dim_tail = tail.dim;
    rec.dim_onset = tail.onset;
  } catch (const InsufficientData& e) {
    notes.push_back(e.what());
  }
  rec.qp = outcome.qp;
  if (!outcome.failure.empty())
    notes.push_back(outcome.failure);

  auto join_notes = [&] {
    std::string s;
    for (const auto& n : notes)
      s += (s.empty() ? "" : "; ") + n;
    return s;
  };

  if (!rec.qp || !rec.dim_stable) {
    rec.verdict = Verdict::InsufficientData;
    rec.note = join_notes();
    return rec;
  }

  const auto& qp = *rec.qp;
  if (qp.is_zero_function()) {
    rec.a_c = 0;
    rec.a_c_const = rec.a_c_positive = rec.a_c1_const = true;
    rec.grade = -1;
    notes.push_back("zero function; coefficient checks hold vacuously");
  } else {
    const auto c = *qp.degree();
    rec.a_c_const = coeff_is_constant(qp, c);
    rec.a_c = qp.coeff(c, 0);
    rec.a_c_positive = true;
    for (std::size_t r = 0; r < qp.period(); ++r)
      rec.a_c_positive = rec.a_c_positive && qp.coeff(c, r) > 0;
    rec.a_c1_const = c == 0 || coeff_is_constant(qp, c - 1);
    rec.grade = sympow::grade(qp);
  }

  if (mismatch) {
    rec.verdict = Verdict::Inconsistent;
  } else if (!rec.a_c_const || !rec.a_c_positive) {
    rec.verdict = Verdict::Inconsistent;
    notes.push_back("leading coefficient is not a positive constant");
  } else if (!rec.hypotheses_hold()) {
    rec.verdict = Verdict::HypothesisNotMet;
  } else if (!rec.a_c1_const) {
    rec.verdict = Verdict::Inconsistent;
    notes.push_back("a_{c-1} is not constant although the hypotheses hold");
  } else {
    rec.verdict = Verdict::Consistent;
  }
  rec.note = join_notes();
  return rec;
}

/// Runs every entry in input order.
inline std::vector<VerifyRecord> run_verify(const std::vector<CorpusEntry>& corpus, const RunOptions& options) {
  std::vector<VerifyRecord> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus)
    out.push_back(verify_entry(e, options));
  return out;
}

/// 3 when any entry contradicts a proved statement (an engine bug), 2 when
/// some entry lacked data, 0 otherwise.
inline int exit_code(const std::vector<VerifyRecord>& records) {
  bool insufficient = false;
  for (const auto& r : records) {
    if (r.verdict == Verdict::Inconsistent)
      return 3;
    insufficient = insufficient || r.verdict == Verdict::InsufficientData;
  }
  return insufficient ? 2 : 0;
}

namespace detail {

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string format_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i)
    width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i + 1 < r.size())
        os << std::left << std::setw(static_cast<int>(width[i])) << r[i] << "  ";
      else
        os << r[i] << '\n';
    }
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width)
    rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows)
    line(r);
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + '"';
}

inline std::string format_csv(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
      os << csv_field(r[i]) << (i + 1 < r.size() ? "," : "\n");
  };
  line(header);
  for (const auto& r : rows)
    line(r);
  return os.str();
}

inline nlohmann::json qp_json(const QuasiPolynomial& qp) {
  nlohmann::json j;
  j["period"] = qp.period();
  j["onset"] = qp.onset();
  if (qp.is_zero_function()) {
    j["degree"] = "zero";
    j["coeffs"] = nlohmann::json::array();
    return j;
  }
  j["degree"] = *qp.degree();
  auto rows = nlohmann::json::array();
  for (const auto& row : qp.coeffs()) {
    auto r = nlohmann::json::array();
    for (const auto& a : row)
      r.push_back(to_string(a));
    rows.push_back(r);
  }
  j["coeffs"] = rows;
  j["grade"] = grade(qp);
  return j;
}

} // namespace detail

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols{"name", "equigenerated", "height", "dim_tail", "g",     "c",
                                             "a_c",  "a_c_const",     "a_c1_const", "grade", "verdict"};
  return cols;
}

inline std::vector<std::string> report_row(const VerifyRecord& r) {
  using detail::bool_str;
  const bool fitted = r.qp.has_value();
  const bool zero = fitted && r.qp->is_zero_function();
  return {r.name,
          bool_str(r.equigenerated),
          std::to_string(r.height),
          r.dim_stable ? dim_string(r.dim_tail) : "NA",
          fitted ? std::to_string(r.qp->period()) : "NA",
          fitted ? (zero ? "zero" : std::to_string(*r.qp->degree())) : "NA",
          fitted ? to_string(r.a_c) : "NA",
          fitted ? bool_str(r.a_c_const) : "NA",
          fitted ? bool_str(r.a_c1_const) : "NA",
          fitted ? std::to_string(r.grade) : "NA",
          to_string(r.verdict)};
}

inline std::string format_report(const std::vector<VerifyRecord>& records, ReportFormat format) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records)
    rows.push_back(report_row(r));
  switch (format) {
  case ReportFormat::Csv:
    return detail::format_csv(report_columns(), rows);
  case ReportFormat::Table: {
    auto out = detail::format_table(report_columns(), rows);
    for (const auto& r : records)
      if (!r.note.empty())
        out += r.name + ": " + r.note + '\n';
    return out;
  }
  case ReportFormat::Json: {
    auto arr = nlohmann::json::array();
    for (const auto& r : records) {
      nlohmann::json j;
      j["name"] = r.name;
      j["hypotheses"] = {{"equigenerated", r.equigenerated}, {"height", r.height}, {"height_ok", r.height_ok}};
      nlohmann::json obs;
      obs["dim_tail"] = r.dim_stable ? nlohmann::json(dim_string(r.dim_tail)) : nlohmann::json(nullptr);
      obs["onset"] = r.dim_stable ? nlohmann::json(r.dim_onset) : nlohmann::json(nullptr);
      if (r.qp) {
        obs["quasi_polynomial"] = detail::qp_json(*r.qp);
        obs["a_c"] = to_string(r.a_c);
        obs["a_c_constant"] = r.a_c_const;
        obs["a_c_positive"] = r.a_c_positive;
        obs["a_c1_constant"] = r.a_c1_const;
        obs["grade"] = r.grade;
      } else {
        obs["quasi_polynomial"] = nullptr;
      }
      j["observations"] = obs;
      j["verdict"] = to_string(r.verdict);
      j["note"] = r.note;
      arr.push_back(j);
    }
    return nlohmann::json{{"entries", arr}}.dump(2) + '\n';
  }
  }
  return {};
}

inline std::string format_series(const std::vector<SeriesSample>& samples, ReportFormat format) {
  const std::vector<std::string> header{"n", "f", "dim", "symbolic_gens"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : samples)
    rows.push_back({std::to_string(s.n), s.f.str(), dim_string(s.module_dim), std::to_string(s.symbolic_ideal.size())});
  switch (format) {
  case ReportFormat::Csv:
    return detail::format_csv(header, rows);
  case ReportFormat::Table:
    return detail::format_table(header, rows);
  case ReportFormat::Json: {
    auto arr = nlohmann::json::array();
    for (const auto& s : samples)
      arr.push_back({{"n", s.n},
                     {"f", s.f.str()},
                     {"dim", s.module_dim ? nlohmann::json(*s.module_dim) : nlohmann::json(nullptr)},
                     {"symbolic_gens", s.symbolic_ideal.size()}});
    return nlohmann::json{{"series", arr}}.dump(2) + '\n';
  }
  }
  return {};
}

inline std::string format_fit(const FitOutcome& outcome, ReportFormat format) {
  if (format == ReportFormat::Json) {
    auto j = nlohmann::json::parse(format_series(outcome.samples, ReportFormat::Json));
    j["quasi_polynomial"] = outcome.qp ? detail::qp_json(*outcome.qp) : nlohmann::json(nullptr);
    if (!outcome.qp)
      j["failure"] = outcome.failure;
    return j.dump(2) + '\n';
  }
  auto out = format_series(outcome.samples, format);
  if (format == ReportFormat::Csv)
    return out;
  if (outcome.qp)
    out += "\nquasi-polynomial: " + outcome.qp->to_string() + "\ngrade: " + std::to_string(grade(*outcome.qp)) + '\n';
  else
    out += "\nfit failed: " + outcome.failure + '\n';
  return out;
}

} // namespace sympow
