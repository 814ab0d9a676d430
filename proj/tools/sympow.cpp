// Command-line front end: ideal arithmetic, series sampling, quasi-polynomial
// fitting and corpus verification.
//
// Exit codes: 0 success, 1 usage or parse error, 2 insufficient data,
// 3 internal inconsistency.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sympow/filtration.hpp"
#include "sympow/harness.hpp"
#include "sympow/hilbert.hpp"
#include "sympow/ideal.hpp"
#include "sympow/ideal_theory.hpp"
#include "sympow/io.hpp"

namespace {

using namespace sympow;

constexpr int kUsage = 1;
constexpr int kInsufficient = 2;
constexpr int kInconsistent = 3;

struct Args {
  std::string file;
  std::size_t n = 2;
  std::size_t nmax = 12;
  std::size_t gmax = 6;
  std::size_t min_tail = 3;
  std::string format = "table";
  std::string out;
};

void emit(const Args& args, const std::string& text) {
  if (args.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(args.out);
  if (!f)
    throw ParseError("cannot write '" + args.out + "'");
  f << text;
}

RunOptions run_options(const Args& a) { return {a.nmax, FitOptions{a.gmax, a.min_tail}}; }

std::string describe(const std::string& label, const MonomialIdeal& ideal) {
  std::string out = label + ": " + to_string(ideal) + "\n  generators: " + std::to_string(ideal.size()) +
                    "\n  equigenerated: " + (is_equigenerated(ideal) ? "true" : "false") + '\n';
  if (!ideal.is_zero() && !ideal.is_unit()) {
    out += "  height: " + std::to_string(height(ideal)) + "\n  minimal primes:";
    for (const auto& p : minimal_primes(ideal)) {
      out += " (";
      for (std::size_t i = 0; i < p.members().size(); ++i)
        out += (i ? "," : "") + ideal.ring()->name(p.members()[i]);
      out += ')';
    }
    out += '\n';
  }
  return out;
}

std::string hilbert_text(const HilbertData& h) {
  return "numerator: " + h.numerator.to_string() + "\ndenominator: (1 - z)^" + std::to_string(h.ambient_d) +
         "\ndim: " + dim_string(h.module_dim) + "\ne0: " + h.e0.str() + '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Symbolic powers of monomial ideals and their multiplicity quasi-polynomials"};
  app.require_subcommand(1);
  Args args;

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", args.file, "ideal file")->required()->check(CLI::ExistingFile);
    return cmd;
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", args.out, "write output to this file");
  };
  auto add_fit = [&](CLI::App* cmd) {
    cmd->add_option("--nmax", args.nmax, "largest n sampled")->check(CLI::PositiveNumber);
    cmd->add_option("--gmax", args.gmax, "largest period tried")->check(CLI::PositiveNumber);
    cmd->add_option("--min-tail", args.min_tail, "verification points per residue class")
        ->check(CLI::Range(2, 1000));
  };

  auto* show = file_cmd("show", "print the ideals of a file with basic invariants");
  auto* pow = file_cmd("power", "print I^n");
  pow->add_option("-n,--n", args.n, "exponent");
  auto* colon = file_cmd("colon", "print (I : J)");
  auto* sat = file_cmd("saturate", "print (I : J^inf)");
  auto* hil = file_cmd("hilbert", "Hilbert series data of A/I");
  auto* sym = file_cmd("symbolic", "print I_n(J) = (I^n : J^inf)");
  sym->add_option("-n,--n", args.n, "exponent");

  auto* series = file_cmd("series", "sample f(n) = e0(I_n(J)/I^n) for n = 1..nmax");
  series->add_option("--nmax", args.nmax, "largest n sampled")->check(CLI::PositiveNumber);
  add_format(series);
  auto* fitc = file_cmd("fit", "sample f(n) and fit a quasi-polynomial");
  add_fit(fitc);
  add_format(fitc);

  auto* verify = app.add_subcommand("verify", "check the stabilization statements on a JSON corpus");
  verify->add_option("corpus", args.file, "corpus file")->required()->check(CLI::ExistingFile);
  add_fit(verify);
  add_format(verify);

  for (auto* cmd : {show, pow, colon, sat, hil, sym})
    cmd->add_option("--out", args.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (verify->parsed()) {
      auto records = run_verify(read_corpus(args.file), run_options(args));
      emit(args, format_report(records, parse_report_format(args.format)));
      return exit_code(records);
    }

    auto spec = read_ideal_spec(args.file);
    if (show->parsed()) {
      std::string text = "ring:";
      for (const auto& v : spec.ring->var_names())
        text += ' ' + v;
      text += '\n' + describe("I", spec.base);
      if (spec.by)
        text += describe("J", *spec.by);
      emit(args, text);
    } else if (pow->parsed()) {
      emit(args, to_string(power(spec.base, args.n)) + '\n');
    } else if (colon->parsed()) {
      emit(args, to_string(colon_ideal(spec.base, spec.require_by())) + '\n');
    } else if (sat->parsed()) {
      emit(args, to_string(saturate_ideal(spec.base, spec.require_by())) + '\n');
    } else if (hil->parsed()) {
      emit(args, hilbert_text(quotient_ring_data(spec.base)));
    } else if (sym->parsed()) {
      emit(args, to_string(symbolic_power(spec.base, spec.require_by(), args.n)) + '\n');
    } else if (series->parsed()) {
      emit(args, format_series(run_series(spec, args.nmax), parse_report_format(args.format)));
    } else if (fitc->parsed()) {
      auto outcome = run_fit(spec, run_options(args));
      emit(args, format_fit(outcome, parse_report_format(args.format)));
      if (!outcome.qp)
        return kInsufficient;
    }
    return 0;
  } catch (const InsufficientData& e) {
    std::cerr << "insufficient data: " << e.what() << '\n';
    return kInsufficient;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
