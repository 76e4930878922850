#include "cyclo/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cyclo/builder.hpp"
#include "cyclo/counts.hpp"
#include "cyclo/periods.hpp"
#include "cyclo/program.hpp"
#include "cyclo/verify.hpp"

namespace cyclo {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

// Brute-force Lemma-1 checks beyond this size take too long for a CLI call.
constexpr std::uint32_t kMaxBruteForceP = 257;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write " + path);
}

struct Options {
  std::uint64_t p = 0;
  std::uint32_t g = 0;
  unsigned k = 0;
  unsigned precision = 0;
  double tol = 0;
  std::string in = "-";
  std::string out;
  std::string report;
  std::string format = "dot";
};

FermatContext context_for(const Options& o) {
  return o.g == 0 ? FermatContext::make(o.p) : FermatContext::make(o.p, o.g);
}

int run_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ctx = context_for(o);
  if (ctx.p() > kMaxBruteForceP)
    throw InputError("p = " + std::to_string(ctx.p()) + " is too large to construct; use 'count'");
  const unsigned b = o.precision ? o.precision : default_precision(ctx.p());
  const Program program = build_program(ctx, b);
  write_output(o.out, serialize(program), out);
  err << "constructed p=" << ctx.p() << " g=" << ctx.g() << " op_count=" << op_count(program) << '\n';
  return kOk;
}

int run_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Program program = parse(read_input(o.in, in));
  const auto& h = program.header();
  const auto ctx = FermatContext::make(h.p, h.g);
  const unsigned b = o.precision ? o.precision : default_precision(ctx.p());
  const double tol = o.tol > 0 ? o.tol : default_tolerance(ctx.p());

  VerificationReport rep;
  try {
    rep = verify_program(program, ctx, b, tol);
  } catch (const VerificationFailure& f) {
    rep = f.report();
  }
  out << "p=" << rep.p << " m=" << rep.m << " g=" << rep.g << " B=" << rep.precision << '\n'
      << "op_count=" << rep.op_count << " bound=" << rep.bound
      << " bound_ok=" << (rep.bound_ok ? "true" : "false") << '\n'
      << "max_dev=" << rep.max_dev << " tol=" << rep.tol
      << " coverage_ok=" << (rep.coverage_ok ? "true" : "false") << '\n';
  if (rep.passed) {
    out << "PASS\n";
  } else {
    out << "FAIL " << rep.failed_check;
    if (rep.failed_node) out << " node=" << *rep.failed_node;
    out << '\n';
  }
  if (o.report.empty())
    out << to_json_line(rep) << '\n';
  else
    write_output(o.report, to_json_line(rep) + "\n", out);
  return rep.passed ? kOk : kFailed;
}

int run_count(const Options& o, std::ostream& out) {
  const auto budget = plan_budget(o.p);
  const bool ok = budget.total < budget.bound;
  out << "p=" << o.p << " op_count=" << budget.total << " bound=" << budget.bound
      << " bound_ok=" << (ok ? "true" : "false") << '\n';
  out << "constants=" << budget.constants;
  for (std::size_t k = 0; k < budget.levels.size(); ++k)
    out << " level" << k << '=' << budget.levels[k] << "/" << level_allowance(static_cast<unsigned>(k));
  out << '\n';
  return ok ? kOk : kFailed;
}

int run_counts(const Options& o, std::ostream& out) {
  const auto ctx = context_for(o);
  if (o.k >= ctx.m()) throw InputError("--k must be below m = " + std::to_string(ctx.m()));
  const auto table = count_table(ctx, DlogTable(ctx), o.k);
  out << "p=" << ctx.p() << " m=" << ctx.m() << " g=" << ctx.g() << " k=" << o.k << '\n';
  for (std::size_t t = 0; t < table.size(); ++t) out << "N[" << o.k << ',' << t << "]=" << table.values()[t] << '\n';
  if (ctx.p() <= kMaxBruteForceP) {
    const bool ok = verify_lemma1(ctx, o.k);
    out << "lemma1=" << (ok ? "true" : "false") << '\n';
    return ok ? kOk : kFailed;
  }
  out << "lemma1=skipped\n";
  return kOk;
}

int run_periods(const Options& o, std::ostream& out) {
  const auto ctx = context_for(o);
  if (o.k > ctx.m()) throw InputError("--k must not exceed m = " + std::to_string(ctx.m()));
  const unsigned b = o.precision ? o.precision : default_precision(ctx.p());
  const auto level = reference_level(ctx, o.k, b);
  const int digits = static_cast<int>(b * 0.30103);
  for (std::uint32_t r = 0; r < level.size(); ++r)
    out << "T[" << o.k << ',' << r << "] = " << level[r].re.to_string(digits) << ' '
        << level[r].im.to_string(digits) << '\n';
  return kOk;
}

int run_export(const Options& o, std::istream& in, std::ostream& out) {
  if (o.format != "dot") throw InputError("unsupported export format '" + o.format + "'");
  const Program program = parse(read_input(o.in, in));
  write_output(o.out, export_dot(program), out);
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Straight-line programs for the p-th roots of unity, p a Fermat prime"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "build a program and write it as text");
  construct->add_option("--p", o.p, "Fermat prime")->required();
  construct->add_option("--g", o.g, "primitive root (default: smallest)");
  construct->add_option("--precision-bits", o.precision, "labeling precision in bits")->check(CLI::Range(53u, 65536u));
  construct->add_option("--out", o.out, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "evaluate a program and check it");
  verify->add_option("--in", o.in, "program file, '-' for stdin");
  verify->add_option("--precision-bits", o.precision, "evaluation precision in bits")->check(CLI::Range(53u, 65536u));
  verify->add_option("--tol", o.tol, "absolute tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--report", o.report, "JSON-lines report file");

  auto* count = app.add_subcommand("count", "closed-form operation count and the 12p^2 bound");
  count->add_option("--p", o.p, "Fermat prime")->required();

  auto* counts = app.add_subcommand("counts", "print the N[k,t] table");
  counts->add_option("--p", o.p, "Fermat prime")->required();
  counts->add_option("--k", o.k, "level")->required();

  auto* periods = app.add_subcommand("periods", "print reference Gaussian periods of one level");
  periods->add_option("--p", o.p, "Fermat prime")->required();
  periods->add_option("--k", o.k, "level")->required();
  periods->add_option("--precision-bits", o.precision, "precision in bits")->check(CLI::Range(53u, 65536u));

  auto* exporter = app.add_subcommand("export", "export a program as a graph");
  exporter->add_option("--in", o.in, "program file, '-' for stdin");
  exporter->add_option("--format", o.format, "output format")->check(CLI::IsMember({"dot"}));
  exporter->add_option("--out", o.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (*construct) return run_construct(o, out, err);
    if (*verify) return run_verify(o, in, out);
    if (*count) return run_count(o, out);
    if (*counts) return run_counts(o, out);
    if (*periods) return run_periods(o, out);
    if (*exporter) return run_export(o, in, out);
  } catch (const NotFermatPrime& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kBadInput;
}

}  // namespace cyclo
