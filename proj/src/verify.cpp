#include "cyclo/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "cyclo/builder.hpp"
#include "cyclo/counts.hpp"
#include "cyclo/eval.hpp"
#include "cyclo/periods.hpp"

namespace cyclo {

namespace {

std::string describe(const VerificationReport& r) {
  std::string s = "verification failed: " + r.failed_check;
  if (r.failed_node) s += " at node " + std::to_string(*r.failed_node);
  return s;
}

struct Checker {
  VerificationReport& report;

  // Records only the first failure.
  void fail(std::string check, std::optional<NodeId> node = std::nullopt) {
    if (!report.failed_check.empty()) return;
    report.failed_check = std::move(check);
    report.failed_node = node;
  }
};

}  // namespace

VerificationFailure::VerificationFailure(VerificationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

double default_tolerance(std::uint32_t p) { return p <= 17 ? 1e-12 : 1e-30; }

VerificationReport verify_program(const Program& program, const FermatContext& ctx, unsigned precision,
                                  double tol) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.p = ctx.p();
  rep.m = ctx.m();
  rep.g = ctx.g();
  rep.precision = precision;
  rep.tol = tol;
  rep.op_count = op_count(program);
  rep.bound = 12 * std::uint64_t{ctx.p()} * ctx.p();
  rep.bound_ok = rep.op_count < rep.bound;
  rep.level_max_dev.assign(ctx.m() + 1, 0.0);
  Checker check{rep};

  auto finish = [&]() {
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    rep.passed = rep.failed_check.empty();
    if (!rep.passed) throw VerificationFailure(rep);
    return rep;
  };

  const auto& h = program.header();
  if (h.p != ctx.p() || h.m != ctx.m() || h.g != ctx.g()) {
    check.fail("header");
    return finish();
  }
  for (std::uint32_t v = 0; v <= ctx.p(); ++v)
    if (!program.constants().contains(v)) {
      check.fail("constants");
      return finish();
    }
  for (unsigned k = 0; k <= ctx.m(); ++k)
    for (std::uint32_t r = 0; r < (std::uint32_t{1} << k); ++r)
      if (!program.labels().contains({k, r})) {
        check.fail("labels");
        return finish();
      }

  EvalTrace trace;
  try {
    trace = eval_program(program, precision);
  } catch (const DivisionByZero& e) {
    check.fail("evaluation", e.node());
    return finish();
  }

  for (const auto& [value, node] : program.constants())
    if (!(distance(trace[node], BigComplex(static_cast<double>(value), 0.0, precision)) <= tol))
      check.fail("constants", node);

  // (a) every label against the defining sum of its period.
  const UnitRoots roots(ctx, precision);
  for (const auto& [id, node] : program.labels()) {
    const double dev = distance(trace[node], reference_period(ctx, roots, id));
    rep.level_max_dev[id.k] = std::isnan(dev) ? dev : std::max(rep.level_max_dev[id.k], dev);
    rep.max_dev = std::isnan(dev) ? dev : std::max(rep.max_dev, dev);
    if (!(dev <= tol)) check.fail("period", node);
  }

  // (b) top labels against eps^(g^r) computed directly.
  const unsigned m = ctx.m();
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << m); ++r) {
    const NodeId node = program.label({m, r});
    if (!(distance(trace[node], root_of_unity(ctx, ctx.power(r), precision)) <= tol))
      check.fail("root", node);
  }

  // (c) the top values hit every eps^j, j = 1..p-1.
  std::vector<bool> covered(ctx.p(), false);
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << m); ++r) {
    const auto& v = trace[program.label({m, r})];
    const double angle = std::atan2(v.im.to_double(), v.re.to_double());
    if (!std::isfinite(angle)) continue;
    const auto j = static_cast<std::int64_t>(std::llround(angle * ctx.p() / (2 * std::numbers::pi)));
    const auto jr = static_cast<std::uint32_t>(((j % ctx.p()) + ctx.p()) % ctx.p());
    if (distance(v, roots[jr]) <= tol) covered[jr] = true;
  }
  rep.coverage_ok = true;
  for (std::uint32_t j = 1; j < ctx.p(); ++j) rep.coverage_ok = rep.coverage_ok && covered[j];
  if (!rep.coverage_ok) check.fail("coverage");

  // (d)
  if (!rep.bound_ok) check.fail("bound");
  return finish();
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["m"] = r.m;
  j["g"] = r.g;
  j["B"] = r.precision;
  j["tol"] = r.tol;
  j["op_count"] = r.op_count;
  j["bound"] = r.bound;
  j["bound_ok"] = r.bound_ok;
  j["max_dev"] = r.max_dev;
  j["level_max_dev"] = r.level_max_dev;
  j["coverage_ok"] = r.coverage_ok;
  j["elapsed_ms"] = r.elapsed_ms;
  j["passed"] = r.passed;
  j["failed_check"] = r.failed_check;
  j["failed_node"] = r.failed_node ? nlohmann::ordered_json(*r.failed_node) : nlohmann::ordered_json();
  return j.dump();
}

VerificationReport report_from_json_line(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  VerificationReport r;
  j.at("p").get_to(r.p);
  j.at("m").get_to(r.m);
  j.at("g").get_to(r.g);
  j.at("B").get_to(r.precision);
  j.at("tol").get_to(r.tol);
  j.at("op_count").get_to(r.op_count);
  j.at("bound").get_to(r.bound);
  j.at("bound_ok").get_to(r.bound_ok);
  j.at("max_dev").get_to(r.max_dev);
  j.at("level_max_dev").get_to(r.level_max_dev);
  j.at("coverage_ok").get_to(r.coverage_ok);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  j.at("passed").get_to(r.passed);
  j.at("failed_check").get_to(r.failed_check);
  if (!j.at("failed_node").is_null()) r.failed_node = j.at("failed_node").get<NodeId>();
  return r;
}

std::vector<IdentityResidual> check_identities(const FermatContext& ctx, unsigned k, unsigned precision) {
  if (k >= ctx.m()) throw std::invalid_argument("level out of range");
  const UnitRoots roots(ctx, precision);
  const PeriodTable here = reference_level(ctx, roots, k);
  const PeriodTable next = reference_level(ctx, roots, k + 1);
  const CountTable counts = count_table(ctx, DlogTable(ctx), k);
  const std::uint32_t rows = std::uint32_t{1} << k;
  const bool top = k + 1 == ctx.m();

  std::vector<IdentityResidual> out;
  for (std::uint32_t r = 0; r < rows; ++r) {
    const auto& lo = next[r];
    const auto& hi = next[r + rows];
    BigComplex expected(precision);
    if (top) expected = BigComplex(1.0, 0.0, precision);
    for (std::uint32_t s = 0; s < rows; ++s) {
      const auto n = counts(static_cast<std::int64_t>(r) - static_cast<std::int64_t>(s));
      expected = expected + BigComplex(static_cast<double>(n), 0.0, precision) * here[s];
    }
    out.push_back({r, distance(lo + hi, here[r]), distance(lo * hi, expected)});
  }
  return out;
}

}  // namespace cyclo
