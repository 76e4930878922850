// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/builder.hpp"
#include "cyclo/counts.hpp"
#include "cyclo/eval.hpp"
#include "cyclo/verify.hpp"
#include "mutation.hpp"

using namespace cyclo;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// 1. op_count < 12p^2, equal to the closed form, and the frozen counts.
void bound_reproduction(Outcome& o) {
  const std::uint64_t expected[] = {11, 30, 172};
  const std::uint32_t primes[] = {3, 5, 17, 257};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint64_t p = primes[i];
    const auto ctx = FermatContext::make(p);
    const auto t0 = Clock::now();
    const Program prog = build_program(ctx, default_precision(ctx.p()));
    const double secs = seconds_since(t0);
    const auto n = op_count(prog);
    o.detail << " p=" << p << ":" << n;
    o.require(n < 12 * p * p, "op_count < 12p^2 for p=" + std::to_string(p));
    o.require(n == closed_form_count(p), "op_count == closed form for p=" + std::to_string(p));
    if (i < 3) o.require(n == expected[i], "frozen count for p=" + std::to_string(p));
    o.require(secs < 1.0, "build under 1 s for p=" + std::to_string(p));
  }
  const std::uint64_t big = closed_form_count(65537);
  o.detail << " closed(65537)=" << big;
  o.require(big < 12ULL * 65537 * 65537, "closed form < 12p^2 for p=65537");
}

// 2. Top labels match eps^(g^r) and cover every eps^j.
void root_construction(Outcome& o) {
  for (std::uint32_t p : {3u, 5u, 17u, 257u}) {
    const auto ctx = FermatContext::make(p);
    const unsigned b = p <= 17 ? 64 : 192;
    const double tol = p <= 17 ? 1e-12 : 1e-30;
    const double limit = p <= 17 ? 1.0 : 60.0;
    const auto t0 = Clock::now();
    try {
      const auto rep = verify_program(build_program(ctx, b), ctx, b, tol);
      const double secs = seconds_since(t0);
      o.detail << " p=" << p << ":max_dev=" << rep.max_dev << ",t=" << secs << "s";
      o.require(rep.coverage_ok, "coverage for p=" + std::to_string(p));
      o.require(rep.level_max_dev.back() <= tol, "top labels within tol for p=" + std::to_string(p));
      o.require(secs < limit, "runtime for p=" + std::to_string(p));
    } catch (const std::exception& e) {
      o.require(false, std::string(e.what()) + " for p=" + std::to_string(p));
    }
  }
}

// 3. p = 5: T[1,0], T[1,1] = (-1 +- sqrt 5)/2 and their product is -1.
void golden_values(Outcome& o) {
  const auto ctx = FermatContext::make(5);
  const Program prog = build_program(ctx, 64);
  const auto trace = eval_program(prog, 64);
  const BigFloat root5 = sqrt(BigFloat(5L, 64));
  const BigFloat half(0.5, 64);
  const BigComplex plus((root5 - BigFloat(1L, 64)) * half, BigFloat(0L, 64));
  const BigComplex minus((-root5 - BigFloat(1L, 64)) * half, BigFloat(0L, 64));
  const auto& t0 = trace[prog.label({1, 0})];
  const auto& t1 = trace[prog.label({1, 1})];
  const double d0 = distance(t0, plus);
  const double d1 = distance(t1, minus);
  const double dp = distance(t0 * t1, BigComplex(-1.0, 0.0, 64));
  o.detail << " |T10-phi|=" << d0 << " |T11-phi'|=" << d1 << " |T10*T11+1|=" << dp;
  o.require(d0 <= 1e-12 && d1 <= 1e-12, "golden values");
  o.require(dp <= 1e-12, "product -1");
}

// 4. count_table == count_bruteforce.
void count_oracle(Outcome& o) {
  std::size_t compared = 0, mismatches = 0;
  for (std::uint32_t p : {3u, 5u, 17u}) {
    const auto ctx = FermatContext::make(p);
    const DlogTable dlog(ctx);
    for (unsigned k = 0; k < ctx.m(); ++k) {
      const auto table = count_table(ctx, dlog, k);
      for (std::int64_t t = 0; t < ctx.order(); ++t, ++compared)
        if (table(t) != count_bruteforce(ctx, k, t)) ++mismatches;
    }
  }
  const auto ctx = FermatContext::make(257);
  const DlogTable dlog(ctx);
  std::mt19937 rng(20260257);
  for (int i = 0; i < 32; ++i, ++compared) {
    const unsigned k = rng() % ctx.m();
    const std::int64_t t = rng() % ctx.order();
    if (count_table(ctx, dlog, k)(t) != count_bruteforce(ctx, k, t)) ++mismatches;
  }
  o.detail << " compared=" << compared << " mismatches=" << mismatches;
  o.require(mismatches == 0, "zero mismatches");
}

// 5. N_{k,t} depends on t mod 2^k only.
void lemma1(Outcome& o) {
  for (std::uint32_t p : {5u, 17u}) {
    const auto ctx = FermatContext::make(p);
    for (unsigned k = 0; k < ctx.m(); ++k)
      o.require(verify_lemma1(ctx, k), "p=" + std::to_string(p) + " k=" + std::to_string(k));
  }
  o.detail << " p in {5,17}, all k";
}

// 6. Sum and product identities of each split, p = 17.
void identities(Outcome& o) {
  const auto ctx = FermatContext::make(17);
  for (unsigned k = 0; k < ctx.m(); ++k) {
    double at64 = 0, at128 = 0;
    for (const auto& r : check_identities(ctx, k, 64)) at64 = std::max({at64, r.sum, r.product});
    for (const auto& r : check_identities(ctx, k, 128)) at128 = std::max({at128, r.sum, r.product});
    o.detail << " k=" << k << ":" << at64 << "->" << at128;
    o.require(at64 < 1e-10, "residual < 1e-10 at k=" + std::to_string(k));
    o.require(at128 < at64, "residual shrinks at k=" + std::to_string(k));
  }
}

// 7. Mutations are caught; text round trip and rebuilds are byte-identical.
void robustness(Outcome& o) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {5u, 17u}) {
    const auto ctx = FermatContext::make(p);
    const Program prog = build_program(ctx, 64);
    const auto trace = eval_program(prog, 64);
    int caught = 0, tried = 0, neutral = 0;
    while (tried < 100) {
      const auto mut = testing::random_mutation(prog, rng);
      if (testing::is_neutral(trace, mut)) {
        ++neutral;
        continue;
      }
      ++tried;
      Program broken = prog;
      broken.replace(mut.node, mut.replacement);
      try {
        verify_program(broken, ctx, 64, 1e-12);
      } catch (const VerificationFailure&) {
        ++caught;
      }
    }
    o.detail << " p=" << p << ":caught " << caught << "/" << tried << " (value-preserving skipped " << neutral << ")";
    o.require(caught == tried, "all mutations caught for p=" + std::to_string(p));

    const std::string text = serialize(prog);
    o.require(serialize(parse(text)) == text, "byte-identical round trip for p=" + std::to_string(p));
    o.require(serialize(build_program(ctx, 64)) == text, "deterministic rebuild for p=" + std::to_string(p));
  }
  const auto ctx257 = FermatContext::make(257);
  const std::string text = serialize(build_program(ctx257, 192));
  o.require(serialize(parse(text)) == text, "byte-identical round trip for p=257");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 bound reproduction", bound_reproduction},
      {"2 end-to-end root construction", root_construction},
      {"3 p=5 golden values", golden_values},
      {"4 count-oracle equivalence", count_oracle},
      {"5 lemma 1 invariance", lemma1},
      {"6 product/sum identities", identities},
      {"7 robustness", robustness},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %s:%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
