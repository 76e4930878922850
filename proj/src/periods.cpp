#include "cyclo/periods.hpp"

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

constexpr unsigned kGuardBits = 16;

void require_id(const FermatContext& ctx, PeriodId id) {
  if (id.k > ctx.m() || id.r >= (std::uint32_t{1} << id.k))
    throw std::invalid_argument("no period T[" + std::to_string(id.k) + "," +
                                std::to_string(id.r) + "] for p = " + std::to_string(ctx.p()));
}

}  // namespace

BigComplex root_of_unity(const FermatContext& ctx, std::int64_t j, unsigned precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision below 53 bits");
  const std::int64_t p = ctx.p();
  const std::int64_t jr = ((j % p) + p) % p;
  if (jr == 0) return BigComplex(1.0, 0.0, precision);
  const unsigned w = precision + kGuardBits;
  BigFloat angle = ldexp(pi(w), 1);
  mpfr_mul_ui(angle.get(), angle.get(), static_cast<unsigned long>(jr), MPFR_RNDN);
  mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(p), MPFR_RNDN);
  auto [s, c] = sin_cos(angle, w);
  return {c.rounded(precision), s.rounded(precision)};
}

UnitRoots::UnitRoots(const FermatContext& ctx, unsigned precision) : precision_(precision) {
  roots_.reserve(ctx.p());
  for (std::uint32_t j = 0; j < ctx.p(); ++j) roots_.push_back(root_of_unity(ctx, j, precision));
}

const BigComplex& UnitRoots::operator[](std::int64_t j) const {
  const std::int64_t n = static_cast<std::int64_t>(roots_.size());
  return roots_[static_cast<std::size_t>(((j % n) + n) % n)];
}

BigComplex reference_period(const FermatContext& ctx, const UnitRoots& roots, PeriodId id) {
  require_id(ctx, id);
  const std::int64_t terms = std::int64_t{1} << (ctx.m() - id.k);
  const std::int64_t stride = std::int64_t{1} << id.k;
  BigComplex sum(roots.precision() + kGuardBits);
  for (std::int64_t a = 0; a < terms; ++a) sum = sum + roots[ctx.power(stride * a + id.r)];
  return {sum.re.rounded(roots.precision()), sum.im.rounded(roots.precision())};
}

BigComplex reference_period(const FermatContext& ctx, PeriodId id, unsigned precision) {
  require_id(ctx, id);
  return reference_period(ctx, UnitRoots(ctx, precision), id);
}

PeriodTable::PeriodTable(unsigned k, unsigned precision, std::vector<BigComplex> values)
    : k_(k), precision_(precision), values_(std::move(values)) {
  if (values_.size() != (std::size_t{1} << k))
    throw std::invalid_argument("period table for level " + std::to_string(k) +
                                " needs 2^k entries");
}

double PeriodTable::min_gap() const {
  std::vector<std::complex<double>> z;
  z.reserve(values_.size());
  for (const auto& v : values_) z.emplace_back(v.re.to_double(), v.im.to_double());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) gap = std::min(gap, std::abs(z[i] - z[j]));
  return gap;
}

PeriodTable reference_level(const FermatContext& ctx, const UnitRoots& roots, unsigned k) {
  if (k > ctx.m()) throw std::invalid_argument("level " + std::to_string(k) + " exceeds m");
  std::vector<BigComplex> values;
  values.reserve(std::size_t{1} << k);
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << k); ++r)
    values.push_back(reference_period(ctx, roots, {k, r}));
  return PeriodTable(k, roots.precision(), std::move(values));
}

PeriodTable reference_level(const FermatContext& ctx, unsigned k, unsigned precision) {
  return reference_level(ctx, UnitRoots(ctx, precision), k);
}

}  // namespace cyclo
