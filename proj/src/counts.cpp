#include "cyclo/counts.hpp"

#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

void require_level(const FermatContext& ctx, unsigned k) {
  if (k >= ctx.m())
    throw std::invalid_argument("level " + std::to_string(k) + " out of range [0, " +
                                std::to_string(ctx.m()) + ")");
}

}  // namespace

CountTable::CountTable(unsigned k, std::vector<std::uint64_t> values)
    : k_(k), values_(std::move(values)) {
  if (values_.size() != (std::size_t{1} << k))
    throw std::invalid_argument("count table for level " + std::to_string(k) +
                                " needs 2^k entries");
}

std::uint64_t CountTable::operator()(std::int64_t t) const {
  const std::int64_t n = static_cast<std::int64_t>(values_.size());
  std::int64_t r = t % n;
  if (r < 0) r += n;
  return values_[static_cast<std::size_t>(r)];
}

std::uint64_t count_bruteforce(const FermatContext& ctx, unsigned k, std::int64_t t) {
  require_level(ctx, k);
  const std::int64_t span = std::int64_t{1} << (ctx.m() - k - 1);
  const std::int64_t stride = std::int64_t{1} << (k + 1);
  const std::int64_t half = std::int64_t{1} << k;
  std::uint64_t n = 0;
  for (std::int64_t c = 0; c < span; ++c) {
    const std::uint64_t x = ctx.power(stride * c + t);
    for (std::int64_t d = 0; d < span; ++d) {
      const std::uint64_t y = ctx.power(stride * d + half + t);
      if ((x + y) % ctx.p() == 1) ++n;
    }
  }
  return n;
}

CountTable count_table(const FermatContext& ctx, const DlogTable& dlog, unsigned k) {
  require_level(ctx, k);
  const std::int64_t span = std::int64_t{1} << (ctx.m() - k - 1);
  const std::int64_t stride = std::int64_t{1} << (k + 1);
  const std::uint32_t half = std::uint32_t{1} << k;
  const std::uint32_t mask = (std::uint32_t{1} << (k + 1)) - 1;
  std::vector<std::uint64_t> values(std::size_t{1} << k, 0);
  for (std::uint32_t t = 0; t < half; ++t) {
    std::uint64_t n = 0;
    for (std::int64_t c = 0; c < span; ++c) {
      const std::uint32_t x = ctx.power(stride * c + t);
      const std::uint32_t u = (ctx.p() + 1 - x) % ctx.p();
      if (u == 0) continue;
      if ((dlog[u] & mask) == ((half + t) & mask)) ++n;
    }
    values[t] = n;
  }
  return CountTable(k, std::move(values));
}

bool verify_lemma1(const FermatContext& ctx, unsigned k) {
  require_level(ctx, k);
  const std::int64_t half = std::int64_t{1} << k;
  std::vector<std::uint64_t> canonical(static_cast<std::size_t>(half));
  for (std::int64_t t = 0; t < half; ++t) canonical[t] = count_bruteforce(ctx, k, t);
  for (std::int64_t t = half; t < ctx.order(); ++t)
    if (count_bruteforce(ctx, k, t) != canonical[t % half]) return false;
  return true;
}

}  // namespace cyclo
