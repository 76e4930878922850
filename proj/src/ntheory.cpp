#include "cyclo/ntheory.hpp"

#include <bit>

namespace cyclo {

namespace {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FermatCandidate validate_fermat_prime(std::uint64_t n) {
  const std::string who = std::to_string(n);
  if (n < 3) throw NotFermatPrime(who + " is not a Fermat prime (must be >= 3)");
  const std::uint64_t q = n - 1;
  if (!std::has_single_bit(q))
    throw NotFermatPrime(who + " is not a Fermat prime (n - 1 is not a power of two)");
  const unsigned m = static_cast<unsigned>(std::countr_zero(q));
  // m = 1 = 2^0 counts as a power of two, which admits p = 3.
  if (!std::has_single_bit(static_cast<unsigned>(m)))
    throw NotFermatPrime(who + " is not a Fermat prime (exponent " + std::to_string(m) +
                         " is not a power of two)");
  if (n > UINT32_MAX || !is_prime_trial(n))
    throw NotFermatPrime(who + " is not a Fermat prime (composite)");
  return {static_cast<std::uint32_t>(n), m};
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
  using u128 = unsigned __int128;
  std::uint64_t result = 1;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>(u128(result) * base % modulus);
    base = static_cast<std::uint64_t>(u128(base) * base % modulus);
    exp >>= 1;
  }
  return result;
}

bool is_primitive_root(std::uint32_t g, std::uint32_t p, unsigned m) {
  if (g % p == 0) return false;
  return pow_mod(g, std::uint64_t{1} << (m - 1), p) == p - 1;
}

std::uint32_t find_primitive_root(std::uint32_t p, unsigned m) {
  for (std::uint32_t g = 2; g < p; ++g)
    if (is_primitive_root(g, p, m)) return g;
  throw std::logic_error("no primitive root found for " + std::to_string(p));
}

FermatContext FermatContext::make(std::uint64_t n) {
  const auto c = validate_fermat_prime(n);
  return FermatContext(c.p, c.m, find_primitive_root(c.p, c.m));
}

FermatContext FermatContext::make(std::uint64_t n, std::uint32_t g) {
  const auto c = validate_fermat_prime(n);
  if (!is_primitive_root(g, c.p, c.m))
    throw std::invalid_argument(std::to_string(g) + " is not a primitive root mod " +
                                std::to_string(c.p));
  return FermatContext(c.p, c.m, g % c.p);
}

std::uint32_t FermatContext::reduce(std::int64_t e) const {
  const std::int64_t n = order();
  std::int64_t r = e % n;
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FermatContext::power(std::int64_t e) const {
  return static_cast<std::uint32_t>(pow_mod(g_, reduce(e), p_));
}

DlogTable::DlogTable(const FermatContext& ctx) : index_(ctx.p(), 0) {
  std::uint64_t x = 1;
  for (std::uint32_t i = 0; i < ctx.order(); ++i) {
    index_[x] = i;
    x = x * ctx.g() % ctx.p();
  }
  size_ = ctx.order();
}

std::uint32_t DlogTable::operator[](std::uint32_t residue) const {
  if (residue == 0 || residue >= index_.size())
    throw std::out_of_range("dlog of residue " + std::to_string(residue));
  return index_[residue];
}

}  // namespace cyclo
