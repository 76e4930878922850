#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "cyclo/ntheory.hpp"

using namespace cyclo;

namespace {

// Orbit size of g under multiplication mod p; test-only oracle.
std::uint32_t multiplicative_order(std::uint32_t g, std::uint32_t p) {
  std::uint64_t x = g % p;
  std::uint32_t n = 1;
  while (x != 1) {
    x = x * g % p;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("validate_fermat_prime accepts Fermat primes") {
  CHECK(validate_fermat_prime(3).m == 1);
  CHECK(validate_fermat_prime(5).m == 2);
  CHECK(validate_fermat_prime(17).m == 4);
  CHECK(validate_fermat_prime(257).m == 8);
  CHECK(validate_fermat_prime(65537).m == 16);
}

TEST_CASE("validate_fermat_prime rejects everything else") {
  CHECK_THROWS_AS(validate_fermat_prime(7), NotFermatPrime);
  CHECK_THROWS_AS(validate_fermat_prime(2), NotFermatPrime);
  CHECK_THROWS_AS(validate_fermat_prime(0), NotFermatPrime);
  // 2^3 + 1: exponent not a power of two.
  CHECK_THROWS_AS(validate_fermat_prime(9), NotFermatPrime);
  // 2^32 + 1 = 641 * 6700417.
  CHECK_THROWS_AS(validate_fermat_prime(4294967297ULL), NotFermatPrime);
}

TEST_CASE("exactly five Fermat primes up to 100000") {
  std::vector<std::uint64_t> accepted;
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    try {
      validate_fermat_prime(n);
      accepted.push_back(n);
    } catch (const NotFermatPrime&) {
    }
  }
  CHECK(accepted == std::vector<std::uint64_t>{3, 5, 17, 257, 65537});
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(2, 0, 5) == 1);
  CHECK(pow_mod(2, 4, 5) == 1);
  CHECK(pow_mod(3, 8, 17) == 16);
  CHECK_THROWS(pow_mod(2, 3, 1));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t mod = 2 + rng() % 100000;
    const std::uint64_t base = rng() % 1000000;
    const std::uint64_t exp = rng() % 300;
    std::uint64_t naive = 1 % mod;
    for (std::uint64_t e = 0; e < exp; ++e) naive = naive * (base % mod) % mod;
    REQUIRE(pow_mod(base, exp, mod) == naive);
  }
}

TEST_CASE("smallest primitive roots") {
  CHECK(find_primitive_root(3, 1) == 2);
  CHECK(find_primitive_root(5, 2) == 2);
  CHECK(find_primitive_root(17, 4) == 3);
  for (std::uint32_t p : {3u, 5u, 17u, 257u, 65537u}) {
    const auto ctx = FermatContext::make(p);
    CHECK(multiplicative_order(ctx.g(), p) == p - 1);
    for (std::uint32_t h = 2; h < ctx.g(); ++h) CHECK(multiplicative_order(h, p) < p - 1);
    CHECK(pow_mod(ctx.g(), p - 1, p) == 1);
    CHECK(pow_mod(ctx.g(), std::uint64_t{1} << (ctx.m() - 1), p) == p - 1);
  }
}

TEST_CASE("explicit generator is validated") {
  CHECK(FermatContext::make(17, 5).g() == 5);
  CHECK_THROWS_AS(FermatContext::make(17, 2), std::invalid_argument);  // 2^8 = 1 mod 17
  CHECK_THROWS_AS(FermatContext::make(6, 5), NotFermatPrime);
}

TEST_CASE("exponents reduce modulo the group order") {
  const auto ctx = FermatContext::make(17);
  CHECK(ctx.reduce(-1) == 15);
  CHECK(ctx.reduce(33) == 1);
  CHECK(ctx.power(-1) * std::uint64_t{ctx.g()} % 17 == 1);
}

TEST_CASE("dlog table") {
  const auto ctx5 = FermatContext::make(5);
  const DlogTable t5(ctx5);
  CHECK(t5.size() == 4);
  CHECK(t5[1] == 0);
  CHECK(t5[2] == 1);
  CHECK(t5[4] == 2);
  CHECK(t5[3] == 3);
  CHECK_THROWS_AS(t5[0], std::out_of_range);

  for (std::uint32_t p : {3u, 17u, 257u, 65537u}) {
    const auto ctx = FermatContext::make(p);
    const DlogTable t(ctx);
    CHECK(t.size() == p - 1);
    CHECK(t[p - 1] == (1u << (ctx.m() - 1)));
    std::set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < p - 1; ++i) {
      REQUIRE(t[static_cast<std::uint32_t>(pow_mod(ctx.g(), i, p))] == i);
      seen.insert(t[i + 1]);
    }
    CHECK(seen.size() == p - 1);
  }
}
