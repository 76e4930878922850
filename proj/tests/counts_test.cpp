#include <doctest.h>

#include <random>

#include "cyclo/counts.hpp"

using namespace cyclo;

TEST_CASE("brute-force counts for p = 5") {
  const auto ctx = FermatContext::make(5);
  CHECK(count_bruteforce(ctx, 0, 0) == 1);
  CHECK(count_bruteforce(ctx, 0, 1) == 1);
  CHECK(count_bruteforce(ctx, 1, 0) == 0);
  CHECK_THROWS_AS(count_bruteforce(ctx, 2, 0), std::invalid_argument);
}

TEST_CASE("count tables match frozen enumeration") {
  const auto c3 = FermatContext::make(3);
  CHECK(count_table(c3, DlogTable(c3), 0).values() == std::vector<std::uint64_t>{0});

  const auto c5 = FermatContext::make(5);
  const DlogTable d5(c5);
  CHECK(count_table(c5, d5, 0).values() == std::vector<std::uint64_t>{1});
  CHECK(count_table(c5, d5, 1).values() == std::vector<std::uint64_t>{0, 0});

  const auto c17 = FermatContext::make(17);
  const DlogTable d17(c17);
  CHECK(count_table(c17, d17, 0).values() == std::vector<std::uint64_t>{4});
  CHECK(count_table(c17, d17, 1).values() == std::vector<std::uint64_t>{1, 1});
  CHECK(count_table(c17, d17, 2).values() == std::vector<std::uint64_t>{0, 0, 0, 1});
  CHECK(count_table(c17, d17, 3).values() == std::vector<std::uint64_t>(8, 0));

  const auto c257 = FermatContext::make(257);
  const DlogTable d257(c257);
  CHECK(count_table(c257, d257, 0).values() == std::vector<std::uint64_t>{64});
  CHECK(count_table(c257, d257, 2).values() == std::vector<std::uint64_t>{2, 5, 4, 5});
}

TEST_CASE("accelerated table equals brute force") {
  for (std::uint32_t p : {3u, 5u, 17u}) {
    const auto ctx = FermatContext::make(p);
    const DlogTable dlog(ctx);
    for (unsigned k = 0; k < ctx.m(); ++k) {
      const auto table = count_table(ctx, dlog, k);
      for (std::int64_t t = 0; t < ctx.order(); ++t) REQUIRE(table(t) == count_bruteforce(ctx, k, t));
    }
  }
  const auto ctx = FermatContext::make(257);
  const DlogTable dlog(ctx);
  std::mt19937 rng(257);
  for (int i = 0; i < 16; ++i) {
    const unsigned k = rng() % ctx.m();
    const std::int64_t t = rng() % ctx.order();
    CHECK(count_table(ctx, dlog, k)(t) == count_bruteforce(ctx, k, t));
  }
}

TEST_CASE("each c admits at most one d") {
  for (std::uint32_t p : {5u, 17u, 257u}) {
    const auto ctx = FermatContext::make(p);
    const DlogTable dlog(ctx);
    for (unsigned k = 0; k < ctx.m(); ++k) {
      const auto table = count_table(ctx, dlog, k);
      for (auto n : table.values()) CHECK(n <= (std::uint64_t{1} << (ctx.m() - k - 1)));
    }
  }
}

TEST_CASE("lemma 1 invariance") {
  CHECK(verify_lemma1(FermatContext::make(3), 0));
  CHECK(verify_lemma1(FermatContext::make(5), 0));
  CHECK(verify_lemma1(FermatContext::make(5), 1));
  const auto ctx = FermatContext::make(17);
  for (unsigned k = 0; k < 4; ++k) CHECK(verify_lemma1(ctx, k));
}

TEST_CASE("shift by 2^(k+1) l preserves the count") {
  const auto ctx = FermatContext::make(17);
  for (unsigned k = 0; k < 4; ++k)
    for (std::int64_t t = 0; t < 16; ++t)
      for (std::int64_t l = -3; l <= 3; ++l)
        CHECK(count_bruteforce(ctx, k, t) == count_bruteforce(ctx, k, t + (std::int64_t{1} << (k + 1)) * l));
}

TEST_CASE("table indices reduce mod 2^k") {
  const CountTable t(2, {7, 8, 9, 10});
  CHECK(t(5) == 8);
  CHECK(t(-1) == 10);
  CHECK_THROWS_AS(CountTable(2, {1, 2}), std::invalid_argument);
}
