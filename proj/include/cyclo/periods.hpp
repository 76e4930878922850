#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cyclo/bigfloat.hpp"
#include "cyclo/ntheory.hpp"

namespace cyclo {

// Label (k, r) of the Gaussian period
//   T_{k,r} = sum_{a=0}^{2^(m-k)-1} eps^(g^(2^k a + r)),   eps = exp(2 pi i / p).
// T_{0,0} = -1 and T_{m,r} = eps^(g^r).
struct PeriodId {
  unsigned k = 0;
  std::uint32_t r = 0;

  friend auto operator<=>(const PeriodId&, const PeriodId&) = default;
};

// exp(2 pi i j / p) for any integer j.
BigComplex root_of_unity(const FermatContext& ctx, std::int64_t j, unsigned precision);

// All p-th roots of unity at one precision, computed independently of each
// other so that no error accumulates across powers.
class UnitRoots {
 public:
  UnitRoots(const FermatContext& ctx, unsigned precision);

  const BigComplex& operator[](std::int64_t j) const;
  unsigned precision() const { return precision_; }

 private:
  std::vector<BigComplex> roots_;
  unsigned precision_;
};

BigComplex reference_period(const FermatContext& ctx, PeriodId id, unsigned precision);
BigComplex reference_period(const FermatContext& ctx, const UnitRoots& roots, PeriodId id);

// The 2^k periods of one level, indexed by r.
class PeriodTable {
 public:
  PeriodTable(unsigned k, unsigned precision, std::vector<BigComplex> values);

  unsigned level() const { return k_; }
  unsigned precision() const { return precision_; }
  std::size_t size() const { return values_.size(); }
  const BigComplex& operator[](std::uint32_t r) const { return values_.at(r); }
  const std::vector<BigComplex>& values() const { return values_; }

  // Smallest pairwise distance between periods of this level; +inf for a
  // single-entry level.
  double min_gap() const;

 private:
  unsigned k_;
  unsigned precision_;
  std::vector<BigComplex> values_;
};

PeriodTable reference_level(const FermatContext& ctx, unsigned k, unsigned precision);
PeriodTable reference_level(const FermatContext& ctx, const UnitRoots& roots, unsigned k);

}  // namespace cyclo
