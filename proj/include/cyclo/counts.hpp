#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/ntheory.hpp"

namespace cyclo {

// N_{k,t}: the number of pairs (c, d) in Z_{2^(m-k-1)}^2 with
//   g^(2^(k+1) c + t) + g^(2^(k+1) d + 2^k + t) == 1 (mod p).
// N_{k,t} depends only on t mod 2^k, so only canonical t in Z_{2^k} are stored.
class CountTable {
 public:
  CountTable(unsigned k, std::vector<std::uint64_t> values);

  unsigned level() const { return k_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<std::uint64_t>& values() const { return values_; }

  // Any integer index; reduced mod 2^k.
  std::uint64_t operator()(std::int64_t t) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  unsigned k_;
  std::vector<std::uint64_t> values_;
};

// Full enumeration of the pairs. Test oracle; O(4^(m-k)).
std::uint64_t count_bruteforce(const FermatContext& ctx, unsigned k, std::int64_t t);

// For each c, the partner d is forced: g^(2^(k+1) d + 2^k + t) = 1 - g^(2^(k+1) c + t),
// so the count is a single pass over c with one dlog lookup.
CountTable count_table(const FermatContext& ctx, const DlogTable& dlog, unsigned k);

// True iff N_{k,t} == N_{k, t mod 2^k} for every t in Z_{2^m}.
bool verify_lemma1(const FermatContext& ctx, unsigned k);

}  // namespace cyclo
