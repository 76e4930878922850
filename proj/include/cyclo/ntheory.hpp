#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo {

class NotFermatPrime : public std::invalid_argument {
 public:
  explicit NotFermatPrime(const std::string& what) : std::invalid_argument(what) {}
};

// n = 2^m + 1, prime, m a power of two. The primitive root is chosen later.
struct FermatCandidate {
  std::uint32_t p = 0;
  unsigned m = 0;
};

FermatCandidate validate_fermat_prime(std::uint64_t n);

/// base^exp mod modulus by square-and-multiply.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Smallest g >= 2 with g^(2^(m-1)) == -1 (mod p). Since p - 1 = 2^m has the
/// single prime factor 2, this one test characterizes primitive roots.
std::uint32_t find_primitive_root(std::uint32_t p, unsigned m);

bool is_primitive_root(std::uint32_t g, std::uint32_t p, unsigned m);

// Validated (p, m, g). Exponents of g live in Z_{2^m}.
class FermatContext {
 public:
  static FermatContext make(std::uint64_t n);
  // Throws std::invalid_argument if g is not a primitive root mod n.
  static FermatContext make(std::uint64_t n, std::uint32_t g);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t g() const { return g_; }
  // Multiplicative order of g, i.e. p - 1 = 2^m.
  std::uint32_t order() const { return p_ - 1; }

  // g^e mod p with e reduced modulo the order; negative e allowed.
  std::uint32_t power(std::int64_t e) const;
  // Reduces an exponent into [0, 2^m).
  std::uint32_t reduce(std::int64_t e) const;

  friend bool operator==(const FermatContext&, const FermatContext&) = default;

 private:
  FermatContext(std::uint32_t p, unsigned m, std::uint32_t g) : p_(p), m_(m), g_(g) {}

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t g_;
};

// entries[g^i mod p] = i for i in Z_{p-1}.
class DlogTable {
 public:
  explicit DlogTable(const FermatContext& ctx);

  // Residue must be nonzero mod p.
  std::uint32_t operator[](std::uint32_t residue) const;
  std::size_t size() const { return size_; }

 private:
  std::vector<std::uint32_t> index_;  // indexed by residue; slot 0 unused
  std::size_t size_ = 0;
};

}  // namespace cyclo
