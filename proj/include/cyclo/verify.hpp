#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/ntheory.hpp"
#include "cyclo/program.hpp"

namespace cyclo {

struct VerificationReport {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint32_t g = 0;
  unsigned precision = 0;
  double tol = 0;
  std::uint64_t op_count = 0;
  std::uint64_t bound = 0;  // 12 p^2
  bool bound_ok = false;
  double max_dev = 0;                // over all period labels
  std::vector<double> level_max_dev;  // indexed by level k = 0..m
  bool coverage_ok = false;
  double elapsed_ms = 0;
  bool passed = false;
  // First violated check: header, constants, labels, evaluation, then the
  // value checks period, root, coverage, bound.
  std::string failed_check;
  std::optional<NodeId> failed_node;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(VerificationReport report);
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

double default_tolerance(std::uint32_t p);

// Evaluates the program and checks every period label against its defining
// sum, every top label against eps^(g^r), that the top labels cover all
// eps^j, and that op_count < 12 p^2. Throws VerificationFailure carrying the
// full report if any check fails.
VerificationReport verify_program(const Program& program, const FermatContext& ctx, unsigned precision,
                                  double tol);

std::string to_json_line(const VerificationReport& report);
VerificationReport report_from_json_line(std::string_view line);

struct IdentityResidual {
  std::uint32_t r = 0;
  double sum = 0;      // |T[k+1,r] + T[k+1,2^k+r] - T[k,r]|
  double product = 0;  // |T[k+1,r] T[k+1,2^k+r] - (Z + sum_s N_{k,r-s} T[k,s])|
};

// Residuals of the splitting identities at level k, from reference periods
// only. Z = 1 at the top level k = m - 1, else 0.
std::vector<IdentityResidual> check_identities(const FermatContext& ctx, unsigned k, unsigned precision);

}  // namespace cyclo
