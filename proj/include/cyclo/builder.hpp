#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cyclo/counts.hpp"
#include "cyclo/eval.hpp"
#include "cyclo/ntheory.hpp"
#include "cyclo/periods.hpp"
#include "cyclo/program.hpp"

namespace cyclo {

class LabelAmbiguity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateDiscriminant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Planned instruction counts of the construction.
struct OpBudget {
  std::uint64_t constants = 0;       // 0, 2, 3, ..., p
  std::vector<std::uint64_t> levels;  // split of level k into level k + 1
  std::uint64_t total = 0;
  std::uint64_t bound = 0;  // 12 p^2
};

// Level k < m - 1 emits, per r, 2^k products N * T, 2^k - 1 sums and an
// 8-instruction quadratic split. The top level k = m - 1 has product 1 and
// emits only the split.
OpBudget plan_budget(std::uint64_t p);
std::uint64_t closed_form_count(std::uint64_t p);
// 11 * 4^k, the per-level allowance.
std::uint64_t level_allowance(unsigned k);

unsigned default_precision(std::uint32_t p);

// Grows the program level by level while evaluating it at a fixed precision,
// so the two roots of each quadratic can be named by comparing against the
// reference periods.
class ProgramBuilder {
 public:
  ProgramBuilder(const FermatContext& ctx, unsigned precision);

  // Appends 0 = 1 - 1 and 2..p by successive +1; 1 is node 0.
  const std::map<std::uint32_t, NodeId>& emit_constants();

  // Splits every T[k, r] into T[k+1, r] and T[k+1, 2^k + r]. next_level holds
  // the reference values of level k + 1. Returns the new labels in r order.
  std::vector<NodeId> build_level(unsigned k, const CountTable& counts, const PeriodTable& next_level);

  const Program& program() const { return program_; }
  const Evaluator& values() const { return eval_; }
  Program finish() && { return std::move(program_); }

 private:
  NodeId emit(Instruction ins);
  // Maps the roots (a, b) onto the periods (lo, hi) of the next level.
  void assign_labels(unsigned k, std::uint32_t r, NodeId a, NodeId b, const PeriodTable& next_level,
                     double tol);

  FermatContext ctx_;
  Program program_;
  Evaluator eval_;
};

Program build_program(const FermatContext& ctx, unsigned precision);

}  // namespace cyclo
