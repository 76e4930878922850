#include "cyclo/builder.hpp"

#include <cmath>
#include <string>

namespace cyclo {

namespace {

std::string period_name(unsigned k, std::uint32_t r) {
  return "T[" + std::to_string(k) + "," + std::to_string(r) + "]";
}

}  // namespace

OpBudget plan_budget(std::uint64_t p) {
  const auto c = validate_fermat_prime(p);
  OpBudget b;
  b.constants = c.p;
  for (unsigned k = 0; k + 1 < c.m; ++k) {
    const std::uint64_t rows = std::uint64_t{1} << k;
    b.levels.push_back(rows * ((rows * 2 - 1) + 8));
  }
  b.levels.push_back((std::uint64_t{1} << (c.m - 1)) * 8);
  b.total = b.constants;
  for (auto n : b.levels) b.total += n;
  b.bound = 12 * std::uint64_t{c.p} * c.p;
  return b;
}

std::uint64_t closed_form_count(std::uint64_t p) { return plan_budget(p).total; }

std::uint64_t level_allowance(unsigned k) { return 11 * (std::uint64_t{1} << (2 * k)); }

unsigned default_precision(std::uint32_t p) { return p <= 17 ? 64 : 192; }

ProgramBuilder::ProgramBuilder(const FermatContext& ctx, unsigned precision)
    : ctx_(ctx), program_({ctx.p(), ctx.m(), ctx.g(), 1}), eval_(precision) {
  emit({Opcode::kOne, 0, 0});
}

NodeId ProgramBuilder::emit(Instruction ins) {
  const NodeId id = program_.append(ins);
  eval_.push(program_[id]);
  return id;
}

const std::map<std::uint32_t, NodeId>& ProgramBuilder::emit_constants() {
  if (program_.size() != 1) throw std::logic_error("constants must directly follow ONE");
  program_.set_constant(1, 0);
  program_.set_constant(0, emit({Opcode::kSub, 0, 0}));
  NodeId prev = 0;
  for (std::uint32_t v = 2; v <= ctx_.p(); ++v) {
    prev = emit({Opcode::kAdd, prev, 0});
    program_.set_constant(v, prev);
  }
  return program_.constants();
}

std::vector<NodeId> ProgramBuilder::build_level(unsigned k, const CountTable& counts,
                                                const PeriodTable& next_level) {
  const unsigned m = ctx_.m();
  if (k >= m) throw std::invalid_argument("level out of range");
  if (counts.level() != k || next_level.level() != k + 1)
    throw std::invalid_argument("count or reference table is for the wrong level");
  const bool top = k + 1 == m;
  const std::uint32_t rows = std::uint32_t{1} << k;
  const NodeId one = program_.constant(1);
  const NodeId two = program_.constant(2);
  const double tol = next_level.min_gap() / 4;
  const std::size_t start = program_.size();

  for (std::uint32_t r = 0; r < rows; ++r) {
    // T[0,0] = -1 is not among the constants. It takes the slot of s * s,
    // since s^2 = 1 is already node 0.
    NodeId sum;
    NodeId square = one;
    if (k == 0) {
      sum = emit({Opcode::kSub, program_.constant(0), one});
      program_.set_label({0, 0}, sum);
    } else {
      sum = program_.label({k, r});
    }

    // T[k+1, r] * T[k+1, 2^k + r] = sum_s N_{k, r-s} T[k, s], plus 1 at the
    // top level where each pair of conjugate roots multiplies to 1.
    NodeId product = one;
    if (!top) {
      for (std::uint32_t s = 0; s < rows; ++s) {
        const NodeId coeff = program_.constant(static_cast<std::uint32_t>(
            counts(static_cast<std::int64_t>(r) - static_cast<std::int64_t>(s))));
        const NodeId term = emit({Opcode::kMul, coeff, program_.label({k, s})});
        product = s == 0 ? term : emit({Opcode::kAdd, product, term});
      }
    }

    if (k != 0) square = emit({Opcode::kMul, sum, sum});
    // p = 3 has no constant 4; its only product is 1, so 4P = 2 * 2.
    const NodeId four_p = ctx_.p() >= 4 ? emit({Opcode::kMul, program_.constant(4), product})
                                        : emit({Opcode::kMul, two, two});
    const NodeId disc = emit({Opcode::kSub, square, four_p});
    if (!(abs(eval_[disc]).to_double() >= tol * tol))
      throw DegenerateDiscriminant("discriminant of " + period_name(k, r) + " vanishes");
    const NodeId root = emit({Opcode::kSqrt, disc, 0});
    const NodeId plus = emit({Opcode::kAdd, sum, root});
    const NodeId minus = emit({Opcode::kSub, sum, root});
    const NodeId a = emit({Opcode::kDiv, plus, two});
    const NodeId b = emit({Opcode::kDiv, minus, two});
    assign_labels(k, r, a, b, next_level, tol);
  }

  const auto planned = plan_budget(ctx_.p()).levels.at(k);
  if (program_.size() - start != planned)
    throw std::logic_error("level " + std::to_string(k) + " emitted " +
                           std::to_string(program_.size() - start) + " instructions, planned " +
                           std::to_string(planned));

  std::vector<NodeId> out;
  out.reserve(std::size_t{2} * rows);
  for (std::uint32_t r = 0; r < 2 * rows; ++r) out.push_back(program_.label({k + 1, r}));
  return out;
}

void ProgramBuilder::assign_labels(unsigned k, std::uint32_t r, NodeId a, NodeId b,
                                   const PeriodTable& next_level, double tol) {
  const std::uint32_t lo = r;
  const std::uint32_t hi = r + (std::uint32_t{1} << k);
  const BigComplex& va = eval_[a];
  const BigComplex& vb = eval_[b];
  if (!(distance(va, vb) >= 2 * tol))
    throw LabelAmbiguity("roots splitting " + period_name(k, r) + " are indistinguishable");
  const double a_lo = distance(va, next_level[lo]);
  const double a_hi = distance(va, next_level[hi]);
  const double b_lo = distance(vb, next_level[lo]);
  const double b_hi = distance(vb, next_level[hi]);
  const bool direct = a_lo + b_hi <= a_hi + b_lo;
  const double worst = direct ? std::max(a_lo, b_hi) : std::max(a_hi, b_lo);
  if (!(worst <= tol))
    throw LabelAmbiguity("roots splitting " + period_name(k, r) + " match no reference period (off by " +
                         std::to_string(worst) + ")");
  program_.set_label({k + 1, lo}, direct ? a : b);
  program_.set_label({k + 1, hi}, direct ? b : a);
}

Program build_program(const FermatContext& ctx, unsigned precision) {
  ProgramBuilder builder(ctx, precision);
  builder.emit_constants();
  const DlogTable dlog(ctx);
  const UnitRoots roots(ctx, precision);
  for (unsigned k = 0; k < ctx.m(); ++k)
    builder.build_level(k, count_table(ctx, dlog, k), reference_level(ctx, roots, k + 1));
  return std::move(builder).finish();
}

}  // namespace cyclo
