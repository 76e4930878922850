#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/bigfloat.hpp"
#include "cyclo/program.hpp"

namespace cyclo {

class DivisionByZero : public std::runtime_error {
 public:
  explicit DivisionByZero(NodeId node)
      : std::runtime_error("division by zero at node " + std::to_string(node)), node_(node) {}
  NodeId node() const { return node_; }

 private:
  NodeId node_;
};

// Value of every node, in id order.
struct EvalTrace {
  unsigned precision = kMinPrecision;
  std::vector<BigComplex> values;

  const BigComplex& operator[](NodeId id) const { return values.at(id); }
};

// Evaluates instructions one at a time as they are appended. SQRT takes the
// principal branch, so the trace is a function of (program, precision).
class Evaluator {
 public:
  explicit Evaluator(unsigned precision);

  const BigComplex& push(const Instruction& ins);
  const BigComplex& operator[](NodeId id) const { return trace_.values.at(id); }
  std::size_t size() const { return trace_.values.size(); }
  const EvalTrace& trace() const& { return trace_; }
  EvalTrace trace() && { return std::move(trace_); }

 private:
  EvalTrace trace_;
};

// Throws DivisionByZero when a divisor evaluates to exactly zero.
EvalTrace eval_program(const Program& program, unsigned precision);

}  // namespace cyclo
