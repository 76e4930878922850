#include "cyclo/eval.hpp"

namespace cyclo {

Evaluator::Evaluator(unsigned precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision below 53 bits");
  trace_.precision = precision;
}

const BigComplex& Evaluator::push(const Instruction& ins) {
  auto& v = trace_.values;
  const auto id = static_cast<NodeId>(v.size());
  const unsigned b = trace_.precision;
  switch (ins.op) {
    case Opcode::kOne: v.emplace_back(1.0, 0.0, b); break;
    case Opcode::kAdd: v.push_back(v.at(ins.a) + v.at(ins.b)); break;
    case Opcode::kSub: v.push_back(v.at(ins.a) - v.at(ins.b)); break;
    case Opcode::kMul: v.push_back(v.at(ins.a) * v.at(ins.b)); break;
    case Opcode::kDiv:
      if (v.at(ins.b).is_zero()) throw DivisionByZero(id);
      v.push_back(v.at(ins.a) / v.at(ins.b));
      break;
    case Opcode::kSqrt: v.push_back(complex_sqrt(v.at(ins.a), b)); break;
  }
  return v.back();
}

EvalTrace eval_program(const Program& program, unsigned precision) {
  Evaluator ev(precision);
  for (const auto& ins : program.code()) ev.push(ins);
  return std::move(ev).trace();
}

}  // namespace cyclo
