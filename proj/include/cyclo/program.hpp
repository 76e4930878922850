#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/periods.hpp"

namespace cyclo {

using NodeId = std::uint32_t;

enum class Opcode : std::uint8_t { kOne, kAdd, kSub, kMul, kDiv, kSqrt };

std::string_view opcode_name(Opcode op);
std::optional<Opcode> opcode_from_name(std::string_view name);
// 0 for ONE, 1 for SQRT, 2 otherwise.
unsigned arity(Opcode op);

struct Instruction {
  Opcode op = Opcode::kOne;
  NodeId a = 0;
  NodeId b = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct ProgramHeader {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint32_t g = 0;
  unsigned version = 1;

  friend bool operator==(const ProgramHeader&, const ProgramHeader&) = default;
};

// Straight-line program over {+, -, *, /, sqrt} grown from the constant 1.
// Instruction i may only read nodes < i, and node 0 is the only ONE.
class Program {
 public:
  explicit Program(ProgramHeader header);

  const ProgramHeader& header() const { return header_; }
  const std::vector<Instruction>& code() const { return code_; }
  std::size_t size() const { return code_.size(); }
  const Instruction& operator[](NodeId id) const { return code_.at(id); }

  // Appends and returns the new node id. Throws std::invalid_argument on a
  // forward reference or a second ONE.
  NodeId append(Instruction ins);
  NodeId add(NodeId a, NodeId b) { return append({Opcode::kAdd, a, b}); }
  NodeId sub(NodeId a, NodeId b) { return append({Opcode::kSub, a, b}); }
  NodeId mul(NodeId a, NodeId b) { return append({Opcode::kMul, a, b}); }
  NodeId div(NodeId a, NodeId b) { return append({Opcode::kDiv, a, b}); }
  NodeId sqrt(NodeId a) { return append({Opcode::kSqrt, a, 0}); }

  // Throws std::invalid_argument on a duplicate or a dangling id.
  void set_label(PeriodId id, NodeId node);
  void set_constant(std::uint32_t value, NodeId node);

  const std::map<PeriodId, NodeId>& labels() const { return labels_; }
  const std::map<std::uint32_t, NodeId>& constants() const { return constants_; }
  NodeId label(PeriodId id) const;
  NodeId constant(std::uint32_t value) const;

  // Overwrites one instruction in place, re-checking topology.
  void replace(NodeId id, Instruction ins);

  friend bool operator==(const Program&, const Program&) = default;

 private:
  void check_operands(NodeId id, const Instruction& ins) const;

  ProgramHeader header_;
  std::vector<Instruction> code_;
  std::map<PeriodId, NodeId> labels_;
  std::map<std::uint32_t, NodeId> constants_;
};

// Each added number is one operation; the initial 1 is given.
std::uint64_t op_count(const Program& program);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format:
//   SLPv1 p=<p> m=<m> g=<g>
//   <id> ONE | <id> ADD a b | SUB | MUL | DIV | <id> SQRT a
//   LABEL <id> T <k> <r>
//   CONST <id> <value>
// '#' starts a comment. LF line endings.
std::string serialize(const Program& program);
Program parse(std::string_view text);

// Graphviz digraph with one node per instruction and one edge per operand.
std::string export_dot(const Program& program);

}  // namespace cyclo
