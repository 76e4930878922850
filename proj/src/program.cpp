#include "cyclo/program.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace cyclo {

namespace {

constexpr std::array<std::string_view, 6> kOpNames = {"ONE", "ADD", "SUB", "MUL", "DIV", "SQRT"};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> parse_uint(std::string_view s) {
  T v{};
  if (s.empty() || s[0] == '+' || s[0] == '-') return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_key(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=')
    return std::nullopt;
  return parse_uint<std::uint64_t>(token.substr(key.size() + 1));
}

class LineParser {
 public:
  ProgramHeader header(const std::vector<std::string_view>& tok) const {
    if (tok.size() != 4 || tok[0] != "SLPv1") fail("expected header 'SLPv1 p=<p> m=<m> g=<g>'");
    const auto p = parse_key(tok[1], "p");
    const auto m = parse_key(tok[2], "m");
    const auto g = parse_key(tok[3], "g");
    if (!p || !m || !g) fail("malformed header fields");
    FermatCandidate c;
    try {
      c = validate_fermat_prime(*p);
    } catch (const NotFermatPrime& e) {
      fail(e.what());
    }
    if (c.m != *m) fail("header m=" + std::to_string(*m) + " does not match p=" + std::to_string(*p));
    if (*g >= c.p || !is_primitive_root(static_cast<std::uint32_t>(*g), c.p, c.m))
      fail("header g=" + std::to_string(*g) + " is not a primitive root mod " + std::to_string(c.p));
    return {c.p, c.m, static_cast<std::uint32_t>(*g), 1};
  }

  NodeId node(std::string_view tok) const {
    auto v = parse_uint<NodeId>(tok);
    if (!v) fail("bad node id '" + std::string(tok) + "'");
    return *v;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

  std::size_t line_ = 0;
};

}  // namespace

std::string_view opcode_name(Opcode op) { return kOpNames[static_cast<std::size_t>(op)]; }

std::optional<Opcode> opcode_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kOpNames.size(); ++i)
    if (kOpNames[i] == name) return static_cast<Opcode>(i);
  return std::nullopt;
}

unsigned arity(Opcode op) {
  switch (op) {
    case Opcode::kOne: return 0;
    case Opcode::kSqrt: return 1;
    default: return 2;
  }
}

Program::Program(ProgramHeader header) : header_(header) {}

void Program::check_operands(NodeId id, const Instruction& ins) const {
  if (ins.op == Opcode::kOne) {
    if (id != 0) throw std::invalid_argument("ONE is only allowed at node 0");
    return;
  }
  if (id == 0) throw std::invalid_argument("node 0 must be ONE");
  const unsigned n = arity(ins.op);
  if (ins.a >= id || (n == 2 && ins.b >= id))
    throw std::invalid_argument("node " + std::to_string(id) + " reads a node that is not yet defined");
}

NodeId Program::append(Instruction ins) {
  const auto id = static_cast<NodeId>(code_.size());
  check_operands(id, ins);
  if (arity(ins.op) < 2) ins.b = 0;
  if (arity(ins.op) < 1) ins.a = 0;
  code_.push_back(ins);
  return id;
}

void Program::replace(NodeId id, Instruction ins) {
  if (id >= code_.size()) throw std::out_of_range("no node " + std::to_string(id));
  check_operands(id, ins);
  if (arity(ins.op) < 2) ins.b = 0;
  code_[id] = ins;
}

void Program::set_label(PeriodId id, NodeId node) {
  if (node >= code_.size()) throw std::invalid_argument("label on missing node " + std::to_string(node));
  if (id.k > header_.m || id.r >= (std::uint32_t{1} << id.k))
    throw std::invalid_argument("label T[" + std::to_string(id.k) + "," + std::to_string(id.r) +
                                "] out of range");
  if (!labels_.emplace(id, node).second)
    throw std::invalid_argument("duplicate label T[" + std::to_string(id.k) + "," +
                                std::to_string(id.r) + "]");
}

void Program::set_constant(std::uint32_t value, NodeId node) {
  if (node >= code_.size()) throw std::invalid_argument("constant on missing node " + std::to_string(node));
  if (!constants_.emplace(value, node).second)
    throw std::invalid_argument("duplicate constant " + std::to_string(value));
}

NodeId Program::label(PeriodId id) const {
  auto it = labels_.find(id);
  if (it == labels_.end())
    throw std::out_of_range("no label T[" + std::to_string(id.k) + "," + std::to_string(id.r) + "]");
  return it->second;
}

NodeId Program::constant(std::uint32_t value) const {
  auto it = constants_.find(value);
  if (it == constants_.end()) throw std::out_of_range("no constant " + std::to_string(value));
  return it->second;
}

std::uint64_t op_count(const Program& program) {
  return program.size() == 0 ? 0 : program.size() - 1;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string serialize(const Program& program) {
  std::ostringstream out;
  const auto& h = program.header();
  out << "SLPv" << h.version << " p=" << h.p << " m=" << h.m << " g=" << h.g << '\n';
  for (NodeId id = 0; id < program.size(); ++id) {
    const auto& ins = program[id];
    out << id << ' ' << opcode_name(ins.op);
    if (arity(ins.op) >= 1) out << ' ' << ins.a;
    if (arity(ins.op) == 2) out << ' ' << ins.b;
    out << '\n';
  }
  for (const auto& [id, node] : program.labels())
    out << "LABEL " << node << " T " << id.k << ' ' << id.r << '\n';
  for (const auto& [value, node] : program.constants()) out << "CONST " << node << ' ' << value << '\n';
  return out.str();
}

Program parse(std::string_view text) {
  LineParser lp;
  std::optional<Program> program;
  bool in_labels = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++lp.line_;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    for (char c : line)
      if (static_cast<unsigned char>(c) > 0x7e || (c < 0x20 && c != '\t')) lp.fail("non-ASCII or control character");
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (!program) {
      program.emplace(lp.header(tok));
      continue;
    }
    try {
      if (tok[0] == "LABEL") {
        in_labels = true;
        if (tok.size() != 5 || tok[2] != "T") lp.fail("expected 'LABEL <id> T <k> <r>'");
        const NodeId node = lp.node(tok[1]);
        const auto k = parse_uint<unsigned>(tok[3]);
        const auto r = parse_uint<std::uint32_t>(tok[4]);
        if (!k || !r) lp.fail("bad period index");
        program->set_label({*k, *r}, node);
      } else if (tok[0] == "CONST") {
        in_labels = true;
        if (tok.size() != 3) lp.fail("expected 'CONST <id> <value>'");
        const NodeId node = lp.node(tok[1]);
        const auto value = parse_uint<std::uint32_t>(tok[2]);
        if (!value) lp.fail("bad constant value");
        program->set_constant(*value, node);
      } else {
        if (in_labels) lp.fail("instruction after label lines");
        const NodeId id = lp.node(tok[0]);
        if (id != program->size())
          lp.fail("expected node id " + std::to_string(program->size()) + ", got " + std::to_string(id));
        if (tok.size() < 2) lp.fail("missing opcode");
        const auto op = opcode_from_name(tok[1]);
        if (!op) lp.fail("unknown opcode '" + std::string(tok[1]) + "'");
        if (tok.size() != 2 + arity(*op)) lp.fail("wrong operand count for " + std::string(tok[1]));
        Instruction ins{*op, 0, 0};
        if (arity(*op) >= 1) ins.a = lp.node(tok[2]);
        if (arity(*op) == 2) ins.b = lp.node(tok[3]);
        program->append(ins);
      }
    } catch (const std::invalid_argument& e) {
      lp.fail(e.what());
    }
  }
  if (!program) throw ParseError(lp.line_, "missing header");
  if (program->size() == 0) throw ParseError(lp.line_, "program has no instructions");
  return std::move(*program);
}

std::string export_dot(const Program& program) {
  std::map<NodeId, std::string> notes;
  for (const auto& [id, node] : program.labels())
    notes[node] += "\\nT[" + std::to_string(id.k) + "," + std::to_string(id.r) + "]";
  for (const auto& [value, node] : program.constants()) notes[node] += "\\nconst " + std::to_string(value);

  std::ostringstream out;
  const auto& h = program.header();
  out << "digraph slp {\n";
  out << "  label=\"p=" << h.p << " m=" << h.m << " g=" << h.g << "\";\n";
  out << "  node [shape=box];\n";
  for (NodeId id = 0; id < program.size(); ++id) {
    out << "  n" << id << " [label=\"" << id << ' ' << opcode_name(program[id].op);
    if (auto it = notes.find(id); it != notes.end()) out << it->second;
    out << "\"];\n";
  }
  for (NodeId id = 0; id < program.size(); ++id) {
    const auto& ins = program[id];
    if (arity(ins.op) >= 1) out << "  n" << ins.a << " -> n" << id << ";\n";
    if (arity(ins.op) == 2) out << "  n" << ins.b << " -> n" << id << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyclo
