#include <array>
#include <charconv>

#include "lightlike/expr.hpp"

namespace lightlike {

namespace {

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Negate: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

void render_into(const Node& n, std::string& out);

void render_child(const Node& child, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(child, out);
  if (parens) out += ')';
}

void render_into(const Node& n, std::string& out) {
  const int p = precedence(n);
  switch (n.kind) {
    case NodeKind::Constant:
      out += n.name.empty() ? format_number(n.value) : n.name;
      return;
    case NodeKind::Coordinate:
    case NodeKind::Parameter: out += n.name; return;
    case NodeKind::Negate:
      out += '-';
      render_child(*n.lhs, precedence(*n.lhs) < 3, out);
      return;
    case NodeKind::Call:
      out += function_name(n.fn);
      render_child(*n.lhs, true, out);
      return;
    case NodeKind::Pow:
      render_child(*n.lhs, precedence(*n.lhs) <= p, out);
      out += '^';
      render_child(*n.rhs, precedence(*n.rhs) < 3, out);
      return;
    default: break;
  }
  static constexpr std::array<const char*, 4> kOps{" + ", " - ", "*", "/"};
  const char* op = kOps[static_cast<int>(n.kind) - static_cast<int>(NodeKind::Add)];
  // Left-associative: the right operand needs parens at equal precedence.
  render_child(*n.lhs, precedence(*n.lhs) < p, out);
  out += op;
  render_child(*n.rhs, precedence(*n.rhs) <= p, out);
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string render(const Node& node) {
  std::string out;
  render_into(node, out);
  return out;
}

}  // namespace lightlike
