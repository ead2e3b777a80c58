#include <cctype>
#include <charconv>
#include <numbers>

#include "lightlike/expr.hpp"

namespace lightlike {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const CoordinateChart& chart) : src_(src), chart_(chart) {}

  std::shared_ptr<const Node> parse_all() {
    skip_space();
    if (at_end()) syntax_error("empty expression");
    auto node = parse_expr();
    skip_space();
    if (!at_end()) syntax_error(std::string("unexpected '") + src_[pos_] + "'");
    return node;
  }

 private:
  using NodePtr = std::shared_ptr<const Node>;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void syntax_error(const std::string& what) const { syntax_error_at(pos_, what); }

  [[noreturn]] void syntax_error_at(std::size_t at, const std::string& what) const {
    throw ParseError(ParseErrorKind::Syntax, at, "",
                     "syntax error at offset " + std::to_string(at) + ": " + what);
  }

  static NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs, std::size_t offset) {
    Node n;
    n.kind = kind;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    n.offset = offset;
    return std::make_shared<const Node>(std::move(n));
  }

  NodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = make_binary(NodeKind::Add, lhs, parse_term(), at);
      } else if (accept('-')) {
        lhs = make_binary(NodeKind::Sub, lhs, parse_term(), at);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    auto lhs = parse_unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = make_binary(NodeKind::Mul, lhs, parse_unary(), at);
      } else if (accept('/')) {
        lhs = make_binary(NodeKind::Div, lhs, parse_unary(), at);
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      Node n;
    n.kind = NodeKind::Negate;
      n.lhs = parse_unary();
      n.offset = at;
      return std::make_shared<const Node>(std::move(n));
    }
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) return make_binary(NodeKind::Pow, base, parse_unary(), at);
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    if (at_end()) syntax_error("unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      if (!accept(')')) syntax_error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    syntax_error(std::string("unexpected '") + c + "'");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t mantissa = digits();
    if (peek() == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) syntax_error_at(start, "malformed number");
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      // "2e" with no digits would be implicit multiplication by e.
      if (digits() == 0) pos_ = save;
    }
    const std::string_view text = src_.substr(start, pos_ - start);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
      syntax_error_at(start, "number '" + std::string(text) + "' is out of range");
    Node n;
    n.kind = NodeKind::Constant;
    n.value = value;
    n.offset = start;
    return std::make_shared<const Node>(std::move(n));
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    skip_space();
    if (peek() == '(') {
      auto fn = function_from_name(name);
      if (!fn)
        throw ParseError(ParseErrorKind::UnknownFunction, start, name,
                         "unknown function '" + name + "' at offset " + std::to_string(start));
      ++pos_;
      std::vector<NodePtr> args;
      if (!accept(')')) {
        do {
          args.push_back(parse_expr());
        } while (accept(','));
        if (!accept(')')) syntax_error("expected ')' after function argument");
      }
      if (args.size() != 1)
        throw ParseError(ParseErrorKind::ArityMismatch, start, name,
                         "function '" + name + "' takes 1 argument, got " +
                             std::to_string(args.size()));
      Node n;
    n.kind = NodeKind::Call;
      n.fn = *fn;
      n.name = name;
      n.lhs = std::move(args.front());
      n.offset = start;
      return std::make_shared<const Node>(std::move(n));
    }
    Node n;
    n.kind = NodeKind::Constant;
    n.name = name;
    n.offset = start;
    if (name == "pi") {
      n.value = std::numbers::pi;
    } else if (name == "e") {
      n.value = std::numbers::e;
    } else if (auto ci = chart_.coordinate_index(name)) {
      n.kind = NodeKind::Coordinate;
      n.index = *ci;
    } else if (auto pi = chart_.parameter_index(name)) {
      n.kind = NodeKind::Parameter;
      n.index = *pi;
    } else {
      throw ParseError(ParseErrorKind::UnknownIdentifier, start, name,
                       "unknown identifier '" + name + "' at offset " + std::to_string(start));
    }
    return std::make_shared<const Node>(std::move(n));
  }

  std::string_view src_;
  const CoordinateChart& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view source, const CoordinateChart& chart) {
  Parser parser(source, chart);
  return Expr(parser.parse_all(), std::string(source));
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Constant:
      return a.name == b.name && (a.value == b.value || (a.value != a.value && b.value != b.value));
    case NodeKind::Coordinate:
    case NodeKind::Parameter: return a.index == b.index && a.name == b.name;
    case NodeKind::Negate: return structurally_equal(*a.lhs, *b.lhs);
    case NodeKind::Call: return a.fn == b.fn && structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

}  // namespace lightlike
