#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lightlike/error.hpp"
#include "lightlike/jet.hpp"

namespace lightlike {

/// Coordinate names of a chart on the base manifold plus named real
/// parameters (e.g. the radius R of a Schwarzschild chart).
class CoordinateChart {
 public:
  using Parameter = std::pair<std::string, double>;

  /// Throws ParseError(InvalidChart) if names are empty, malformed, repeated,
  /// shared between coordinates and parameters, or reserved (pi, e, function
  /// names).
  explicit CoordinateChart(std::vector<std::string> coordinates,
                           std::vector<Parameter> parameters = {});

  int dimension() const { return static_cast<int>(coordinates_.size()); }
  const std::vector<std::string>& coordinates() const { return coordinates_; }
  const std::vector<Parameter>& parameters() const { return parameters_; }

  std::optional<int> coordinate_index(std::string_view name) const;
  std::optional<int> parameter_index(std::string_view name) const;

  /// Parameter values in declaration order; this is the environment
  /// expressions are evaluated against.
  std::vector<double> parameter_values() const;

  /// Same chart with some parameter values replaced. Unknown names throw
  /// ParseError(UnknownIdentifier).
  CoordinateChart with_parameters(std::span<const Parameter> overrides) const;

  friend bool operator==(const CoordinateChart&, const CoordinateChart&) = default;

 private:
  std::vector<std::string> coordinates_;
  std::vector<Parameter> parameters_;
};

bool is_valid_identifier(std::string_view name);
bool is_reserved_identifier(std::string_view name);

enum class NodeKind { Constant, Coordinate, Parameter, Negate, Add, Sub, Mul, Div, Pow, Call };
enum class Function { Sin, Cos, Tan, Exp, Ln, Sqrt, Abs };

std::string_view function_name(Function fn);
std::optional<Function> function_from_name(std::string_view name);

/// Immutable AST node. `name` holds the identifier for coordinate/parameter
/// references and named constants (pi, e); `offset` is the source position.
struct Node {
  NodeKind kind = NodeKind::Constant;
  double value = 0.0;
  int index = -1;
  Function fn = Function::Sin;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::size_t offset = 0;
};

/// Structural equality (ignores source offsets).
bool structurally_equal(const Node& a, const Node& b);

/// A parsed coordinate expression. Cheap to copy; the tree is shared and
/// never mutated, so one Expr may be evaluated from many threads.
class Expr {
 public:
  Expr(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  const Node& root() const { return *root_; }
  const std::string& source() const { return source_; }

  friend bool operator==(const Expr& a, const Expr& b) {
    return structurally_equal(*a.root_, *b.root_);
  }

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

/// Grammar, loosest to tightest binding:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := primary ('^' unary)?          (right-associative)
///   primary := number | identifier | function '(' expr ')' | '(' expr ')'
/// There is no implicit multiplication.
Expr parse(std::string_view source, const CoordinateChart& chart);

std::string render(const Node& node);
inline std::string render(const Expr& e) { return render(e.root()); }

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

namespace detail {

inline double call(Function fn, double x) {
  switch (fn) {
    case Function::Sin: return std::sin(x);
    case Function::Cos: return std::cos(x);
    case Function::Tan: return std::tan(x);
    case Function::Exp: return std::exp(x);
    case Function::Ln: return std::log(x);
    case Function::Sqrt: return std::sqrt(x);
    case Function::Abs: return std::abs(x);
  }
  return x;
}

inline Jet2 call(Function fn, const Jet2& x) {
  switch (fn) {
    case Function::Sin: return sin(x);
    case Function::Cos: return cos(x);
    case Function::Tan: return tan(x);
    case Function::Exp: return exp(x);
    case Function::Ln: return log(x);
    case Function::Sqrt: return sqrt(x);
    case Function::Abs: return abs(x);
  }
  return x;
}

inline double power(double base, double exponent) { return std::pow(base, exponent); }
inline Jet2 power(const Jet2& base, const Jet2& exponent) { return pow(base, exponent); }

inline bool all_finite(double x) { return std::isfinite(x); }
bool all_finite(const Jet2& x);

[[noreturn]] void domain_failure(const Node& node, const std::string& what);

template <class Scalar>
Scalar eval_node(const Node& node, std::span<const Scalar> point,
                 std::span<const double> params) {
  Scalar out{};
  switch (node.kind) {
    case NodeKind::Constant: return Scalar(node.value);
    case NodeKind::Coordinate: return point[node.index];
    case NodeKind::Parameter: return Scalar(params[node.index]);
    case NodeKind::Negate: out = -eval_node(*node.lhs, point, params); break;
    case NodeKind::Add:
      out = eval_node(*node.lhs, point, params) + eval_node(*node.rhs, point, params);
      break;
    case NodeKind::Sub:
      out = eval_node(*node.lhs, point, params) - eval_node(*node.rhs, point, params);
      break;
    case NodeKind::Mul:
      out = eval_node(*node.lhs, point, params) * eval_node(*node.rhs, point, params);
      break;
    case NodeKind::Div: {
      Scalar num = eval_node(*node.lhs, point, params);
      Scalar den = eval_node(*node.rhs, point, params);
      if (value_of(den) == 0.0) domain_failure(node, "division by zero");
      out = num / den;
      break;
    }
    case NodeKind::Pow: {
      Scalar base = eval_node(*node.lhs, point, params);
      Scalar exponent = eval_node(*node.rhs, point, params);
      const double b = value_of(base);
      const double y = value_of(exponent);
      if (b < 0.0 && std::trunc(y) != y)
        domain_failure(node, "negative base with non-integer exponent");
      if (b <= 0.0 && !is_constant(exponent))
        domain_failure(node, "non-positive base with a varying exponent");
      out = power(base, exponent);
      break;
    }
    case NodeKind::Call: {
      Scalar arg = eval_node(*node.lhs, point, params);
      const double x = value_of(arg);
      if ((node.fn == Function::Ln || node.fn == Function::Sqrt) && !(x > 0.0))
        domain_failure(node, std::string(function_name(node.fn)) + " of non-positive value");
      if (node.fn == Function::Abs && x == 0.0 && !is_constant(arg))
        domain_failure(node, "abs is not differentiable at 0");
      out = call(node.fn, arg);
      break;
    }
  }
  if (!all_finite(out)) domain_failure(node, "non-finite result");
  return out;
}

}  // namespace detail

/// Evaluates `e` at `point` (one scalar per chart coordinate) with parameter
/// values `params` (chart declaration order). Scalar is double or Jet2; the
/// value lane of a Jet2 evaluation is bit-identical to the double evaluation.
/// Throws DomainError naming the failing sub-expression.
template <class Scalar>
Scalar evaluate(const Expr& e, std::span<const Scalar> point, std::span<const double> params) {
  return detail::eval_node(e.root(), point, params);
}

inline double evaluate(const Expr& e, std::span<const double> point,
                       std::span<const double> params) {
  return detail::eval_node<double>(e.root(), point, params);
}

enum class Relation { Greater, GreaterEqual };

/// lhs > rhs or lhs >= rhs, both sides expressions over the chart.
struct DomainConstraint {
  Expr lhs;
  Relation relation;
  Expr rhs;
  std::string source;

  friend bool operator==(const DomainConstraint& a, const DomainConstraint& b) {
    return a.lhs == b.lhs && a.relation == b.relation && a.rhs == b.rhs;
  }
};

/// Parses "lhs > rhs", "lhs >= rhs" or "lhs ≥ rhs".
DomainConstraint parse_constraint(std::string_view source, const CoordinateChart& chart);

struct DomainCheck {
  bool admissible = true;
  std::string diagnostic;  // empty when admissible
};

DomainCheck check_domain_detailed(std::span<const DomainConstraint> constraints,
                                  std::span<const double> point,
                                  std::span<const double> params);

/// True iff every constraint holds with finite evaluations. Evaluation
/// errors count as "outside the domain".
inline bool check_domain(std::span<const DomainConstraint> constraints,
                         std::span<const double> point, std::span<const double> params) {
  return check_domain_detailed(constraints, point, params).admissible;
}

}  // namespace lightlike
