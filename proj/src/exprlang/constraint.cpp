#include "lightlike/expr.hpp"

namespace lightlike {

namespace detail {

bool all_finite(const Jet2& x) {
  if (!std::isfinite(x.value())) return false;
  for (double v : x.lanes())
    if (!std::isfinite(v)) return false;
  return true;
}

void domain_failure(const Node& node, const std::string& what) {
  const std::string text = render(node);
  throw DomainError(text, "domain error in '" + text + "': " + what);
}

}  // namespace detail

DomainConstraint parse_constraint(std::string_view source, const CoordinateChart& chart) {
  static constexpr std::string_view kGe = "\xE2\x89\xA5";  // U+2265
  std::size_t split = source.find(kGe);
  std::size_t width = kGe.size();
  Relation relation = Relation::GreaterEqual;
  if (split == std::string_view::npos) {
    split = source.find('>');
    if (split == std::string_view::npos)
      throw ParseError(ParseErrorKind::Syntax, 0, "",
                       "constraint '" + std::string(source) + "' has no '>' or '>='");
    width = 1;
    relation = Relation::Greater;
    if (split + 1 < source.size() && source[split + 1] == '=') {
      width = 2;
      relation = Relation::GreaterEqual;
    }
  }
  const auto rhs_text = source.substr(split + width);
  if (rhs_text.find('>') != std::string_view::npos)
    throw ParseError(ParseErrorKind::Syntax, split + width, "",
                     "constraint '" + std::string(source) + "' has more than one relation");
  auto rhs_offset = [&](const ParseError& e) {
    return ParseError(e.kind(), e.offset() + split + width, e.identifier(), e.what());
  };
  Expr lhs = parse(source.substr(0, split), chart);
  try {
    Expr rhs = parse(rhs_text, chart);
    return DomainConstraint{std::move(lhs), relation, std::move(rhs), std::string(source)};
  } catch (const ParseError& e) {
    throw rhs_offset(e);
  }
}

DomainCheck check_domain_detailed(std::span<const DomainConstraint> constraints,
                                  std::span<const double> point,
                                  std::span<const double> params) {
  for (const auto& c : constraints) {
    double lhs = 0.0;
    double rhs = 0.0;
    try {
      lhs = evaluate(c.lhs, point, params);
      rhs = evaluate(c.rhs, point, params);
    } catch (const DomainError& e) {
      return {false, "outside domain: " + std::string(e.what())};
    }
    const bool holds = c.relation == Relation::Greater ? lhs > rhs : lhs >= rhs;
    if (!holds) return {false, "constraint '" + c.source + "' violated"};
  }
  return {};
}

}  // namespace lightlike
