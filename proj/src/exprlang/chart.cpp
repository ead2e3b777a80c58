#include <algorithm>
#include <array>
#include <cctype>

#include "lightlike/expr.hpp"

namespace lightlike {

namespace {

constexpr std::array<std::string_view, 7> kFunctionNames{"sin", "cos", "tan", "exp",
                                                         "ln",  "sqrt", "abs"};

[[noreturn]] void invalid_chart(const std::string& message) {
  throw ParseError(ParseErrorKind::InvalidChart, 0, "", message);
}

}  // namespace

std::string_view function_name(Function fn) {
  return kFunctionNames[static_cast<std::size_t>(fn)];
}

std::optional<Function> function_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFunctionNames.size(); ++i)
    if (kFunctionNames[i] == name) return static_cast<Function>(i);
  return std::nullopt;
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

bool is_reserved_identifier(std::string_view name) {
  return name == "pi" || name == "e" || function_from_name(name).has_value();
}

CoordinateChart::CoordinateChart(std::vector<std::string> coordinates,
                                 std::vector<Parameter> parameters)
    : coordinates_(std::move(coordinates)), parameters_(std::move(parameters)) {
  if (coordinates_.empty()) invalid_chart("chart needs at least one coordinate");
  std::vector<std::string> seen;
  auto check = [&](const std::string& name, const char* what) {
    if (!is_valid_identifier(name))
      invalid_chart(std::string(what) + " name '" + name + "' is not a valid identifier");
    if (is_reserved_identifier(name))
      invalid_chart(std::string(what) + " name '" + name + "' is reserved");
    if (std::find(seen.begin(), seen.end(), name) != seen.end())
      invalid_chart("identifier '" + name + "' is declared twice");
    seen.push_back(name);
  };
  for (const auto& c : coordinates_) check(c, "coordinate");
  for (const auto& [name, value] : parameters_) {
    check(name, "parameter");
    if (!std::isfinite(value)) invalid_chart("parameter '" + name + "' is not finite");
  }
}

std::optional<int> CoordinateChart::coordinate_index(std::string_view name) const {
  auto it = std::find(coordinates_.begin(), coordinates_.end(), name);
  if (it == coordinates_.end()) return std::nullopt;
  return static_cast<int>(it - coordinates_.begin());
}

std::optional<int> CoordinateChart::parameter_index(std::string_view name) const {
  auto it = std::find_if(parameters_.begin(), parameters_.end(),
                         [&](const Parameter& p) { return p.first == name; });
  if (it == parameters_.end()) return std::nullopt;
  return static_cast<int>(it - parameters_.begin());
}

std::vector<double> CoordinateChart::parameter_values() const {
  std::vector<double> out;
  out.reserve(parameters_.size());
  for (const auto& p : parameters_) out.push_back(p.second);
  return out;
}

CoordinateChart CoordinateChart::with_parameters(std::span<const Parameter> overrides) const {
  auto params = parameters_;
  for (const auto& [name, value] : overrides) {
    auto idx = parameter_index(name);
    if (!idx)
      throw ParseError(ParseErrorKind::UnknownIdentifier, 0, name,
                       "unknown parameter '" + name + "'");
    params[*idx].second = value;
  }
  return CoordinateChart(coordinates_, std::move(params));
}

}  // namespace lightlike
