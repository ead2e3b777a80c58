#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lightlike {

enum class ParseErrorKind {
  Syntax,
  UnknownIdentifier,
  UnknownFunction,
  ArityMismatch,
  InvalidChart,
};

/// Raised while parsing an expression; `offset` is the byte offset into the
/// source string where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, std::string identifier,
             const std::string& message)
      : std::runtime_error(message),
        kind_(kind),
        offset_(offset),
        identifier_(std::move(identifier)) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  /// Offending identifier for UnknownIdentifier/UnknownFunction, else empty.
  const std::string& identifier() const noexcept { return identifier_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
  std::string identifier_;
};

/// Evaluation left the domain of an elementary operation (ln/sqrt of a
/// non-positive value, division by zero, non-finite result).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string node, const std::string& message)
      : std::runtime_error(message), node_(std::move(node)) {}

  /// Rendering of the sub-expression that failed.
  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

enum class GeometryErrorKind {
  DegenerateMetric,
  AsymmetricMetric,
  NearNullPivot,
  IllPosedFit,
  RankDeficient,
  DimensionMismatch,
  Unsupported,
  EmptySample,
  CertificateFailed,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  GeometryErrorKind kind() const noexcept { return kind_; }

 private:
  GeometryErrorKind kind_;
};

}  // namespace lightlike
