#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lightlike/catalog.hpp"
#include "lightlike/monge.hpp"

namespace lightlike {

inline constexpr const char* kToolVersion = "1.0.0";

/// Generator file does not match the schema. `path` is a JSON-pointer-like
/// location such as "metric[0][1]".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// The file could not be opened or read.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorFile {
  MongeGenerator generator;
  SampleSpec samples;
};

/// Generator file schema:
///   { "name": str, "dimension": int, "coordinates": [str...],
///     "parameters": {str: number}, "metric": [[str...]...] (d x d),
///     "scalar_field": str, "domain": ["lhs > rhs", ...],
///     "samples": {"grid": {"ranges": [[lo, hi]...], "counts": [n...]}}
///              | {"points": [[x...]...]} }
/// "parameters", "domain" and "samples" are optional. A metric that is not
/// structurally symmetric must be symmetric at every sample point.
GeneratorFile parse_generator(const nlohmann::ordered_json& doc);
GeneratorFile load_generator(const std::filesystem::path& path);

nlohmann::ordered_json generator_to_json(const MongeGenerator& gen, const SampleSpec& samples);

/// Cartesian grid with inclusive endpoints (a count of 1 takes the lower
/// end), last coordinate varying fastest, filtered by the domain constraints;
/// or the explicit point list, filtered the same way. Throws
/// GeometryError(EmptySample) if nothing survives.
std::vector<SurfacePoint> grid_sample(const MongeGenerator& gen, const SampleSpec& spec);

nlohmann::ordered_json report_to_json(const ClassificationReport& report);

/// Serialised report: fixed key order, shortest round-trip floats, trailing
/// newline. Identical inputs give byte-identical output.
std::string dump_report(const ClassificationReport& report);

/// Command-line driver. Exit codes: 0 success, 1 computation error or failed
/// verification, 2 more than 10% of points failed, 64 usage, 66 file error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lightlike
