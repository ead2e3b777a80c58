#include <cmath>
#include <fstream>
#include <sstream>

#include "lightlike/report.hpp"

namespace lightlike {

using json = nlohmann::ordered_json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError(key, "missing required field");
  return doc.at(key);
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SchemaError(path, "number is not finite");
  return x;
}

const json& as_array(const json& v, const std::string& path, std::size_t size = SIZE_MAX) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  if (size != SIZE_MAX && v.size() != size)
    throw SchemaError(path, "expected " + std::to_string(size) + " entries, got " +
                                std::to_string(v.size()));
  return v;
}

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

template <class Fn>
auto with_path(const std::string& path, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  } catch (const GeometryError& e) {
    throw SchemaError(path, e.what());
  }
}

SampleSpec parse_samples(const json& doc, int d) {
  SampleSpec spec;
  if (!doc.is_object()) throw SchemaError("samples", "expected an object");
  if (doc.contains("grid")) {
    const json& grid = doc.at("grid");
    if (!grid.is_object()) throw SchemaError("samples.grid", "expected an object");
    const json& ranges = as_array(require(grid, "ranges"), "samples.grid.ranges", d);
    const json& counts = as_array(require(grid, "counts"), "samples.grid.counts", d);
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      const std::string path = indexed("samples.grid.ranges", i);
      const json& r = as_array(ranges[i], path, 2);
      const double lo = as_number(r[0], indexed(path, 0));
      const double hi = as_number(r[1], indexed(path, 1));
      if (hi < lo) throw SchemaError(path, "upper end below lower end");
      spec.ranges.emplace_back(lo, hi);
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const std::string path = indexed("samples.grid.counts", i);
      if (!counts[i].is_number_integer() || counts[i].get<long long>() < 1)
        throw SchemaError(path, "count must be an integer >= 1");
      spec.counts.push_back(static_cast<int>(counts[i].get<long long>()));
    }
  } else if (doc.contains("points")) {
    const json& pts = as_array(doc.at("points"), "samples.points");
    if (pts.empty()) throw SchemaError("samples.points", "point list is empty");
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::string path = indexed("samples.points", k);
      const json& p = as_array(pts[k], path, d);
      std::vector<double> point;
      for (std::size_t i = 0; i < p.size(); ++i) point.push_back(as_number(p[i], indexed(path, i)));
      spec.points.push_back(std::move(point));
    }
  } else {
    throw SchemaError("samples", "expected \"grid\" or \"points\"");
  }
  return spec;
}

void check_pointwise_symmetry(const MongeGenerator& gen, const SampleSpec& samples) {
  if (gen.metric().structurally_symmetric()) return;
  if (samples.ranges.empty() && samples.points.empty())
    throw SchemaError("metric", "metric is not structurally symmetric and there are no samples "
                                "to check it pointwise");
  std::vector<SurfacePoint> points;
  try {
    points = grid_sample(gen, samples);
  } catch (const GeometryError& e) {
    throw SchemaError("samples", e.what());
  }
  const int d = gen.dimension();
  for (const auto& p : points) {
    const std::span<const double> base(p.base.data(), static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const double a = evaluate(gen.metric().component(i, j), base, gen.params());
        const double b = evaluate(gen.metric().component(j, i), base, gen.params());
        if (std::abs(a - b) > 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b))))
          throw SchemaError("metric[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                            "metric is not symmetric: differs from metric[" + std::to_string(j) +
                                "][" + std::to_string(i) + "]");
      }
    }
  }
}

}  // namespace

GeneratorFile parse_generator(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected a JSON object");
  const std::string name = as_string(require(doc, "name"), "name");

  const json& coords_json = as_array(require(doc, "coordinates"), "coordinates");
  std::vector<std::string> coords;
  for (std::size_t i = 0; i < coords_json.size(); ++i)
    coords.push_back(as_string(coords_json[i], indexed("coordinates", i)));

  const json& dim = require(doc, "dimension");
  if (!dim.is_number_integer() || dim.get<long long>() < 1)
    throw SchemaError("dimension", "expected a positive integer");
  if (static_cast<std::size_t>(dim.get<long long>()) != coords.size())
    throw SchemaError("dimension", "does not match the number of coordinates (" +
                                       std::to_string(coords.size()) + ")");
  const int d = static_cast<int>(coords.size());

  std::vector<CoordinateChart::Parameter> params;
  if (doc.contains("parameters")) {
    const json& p = doc.at("parameters");
    if (!p.is_object()) throw SchemaError("parameters", "expected an object");
    for (auto it = p.begin(); it != p.end(); ++it)
      params.emplace_back(it.key(), as_number(it.value(), "parameters." + it.key()));
  }

  const CoordinateChart chart = with_path("coordinates", [&] {
    return CoordinateChart(coords, params);
  });

  const json& metric_json = as_array(require(doc, "metric"), "metric", d);
  std::vector<Expr> components;
  for (int i = 0; i < d; ++i) {
    const std::string row_path = indexed("metric", i);
    const json& row = as_array(metric_json[i], row_path, d);
    for (int j = 0; j < d; ++j) {
      const std::string path = indexed(row_path, j);
      const std::string src = as_string(row[j], path);
      components.push_back(with_path(path, [&] { return parse(src, chart); }));
    }
  }
  MetricField metric = with_path("metric", [&] { return MetricField(chart, std::move(components)); });

  const std::string f_src = as_string(require(doc, "scalar_field"), "scalar_field");
  Expr F = with_path("scalar_field", [&] { return parse(f_src, chart); });

  std::vector<DomainConstraint> constraints;
  if (doc.contains("domain")) {
    const json& dom = as_array(doc.at("domain"), "domain");
    for (std::size_t k = 0; k < dom.size(); ++k) {
      const std::string path = indexed("domain", k);
      const std::string src = as_string(dom[k], path);
      constraints.push_back(with_path(path, [&] { return parse_constraint(src, chart); }));
    }
  }

  GeneratorFile file{MongeGenerator(name, std::move(metric), std::move(F), std::move(constraints)),
                     {}};
  if (doc.contains("samples")) file.samples = parse_samples(doc.at("samples"), d);
  check_pointwise_symmetry(file.generator, file.samples);
  return file;
}

GeneratorFile load_generator(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open generator file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_generator(doc);
}

nlohmann::ordered_json generator_to_json(const MongeGenerator& gen, const SampleSpec& samples) {
  nlohmann::ordered_json doc;
  const int d = gen.dimension();
  doc["name"] = gen.name();
  doc["dimension"] = d;
  doc["coordinates"] = gen.chart().coordinates();
  doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : gen.chart().parameters()) doc["parameters"][k] = v;
  auto metric = nlohmann::ordered_json::array();
  for (int i = 0; i < d; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < d; ++j) row.push_back(gen.metric().component(i, j).source());
    metric.push_back(std::move(row));
  }
  doc["metric"] = std::move(metric);
  doc["scalar_field"] = gen.scalar_field().source();
  doc["domain"] = nlohmann::ordered_json::array();
  for (const auto& c : gen.constraints()) doc["domain"].push_back(c.source);
  if (samples.is_grid()) {
    auto ranges = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : samples.ranges) ranges.push_back({lo, hi});
    doc["samples"]["grid"]["ranges"] = std::move(ranges);
    doc["samples"]["grid"]["counts"] = samples.counts;
  } else if (!samples.points.empty()) {
    doc["samples"]["points"] = samples.points;
  }
  return doc;
}

}  // namespace lightlike
