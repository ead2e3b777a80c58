#include <doctest.h>

#include <algorithm>
#include <array>

#include "lightlike/catalog.hpp"
#include "lightlike/report.hpp"
#include "support.hpp"

using namespace lightlike;

TEST_SUITE("catalog") {

TEST_CASE("listing is stable and complete") {
  const auto list = list_builtins();
  REQUIRE(list.size() == 6);
  std::vector<std::string> names;
  for (const auto& l : list) {
    names.push_back(l.name);
    CHECK_FALSE(l.description.empty());
  }
  CHECK(names == std::vector<std::string>{"hyperbolic2", "hyperbolic3", "schwarzschild_tr",
                                          "euclid_hyperplane", "euclid_cone",
                                          "nonlightlike_control"});
  CHECK(list_builtins()[2].name == list[2].name);
}

TEST_CASE("expected values") {
  CHECK(builtin("hyperbolic2").expected.umbilic_rho == "1");
  CHECK(builtin("schwarzschild_tr").expected.umbilic_rho == "-R/(2*r^(3/2)*sqrt(r-R))");
  CHECK_FALSE(builtin("nonlightlike_control").expected.degenerate);
  CHECK(builtin("nonlightlike_control").expected.lightlike_defect == 3.0);
  CHECK(builtin("euclid_cone").expected.umbilic_rho == "-1/sqrt(x^2 + y^2)");
  CHECK(builtin("hyperbolic3").generator.dimension() == 3);
}

TEST_CASE("unknown names list the valid ones") {
  try {
    builtin("hyperbolic4");
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find("hyperbolic4") != std::string::npos);
    for (const auto& l : list_builtins()) CHECK(what.find(l.name) != std::string::npos);
  }
}

TEST_CASE("parameter overrides rescale the Schwarzschild grid") {
  const std::array<CoordinateChart::Parameter, 1> R2{{{"R", 2.0}}};
  const CatalogEntry e = builtin("schwarzschild_tr", R2);
  CHECK(e.generator.params()[0] == 2.0);
  CHECK(e.default_samples.ranges[1] == std::pair<double, double>{3.0, 20.0});
  const std::array<CoordinateChart::Parameter, 1> bad{{{"R", -1.0}}};
  CHECK_THROWS(builtin("schwarzschild_tr", bad));
  CHECK_THROWS(builtin("hyperbolic2", R2));
}

TEST_CASE("every entry reproduces its expected verdicts and closed forms") {
  for (const auto& l : list_builtins()) {
    const CatalogEntry entry = builtin(l.name);
    const MongeGenerator& gen = entry.generator;
    const auto pts = grid_sample(gen, entry.default_samples);
    const ClassificationReport r = classify(gen, pts);
    INFO(l.name);
    CHECK(r.failed == 0);
    CHECK((r.degenerate.state == VerdictState::True) == entry.expected.degenerate);
    auto agrees = [](const Verdict& v, std::optional<bool> want) {
      return !want || v.state == (*want ? VerdictState::True : VerdictState::False);
    };
    CHECK(agrees(r.totally_geodesic, entry.expected.totally_geodesic));
    CHECK(agrees(r.totally_umbilical, entry.expected.totally_umbilical));
    CHECK(agrees(r.minimal, entry.expected.minimal));

    auto closed = [&](const std::optional<std::string>& src, auto get) {
      if (!src) return;
      const Expr e = parse(*src, gen.chart());
      for (const auto& p : r.points) {
        const double want = evaluate(
            e, std::span<const double>(p.point.base.data(), p.point.base.size()), gen.params());
        CHECK(get(*p.analysis) == doctest::Approx(want).epsilon(1e-10).scale(1));
      }
    };
    closed(entry.expected.umbilic_rho, [](const PointAnalysis& a) { return a.umbilic->rho; });
    closed(entry.expected.minimal_defect, [](const PointAnalysis& a) { return *a.minimal_defect; });
    if (entry.expected.lightlike_defect)
      for (const auto& p : r.points)
        CHECK(p.analysis->lightlike_defect == *entry.expected.lightlike_defect);
  }
}

TEST_CASE("entries round-trip through the generator file format") {
  for (const auto& l : list_builtins()) {
    const CatalogEntry entry = builtin(l.name);
    const auto doc = generator_to_json(entry.generator, entry.default_samples);
    const GeneratorFile back = parse_generator(nlohmann::ordered_json::parse(doc.dump()));
    INFO(l.name);
    CHECK(back.generator == entry.generator);
    CHECK(back.samples == entry.default_samples);
    CHECK(generator_to_json(back.generator, back.samples).dump() == doc.dump());
  }
}

}  // TEST_SUITE
