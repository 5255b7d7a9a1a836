#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "cubebrick/error.hpp"
#include "cubebrick/svg.hpp"

using namespace cubebrick;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::vector<double> areas(const SvgScene& scene, const std::string& panel) {
  std::vector<double> out;
  for (const auto& p : scene.polygons) {
    if (p.klass == "piece" && p.panel == panel) out.push_back(polygon_area(p.points));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("mode names") {
  for (auto m : {SvgMode::Rectangle, SvgMode::Square, SvgMode::Tiling, SvgMode::SideBySide}) {
    CHECK(parse_svg_mode(to_string(m)) == m);
  }
  CHECK_FALSE(parse_svg_mode("circle").has_value());
}

TEST_CASE("a = 1 is a single square") {
  const auto svg = render_dissection_svg(1.0, SvgMode::Square);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(svg.find("points=\"0.000000,0.000000 1.000000,0.000000 1.000000,-1.000000 "
                 "0.000000,-1.000000\"") != std::string::npos);
}

TEST_CASE("sqrt(2) has three pieces in each panel") {
  const auto svg = render_dissection_svg(std::sqrt(2.0), SvgMode::SideBySide);
  CHECK(count(svg, "class=\"piece\" data-panel=\"rectangle\"") == 3);
  CHECK(count(svg, "class=\"piece\" data-panel=\"square\"") == 3);
  CHECK(count(svg, "<text") == 6);
}

TEST_CASE("side-by-side panels hold congruent pieces") {
  for (double a : {1.5, 2.0, 3.7}) {
    const auto scene = build_scene(a, SvgMode::SideBySide);
    const auto r = areas(scene, "rectangle");
    const auto s = areas(scene, "square");
    REQUIRE(r.size() == s.size());
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == doctest::Approx(s[i]).epsilon(1e-12));
  }
}

TEST_CASE("tiling shows 25 ghost squares") {
  const auto svg = render_dissection_svg(2.0, SvgMode::Tiling);
  CHECK(count(svg, "class=\"ghost\"") == 25);
}

TEST_CASE("five percent margin and six-decimal coordinates") {
  const auto scene = build_scene(2.0, SvgMode::Rectangle);
  const auto svg = to_svg(scene);
  const double w = scene.max_x - scene.min_x;
  const double h = scene.max_y - scene.min_y;
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("viewBox=\"([^ ]+) ([^ ]+) ([^ ]+) ([^\"]+)\"")));
  CHECK(std::stod(m[1]) == doctest::Approx(scene.min_x - 0.05 * w).epsilon(1e-6));
  CHECK(std::stod(m[2]) == doctest::Approx(-scene.max_y - 0.05 * h).epsilon(1e-6));
  CHECK(std::stod(m[3]) == doctest::Approx(1.1 * w).epsilon(1e-6));
  CHECK(std::stod(m[4]) == doctest::Approx(1.1 * h).epsilon(1e-6));

  const std::regex points("points=\"([^\"]*)\"");
  const std::regex number("-?[0-9]+\\.([0-9]+)");
  std::size_t seen = 0;
  for (auto p = std::sregex_iterator(svg.begin(), svg.end(), points); p != std::sregex_iterator();
       ++p) {
    const std::string list = (*p)[1];
    for (auto it = std::sregex_iterator(list.begin(), list.end(), number);
         it != std::sregex_iterator(); ++it, ++seen) {
      CHECK((*it)[1].length() == 6);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("deterministic and matches the frozen golden file") {
  const auto a = render_dissection_svg(2.0, SvgMode::SideBySide);
  CHECK(a == render_dissection_svg(2.0, SvgMode::SideBySide));
  std::ifstream in(CUBEBRICK_GOLDEN_DIR "/svg_a2_side_by_side.svg");
  REQUIRE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(a == golden.str());
}

TEST_CASE("palette cycles") {
  CHECK(std::string(palette_color(0)) == palette_color(kPaletteSize));
  CHECK(std::string(palette_color(0)) != palette_color(1));
}

TEST_CASE("invalid aspect") {
  CHECK_THROWS_AS(render_dissection_svg(0.5, SvgMode::Square), Error);
}
