// test_render.cpp - SVG structure, determinism, color keying and the
// critical-preimage construction against the exact grid

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tessera/oracle.hpp>
#include <tessera/render.hpp>

#include <cmath>
#include <map>
#include <regex>
#include <sstream>
#include <functional>
#include <set>

using namespace tessera;

namespace {

// fill color per lvl-class from the rendered document
std::map<long long, std::set<std::string>> fills_by_level(const std::string& svg) {
  std::map<long long, std::set<std::string>> out;
  std::regex re("<polygon class=\"lvl-(-?\\d+)\"[^>]*fill=\"(#[0-9a-f]{6})\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it)
    out[std::stoll((*it)[1])].insert((*it)[2]);
  return out;
}

std::map<long long, long long> polygon_counts(const std::string& svg) {
  std::map<long long, long long> out;
  std::regex re("<polygon class=\"lvl-(-?\\d+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it)
    ++out[std::stoll((*it)[1])];
  return out;
}

}  // namespace

TEST_CASE("svg is well-formed enough: header, viewBox, balanced root") {
  Window win{-5, 5, -5, 5};
  std::string svg = render_levels(NamedCase::pi2, win);
  CHECK(svg.find("<?xml") == 0);
  CHECK(svg.find("viewBox=\"-5.000000 -5.000000 10.000000 10.000000\"") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  CHECK_THROWS_AS(render_levels(NamedCase::pi2, Window{1, 1, 0, 2}), std::invalid_argument);
}

TEST_CASE("byte-identical output across runs") {
  Window win{-4, 4, -4, 4};
  RenderOptions opts;
  opts.labels = true;
  for (NamedCase c : {NamedCase::pi2, NamedCase::two_pi3, NamedCase::pi3})
    CHECK(render_levels(c, win, opts) == render_levels(c, win, opts));
  CHECK(render_fractal(1.2566370614359172, 8, win) == render_fractal(1.2566370614359172, 8, win));
}

TEST_CASE("pi2 window holds exactly 4c+2 tiles of each full level") {
  std::string svg = render_levels(NamedCase::pi2, Window{-5, 5, -5, 5});
  std::map<long long, long long> counts = polygon_counts(svg);
  for (long long c = 0; c <= 3; ++c) CHECK(counts[c] == 4 * c + 2);
}

TEST_CASE("equal fill iff equal level, within one rendering") {
  for (NamedCase c : {NamedCase::pi2, NamedCase::two_pi3, NamedCase::pi3}) {
    std::string svg = render_levels(c, Window{-6, 6, -6, 6});
    std::map<long long, std::set<std::string>> fills = fills_by_level(svg);
    CHECK(!fills.empty());
    std::set<std::string> seen;
    for (const auto& [lvl, colors] : fills) {
      CHECK(colors.size() == 1);  // same level, same fill
      CHECK(seen.insert(*colors.begin()).second);  // distinct levels, distinct fills
    }
  }
}

TEST_CASE("level-1 band of the trihex cases") {
  std::string svg = render_levels(NamedCase::two_pi3, Window{-6, 6, -6, 6});
  // 3*1+1 = 4 hexagons at level 1
  CHECK(polygon_counts(svg)[1] == 4);
}

TEST_CASE("labels name the level and the center period") {
  std::string svg = render_levels(NamedCase::pi3, Window{-6, 6, -6, 6}, {true, 12, 0.03});
  // the two level-0 hexagons are fixed tiles: label "0 (1)"
  std::size_t first = svg.find(">0 (1)</text>");
  REQUIRE(first != std::string::npos);
  CHECK(svg.find(">0 (1)</text>", first + 1) != std::string::npos);
}

TEST_CASE("first preimage generation of the quarter-turn case") {
  std::vector<SegmentSet> gens = critical_preimages(M_PI / 2, 1, Window{-5, 5, -5, 5});
  REQUIRE(gens.size() == 2);
  // LC_{-1} = {x=1, y>=0} u {x=-1, y<0}
  REQUIRE(gens[1].segments.size() == 2);
  for (const Segment& s : gens[1].segments) {
    CHECK(std::fabs(std::fabs(s.x0) - 1.0) < 1e-9);
    CHECK(std::fabs(s.x0 - s.x1) < 1e-9);
    bool upper = s.y0 >= -1e-9 && s.y1 >= -1e-9;
    bool lower = s.y0 <= 1e-9 && s.y1 <= 1e-9;
    CHECK((upper || lower));
    if (upper) CHECK(std::fabs(s.x0 - 1.0) < 1e-9);
    if (lower) CHECK(std::fabs(s.x0 + 1.0) < 1e-9);
  }
}

TEST_CASE("every preimage segment lies on a single grid line of its case") {
  // A point is on the case's grid exactly when one of the three floor
  // arguments is an integer; a segment is on the grid when all its points
  // share the same integral argument.
  const double kS3 = 1.7320508075688772;
  auto args_pi2 = [&](double x, double y) { return std::vector<double>{x, y}; };
  auto args_2pi3 = [&](double x, double y) {
    return std::vector<double>{(3 * x - kS3 * y) / 6, kS3 * y / 3, (3 * x + kS3 * y + 3) / 6};
  };
  auto args_pi3 = [&](double x, double y) {
    return std::vector<double>{(3 * x - kS3 * y + 3) / 6, kS3 * y / 3, (3 * x + kS3 * y) / 6};
  };
  struct CasePick {
    double alpha;
    std::function<std::vector<double>(double, double)> args;
  };
  for (const CasePick& pick :
       {CasePick{M_PI / 2, args_pi2}, CasePick{M_PI / 3, args_pi3},
        CasePick{2 * M_PI / 3, args_2pi3}}) {
    std::vector<SegmentSet> gens = critical_preimages(pick.alpha, 6, Window{-4, 4, -4, 4});
    long long segments = 0;
    for (const SegmentSet& g : gens)
      for (const Segment& s : g.segments) {
        ++segments;
        std::vector<double> a0 = pick.args(s.x0, s.y0);
        std::vector<double> a1 = pick.args(s.x1, s.y1);
        std::vector<double> am = pick.args((s.x0 + s.x1) / 2, (s.y0 + s.y1) / 2);
        bool on_line = false;
        for (std::size_t i = 0; i < a0.size(); ++i) {
          double n = std::round(a0[i]);
          if (std::fabs(a0[i] - n) < 1e-7 && std::fabs(a1[i] - n) < 1e-7 &&
              std::fabs(am[i] - n) < 1e-7)
            on_line = true;
        }
        CHECK(on_line);
      }
    CHECK(segments > 10);
  }
}

TEST_CASE("depth-4 preimages cover every grid point with hitting time <= 4") {
  std::vector<SegmentSet> gens = critical_preimages(M_PI / 2, 4, Window{-5, 5, -5, 5});
  auto near_some_segment = [&](double x, double y) {
    for (const SegmentSet& g : gens)
      for (const Segment& s : g.segments) {
        double dx = s.x1 - s.x0, dy = s.y1 - s.y0;
        double len2 = dx * dx + dy * dy;
        double t = len2 == 0 ? 0 : ((x - s.x0) * dx + (y - s.y0) * dy) / len2;
        t = t < 0 ? 0 : (t > 1 ? 1 : t);
        if (std::hypot(x - (s.x0 + t * dx), y - (s.y0 + t * dy)) < 1e-6) return true;
      }
    return false;
  };
  // exact hitting time: first i >= 0 with F^i(p) on y=0
  auto hitting_time = [](const ExactPoint& p, long long cap) {
    ExactPoint q = p;
    for (long long i = 0; i <= cap; ++i) {
      if (q.y.sign() == 0) return i;
      q = f_step(NamedCase::pi2, q);
    }
    return cap + 1;
  };
  int covered = 0, tested = 0;
  for (long long k = -5; k <= 5; ++k)
    for (long long num = -35; num <= 35; ++num) {
      for (bool vertical : {true, false}) {
        ExactPoint p = vertical ? ExactPoint{Qs3(Rat(k)), Qs3(Rat(num, 7))}
                                : ExactPoint{Qs3(Rat(num, 7)), Qs3(Rat(k))};
        if (hitting_time(p, 4) <= 4) {
          ++tested;
          if (near_some_segment(p.x.to_double(), p.y.to_double())) ++covered;
        }
      }
    }
  CHECK(tested > 100);
  CHECK(covered == tested);
}

TEST_CASE("segment counts grow with depth for a generic angle") {
  Window win{-3, 3, -3, 3};
  std::vector<SegmentSet> gens = critical_preimages(2 * M_PI / 5, 12, win);
  REQUIRE(gens.size() == 13);
  CHECK(gens[12].segments.size() > gens[4].segments.size());
  CHECK_THROWS_AS(critical_preimages(0.0, 3, win), std::invalid_argument);
  CHECK_THROWS_AS(critical_preimages(4.0, 3, win), std::invalid_argument);
}

TEST_CASE("fractal svg strokes every generation") {
  std::string svg = render_fractal(2 * M_PI / 5, 6, Window{-3, 3, -3, 3});
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("depth zero keeps only the discontinuity line") {
  std::vector<SegmentSet> gens = critical_preimages(1.0, 0, Window{-2, 2, -2, 2});
  REQUIRE(gens.size() == 1);
  CHECK(gens[0].generation == 0);
  REQUIRE(gens[0].segments.size() == 1);
  CHECK(gens[0].segments[0].y0 == 0.0);
  CHECK(gens[0].segments[0].y1 == 0.0);
}

TEST_CASE("asymmetric windows clip all geometry inside") {
  Window win{0.5, 3.5, -2.0, 1.0};
  for (NamedCase c : {NamedCase::pi2, NamedCase::two_pi3, NamedCase::pi3}) {
    Scene scene = levels_scene(c, win);
    CHECK(!scene.polygons.empty());
    for (const ScenePolygon& poly : scene.polygons)
      for (const auto& [x, y] : poly.points) {
        CHECK(x >= win.x0 - 1e-6);
        CHECK(x <= win.x1 + 1e-6);
        CHECK(y >= win.y0 - 1e-6);
        CHECK(y <= win.y1 + 1e-6);
      }
  }
  Scene fscene = fractal_scene(2 * M_PI / 5, 8, win);
  CHECK(!fscene.segments.empty());
  for (const SceneSegment& s : fscene.segments)
    for (double x : {s.x0, s.x1})
      for (double y : {s.y0, s.y1}) {
        CHECK(x >= win.x0 - 1e-6);
        CHECK(x <= win.x1 + 1e-6);
        CHECK(y >= win.y0 - 1e-6);
        CHECK(y <= win.y1 + 1e-6);
      }
}
