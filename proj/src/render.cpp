// render.cpp - scene construction and deterministic SVG serialization

#include <tessera/render.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace tessera {

namespace {

std::string fmt(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // collapse -0
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

Rat rat_from_double(double v) {
  mpq_class q(v);  // exact binary-to-rational conversion
  return Rat(q.get_num(), q.get_den());
}

double clamp01(double v) { return v < 0 ? 0 : (v > 1 ? 1 : v); }

// HSL to #rrggbb, h in degrees.
std::string hsl_color(double h, double s, double l) {
  h = std::fmod(std::fmod(h, 360.0) + 360.0, 360.0);
  s = clamp01(s);
  l = clamp01(l);
  double c = (1 - std::fabs(2 * l - 1)) * s;
  double hp = h / 60.0;
  double x = c * (1 - std::fabs(std::fmod(hp, 2.0) - 1));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  double m = l - c / 2;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                static_cast<int>(std::lround((g + m) * 255)),
                static_cast<int>(std::lround((b + m) * 255)));
  return buf;
}

// Index-based palette over the levels present: same level always maps to the
// same fill and distinct levels to distinct fills within one scene.
std::string level_color(std::size_t index, std::size_t total, int palette_size) {
  if (palette_size < 1) palette_size = 1;
  std::size_t p = static_cast<std::size_t>(palette_size);
  std::size_t bands = (total + p - 1) / p;
  std::size_t band = index / p;
  double hue = static_cast<double>(index % p) * 360.0 / static_cast<double>(p);
  double light = 0.52;
  if (bands > 1) light = 0.3 + 0.45 * static_cast<double>(band) / static_cast<double>(bands - 1);
  return hsl_color(hue, 0.62, light);
}

void check_window(const Window& w) {
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw std::invalid_argument("empty window");
}

}  // namespace

Scene levels_scene(NamedCase c, const Window& win, const RenderOptions& opts) {
  check_window(win);
  Rat x0 = rat_from_double(win.x0), x1 = rat_from_double(win.x1);
  Rat y0 = rat_from_double(win.y0), y1 = rat_from_double(win.y1);

  std::vector<TileAddress> tiles = tiles_in_window(c, x0, x1, y0, y1);
  std::sort(tiles.begin(), tiles.end());

  std::vector<long long> levels;
  levels.reserve(tiles.size());
  for (const TileAddress& t : tiles) levels.push_back(level_of(c, t));
  std::vector<long long> distinct = levels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<long long, std::string> fill;
  for (std::size_t i = 0; i < distinct.size(); ++i)
    fill[distinct[i]] = level_color(i, distinct.size(), opts.palette_size);

  Scene scene;
  scene.window = win;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    std::vector<ExactPoint> clipped = clip_to_window(tile_polygon(c, tiles[i]), x0, x1, y0, y1);
    if (clipped.size() < 3 || twice_signed_area(clipped).sign() <= 0) continue;
    ScenePolygon poly;
    poly.level = levels[i];
    poly.fill = fill[levels[i]];
    poly.stroke = "#303030";
    poly.stroke_width = opts.stroke_width;
    for (const ExactPoint& v : clipped)
      poly.points.emplace_back(v.x.to_double(), v.y.to_double());
    if (opts.labels) {
      ExactPoint ctr = tile_center(c, tiles[i]);
      bool inside = (ctr.x - Qs3(x0)).sign() > 0 && (Qs3(x1) - ctr.x).sign() > 0 &&
                    (ctr.y - Qs3(y0)).sign() > 0 && (Qs3(y1) - ctr.y).sign() > 0;
      if (inside) {
        poly.label = std::to_string(levels[i]) + " (" +
                     std::to_string(center_period(c, levels[i])) + ")";
        poly.label_x = ctr.x.to_double();
        poly.label_y = ctr.y.to_double();
      }
    }
    scene.polygons.push_back(std::move(poly));
  }
  return scene;
}

std::string emit_svg(const Scene& scene) {
  const Window& win = scene.window;
  check_window(win);
  double w = win.x1 - win.x0, h = win.y1 - win.y0;
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(win.x0) + " " +
         fmt(-win.y1) + " " + fmt(w) + " " + fmt(h) + "\">\n";
  svg += "<rect x=\"" + fmt(win.x0) + "\" y=\"" + fmt(-win.y1) + "\" width=\"" + fmt(w) +
         "\" height=\"" + fmt(h) + "\" fill=\"#ffffff\"/>\n";
  std::string labels;
  for (const ScenePolygon& poly : scene.polygons) {
    svg += "<polygon class=\"lvl-" + std::to_string(poly.level) + "\" points=\"";
    for (std::size_t v = 0; v < poly.points.size(); ++v) {
      if (v) svg += " ";
      svg += fmt(poly.points[v].first) + "," + fmt(-poly.points[v].second);
    }
    svg += "\" fill=\"" + poly.fill + "\" stroke=\"" + poly.stroke + "\" stroke-width=\"" +
           fmt(poly.stroke_width) + "\"/>\n";
    if (!poly.label.empty())
      labels += "<text x=\"" + fmt(poly.label_x) + "\" y=\"" + fmt(-poly.label_y + 0.08) +
                "\" font-size=\"0.22\" font-family=\"sans-serif\" text-anchor=\"middle\" "
                "fill=\"#000000\">" +
                poly.label + "</text>\n";
  }
  for (const SceneSegment& s : scene.segments)
    svg += "<line x1=\"" + fmt(s.x0) + "\" y1=\"" + fmt(-s.y0) + "\" x2=\"" + fmt(s.x1) +
           "\" y2=\"" + fmt(-s.y1) + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" +
           fmt(s.width) + "\"/>\n";
  svg += labels;
  svg += "</svg>\n";
  return svg;
}

std::string render_levels(NamedCase c, const Window& win, const RenderOptions& opts) {
  return emit_svg(levels_scene(c, win, opts));
}

namespace {

struct FSeg {
  double x0, y0, x1, y1;
  double length() const { return std::hypot(x1 - x0, y1 - y0); }
};

// Liang-Barsky clip of a segment to an axis-aligned box.
bool clip_segment(FSeg& s, double X0, double X1, double Y0, double Y1) {
  double t0 = 0, t1 = 1;
  double dx = s.x1 - s.x0, dy = s.y1 - s.y0;
  auto pass = [&](double p, double q) {
    if (p == 0) return q >= 0;
    double r = q / p;
    if (p < 0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  if (!pass(-dx, s.x0 - X0)) return false;
  if (!pass(dx, X1 - s.x0)) return false;
  if (!pass(-dy, s.y0 - Y0)) return false;
  if (!pass(dy, Y1 - s.y0)) return false;
  double nx0 = s.x0 + t0 * dx, ny0 = s.y0 + t0 * dy;
  double nx1 = s.x0 + t1 * dx, ny1 = s.y0 + t1 * dy;
  s = {nx0, ny0, nx1, ny1};
  return true;
}

}  // namespace

std::vector<SegmentSet> critical_preimages(double alpha, int depth, const Window& win,
                                           const FractalOptions& opts) {
  check_window(win);
  if (!(alpha > 0) || !(alpha < 3.14159265358979323846))
    throw std::invalid_argument("alpha must lie in (0, pi)");
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");

  double co = std::cos(alpha), si = std::sin(alpha);
  // Preimages move points by at most 1 per step, so a window inflated by
  // depth+2 keeps every preimage that can reach the view.
  double margin = depth + 2.0;
  double X0 = win.x0 - margin, X1 = win.x1 + margin;
  double Y0 = win.y0 - margin, Y1 = win.y1 + margin;

  std::vector<SegmentSet> out;
  out.push_back(SegmentSet{0, {Segment{X0, 0.0, X1, 0.0}}});

  for (int gen = 1; gen <= depth; ++gen) {
    std::vector<Segment> next;
    for (const Segment& seg : out.back().segments) {
      // Split where w = sin(a) x + cos(a) y changes sign, the discontinuity
      // of the inverse branch selection.
      double w0 = si * seg.x0 + co * seg.y0;
      double w1 = si * seg.x1 + co * seg.y1;
      std::vector<FSeg> pieces;
      if ((w0 < 0) != (w1 < 0) && std::fabs(w0 - w1) > opts.split_tolerance) {
        double t = w0 / (w0 - w1);
        double mx = seg.x0 + t * (seg.x1 - seg.x0);
        double my = seg.y0 + t * (seg.y1 - seg.y0);
        pieces.push_back({seg.x0, seg.y0, mx, my});
        pieces.push_back({mx, my, seg.x1, seg.y1});
      } else {
        pieces.push_back({seg.x0, seg.y0, seg.x1, seg.y1});
      }
      for (const FSeg& piece : pieces) {
        double wm = si * (piece.x0 + piece.x1) / 2 + co * (piece.y0 + piece.y1) / 2;
        double s = wm >= 0 ? 1.0 : -1.0;
        // F^{-1}(p) = R_{-a} p + (sign(w), 0)
        FSeg m{co * piece.x0 - si * piece.y0 + s, si * piece.x0 + co * piece.y0,
               co * piece.x1 - si * piece.y1 + s, si * piece.x1 + co * piece.y1};
        if (m.length() < opts.min_segment) continue;
        if (!clip_segment(m, X0, X1, Y0, Y1)) continue;
        if (m.length() < opts.min_segment) continue;
        next.push_back({m.x0, m.y0, m.x1, m.y1});
      }
    }
    out.push_back(SegmentSet{gen, std::move(next)});
  }
  return out;
}

Scene fractal_scene(double alpha, int depth, const Window& win, const FractalOptions& opts) {
  std::vector<SegmentSet> gens = critical_preimages(alpha, depth, win, opts);
  Scene scene;
  scene.window = win;
  for (const SegmentSet& g : gens) {
    double frac = depth > 0 ? static_cast<double>(g.generation) / depth : 0.0;
    double width = 0.028 * std::pow(0.9, g.generation) + 0.002;
    int gray = static_cast<int>(std::lround(32 + 120 * frac));
    char color[8];
    std::snprintf(color, sizeof(color), "#%02x%02x%02x", gray, gray, gray);
    for (const Segment& s : g.segments) {
      FSeg f{s.x0, s.y0, s.x1, s.y1};
      if (!clip_segment(f, win.x0, win.x1, win.y0, win.y1)) continue;
      scene.segments.push_back(SceneSegment{f.x0, f.y0, f.x1, f.y1, color, width});
    }
  }
  return scene;
}

std::string render_fractal(double alpha, int depth, const Window& win,
                           const FractalOptions& opts) {
  return emit_svg(fractal_scene(alpha, depth, win, opts));
}

}  // namespace tessera
