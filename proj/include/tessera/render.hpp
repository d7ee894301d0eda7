// render.hpp - SVG emission of level-set tessellations and float critical-set
// preimages for general rotation angles
#pragma once

#include <tessera/necklace.hpp>

#include <string>
#include <vector>

namespace tessera {

struct Window {
  double x0 = -5, x1 = 5, y0 = -5, y1 = 5;
};

struct RenderOptions {
  bool labels = false;
  int palette_size = 12;
  double stroke_width = 0.03;
};

struct ScenePolygon {
  std::vector<std::pair<double, double>> points;  // clipped, math orientation
  long long level = 0;
  std::string fill;
  std::string stroke;
  double stroke_width = 0.03;
  std::string label;  // empty = none
  double label_x = 0, label_y = 0;
};

struct SceneSegment {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  std::string stroke;
  double width = 0.02;
};

// Everything drawn is clipped to the window before it lands here.
struct Scene {
  Window window;
  std::vector<ScenePolygon> polygons;
  std::vector<SceneSegment> segments;
};

// Tiles meeting the window, clipped exactly, filled by a color keyed to the
// level (equal fill iff equal level within one scene), optionally labeled
// "level (center period)". Tiles are ordered by address.
Scene levels_scene(NamedCase c, const Window& win, const RenderOptions& opts = {});

struct Segment {
  double x0, y0, x1, y1;
};

// Float segments approximating the i-th preimage of the discontinuity line.
struct SegmentSet {
  int generation = 0;
  std::vector<Segment> segments;
};

struct FractalOptions {
  double split_tolerance = 1e-9;  // split-point location tolerance
  double min_segment = 1e-6;      // shorter pieces are discarded
};

// Generation 0 is y=0 clipped to a safe window; generation i+1 applies the
// float inverse map branchwise, splitting where sin(a) x + cos(a) y changes
// sign (the inverse's discontinuity).
std::vector<SegmentSet> critical_preimages(double alpha, int depth, const Window& win,
                                           const FractalOptions& opts = {});

// All generations as strokes, later ones thinner and lighter.
Scene fractal_scene(double alpha, int depth, const Window& win,
                    const FractalOptions& opts = {});

// Deterministic serialization: byte-identical for identical scenes.
std::string emit_svg(const Scene& scene);

std::string render_levels(NamedCase c, const Window& win, const RenderOptions& opts = {});
std::string render_fractal(double alpha, int depth, const Window& win,
                           const FractalOptions& opts = {});

}  // namespace tessera
