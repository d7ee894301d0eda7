// tiling.hpp - tile addressing, critical-set membership and the quantized
// first integrals for the square and trihexagonal tessellations
#pragma once

#include <tessera/map.hpp>

#include <vector>

namespace tessera {

struct CriticalPointError : std::runtime_error {
  explicit CriticalPointError(const std::string& what) : std::runtime_error(what) {}
};

enum class TileShape { Square, Hexagon, TriangleUp, TriangleDown };

const char* shape_name(TileShape s);

// (k,l) square address or (k,l,m) trihexagonal address.
struct TileAddress {
  bool trihex = false;
  long long k = 0, l = 0, m = 0;

  static TileAddress square(long long k, long long l) { return {false, k, l, 0}; }
  static TileAddress tri(long long k, long long l, long long m) { return {true, k, l, m}; }

  friend bool operator==(const TileAddress& a, const TileAddress& b) {
    return a.trihex == b.trihex && a.k == b.k && a.l == b.l && (!a.trihex || a.m == b.m);
  }
  friend auto operator<=>(const TileAddress& a, const TileAddress& b) {
    if (auto c = a.trihex <=> b.trihex; c != 0) return c;
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.l <=> b.l; c != 0) return c;
    return a.trihex ? a.m <=> b.m : std::strong_ordering::equal;
  }

  std::string to_string() const;
};

// The three floor coordinates of the trihexagonal addressing. For pi2 only
// the first two are meaningful (k = E(x), l = E(y)).
struct FloorCoords {
  Integer b, c, d;
};
FloorCoords floor_coords(NamedCase c, const ExactPoint& p);

// True iff p lies on the case's grid of critical lines, decided by exact
// integrality of the floor arguments (one predicate per line family).
bool is_critical(NamedCase c, const ExactPoint& p);

// The unique open tile containing a non-critical point.
// Throws CriticalPointError when p lies on the grid.
TileAddress locate(NamedCase c, const ExactPoint& p);

// Quantized first integral. Total as a formula; it is a first integral of F
// only off the critical set.
long long level(NamedCase c, const ExactPoint& p);

// Level of a tile, from its address alone.
long long level_of(NamedCase c, const TileAddress& t);

ExactPoint tile_center(NamedCase c, const TileAddress& t);
TileShape tile_shape(NamedCase c, const TileAddress& t);

// Vertices counter-clockwise; all of them satisfy is_critical.
std::vector<ExactPoint> tile_polygon(NamedCase c, const TileAddress& t);

// All tiles whose closed polygon contains p: one tile for interior points,
// two for edge points, four for vertices.
std::vector<TileAddress> tiles_at(NamedCase c, const ExactPoint& p);

// True iff p is a vertex of the tessellation.
bool is_tiling_vertex(NamedCase c, const ExactPoint& p);

// Tiles whose intersection with [x0,x1] x [y0,y1] has positive area.
std::vector<TileAddress> tiles_in_window(NamedCase c, const Rat& x0, const Rat& x1,
                                         const Rat& y0, const Rat& y1);

// Exact Sutherland-Hodgman clip of a convex polygon against the window.
std::vector<ExactPoint> clip_to_window(const std::vector<ExactPoint>& poly, const Rat& x0,
                                       const Rat& x1, const Rat& y0, const Rat& y1);

// Twice the signed area (shoelace), exact.
Qs3 twice_signed_area(const std::vector<ExactPoint>& poly);

// True iff p lies inside or on the boundary of a convex CCW polygon.
bool point_in_closed_polygon(const std::vector<ExactPoint>& poly, const ExactPoint& p);

}  // namespace tessera
