// necklace.cpp - level-set rings, bead congruences and period classification

#include <tessera/necklace.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tessera {

namespace {

void check_level(long long lvl) {
  if (lvl < 0) throw std::invalid_argument("level must be >= 0");
  if (lvl > (1LL << 52)) throw std::overflow_error("level too large");
}

}  // namespace

long long bead_count(NamedCase c, long long lvl) {
  check_level(lvl);
  switch (c) {
    case NamedCase::pi2: return 4 * lvl + 2;
    case NamedCase::two_pi3: return lvl % 2 ? 3 * lvl + 1 : 6 * lvl + 2;
    case NamedCase::pi3: return lvl % 2 ? 6 * lvl + 4 : 3 * lvl + 2;
  }
  throw std::logic_error("unreachable");
}

long long bead_step(NamedCase c, long long lvl) {
  check_level(lvl);
  switch (c) {
    case NamedCase::pi2: return lvl;
    case NamedCase::two_pi3: return lvl % 2 ? lvl : 2 * lvl;
    case NamedCase::pi3: return lvl % 2 ? lvl : lvl / 2;
  }
  throw std::logic_error("unreachable");
}

long long center_period(NamedCase c, long long lvl) {
  check_level(lvl);
  switch (c) {
    case NamedCase::pi2: return lvl % 2 ? 4 * lvl + 2 : 2 * lvl + 1;
    case NamedCase::two_pi3: return 3 * lvl + 1;
    case NamedCase::pi3:
      if (lvl % 4 == 0) return 3 * lvl / 2 + 1;
      return lvl % 2 ? 6 * lvl + 4 : 3 * lvl + 2;
  }
  throw std::logic_error("unreachable");
}

long long noncenter_period(NamedCase c, long long lvl) {
  check_level(lvl);
  switch (c) {
    case NamedCase::pi2: return 8 * lvl + 4;
    case NamedCase::two_pi3: return 9 * lvl + 3;
    case NamedCase::pi3: return lvl % 2 ? 18 * lvl + 12 : 9 * lvl + 6;
  }
  throw std::logic_error("unreachable");
}

int rotation_order(NamedCase c, long long lvl) {
  check_level(lvl);
  switch (c) {
    case NamedCase::pi2: return lvl % 2 ? 2 : 4;
    case NamedCase::two_pi3: return 3;
    case NamedCase::pi3: return lvl % 4 == 0 ? 6 : 3;
  }
  throw std::logic_error("unreachable");
}

int center_orbit_count(NamedCase c, long long lvl) {
  check_level(lvl);
  switch (c) {
    case NamedCase::pi2:
    case NamedCase::two_pi3: return lvl % 2 ? 1 : 2;
    case NamedCase::pi3: return lvl % 4 == 0 ? 2 : 1;
  }
  throw std::logic_error("unreachable");
}

namespace {

// Counter-clockwise angular order around the origin, ties on a common ray
// broken by radius. The rings never contain the origin.
bool ccw_less(const ExactPoint& p, const ExactPoint& q) {
  auto half = [](const ExactPoint& r) {
    int sy = r.y.sign();
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    return r.x.sign() > 0 ? 0 : 1;
  };
  int hp = half(p), hq = half(q);
  if (hp != hq) return hp < hq;
  int cross = (p.x * q.y - q.x * p.y).sign();
  if (cross != 0) return cross > 0;
  return (p.x * p.x + p.y * p.y) < (q.x * q.x + q.y * q.y);
}

}  // namespace

std::vector<ExactPoint> centers_at_level(NamedCase c, long long lvl) {
  check_level(lvl);
  std::vector<ExactPoint> pts;
  long long span = lvl + 3;
  if (c == NamedCase::pi2) {
    for (long long k = -span; k <= span; ++k)
      for (long long l = -span; l <= span; ++l) {
        TileAddress t = TileAddress::square(k, l);
        if (level_of(c, t) == lvl) pts.push_back(tile_center(c, t));
      }
  } else {
    for (long long k = -span; k <= span; ++k)
      for (long long l = -span; l <= span; ++l)
        for (long long off = (c == NamedCase::two_pi3 ? 0 : -1);
             off <= (c == NamedCase::two_pi3 ? 2 : 1); ++off) {
          TileAddress t = TileAddress::tri(k, l, k + l + off);
          if (level_of(c, t) == lvl) pts.push_back(tile_center(c, t));
        }
  }
  // Clockwise order = reversed counter-clockwise order.
  std::sort(pts.begin(), pts.end(), ccw_less);
  std::reverse(pts.begin(), pts.end());
  // First bead: the H+ center with smallest x, ties broken by largest y.
  std::size_t first = 0;
  bool found = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].y.sign() < 0) continue;
    if (!found || pts[i].x < pts[first].x ||
        (pts[i].x == pts[first].x && pts[first].y < pts[i].y)) {
      first = i;
      found = true;
    }
  }
  if (found) std::rotate(pts.begin(), pts.begin() + static_cast<long>(first), pts.end());
  return pts;
}

Necklace necklace(NamedCase c, long long lvl) {
  Necklace n;
  n.map_case = c;
  n.level = lvl;
  n.bead_centers = centers_at_level(c, lvl);
  n.beads.reserve(n.bead_centers.size());
  for (const ExactPoint& p : n.bead_centers) n.beads.push_back(locate(c, p));
  n.bead_count = bead_count(c, lvl);
  if (static_cast<long long>(n.beads.size()) != n.bead_count)
    throw std::logic_error("necklace bead count mismatch at level " + std::to_string(lvl));
  n.step = bead_step(c, lvl);
  n.center_period = center_period(c, lvl);
  n.noncenter_period = noncenter_period(c, lvl);
  n.rotation_order = rotation_order(c, lvl);
  n.center_orbit_count = center_orbit_count(c, lvl);
  return n;
}

namespace {

const Necklace& cached_necklace(NamedCase c, long long lvl) {
  static std::mutex mu;
  static std::map<std::pair<int, long long>, std::unique_ptr<Necklace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(c), lvl);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Necklace>(necklace(c, lvl))).first;
  return *it->second;
}

}  // namespace

std::vector<long long> perfect_beads(NamedCase c, long long lvl) {
  check_level(lvl);
  std::vector<long long> out;
  switch (c) {
    case NamedCase::pi2:
      if (lvl % 2) throw std::domain_error("no perfect beads at this level");
      for (long long i = 1; i <= 4 * lvl + 1; i += 2) out.push_back(i);
      return out;
    case NamedCase::two_pi3: {
      if (lvl % 2) throw std::domain_error("no perfect beads at this level");
      const Necklace& n = cached_necklace(c, lvl);
      for (std::size_t i = 0; i < n.beads.size(); ++i)
        if (tile_shape(c, n.beads[i]) == TileShape::TriangleUp)
          out.push_back(static_cast<long long>(i) + 1);
      return out;
    }
    case NamedCase::pi3:
      if (lvl % 4) throw std::domain_error("no perfect beads at this level");
      for (long long i = 1; i <= 3 * lvl + 1; i += 2) out.push_back(i);
      return out;
  }
  throw std::logic_error("unreachable");
}

long long bead_index(NamedCase c, const TileAddress& t) {
  const Necklace& n = cached_necklace(c, level_of(c, t));
  for (std::size_t i = 0; i < n.beads.size(); ++i)
    if (n.beads[i] == t) return static_cast<long long>(i) + 1;
  throw std::logic_error("tile not found in its necklace: " + t.to_string());
}

long long square_bead_index(long long k, long long l) {
  long long c = std::max(std::abs(k + l + 1) - 1, std::abs(k - l));
  if (c == 0) return k == 0 ? 1 : 2;
  if (k < 0 && l >= 0) return k + c + 1;        // on y = x + c
  if (k >= 0 && l >= 0) return c + 1 + k;       // on y = -x + c + 1
  if (k >= 0) return 2 * c + 2 + (c - 1 - k);   // on y = x - c
  return 3 * c + 2 + (-1 - k);                  // on y = -x - c - 1
}

bool is_perfect_tile(NamedCase c, const TileAddress& t) {
  long long lvl = level_of(c, t);
  switch (c) {
    case NamedCase::pi2:
      return lvl % 2 == 0 && square_bead_index(t.k, t.l) % 2 == 1;
    case NamedCase::two_pi3:
      return lvl % 2 == 0 && tile_shape(c, t) == TileShape::TriangleUp;
    case NamedCase::pi3:
      return lvl % 4 == 0 && tile_shape(c, t) == TileShape::Hexagon &&
             bead_index(c, t) % 2 == 1;
  }
  throw std::logic_error("unreachable");
}

const char* category_name(PointCategory c) {
  switch (c) {
    case PointCategory::FixedTileCenter: return "FixedTileCenter";
    case PointCategory::TileInterior: return "TileInterior";
    case PointCategory::PerfectBoundary: return "PerfectBoundary";
    case PointCategory::NonPerfectEdge: return "NonPerfectEdge";
    case PointCategory::Vertex: return "Vertex";
  }
  throw std::logic_error("unreachable");
}

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::None: return "none";
    case VertexKind::Perfect: return "perfect";
    case VertexKind::TriangleBelow: return "triangle-below";
    case VertexKind::TriangleAbove: return "triangle-above";
  }
  throw std::logic_error("unreachable");
}

namespace {

bool integer_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

// Level of the square tile (k, l), directly from the address.
long long square_level(const Integer& k, const Integer& l) {
  Integer s = k + l + 1;
  Integer a = (s < 0 ? Integer(-s) : s) - 1;
  Integer d = k - l;
  Integer b = d < 0 ? Integer(-d) : d;
  return to_i64(a > b ? a : b);
}

PeriodReport classify_pi2_critical(const ExactPoint& p) {
  PeriodReport r;
  r.point = p;
  bool xi = p.x.is_integer();
  bool yi = p.y.is_integer();
  Integer k = p.x.floor();
  Integer l = p.y.floor();
  Integer kk = (xi && !integer_even(k)) ? Integer(k - 1) : k;
  Integer ll = (yi && !integer_even(l)) ? Integer(l - 1) : l;
  long long lvl = square_level(kk, ll);
  r.analytic_period = 8 * lvl + 4;
  if (xi && yi) {
    // Every tessellation vertex belongs to exactly one perfect square.
    r.category = PointCategory::Vertex;
    r.vertex_kind = VertexKind::Perfect;
    return r;
  }
  // Open edge: perfect when one of the two adjacent squares is perfect.
  TileAddress a = xi ? TileAddress::square(to_i64(k) - 1, to_i64(l))
                     : TileAddress::square(to_i64(k), to_i64(l) - 1);
  TileAddress b = TileAddress::square(to_i64(k), to_i64(l));
  bool perfect = is_perfect_tile(NamedCase::pi2, a) || is_perfect_tile(NamedCase::pi2, b);
  r.category = perfect ? PointCategory::PerfectBoundary : PointCategory::NonPerfectEdge;
  return r;
}

PeriodReport classify_2pi3_critical(const ExactPoint& p) {
  const NamedCase c = NamedCase::two_pi3;
  PeriodReport r;
  r.point = p;
  std::vector<TileAddress> adj = tiles_at(c, p);
  if (is_tiling_vertex(c, p)) {
    // All vertices belong to a unique upward (perfect) triangle.
    for (const TileAddress& t : adj)
      if (tile_shape(c, t) == TileShape::TriangleUp) {
        r.category = PointCategory::Vertex;
        r.vertex_kind = VertexKind::Perfect;
        r.analytic_period = 9 * level_of(c, t) + 3;
        return r;
      }
    throw std::logic_error("2pi3 vertex without adjacent upward triangle at " + p.to_string());
  }
  // An open edge separates a triangle from a hexagon. Upward triangles are
  // perfect and own their edges; otherwise the hexagon does.
  const TileAddress* hex = nullptr;
  for (const TileAddress& t : adj) {
    TileShape s = tile_shape(c, t);
    if (s == TileShape::TriangleUp) {
      r.category = PointCategory::PerfectBoundary;
      r.analytic_period = 9 * level_of(c, t) + 3;
      return r;
    }
    if (s == TileShape::Hexagon) hex = &t;
  }
  if (!hex) throw std::logic_error("2pi3 edge without adjacent hexagon at " + p.to_string());
  r.category = PointCategory::NonPerfectEdge;
  r.analytic_period = 9 * level_of(c, *hex) + 3;
  return r;
}

// Classification of a pi3 critical point lying exactly on y = 0 and not on
// a perfect hexagon. Vertices see one hexagon and one upward triangle from
// above; the pair of their levels decides the period family.
PeriodReport classify_pi3_axis(const ExactPoint& q) {
  const NamedCase c = NamedCase::pi3;
  PeriodReport r;
  r.point = q;
  std::vector<TileAddress> adj = tiles_at(c, q);
  if (is_tiling_vertex(c, q)) {
    long long hex_lvl = -1, tri_lvl = -1;
    for (const TileAddress& t : adj) {
      if (tile_center(c, t).y.sign() <= 0) continue;  // top side only
      TileShape s = tile_shape(c, t);
      if (s == TileShape::Hexagon) hex_lvl = level_of(c, t);
      if (s == TileShape::TriangleUp) tri_lvl = level_of(c, t);
    }
    if (hex_lvl < 0 || tri_lvl < 0)
      throw std::logic_error("pi3 axis vertex lacks top hexagon/triangle at " + q.to_string());
    if (hex_lvl % 4 != 2)
      throw std::logic_error("pi3 non-perfect axis vertex with hexagon level " +
                             std::to_string(hex_lvl));
    long long k = (hex_lvl - 2) / 4;
    r.category = PointCategory::Vertex;
    if (tri_lvl == hex_lvl - 1) {
      r.vertex_kind = VertexKind::TriangleBelow;
      r.analytic_period = 18 * k + 9;
    } else if (tri_lvl == hex_lvl + 1) {
      r.vertex_kind = VertexKind::TriangleAbove;
      r.analytic_period = 18 * k + 15;
    } else {
      throw std::logic_error("pi3 axis vertex with unexpected triangle level");
    }
    return r;
  }
  // Axis edge: the adjacent triangle has odd level 4k+1 or 4k+3 and pins k;
  // the adjacent hexagon sits one level away (4k+2, or a non-perfect even
  // label at 4k or 4k+4). The edge cycle has length 108k+72.
  long long tri_lvl = -1, hex_lvl = -1;
  for (const TileAddress& t : adj) {
    TileShape s = tile_shape(c, t);
    if (s == TileShape::Hexagon) hex_lvl = level_of(c, t);
    else tri_lvl = level_of(c, t);
  }
  if (tri_lvl < 0 || hex_lvl < 0 || tri_lvl % 2 == 0)
    throw std::logic_error("pi3 axis edge with unexpected adjacency at " + q.to_string());
  long long k = tri_lvl % 4 == 1 ? (tri_lvl - 1) / 4 : (tri_lvl - 3) / 4;
  if (hex_lvl != tri_lvl - 1 && hex_lvl != tri_lvl + 1)
    throw std::logic_error("pi3 axis edge: hexagon level " + std::to_string(hex_lvl) +
                           " does not neighbor triangle level " + std::to_string(tri_lvl));
  r.category = PointCategory::NonPerfectEdge;
  r.analytic_period = 108 * k + 72;
  return r;
}

PeriodReport classify_pi3_critical(const ExactPoint& p) {
  const NamedCase c = NamedCase::pi3;
  for (const TileAddress& t : tiles_at(c, p))
    if (is_perfect_tile(c, t)) {
      PeriodReport r;
      r.point = p;
      r.analytic_period = noncenter_period(c, level_of(c, t));
      if (is_tiling_vertex(c, p)) {
        r.category = PointCategory::Vertex;
        r.vertex_kind = VertexKind::Perfect;
      } else {
        r.category = PointCategory::PerfectBoundary;
      }
      return r;
    }
  if (p.y.sign() == 0) return classify_pi3_axis(p);
  // Off the axis: follow the orbit to its first exact y = 0 hit. Every
  // critical point reaches the discontinuity line within its period.
  long long cap = 120 * (level(c, p) + 2) + 100;
  ExactPoint q = p;
  for (long long i = 1; i <= cap; ++i) {
    q = f_step(c, q);
    if (q.y.sign() == 0) {
      PeriodReport landed;
      bool perfect_hit = false;
      for (const TileAddress& t : tiles_at(c, q))
        if (is_perfect_tile(c, t)) {
          perfect_hit = true;
          landed.analytic_period = noncenter_period(c, level_of(c, t));
          landed.category = is_tiling_vertex(c, q) ? PointCategory::Vertex
                                                   : PointCategory::PerfectBoundary;
          if (landed.category == PointCategory::Vertex) landed.vertex_kind = VertexKind::Perfect;
          break;
        }
      if (!perfect_hit) landed = classify_pi3_axis(q);
      landed.point = p;
      landed.via_axis_iteration = true;
      return landed;
    }
  }
  throw std::runtime_error("pi3 critical orbit did not reach y=0 within " + std::to_string(cap) +
                           " steps from " + p.to_string());
}

}  // namespace

PeriodReport analytic_period(NamedCase c, const ExactPoint& p) {
  if (!is_critical(c, p)) {
    PeriodReport r;
    r.point = p;
    TileAddress t = locate(c, p);
    long long lvl = level_of(c, t);
    if (p == tile_center(c, t)) {
      r.category = PointCategory::FixedTileCenter;
      r.analytic_period = center_period(c, lvl);
    } else {
      r.category = PointCategory::TileInterior;
      r.analytic_period = noncenter_period(c, lvl);
    }
    return r;
  }
  switch (c) {
    case NamedCase::pi2: return classify_pi2_critical(p);
    case NamedCase::two_pi3: return classify_2pi3_critical(p);
    case NamedCase::pi3: return classify_pi3_critical(p);
  }
  throw std::logic_error("unreachable");
}

std::set<FamilyPeriod> period_set(NamedCase c, long long c_max) {
  check_level(c_max);
  std::set<FamilyPeriod> out;
  for (long long lvl = 0; lvl <= c_max; ++lvl) {
    switch (c) {
      case NamedCase::pi2:
        out.insert(lvl % 2 ? FamilyPeriod{"8n+6", 4 * lvl + 2}
                           : FamilyPeriod{"4n+1", 2 * lvl + 1});
        out.insert({"8n+4", 8 * lvl + 4});
        break;
      case NamedCase::two_pi3:
        out.insert({"3n+1", 3 * lvl + 1});
        out.insert({"9n+3", 9 * lvl + 3});
        break;
      case NamedCase::pi3:
        if (lvl % 4 == 0) {
          out.insert({"6n+1", 3 * lvl / 2 + 1});
          out.insert({"36n+6", 9 * lvl + 6});
        } else if (lvl % 2 == 0) {
          out.insert({"12n+8", 3 * lvl + 2});
          out.insert({"36n+24", 9 * lvl + 6});
        } else {
          out.insert({"12n+10", 6 * lvl + 4});
          out.insert({"36n+30", 18 * lvl + 12});
        }
        break;
    }
  }
  if (c == NamedCase::pi3) {
    for (long long k = 0; 4 * k <= c_max; ++k) {
      out.insert({"36n+6", 36 * k + 6});
      out.insert({"18n+9", 18 * k + 9});
      out.insert({"18n+15", 18 * k + 15});
      out.insert({"108n+72", 108 * k + 72});
    }
  }
  return out;
}

bool period_in_families(NamedCase c, long long p) {
  if (p < 1) return false;
  switch (c) {
    case NamedCase::pi2:
      return p % 4 == 1 || p % 8 == 4 || p % 8 == 6;
    case NamedCase::two_pi3:
      return p % 3 == 1 || p % 9 == 3;
    case NamedCase::pi3:
      return p % 6 == 1 || p % 12 == 8 || p % 12 == 10 || p % 18 == 9 || p % 18 == 15 ||
             p % 36 == 6 || p % 36 == 24 || p % 36 == 30 || p % 108 == 72;
  }
  throw std::logic_error("unreachable");
}

}  // namespace tessera
