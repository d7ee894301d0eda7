// tiling.cpp - exact tile addressing and the quantized first integrals

#include <tessera/tiling.hpp>

#include <algorithm>
#include <stdexcept>

namespace tessera {

const char* shape_name(TileShape s) {
  switch (s) {
    case TileShape::Square: return "Square";
    case TileShape::Hexagon: return "Hexagon";
    case TileShape::TriangleUp: return "TriangleUp";
    case TileShape::TriangleDown: return "TriangleDown";
  }
  throw std::logic_error("unreachable");
}

std::string TileAddress::to_string() const {
  if (!trihex) return "Square{" + std::to_string(k) + "," + std::to_string(l) + "}";
  return "TriHex{" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + "}";
}

namespace {

const Qs3& sqrt3() {
  static const Qs3 s = Qs3::sqrt3();
  return s;
}

// The three grid-line floor arguments. A point lies on a grid line exactly
// when the corresponding argument is an integer.
struct FloorArgs {
  Qs3 b, c, d;
};

FloorArgs floor_args(NamedCase c, const ExactPoint& p) {
  const Qs3 sixth(Rat(1, 6));
  const Qs3 third(Rat(1, 3));
  Qs3 s3y = sqrt3() * p.y;
  Qs3 x3 = Qs3(3) * p.x;
  switch (c) {
    case NamedCase::pi2:
      return {p.x, p.y, Qs3(0)};
    case NamedCase::two_pi3:
      return {(x3 - s3y) * sixth, s3y * third, (x3 + s3y + Qs3(3)) * sixth};
    case NamedCase::pi3:
      return {(x3 - s3y + Qs3(3)) * sixth, s3y * third, (x3 + s3y) * sixth};
  }
  throw std::logic_error("unreachable");
}

Integer iabs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

long long valid_m_offset_lo(NamedCase c) { return c == NamedCase::two_pi3 ? 0 : -1; }
long long valid_m_offset_hi(NamedCase c) { return c == NamedCase::two_pi3 ? 2 : 1; }

void check_address(NamedCase c, const TileAddress& t) {
  if (c == NamedCase::pi2) {
    if (t.trihex) throw std::invalid_argument("pi2 expects a square address");
    return;
  }
  if (!t.trihex) throw std::invalid_argument(std::string(case_name(c)) + " expects a trihex address");
  long long off = t.m - t.k - t.l;
  if (off < valid_m_offset_lo(c) || off > valid_m_offset_hi(c))
    throw std::invalid_argument("invalid tile address " + t.to_string() + " for case " + case_name(c));
}

}  // namespace

FloorCoords floor_coords(NamedCase c, const ExactPoint& p) {
  FloorArgs a = floor_args(c, p);
  return {a.b.floor(), a.c.floor(), a.d.floor()};
}

bool is_critical(NamedCase c, const ExactPoint& p) {
  FloorArgs a = floor_args(c, p);
  if (c == NamedCase::pi2) return a.b.is_integer() || a.c.is_integer();
  return a.b.is_integer() || a.c.is_integer() || a.d.is_integer();
}

TileAddress locate(NamedCase c, const ExactPoint& p) {
  if (is_critical(c, p))
    throw CriticalPointError("critical point " + p.to_string() + ": lies on the tiling grid");
  FloorCoords f = floor_coords(c, p);
  if (c == NamedCase::pi2) return TileAddress::square(to_i64(f.b), to_i64(f.c));
  TileAddress t = TileAddress::tri(to_i64(f.b), to_i64(f.c), to_i64(f.d));
  check_address(c, t);
  return t;
}

namespace {

long long level_from_coords(NamedCase c, const Integer& b, const Integer& cc, const Integer& d) {
  Integer v;
  switch (c) {
    case NamedCase::pi2:
      v = std::max(Integer(iabs(Integer(b + cc + 1)) - 1), iabs(Integer(b - cc)));
      break;
    case NamedCase::two_pi3:
      v = std::max({iabs(Integer(b - cc + d)), Integer(iabs(Integer(b + cc + d + 1)) - 1),
                    iabs(Integer(-b + cc + d))});
      break;
    case NamedCase::pi3:
      v = std::max({iabs(Integer(b - cc + d)), Integer(iabs(Integer(b + cc + d + 1)) - 1),
                    Integer(iabs(Integer(-b + cc + d + 1)) - 1)});
      break;
  }
  return to_i64(v);
}

}  // namespace

long long level(NamedCase c, const ExactPoint& p) {
  FloorCoords f = floor_coords(c, p);
  return level_from_coords(c, f.b, f.c, f.d);
}

long long level_of(NamedCase c, const TileAddress& t) {
  check_address(c, t);
  return level_from_coords(c, Integer(std::to_string(t.k)), Integer(std::to_string(t.l)),
                           Integer(std::to_string(t.m)));
}

ExactPoint tile_center(NamedCase c, const TileAddress& t) {
  check_address(c, t);
  Rat half(1, 2);
  if (c == NamedCase::pi2) return {Qs3(Rat(t.k) + half), Qs3(Rat(t.l) + half)};
  long long off = t.m - t.k - t.l;
  Rat x2kl = Rat(2 * t.k + t.l);
  Rat l6(t.l);
  if (c == NamedCase::two_pi3) {
    if (off == 1) return {Qs3(x2kl + Rat(3, 2)), Qs3(Rat(0), l6 + half)};
    if (off == 0) return {Qs3(x2kl + half), Qs3(Rat(0), l6 + Rat(1, 6))};
    return {Qs3(x2kl + Rat(5, 2)), Qs3(Rat(0), l6 + Rat(5, 6))};
  }
  if (off == 0) return {Qs3(x2kl + half), Qs3(Rat(0), l6 + half)};
  if (off == -1) return {Qs3(x2kl - half), Qs3(Rat(0), l6 + Rat(1, 6))};
  return {Qs3(x2kl + Rat(3, 2)), Qs3(Rat(0), l6 + Rat(5, 6))};
}

TileShape tile_shape(NamedCase c, const TileAddress& t) {
  check_address(c, t);
  if (c == NamedCase::pi2) return TileShape::Square;
  long long off = t.m - t.k - t.l;
  if (c == NamedCase::two_pi3) {
    if (off == 1) return TileShape::Hexagon;
    return off == 0 ? TileShape::TriangleUp : TileShape::TriangleDown;
  }
  if (off == 0) return TileShape::Hexagon;
  return off == -1 ? TileShape::TriangleUp : TileShape::TriangleDown;
}

std::vector<ExactPoint> tile_polygon(NamedCase c, const TileAddress& t) {
  ExactPoint ctr = tile_center(c, t);
  TileShape s = tile_shape(c, t);
  const Qs3 one(1);
  const Qs3 half(Rat(1, 2));
  const Qs3 h_s3(Rat(0), Rat(1, 2));   // sqrt(3)/2
  const Qs3 t_s3(Rat(0), Rat(1, 3));   // sqrt(3)/3
  const Qs3 s_s3(Rat(0), Rat(1, 6));   // sqrt(3)/6
  switch (s) {
    case TileShape::Square: {
      Qs3 x0(Rat(t.k)), y0(Rat(t.l));
      return {{x0, y0}, {x0 + one, y0}, {x0 + one, y0 + one}, {x0, y0 + one}};
    }
    case TileShape::Hexagon:
      return {{ctr.x + one, ctr.y},        {ctr.x + half, ctr.y + h_s3},
              {ctr.x - half, ctr.y + h_s3}, {ctr.x - one, ctr.y},
              {ctr.x - half, ctr.y - h_s3}, {ctr.x + half, ctr.y - h_s3}};
    case TileShape::TriangleUp:
      return {{ctr.x - half, ctr.y - s_s3}, {ctr.x + half, ctr.y - s_s3}, {ctr.x, ctr.y + t_s3}};
    case TileShape::TriangleDown:
      return {{ctr.x, ctr.y - t_s3}, {ctr.x + half, ctr.y + s_s3}, {ctr.x - half, ctr.y + s_s3}};
  }
  throw std::logic_error("unreachable");
}

bool point_in_closed_polygon(const std::vector<ExactPoint>& poly, const ExactPoint& p) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const ExactPoint& a = poly[i];
    const ExactPoint& b = poly[(i + 1) % poly.size()];
    if (orientation(a, b, p) < 0) return false;
  }
  return true;
}

std::vector<TileAddress> tiles_at(NamedCase c, const ExactPoint& p) {
  FloorCoords f = floor_coords(c, p);
  std::vector<TileAddress> out;
  if (c == NamedCase::pi2) {
    for (long long dk = -1; dk <= 0; ++dk)
      for (long long dl = -1; dl <= 0; ++dl) {
        TileAddress t = TileAddress::square(to_i64(f.b) + dk, to_i64(f.c) + dl);
        if (point_in_closed_polygon(tile_polygon(c, t), p)) out.push_back(t);
      }
    return out;
  }
  for (long long dk = -1; dk <= 0; ++dk)
    for (long long dl = -1; dl <= 0; ++dl)
      for (long long dm = -1; dm <= 0; ++dm) {
        TileAddress t =
            TileAddress::tri(to_i64(f.b) + dk, to_i64(f.c) + dl, to_i64(f.d) + dm);
        long long off = t.m - t.k - t.l;
        if (off < valid_m_offset_lo(c) || off > valid_m_offset_hi(c)) continue;
        if (point_in_closed_polygon(tile_polygon(c, t), p)) out.push_back(t);
      }
  return out;
}

bool is_tiling_vertex(NamedCase c, const ExactPoint& p) {
  FloorArgs a = floor_args(c, p);
  if (c == NamedCase::pi2) return a.b.is_integer() && a.c.is_integer();
  int on = (a.b.is_integer() ? 1 : 0) + (a.c.is_integer() ? 1 : 0) + (a.d.is_integer() ? 1 : 0);
  return on >= 2;
}

Qs3 twice_signed_area(const std::vector<ExactPoint>& poly) {
  Qs3 acc(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const ExactPoint& p = poly[i];
    const ExactPoint& q = poly[(i + 1) % poly.size()];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

std::vector<ExactPoint> clip_to_window(const std::vector<ExactPoint>& poly, const Rat& x0,
                                       const Rat& x1, const Rat& y0, const Rat& y1) {
  // inside(p) >= 0 for each half-plane; clip in sequence.
  struct Side {
    bool vertical;
    Rat bound;
    int keep_sign;  // keep points with sign(coord - bound) * keep_sign >= 0
  };
  const Side sides[4] = {{true, x0, 1}, {true, x1, -1}, {false, y0, 1}, {false, y1, -1}};
  std::vector<ExactPoint> cur = poly;
  for (const Side& s : sides) {
    if (cur.empty()) break;
    std::vector<ExactPoint> next;
    Qs3 bound(s.bound);
    auto inside = [&](const ExactPoint& p) {
      Qs3 coord = s.vertical ? p.x : p.y;
      return (coord - bound).sign() * s.keep_sign >= 0;
    };
    auto cross_point = [&](const ExactPoint& p, const ExactPoint& q) {
      Qs3 pc = s.vertical ? p.x : p.y;
      Qs3 qc = s.vertical ? q.x : q.y;
      Qs3 t = (bound - pc) / (qc - pc);
      return ExactPoint{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    };
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const ExactPoint& p = cur[i];
      const ExactPoint& q = cur[(i + 1) % cur.size()];
      bool pin = inside(p), qin = inside(q);
      if (pin) next.push_back(p);
      if (pin != qin) next.push_back(cross_point(p, q));
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<TileAddress> tiles_in_window(NamedCase c, const Rat& x0, const Rat& x1, const Rat& y0,
                                         const Rat& y1) {
  if (!(x0 < x1) || !(y0 < y1)) throw std::invalid_argument("empty window");
  std::vector<TileAddress> out;
  auto overlaps = [&](const TileAddress& t) {
    auto clipped = clip_to_window(tile_polygon(c, t), x0, x1, y0, y1);
    return clipped.size() >= 3 && twice_signed_area(clipped).sign() > 0;
  };
  if (c == NamedCase::pi2) {
    long long ka = to_i64(Rat(x0).floor()) - 1, kb = to_i64(Rat(x1).floor()) + 1;
    long long la = to_i64(Rat(y0).floor()) - 1, lb = to_i64(Rat(y1).floor()) + 1;
    for (long long k = ka; k <= kb; ++k)
      for (long long l = la; l <= lb; ++l) {
        TileAddress t = TileAddress::square(k, l);
        if (overlaps(t)) out.push_back(t);
      }
    return out;
  }
  // Floor-argument ranges over the window corners bound the k, l, m scan.
  ExactPoint corners[4] = {{Qs3(x0), Qs3(y0)}, {Qs3(x1), Qs3(y0)}, {Qs3(x0), Qs3(y1)}, {Qs3(x1), Qs3(y1)}};
  long long bmin = 0, bmax = 0, cmin = 0, cmax = 0, dmin = 0, dmax = 0;
  for (int i = 0; i < 4; ++i) {
    FloorCoords f = floor_coords(c, corners[i]);
    long long b = to_i64(f.b), cc = to_i64(f.c), d = to_i64(f.d);
    if (i == 0) {
      bmin = bmax = b;
      cmin = cmax = cc;
      dmin = dmax = d;
    } else {
      bmin = std::min(bmin, b); bmax = std::max(bmax, b);
      cmin = std::min(cmin, cc); cmax = std::max(cmax, cc);
      dmin = std::min(dmin, d); dmax = std::max(dmax, d);
    }
  }
  for (long long k = bmin - 1; k <= bmax + 1; ++k)
    for (long long l = cmin - 1; l <= cmax + 1; ++l)
      for (long long off = valid_m_offset_lo(c); off <= valid_m_offset_hi(c); ++off) {
        long long m = k + l + off;
        if (m < dmin - 1 || m > dmax + 1) continue;
        TileAddress t = TileAddress::tri(k, l, m);
        if (overlaps(t)) out.push_back(t);
      }
  return out;
}

}  // namespace tessera
