// geometry.hpp - exact plane points and affine maps over Q(sqrt 3)
#pragma once

#include <tessera/qsqrt3.hpp>

#include <string>
#include <string_view>

namespace tessera {

struct ExactPoint {
  Qs3 x, y;

  friend bool operator==(const ExactPoint& p, const ExactPoint& q) {
    return p.x == q.x && p.y == q.y;
  }

  std::string to_string() const { return x.to_string() + "," + y.to_string(); }

  // Parses "scalar,scalar" in the exact grammar.
  static ExactPoint parse(std::string_view text);
};

inline Qs3 squared_distance(const ExactPoint& p, const ExactPoint& q) {
  Qs3 dx = p.x - q.x;
  Qs3 dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// Sign of the cross product (b-a) x (p-a): +1 when p is left of a->b.
inline int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& p) {
  return ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)).sign();
}

// Exact affine map q -> L q + t with L = [[a, b], [c, d]].
struct AffineMap {
  Qs3 a{1}, b{0}, c{0}, d{1};
  Qs3 tx{0}, ty{0};

  static AffineMap identity() { return {}; }

  static AffineMap linear(const Qs3& a, const Qs3& b, const Qs3& c, const Qs3& d) {
    return {a, b, c, d, Qs3(0), Qs3(0)};
  }

  ExactPoint apply(const ExactPoint& p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }

  // Composition this . other (apply other first).
  AffineMap after(const AffineMap& o) const {
    AffineMap r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    ExactPoint t = apply({o.tx, o.ty});
    r.tx = t.x;
    r.ty = t.y;
    return r;
  }

  bool linear_is_identity() const {
    return a == Qs3(1) && b == Qs3(0) && c == Qs3(0) && d == Qs3(1);
  }

  bool linear_equals(const AffineMap& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  // Smallest k in [1, max_order] with linear^k = identity, or 0 if none.
  int linear_order(int max_order = 12) const {
    AffineMap power = AffineMap::linear(a, b, c, d);
    AffineMap step = power;
    for (int k = 1; k <= max_order; ++k) {
      if (power.linear_is_identity()) return k;
      power = step.after(power);
    }
    return 0;
  }

  // Unique fixed point of the map; requires L - I invertible.
  ExactPoint fixed_point() const {
    // Solve (L - I) p = -t by Cramer's rule.
    Qs3 m00 = a - Qs3(1), m01 = b, m10 = c, m11 = d - Qs3(1);
    Qs3 det = m00 * m11 - m01 * m10;
    if (det.sign() == 0) throw std::domain_error("AffineMap: no unique fixed point");
    Qs3 rx = -tx, ry = -ty;
    return {(rx * m11 - m01 * ry) / det, (m00 * ry - rx * m10) / det};
  }

  friend bool operator==(const AffineMap& p, const AffineMap& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d && p.tx == q.tx && p.ty == q.ty;
  }
};

}  // namespace tessera
