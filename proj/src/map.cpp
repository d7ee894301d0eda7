// map.cpp - exact dynamics of the piecewise rotation family

#include <tessera/map.hpp>

#include <stdexcept>

namespace tessera {

const char* case_name(NamedCase c) {
  switch (c) {
    case NamedCase::pi2: return "pi2";
    case NamedCase::two_pi3: return "2pi3";
    case NamedCase::pi3: return "pi3";
  }
  throw std::logic_error("unreachable");
}

NamedCase case_from_name(std::string_view s) {
  if (s == "pi2") return NamedCase::pi2;
  if (s == "2pi3") return NamedCase::two_pi3;
  if (s == "pi3") return NamedCase::pi3;
  throw std::invalid_argument("unknown case '" + std::string(s) + "'; expected pi2, 2pi3 or pi3");
}

Qs3 case_cos(NamedCase c) {
  switch (c) {
    case NamedCase::pi2: return Qs3(0);
    case NamedCase::two_pi3: return Qs3(Rat(-1, 2));
    case NamedCase::pi3: return Qs3(Rat(1, 2));
  }
  throw std::logic_error("unreachable");
}

Qs3 case_sin(NamedCase c) {
  switch (c) {
    case NamedCase::pi2: return Qs3(1);
    case NamedCase::two_pi3:
    case NamedCase::pi3: return Qs3(Rat(0), Rat(1, 2));
  }
  throw std::logic_error("unreachable");
}

int case_rho(NamedCase c) {
  switch (c) {
    case NamedCase::pi2: return 0;
    case NamedCase::two_pi3: return 1;
    case NamedCase::pi3: return -1;
  }
  throw std::logic_error("unreachable");
}

NamedCase case_from_rho(int rho) {
  switch (rho) {
    case 0: return NamedCase::pi2;
    case 1: return NamedCase::two_pi3;
    case -1: return NamedCase::pi3;
  }
  throw std::invalid_argument("rho must be -1, 0 or 1");
}

AffineMap case_rotation(NamedCase c) {
  Qs3 co = case_cos(c), si = case_sin(c);
  return AffineMap::linear(co, si, -si, co);
}

namespace {

// Multiplication by (1/2)sqrt(3) without a general Qs3 product.
inline Qs3 half_sqrt3_times(const Qs3& v) {
  return Qs3(v.sqrt3_coeff() * Rat(3, 2), v.rational_part() * Rat(1, 2));
}

inline Qs3 half(const Qs3& v) {
  return Qs3(v.rational_part() * Rat(1, 2), v.sqrt3_coeff() * Rat(1, 2));
}

}  // namespace

ExactPoint f_step(NamedCase c, const ExactPoint& p) {
  int s = half_plane_sign(p.y);
  Qs3 u = p.x - Qs3(s);
  switch (c) {
    case NamedCase::pi2:
      // R (u, y) = (y, -u)
      return {p.y, -u};
    case NamedCase::two_pi3:
      // R = [[-1/2, s3/2], [-s3/2, -1/2]]
      return {-half(u) + half_sqrt3_times(p.y), -half_sqrt3_times(u) - half(p.y)};
    case NamedCase::pi3:
      // R = [[1/2, s3/2], [-s3/2, 1/2]]
      return {half(u) + half_sqrt3_times(p.y), -half_sqrt3_times(u) + half(p.y)};
  }
  throw std::logic_error("unreachable");
}

ExactPoint f_inv_step(NamedCase c, const ExactPoint& p) {
  // The preimage's second coordinate is w = sin*x + cos*y, so the branch is
  // the half-plane of w; then F^{-1}(p) = R^{-1} p + (sign(w), 0).
  switch (c) {
    case NamedCase::pi2: {
      Qs3 w = p.x;
      return {Qs3(half_plane_sign(w)) - p.y, w};
    }
    case NamedCase::two_pi3: {
      Qs3 w = half_sqrt3_times(p.x) - half(p.y);
      Qs3 xr = -half(p.x) - half_sqrt3_times(p.y);
      return {xr + Qs3(half_plane_sign(w)), w};
    }
    case NamedCase::pi3: {
      Qs3 w = half_sqrt3_times(p.x) + half(p.y);
      Qs3 xr = half(p.x) - half_sqrt3_times(p.y);
      return {xr + Qs3(half_plane_sign(w)), w};
    }
  }
  throw std::logic_error("unreachable");
}

ExactPoint g_step(int rho, const ExactPoint& p) {
  case_from_rho(rho);
  int s = half_plane_sign(p.y);
  return {p.y, -p.x - Qs3(rho) * p.y + Qs3(s)};
}

// With Q = [[1, -cos], [0, sin]] the exact conjugation is F = Q o G o Q^{-1}
// (the translation parts only match in this direction), so the G-plane maps
// into the F-plane through Q.
ExactPoint to_normal(int rho, const ExactPoint& p) {
  NamedCase c = case_from_rho(rho);
  return {p.x - case_cos(c) * p.y, case_sin(c) * p.y};
}

ExactPoint from_normal(int rho, const ExactPoint& p) {
  NamedCase c = case_from_rho(rho);
  Qs3 co = case_cos(c), si = case_sin(c);
  return {p.x + (co / si) * p.y, p.y / si};
}

std::vector<Address> itinerary(NamedCase c, const ExactPoint& p, long long n) {
  if (n < 1) throw std::invalid_argument("itinerary length must be >= 1");
  std::vector<Address> out;
  out.reserve(static_cast<std::size_t>(n));
  ExactPoint q = p;
  for (long long i = 0; i < n; ++i) {
    out.push_back(address(q));
    if (i + 1 < n) q = f_step(c, q);
  }
  return out;
}

std::string itinerary_string(const std::vector<Address>& it) {
  std::string s;
  s.reserve(it.size());
  for (Address a : it) s.push_back(static_cast<char>(a));
  return s;
}

AffineMap itinerary_affine(NamedCase c, const ExactPoint& p, long long n) {
  if (n < 1) throw std::invalid_argument("itinerary length must be >= 1");
  AffineMap rot = case_rotation(c);
  AffineMap total = AffineMap::identity();
  ExactPoint q = p;
  for (long long i = 0; i < n; ++i) {
    int s = half_plane_sign(q.y);
    // F_s(q) = R q + s * R (-1, 0) = R q + s (-cos, sin)
    AffineMap step = rot;
    step.tx = Qs3(-s) * rot.a;
    step.ty = Qs3(-s) * rot.c;
    total = step.after(total);
    q = f_step(c, q);
  }
  return total;
}

Orbit orbit(NamedCase c, const ExactPoint& p, long long max_iter) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  Orbit o;
  o.points.push_back(p);
  ExactPoint q = p;
  for (long long i = 1; i <= max_iter; ++i) {
    q = f_step(c, q);
    if (q == p) {
      o.period = i;
      return o;
    }
    o.points.push_back(q);
  }
  throw std::runtime_error("period not found within " + std::to_string(max_iter) +
                           " iterations for point " + p.to_string());
}

}  // namespace tessera
