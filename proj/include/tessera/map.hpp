// map.hpp - the piecewise rotation family: normal form F, original family G,
// their conjugation, inverse, addresses, itineraries and orbits
#pragma once

#include <tessera/geometry.hpp>

#include <string>
#include <vector>

namespace tessera {

// The three exact rotation cases. General angles are float-only territory
// and live in the render module.
enum class NamedCase { pi2, two_pi3, pi3 };

const char* case_name(NamedCase c);           // "pi2", "2pi3", "pi3"
NamedCase case_from_name(std::string_view s);  // throws std::invalid_argument

Qs3 case_cos(NamedCase c);  // 0, -1/2, 1/2
Qs3 case_sin(NamedCase c);  // 1, (1/2)s3, (1/2)s3

int case_rho(NamedCase c);            // 0, 1, -1  (rho = -2 cos alpha)
NamedCase case_from_rho(int rho);     // throws on rho outside {-1,0,1}

// Rotation matrix [[cos, sin], [-sin, cos]] as a linear map.
AffineMap case_rotation(NamedCase c);

enum class Address : char { plus = '+', minus = '-' };

// Half-plane sign with the boundary convention sign(0) = +1.
inline int half_plane_sign(const Qs3& y) { return y.sign() >= 0 ? 1 : -1; }

inline Address address(const ExactPoint& p) {
  return half_plane_sign(p.y) > 0 ? Address::plus : Address::minus;
}

// One step of the normal form F(x,y) = R_alpha (x - sign(y), y).
ExactPoint f_step(NamedCase c, const ExactPoint& p);

// Exact inverse: f_inv_step(f_step(p)) == p; the branch is selected by
// sign(sin(alpha) x + cos(alpha) y).
ExactPoint f_inv_step(NamedCase c, const ExactPoint& p);

// Original family G(x,y) = (y, -x - rho y + sign(y)), rho in {-1,0,1}.
ExactPoint g_step(int rho, const ExactPoint& p);

// Linear conjugation between the two families: with Q = [[1,-cos],[0,sin]],
// from_normal(f_step(to_normal(p))) == g_step(p) exactly.
ExactPoint to_normal(int rho, const ExactPoint& p);
ExactPoint from_normal(int rho, const ExactPoint& p);

// Itinerary of length n: addresses of p, F(p), ..., F^{n-1}(p).
std::vector<Address> itinerary(NamedCase c, const ExactPoint& p, long long n);

std::string itinerary_string(const std::vector<Address>& it);

// The composed affine map F_{i_n} o ... o F_{i_1} along the itinerary of p;
// applying it to p gives F^n(p), and its linear part is a rotation power.
AffineMap itinerary_affine(NamedCase c, const ExactPoint& p, long long n);

struct Orbit {
  std::vector<ExactPoint> points;  // one full cycle: p, F(p), ..., F^{period-1}(p)
  long long period = 0;
};

// Iterates F until the exact first return to p. Orbits of a bijection cannot
// be pre-periodic, so comparing against the initial point suffices.
// Throws std::runtime_error if the period exceeds max_iter.
Orbit orbit(NamedCase c, const ExactPoint& p, long long max_iter);

}  // namespace tessera
