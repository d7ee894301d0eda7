// test_map.cpp - map steps, inverse, conjugacy, itineraries, orbits

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tessera/map.hpp>

#include <cstdint>

using namespace tessera;

namespace {

struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
  ExactPoint point() {
    return {Qs3(Rat(below(1201) - 600, 1 + below(30))), Qs3(Rat(below(1201) - 600, 1 + below(30)))};
  }
};

const NamedCase kCases[] = {NamedCase::pi2, NamedCase::two_pi3, NamedCase::pi3};

ExactPoint pt(const char* text) { return ExactPoint::parse(text); }

}  // namespace

TEST_CASE("fixed points of the three cases") {
  CHECK(f_step(NamedCase::pi2, pt("1/2,1/2")) == pt("1/2,1/2"));
  CHECK(f_step(NamedCase::pi2, pt("-1/2,-1/2")) == pt("-1/2,-1/2"));
  CHECK(f_step(NamedCase::two_pi3, pt("1/2,1/6s3")) == pt("1/2,1/6s3"));
  CHECK(f_step(NamedCase::two_pi3, pt("-1/2,-1/6s3")) == pt("-1/2,-1/6s3"));
  CHECK(f_step(NamedCase::pi3, pt("1/2,1/2s3")) == pt("1/2,1/2s3"));
  CHECK(f_step(NamedCase::pi3, pt("-1/2,-1/2s3")) == pt("-1/2,-1/2s3"));
}

TEST_CASE("pi2 step by direct formula") {
  CHECK(f_step(NamedCase::pi2, pt("3/10,2/5")) == pt("2/5,7/10"));
}

TEST_CASE("inverse undoes the step") {
  CHECK(f_inv_step(NamedCase::pi2, pt("1/2,1/2")) == pt("1/2,1/2"));
  CHECK(f_inv_step(NamedCase::pi2, pt("2/5,7/10")) == pt("3/10,2/5"));

  Rng rng{101};
  for (NamedCase c : kCases)
    for (int i = 0; i < 10000; ++i) {
      ExactPoint p = rng.point();
      CHECK(f_inv_step(c, f_step(c, p)) == p);
      CHECK(f_step(c, f_inv_step(c, p)) == p);
    }
}

TEST_CASE("inverse round-trip on the discontinuity line") {
  for (NamedCase c : kCases) {
    ExactPoint p{Qs3(Rat(7, 3)), Qs3(0)};
    CHECK(f_inv_step(c, f_step(c, p)) == p);
  }
}

TEST_CASE("g_step examples and domain") {
  CHECK(g_step(1, pt("0,0")) == pt("0,1"));
  CHECK_THROWS_AS(g_step(2, pt("0,0")), std::invalid_argument);
  CHECK_THROWS_AS(g_step(-2, pt("0,0")), std::invalid_argument);

  // rho = 0 conjugates with the identity change of variables
  Rng rng{3};
  for (int i = 0; i < 100; ++i) {
    ExactPoint p = rng.point();
    CHECK(g_step(0, p) == f_step(NamedCase::pi2, p));
    CHECK(to_normal(0, p) == p);
  }
}

TEST_CASE("conjugacy identity for all rho") {
  Rng rng{5};
  for (int rho : {-1, 0, 1}) {
    for (int i = 0; i < 100; ++i) {
      ExactPoint p = rng.point();
      ExactPoint lhs = from_normal(rho, f_step(case_from_rho(rho), to_normal(rho, p)));
      CHECK(lhs == g_step(rho, p));
      CHECK(from_normal(rho, to_normal(rho, p)) == p);
    }
  }
}

TEST_CASE("address convention: y = 0 is plus") {
  CHECK(address(pt("5,0")) == Address::plus);
  CHECK(address(pt("0,-1/7")) == Address::minus);
  CHECK(half_plane_sign(Qs3(0)) == 1);
}

TEST_CASE("itineraries") {
  // level-2 first bead of the pi2 ring
  ExactPoint x1 = pt("-3/2,1/2");
  CHECK(itinerary_string(itinerary(NamedCase::pi2, x1, 5)) == "+++--");
  CHECK(itinerary_string(itinerary(NamedCase::pi2, pt("1/2,1/2"), 3)) == "+++");
}

TEST_CASE("itinerary maps") {
  // single step from the center of the base tile: linear part is the
  // quarter-turn, translation (0,1)
  AffineMap m = itinerary_affine(NamedCase::pi2, pt("1/2,1/2"), 1);
  CHECK(m.linear_equals(case_rotation(NamedCase::pi2)));
  CHECK(m.tx == Qs3(0));
  CHECK(m.ty == Qs3(1));

  // level-2 center, 5 steps: order-4 rotation about the center
  ExactPoint x1 = pt("-3/2,1/2");
  AffineMap i1 = itinerary_affine(NamedCase::pi2, x1, 5);
  CHECK(i1.linear_equals(case_rotation(NamedCase::pi2)));
  CHECK(i1.linear_order() == 4);
  CHECK(i1.apply(x1) == x1);
  CHECK(i1.fixed_point() == x1);

  // level-1 center, 6 steps: linear part is -Id
  AffineMap i2 = itinerary_affine(NamedCase::pi2, pt("-1/2,1/2"), 6);
  CHECK(i2.a == Qs3(-1));
  CHECK(i2.b == Qs3(0));
  CHECK(i2.c == Qs3(0));
  CHECK(i2.d == Qs3(-1));
  CHECK(i2.linear_order() == 2);
}

TEST_CASE("itinerary-affine consistency with iteration") {
  Rng rng{23};
  for (NamedCase c : kCases)
    for (int i = 0; i < 20; ++i) {
      ExactPoint p = rng.point();
      ExactPoint q = p;
      for (long long n = 1; n <= 50; ++n) {
        q = f_step(c, q);
        if (n == 1 || n == 7 || n == 50)
          CHECK(itinerary_affine(c, p, n).apply(p) == q);
      }
    }
}

TEST_CASE("orbit detects the exact period") {
  Orbit o = orbit(NamedCase::pi2, pt("3/10,2/5"), 100);
  CHECK(o.period == 4);
  REQUIRE(o.points.size() == 4);
  CHECK(o.points[0] == pt("3/10,2/5"));
  CHECK(o.points[1] == pt("2/5,7/10"));
  CHECK(o.points[2] == pt("7/10,3/5"));
  CHECK(o.points[3] == pt("3/5,3/10"));

  CHECK(orbit(NamedCase::pi2, pt("-1/2,1/2"), 100).period == 6);
  CHECK(orbit(NamedCase::pi2, pt("1/2,1/2"), 10).period == 1);
  CHECK(orbit(NamedCase::two_pi3, pt("1/2,1/6s3"), 10).period == 1);
  CHECK_THROWS_AS(orbit(NamedCase::pi2, pt("-1/2,1/2"), 3), std::runtime_error);
}

TEST_CASE("isometry within a half plane") {
  Rng rng{31};
  for (NamedCase c : kCases) {
    int checked = 0;
    while (checked < 200) {
      ExactPoint p = rng.point();
      ExactPoint q = rng.point();
      if (address(p) != address(q)) continue;
      ++checked;
      CHECK(squared_distance(f_step(c, p), f_step(c, q)) == squared_distance(p, q));
    }
  }
}

TEST_CASE("denominators along an orbit divide 2d") {
  Rng rng{37};
  for (NamedCase c : kCases)
    for (int i = 0; i < 30; ++i) {
      ExactPoint p = rng.point();
      Integer d = 1;
      for (const Rat& r : {p.x.rational_part(), p.x.sqrt3_coeff(), p.y.rational_part(),
                           p.y.sqrt3_coeff()}) {
        Integer den = r.denominator();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
      }
      Integer bound = 2 * d;
      ExactPoint q = p;
      for (int n = 0; n < 200; ++n) {
        q = f_step(c, q);
        for (const Rat& r : {q.x.rational_part(), q.x.sqrt3_coeff(), q.y.rational_part(),
                             q.y.sqrt3_coeff()})
          CHECK(bound % r.denominator() == 0);
      }
    }
}

TEST_CASE("point parsing errors carry positions") {
  CHECK_THROWS_AS(ExactPoint::parse("1/2"), ParseError);
  CHECK_THROWS_AS(ExactPoint::parse("0.5,1"), ParseError);
  try {
    ExactPoint::parse("1/2,zz");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}
