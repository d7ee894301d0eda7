// oracle.hpp - independent brute-force checks: exact orbit periods,
// invariance sweeps, bead congruences, rotation orders and period censuses
#pragma once

#include <tessera/necklace.hpp>

#include <cstdint>
#include <map>

namespace tessera {

// Deterministic sampling plan: the same spec always yields the same points,
// regardless of thread count.
struct SampleSpec {
  Rat x_min{-15}, x_max{15}, y_min{-15}, y_max{15};
  long long max_denominator = 97;
  long long count = 1000;
  std::uint64_t seed = 1;
  bool exclude_critical = true;
  // When > 0, replaces random sampling by the full lattice (i/d, j/d) over
  // the window; count and seed are ignored.
  long long lattice_denominator = 0;
  // When >= 0, lattice samples with level above this are skipped.
  long long max_level = -1;
};

struct Failure {
  ExactPoint point;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  long long checked = 0;
  long long failure_count = 0;
  std::vector<Failure> failures;  // capped at kFailureCap entries
  double elapsed_seconds = 0.0;
  bool pass() const { return failure_count == 0; }
  static constexpr int kFailureCap = 32;
  void add_failure(const ExactPoint& p, std::string expected, std::string got);
  void merge(const VerifyReport& other);
};

// Thread count: explicit argument, else TESSERA_THREADS, else hardware.
int default_thread_count();

// Generous iteration cap for the given point: 120*(level+2)+100 clears the
// largest period family by a wide margin.
long long default_max_iter(NamedCase c, const ExactPoint& p);

// Smallest p >= 1 with F^p(point) = point, by exact equality.
// Throws std::runtime_error when the cap is exceeded.
long long brute_force_period(NamedCase c, const ExactPoint& p, long long max_iter);

std::vector<ExactPoint> sample_points(NamedCase c, const SampleSpec& spec);

// level(F(p)) == level(p) and level(F^{-1}(p)) == level(p) over the samples.
VerifyReport verify_integral(NamedCase c, const SampleSpec& spec, int threads = 0);

// f_step maps bead i's center onto bead (i+u mod M)'s center, for all i.
VerifyReport verify_necklace(NamedCase c, long long level);

// The itinerary map over one tile-cycle at each bead center is a rotation of
// the stated finite order with the bead center as unique fixed point.
VerifyReport verify_rotation_orders(NamedCase c, long long level);

// Sampled interior points of each tile share the center's itinerary of
// length center_period.
VerifyReport verify_tile_itineraries(NamedCase c, long long level, int samples_per_tile,
                                     std::uint64_t seed = 1);

// Classifier vs brute force on every vertex and edge midpoint of every tile
// intersecting the window.
VerifyReport verify_boundary(NamedCase c, const Rat& x0, const Rat& x1, const Rat& y0,
                             const Rat& y1, int threads = 0);

struct CensusResult {
  std::map<long long, long long> counts;  // period -> sample count
  VerifyReport report;                    // family-membership failures
};

// Brute-force periods of all samples, each asserted to belong to the case's
// period families.
CensusResult period_census(NamedCase c, const SampleSpec& spec, int threads = 0);

}  // namespace tessera
