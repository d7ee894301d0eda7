// necklace.hpp - level-set enumeration, bead congruence data and the
// analytic period classifier for interior and boundary points
#pragma once

#include <tessera/tiling.hpp>

#include <optional>
#include <set>

namespace tessera {

// A level set of the first integral: its tiles in clockwise order, the shift
// constant u with F(bead_i) = bead_{i+u mod M}, and the period data.
struct Necklace {
  NamedCase map_case;
  long long level = 0;
  std::vector<TileAddress> beads;        // clockwise, bead 1 first
  std::vector<ExactPoint> bead_centers;  // parallel to beads
  long long bead_count = 0;              // M
  long long step = 0;                    // u
  long long center_period = 0;
  long long noncenter_period = 0;
  int rotation_order = 0;
  int center_orbit_count = 0;  // 1 or 2
};

// Closed-form necklace constants per case and level parity.
long long bead_count(NamedCase c, long long level);
long long bead_step(NamedCase c, long long level);
long long center_period(NamedCase c, long long level);
long long noncenter_period(NamedCase c, long long level);
int rotation_order(NamedCase c, long long level);
int center_orbit_count(NamedCase c, long long level);

// All tile centers with level exactly c, sorted clockwise around the origin
// (the ring's centroid); the first is the H+ center with smallest x
// (ties: largest y).
std::vector<ExactPoint> centers_at_level(NamedCase c, long long level);

Necklace necklace(NamedCase c, long long level);

// 1-based indices of the beads whose closed tiles evolve avoiding the
// discontinuity line. Throws std::domain_error for parities with none.
std::vector<long long> perfect_beads(NamedCase c, long long level);

// 1-based position of a tile in its level's necklace.
long long bead_index(NamedCase c, const TileAddress& t);

// Closed-form bead index for the square case (matches bead_index).
long long square_bead_index(long long k, long long l);

// True iff the closed tile evolves avoiding the discontinuity line.
bool is_perfect_tile(NamedCase c, const TileAddress& t);

enum class PointCategory { FixedTileCenter, TileInterior, PerfectBoundary, NonPerfectEdge, Vertex };
enum class VertexKind { None, Perfect, TriangleBelow, TriangleAbove };

const char* category_name(PointCategory c);
const char* vertex_kind_name(VertexKind k);

struct PeriodReport {
  ExactPoint point;
  PointCategory category = PointCategory::TileInterior;
  VertexKind vertex_kind = VertexKind::None;
  std::optional<long long> analytic_period;
  std::optional<long long> oracle_period;
  // True when the value was obtained by following the orbit to its first
  // exact y=0 hit and classifying there (pi3 critical points off the axis).
  bool via_axis_iteration = false;
};

// Analytic period of any point, interior or boundary, for the named cases.
PeriodReport analytic_period(NamedCase c, const ExactPoint& p);

struct FamilyPeriod {
  std::string family;  // e.g. "8n+4"
  long long value = 0;
  friend auto operator<=>(const FamilyPeriod&, const FamilyPeriod&) = default;
};

// All periods arising at levels <= c_max, tagged with their families.
std::set<FamilyPeriod> period_set(NamedCase c, long long c_max);

// Membership in the case's period families (Per(F)).
bool period_in_families(NamedCase c, long long p);

}  // namespace tessera
