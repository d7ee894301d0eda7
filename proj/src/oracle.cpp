// oracle.cpp - brute-force ground truth for the analytic claims

#include <tessera/oracle.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

namespace tessera {

void VerifyReport::add_failure(const ExactPoint& p, std::string expected, std::string got) {
  ++failure_count;
  if (static_cast<int>(failures.size()) < kFailureCap)
    failures.push_back({p, std::move(expected), std::move(got)});
}

void VerifyReport::merge(const VerifyReport& other) {
  checked += other.checked;
  failure_count += other.failure_count;
  for (const Failure& f : other.failures) {
    if (static_cast<int>(failures.size()) >= kFailureCap) break;
    failures.push_back(f);
  }
  elapsed_seconds += other.elapsed_seconds;
}

int default_thread_count() {
  if (const char* env = std::getenv("TESSERA_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

long long default_max_iter(NamedCase c, const ExactPoint& p) {
  return 120 * (level(c, p) + 2) + 100;
}

long long brute_force_period(NamedCase c, const ExactPoint& p, long long max_iter) {
  ExactPoint q = p;
  for (long long i = 1; i <= max_iter; ++i) {
    q = f_step(c, q);
    if (q == p) return i;
  }
  throw std::runtime_error("not periodic within " + std::to_string(max_iter) +
                           " iterations: " + p.to_string());
}

namespace {

// splitmix64: tiny, platform-independent, good enough for sampling plans.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

Rat random_rat(SplitMix64& rng, const Rat& lo, const Rat& hi, long long max_den) {
  Integer den(static_cast<long>(1 + rng.below(static_cast<std::uint64_t>(max_den))));
  Integer nlo = (lo * Rat(den)).floor() + 1;  // strictly inside is fine for sampling
  Integer nhi = (hi * Rat(den)).floor();
  if (nhi < nlo) return lo;
  Integer span = nhi - nlo + 1;
  Integer pick = nlo + Integer(static_cast<long>(rng.below(static_cast<std::uint64_t>(
                            to_i64(span) > 0 ? to_i64(span) : 1))));
  return Rat(pick, den);
}

// Runs fn(begin, end, shard) over [0, n) split into contiguous shards; the
// caller merges shard results in index order, so scheduling cannot leak in.
void parallel_chunks(long long n, int threads,
                     const std::function<void(long long, long long, int)>& fn) {
  if (threads <= 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  int shards = threads;
  std::vector<std::thread> pool;
  long long chunk = (n + shards - 1) / shards;
  for (int s = 0; s < shards; ++s) {
    long long b = s * chunk;
    long long e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back(fn, b, e, s);
  }
  for (auto& t : pool) t.join();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace

std::vector<ExactPoint> sample_points(NamedCase c, const SampleSpec& spec) {
  if (!(spec.x_min < spec.x_max) || !(spec.y_min < spec.y_max))
    throw std::invalid_argument("sample window must satisfy x_min < x_max and y_min < y_max");
  if (spec.max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
  std::vector<ExactPoint> pts;
  if (spec.lattice_denominator > 0) {
    Integer den(std::to_string(spec.lattice_denominator));
    Integer ix0 = (spec.x_min * Rat(den)).floor();
    Integer ix1 = (spec.x_max * Rat(den)).floor();
    Integer iy0 = (spec.y_min * Rat(den)).floor();
    Integer iy1 = (spec.y_max * Rat(den)).floor();
    for (Integer i = ix0; i <= ix1; ++i)
      for (Integer j = iy0; j <= iy1; ++j) {
        ExactPoint p{Qs3(Rat(i, den)), Qs3(Rat(j, den))};
        if (spec.exclude_critical && is_critical(c, p)) continue;
        if (spec.max_level >= 0 && level(c, p) > spec.max_level) continue;
        pts.push_back(p);
      }
    return pts;
  }
  SplitMix64 rng(spec.seed);
  pts.reserve(static_cast<std::size_t>(spec.count));
  long long attempts = 0;
  long long attempt_cap = 2000 * (spec.count + 1);
  while (static_cast<long long>(pts.size()) < spec.count) {
    if (++attempts > attempt_cap)
      throw std::runtime_error("sampling rejected too many points; window too restrictive");
    Rat x = random_rat(rng, spec.x_min, spec.x_max, spec.max_denominator);
    Rat y = random_rat(rng, spec.y_min, spec.y_max, spec.max_denominator);
    ExactPoint p{Qs3(x), Qs3(y)};
    if (spec.exclude_critical && is_critical(c, p)) continue;
    if (spec.max_level >= 0 && level(c, p) > spec.max_level) continue;
    pts.push_back(p);
  }
  return pts;
}

VerifyReport verify_integral(NamedCase c, const SampleSpec& spec, int threads) {
  Timer timer;
  if (threads <= 0) threads = default_thread_count();
  std::vector<ExactPoint> pts = sample_points(c, spec);
  std::vector<VerifyReport> shards(static_cast<std::size_t>(threads));
  parallel_chunks(static_cast<long long>(pts.size()), threads,
                  [&](long long b, long long e, int s) {
                    VerifyReport& rep = shards[static_cast<std::size_t>(s)];
                    for (long long i = b; i < e; ++i) {
                      const ExactPoint& p = pts[static_cast<std::size_t>(i)];
                      ++rep.checked;
                      long long v = level(c, p);
                      long long vf = level(c, f_step(c, p));
                      long long vb = level(c, f_inv_step(c, p));
                      if (vf != v)
                        rep.add_failure(p, "level(F(p)) = " + std::to_string(v),
                                        std::to_string(vf));
                      if (vb != v)
                        rep.add_failure(p, "level(F^-1(p)) = " + std::to_string(v),
                                        std::to_string(vb));
                    }
                  });
  VerifyReport out;
  for (const VerifyReport& s : shards) out.merge(s);
  out.elapsed_seconds = timer.seconds();
  return out;
}

VerifyReport verify_necklace(NamedCase c, long long lvl) {
  Timer timer;
  VerifyReport rep;
  Necklace n = necklace(c, lvl);
  long long m = n.bead_count;
  for (long long i = 0; i < m; ++i) {
    ++rep.checked;
    ExactPoint image = f_step(c, n.bead_centers[static_cast<std::size_t>(i)]);
    const ExactPoint& expect = n.bead_centers[static_cast<std::size_t>((i + n.step) % m)];
    if (!(image == expect))
      rep.add_failure(n.bead_centers[static_cast<std::size_t>(i)],
                      "F(bead " + std::to_string(i + 1) + ") = bead " +
                          std::to_string((i + n.step) % m + 1) + " at " + expect.to_string(),
                      image.to_string());
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

VerifyReport verify_rotation_orders(NamedCase c, long long lvl) {
  Timer timer;
  VerifyReport rep;
  Necklace n = necklace(c, lvl);
  for (const ExactPoint& ctr : n.bead_centers) {
    ++rep.checked;
    AffineMap it = itinerary_affine(c, ctr, n.center_period);
    int order = it.linear_order();
    if (order != n.rotation_order) {
      rep.add_failure(ctr, "rotation order " + std::to_string(n.rotation_order),
                      std::to_string(order));
      continue;
    }
    if (!(it.apply(ctr) == ctr)) {
      rep.add_failure(ctr, "itinerary map fixes the center", it.apply(ctr).to_string());
      continue;
    }
    if (!it.linear_is_identity()) {
      ExactPoint fixed = it.fixed_point();
      if (!(fixed == ctr))
        rep.add_failure(ctr, "unique fixed point at the center", fixed.to_string());
    }
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

namespace {

// Deterministic interior sample of a tile: rejection from the bounding box.
std::vector<ExactPoint> sample_tile_interior(NamedCase c, const TileAddress& t, int count,
                                             SplitMix64& rng) {
  std::vector<ExactPoint> poly = tile_polygon(c, t);
  Qs3 bx0 = poly[0].x, bx1 = poly[0].x, by0 = poly[0].y, by1 = poly[0].y;
  for (const ExactPoint& v : poly) {
    if (v.x < bx0) bx0 = v.x;
    if (bx1 < v.x) bx1 = v.x;
    if (v.y < by0) by0 = v.y;
    if (by1 < v.y) by1 = v.y;
  }
  std::vector<ExactPoint> out;
  while (static_cast<int>(out.size()) < count) {
    // random rational combination inside the bbox; keep strict interior hits
    Rat fx(static_cast<long>(1 + rng.below(998)), 1000);
    Rat fy(static_cast<long>(1 + rng.below(998)), 1000);
    ExactPoint p{bx0 + Qs3(fx) * (bx1 - bx0), by0 + Qs3(fy) * (by1 - by0)};
    if (is_critical(c, p)) continue;
    if (!(locate(c, p) == t)) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace

VerifyReport verify_tile_itineraries(NamedCase c, long long lvl, int samples_per_tile,
                                     std::uint64_t seed) {
  Timer timer;
  VerifyReport rep;
  Necklace n = necklace(c, lvl);
  SplitMix64 rng(seed);
  for (std::size_t b = 0; b < n.beads.size(); ++b) {
    std::vector<Address> center_it = itinerary(c, n.bead_centers[b], n.center_period);
    for (const ExactPoint& p : sample_tile_interior(c, n.beads[b], samples_per_tile, rng)) {
      ++rep.checked;
      std::vector<Address> it = itinerary(c, p, n.center_period);
      if (it != center_it)
        rep.add_failure(p, itinerary_string(center_it), itinerary_string(it));
    }
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

VerifyReport verify_boundary(NamedCase c, const Rat& x0, const Rat& x1, const Rat& y0,
                             const Rat& y1, int threads) {
  Timer timer;
  if (threads <= 0) threads = default_thread_count();
  // Vertices and edge midpoints of every tile meeting the window, deduped.
  std::vector<ExactPoint> pts;
  {
    std::vector<ExactPoint> raw;
    for (const TileAddress& t : tiles_in_window(c, x0, x1, y0, y1)) {
      std::vector<ExactPoint> poly = tile_polygon(c, t);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const ExactPoint& a = poly[i];
        const ExactPoint& b = poly[(i + 1) % poly.size()];
        raw.push_back(a);
        raw.push_back({(a.x + b.x) * Qs3(Rat(1, 2)), (a.y + b.y) * Qs3(Rat(1, 2))});
      }
    }
    auto in_window = [&](const ExactPoint& p) {
      return (p.x - Qs3(x0)).sign() >= 0 && (Qs3(x1) - p.x).sign() >= 0 &&
             (p.y - Qs3(y0)).sign() >= 0 && (Qs3(y1) - p.y).sign() >= 0;
    };
    auto less = [](const ExactPoint& a, const ExactPoint& b) {
      int cx = Qs3::compare(a.x, b.x);
      if (cx != 0) return cx < 0;
      return Qs3::compare(a.y, b.y) < 0;
    };
    std::sort(raw.begin(), raw.end(), less);
    for (const ExactPoint& p : raw) {
      if (!in_window(p)) continue;
      if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
    }
  }
  std::vector<VerifyReport> shards(static_cast<std::size_t>(threads));
  parallel_chunks(static_cast<long long>(pts.size()), threads,
                  [&](long long b, long long e, int s) {
                    VerifyReport& rep = shards[static_cast<std::size_t>(s)];
                    for (long long i = b; i < e; ++i) {
                      const ExactPoint& p = pts[static_cast<std::size_t>(i)];
                      ++rep.checked;
                      PeriodReport pr = analytic_period(c, p);
                      long long oracle = brute_force_period(c, p, default_max_iter(c, p));
                      if (!pr.analytic_period || *pr.analytic_period != oracle)
                        rep.add_failure(p, "analytic period " + std::to_string(oracle),
                                        pr.analytic_period
                                            ? std::to_string(*pr.analytic_period)
                                            : std::string("none"));
                    }
                  });
  VerifyReport out;
  for (const VerifyReport& s : shards) out.merge(s);
  out.elapsed_seconds = timer.seconds();
  return out;
}

CensusResult period_census(NamedCase c, const SampleSpec& spec, int threads) {
  Timer timer;
  if (threads <= 0) threads = default_thread_count();
  std::vector<ExactPoint> pts = sample_points(c, spec);
  std::vector<VerifyReport> shards(static_cast<std::size_t>(threads));
  std::vector<std::map<long long, long long>> counts(static_cast<std::size_t>(threads));
  parallel_chunks(static_cast<long long>(pts.size()), threads,
                  [&](long long b, long long e, int s) {
                    VerifyReport& rep = shards[static_cast<std::size_t>(s)];
                    auto& cnt = counts[static_cast<std::size_t>(s)];
                    for (long long i = b; i < e; ++i) {
                      const ExactPoint& p = pts[static_cast<std::size_t>(i)];
                      ++rep.checked;
                      long long period = brute_force_period(c, p, default_max_iter(c, p));
                      ++cnt[period];
                      if (!period_in_families(c, period))
                        rep.add_failure(p, "period in the case's families",
                                        std::to_string(period));
                    }
                  });
  CensusResult out;
  for (int s = 0; s < threads; ++s) {
    out.report.merge(shards[static_cast<std::size_t>(s)]);
    for (auto& [period, n] : counts[static_cast<std::size_t>(s)]) out.counts[period] += n;
  }
  out.report.elapsed_seconds = timer.seconds();
  return out;
}

}  // namespace tessera
