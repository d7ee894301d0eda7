// cli.cpp - subcommand wiring over the library

#include <tessera/cli.hpp>

#include <tessera/oracle.hpp>
#include <tessera/render.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>

namespace tessera {

namespace {

using json = nlohmann::ordered_json;

struct WindowRats {
  Rat x0{-15}, x1{15}, y0{-15}, y1{15};
};

// "x0,x1,y0,y1" in the rational grammar (no decimals, no s3 terms).
WindowRats parse_rat_window(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("window must be x0,x1,y0,y1");
  Rat vals[4];
  for (int i = 0; i < 4; ++i) {
    Qs3 v = Qs3::parse(parts[static_cast<std::size_t>(i)]);
    if (!v.is_rational()) throw std::invalid_argument("window bounds must be rational");
    vals[i] = v.rational_part();
  }
  if (!(vals[0] < vals[1]) || !(vals[2] < vals[3]))
    throw std::invalid_argument("window must satisfy x0 < x1 and y0 < y1");
  return {vals[0], vals[1], vals[2], vals[3]};
}

Window parse_float_window(const std::string& text) {
  double v[4];
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t comma = text.find(',', start);
    std::string part = text.substr(start, comma - start);
    if (i < 3 && comma == std::string::npos)
      throw std::invalid_argument("window must be x0,x1,y0,y1");
    std::size_t used = 0;
    v[i] = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad window bound '" + part + "'");
    start = comma + 1;
  }
  if (!(v[0] < v[1]) || !(v[2] < v[3]))
    throw std::invalid_argument("window must satisfy x0 < x1 and y0 < y1");
  return {v[0], v[1], v[2], v[3]};
}

ExactPoint parse_point_arg(const std::string& text) {
  try {
    return ExactPoint::parse(text);
  } catch (const ParseError& e) {
    if (text.find('.') != std::string::npos)
      throw std::invalid_argument(std::string(e.what()) +
                                  "; decimal input is rejected, use rationals like 3/10,2/5");
    throw std::invalid_argument(e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

void print_report_human(std::ostream& out, const std::string& suite, NamedCase c,
                        const VerifyReport& rep) {
  out << "suite " << suite << " case " << case_name(c) << ": checked " << rep.checked
      << ", failures " << rep.failure_count << ", elapsed " << rep.elapsed_seconds << "s\n";
  for (const Failure& f : rep.failures)
    out << "  FAIL at " << f.point.to_string() << ": expected " << f.expected << ", got "
        << f.got << "\n";
}

void print_report_json(std::ostream& out, const std::string& suite, NamedCase c,
                       const VerifyReport& rep) {
  for (const Failure& f : rep.failures) {
    json rec;
    rec["type"] = "failure";
    rec["suite"] = suite;
    rec["case"] = case_name(c);
    rec["point"] = f.point.to_string();
    rec["expected"] = f.expected;
    rec["got"] = f.got;
    out << rec.dump() << "\n";
  }
  json sum;
  sum["type"] = "summary";
  sum["suite"] = suite;
  sum["case"] = case_name(c);
  sum["checked"] = rep.checked;
  sum["failures"] = rep.failure_count;
  sum["elapsed_seconds"] = rep.elapsed_seconds;
  sum["pass"] = rep.pass();
  out << sum.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tessera - exact dynamics of pointwise-periodic piecewise rotations"};
  app.require_subcommand(1);

  std::string case_str = "pi2";
  std::string point_str;
  std::string window_str;
  std::string out_path;
  long long max_iter = 0;
  long long level_flag = -1;
  long long samples = -1;
  long long max_den = 97;
  long long lattice_den = 7;
  std::uint64_t seed = 1;
  int threads = 0;
  bool json_out = false;
  bool labels = false;
  bool no_oracle = false;
  int palette = 12;
  double alpha = 1.0;
  int depth = 8;
  std::string suite = "invariance";

  auto add_case = [&](CLI::App* cmd) {
    cmd->add_option("--case", case_str, "map case: pi2, 2pi3 or pi3")->required();
  };

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "exact orbit and period of a point");
  add_case(orbit_cmd);
  orbit_cmd->add_option("--point", point_str, "exact point \"X,Y\"")->required();
  orbit_cmd->add_option("--max-iter", max_iter, "iteration cap (default: period bound)");

  CLI::App* period_cmd = app.add_subcommand("period", "analytic period with oracle cross-check");
  add_case(period_cmd);
  period_cmd->add_option("--point", point_str, "exact point \"X,Y\"")->required();
  period_cmd->add_flag("--no-oracle", no_oracle, "skip the brute-force cross-check");
  period_cmd->add_option("--max-iter", max_iter, "oracle iteration cap");

  CLI::App* level_cmd = app.add_subcommand("level", "level, tile address, shape and center");
  add_case(level_cmd);
  level_cmd->add_option("--point", point_str, "exact point \"X,Y\"")->required();

  CLI::App* necklace_cmd = app.add_subcommand("necklace", "level-set ring data");
  add_case(necklace_cmd);
  necklace_cmd->add_option("--level", level_flag, "level c >= 0")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "brute-force verification suites");
  add_case(verify_cmd);
  verify_cmd->add_option("--suite", suite, "invariance|necklace|periods|boundary|itineraries")
      ->check(CLI::IsMember({"invariance", "necklace", "periods", "boundary", "itineraries"}));
  verify_cmd->add_option("--samples", samples, "sample count (suite dependent)");
  verify_cmd->add_option("--seed", seed, "sampling seed");
  verify_cmd->add_option("--window", window_str, "sampling window x0,x1,y0,y1 (rationals)");
  verify_cmd->add_option("--level", level_flag, "max level (suite dependent)");
  verify_cmd->add_option("--max-denominator", max_den, "max sample denominator");
  verify_cmd->add_option("--lattice-denominator", lattice_den, "census lattice denominator");
  verify_cmd->add_option("--threads", threads, "worker count (default TESSERA_THREADS or cores)");
  verify_cmd->add_flag("--json", json_out, "line-delimited JSON records");

  CLI::App* render_cmd = app.add_subcommand("render", "SVG of the level-set tessellation");
  add_case(render_cmd);
  render_cmd->add_option("--window", window_str, "view window x0,x1,y0,y1")->required();
  render_cmd->add_option("--out", out_path, "output SVG file")->required();
  render_cmd->add_flag("--labels", labels, "label tiles with level and center period");
  render_cmd->add_option("--palette", palette, "palette hue count");

  CLI::App* fractal_cmd = app.add_subcommand("fractal", "SVG of critical-set preimages");
  fractal_cmd->add_option("--alpha", alpha, "rotation angle in radians, in (0, pi)")->required();
  fractal_cmd->add_option("--depth", depth, "preimage generations")->required();
  fractal_cmd->add_option("--window", window_str, "view window x0,x1,y0,y1")->required();
  fractal_cmd->add_option("--out", out_path, "output SVG file")->required();

  std::vector<const char*> argv;
  argv.push_back("tessera");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (orbit_cmd->parsed()) {
      NamedCase c = case_from_name(case_str);
      ExactPoint p = parse_point_arg(point_str);
      long long cap = max_iter > 0 ? max_iter : default_max_iter(c, p);
      Orbit o = orbit(c, p, cap);
      out << "period: " << o.period << "\n";
      for (const ExactPoint& q : o.points) out << q.to_string() << "\n";
      return 0;
    }

    if (period_cmd->parsed()) {
      NamedCase c = case_from_name(case_str);
      ExactPoint p = parse_point_arg(point_str);
      PeriodReport rep = analytic_period(c, p);
      if (!no_oracle) {
        long long cap = max_iter > 0 ? max_iter : default_max_iter(c, p);
        rep.oracle_period = brute_force_period(c, p, cap);
      }
      out << "point: " << p.to_string() << "\n";
      out << "category: " << category_name(rep.category);
      if (rep.category == PointCategory::Vertex)
        out << " (" << vertex_kind_name(rep.vertex_kind) << ")";
      out << "\n";
      out << "analytic period: "
          << (rep.analytic_period ? std::to_string(*rep.analytic_period) : "oracle-only");
      if (rep.via_axis_iteration) out << " (via iteration to y=0)";
      out << "\n";
      if (rep.oracle_period) {
        out << "oracle period: " << *rep.oracle_period << "\n";
        bool agree = rep.analytic_period && *rep.analytic_period == *rep.oracle_period;
        out << "agreement: " << (agree ? "yes" : "NO") << "\n";
        if (!agree) return 1;
      }
      return 0;
    }

    if (level_cmd->parsed()) {
      NamedCase c = case_from_name(case_str);
      ExactPoint p = parse_point_arg(point_str);
      out << "level: " << level(c, p) << "\n";
      if (is_critical(c, p)) {
        out << "critical: true (point lies on the tiling grid; the level above is the raw "
               "formula value)\n";
        return 0;
      }
      TileAddress t = locate(c, p);
      out << "tile: " << t.to_string() << "\n";
      out << "shape: " << shape_name(tile_shape(c, t)) << "\n";
      out << "center: " << tile_center(c, t).to_string() << "\n";
      return 0;
    }

    if (necklace_cmd->parsed()) {
      NamedCase c = case_from_name(case_str);
      Necklace n = necklace(c, level_flag);
      out << "case: " << case_name(c) << "\n";
      out << "level: " << n.level << "\n";
      out << "beads: " << n.bead_count << "\n";
      out << "step: " << n.step << "\n";
      out << "center period: " << n.center_period << "\n";
      out << "non-center period: " << n.noncenter_period << "\n";
      out << "rotation order: " << n.rotation_order << "\n";
      out << "center orbits: " << n.center_orbit_count << "\n";
      for (std::size_t i = 0; i < n.beads.size(); ++i)
        out << (i + 1) << ": " << n.beads[i].to_string() << " "
            << shape_name(tile_shape(c, n.beads[i])) << " center "
            << n.bead_centers[i].to_string() << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      NamedCase c = case_from_name(case_str);
      WindowRats win;
      bool have_window = !window_str.empty();
      if (have_window) win = parse_rat_window(window_str);
      VerifyReport total;
      if (suite == "invariance") {
        SampleSpec spec;
        if (have_window) {
          spec.x_min = win.x0; spec.x_max = win.x1; spec.y_min = win.y0; spec.y_max = win.y1;
        }
        spec.count = samples > 0 ? samples : 1000;
        spec.max_denominator = max_den;
        spec.seed = seed;
        total = verify_integral(c, spec, threads);
      } else if (suite == "necklace") {
        long long top = level_flag >= 0 ? level_flag : 12;
        for (long long lvl = 0; lvl <= top; ++lvl) total.merge(verify_necklace(c, lvl));
      } else if (suite == "itineraries") {
        long long top = level_flag >= 0 ? level_flag : 6;
        int per_tile = samples > 0 ? static_cast<int>(samples) : 10;
        for (long long lvl = 0; lvl <= top; ++lvl) {
          total.merge(verify_rotation_orders(c, lvl));
          total.merge(verify_tile_itineraries(c, lvl, per_tile, seed));
        }
      } else if (suite == "boundary") {
        Rat b(8);
        Rat x0 = have_window ? win.x0 : -b, x1 = have_window ? win.x1 : b;
        Rat y0 = have_window ? win.y0 : -b, y1 = have_window ? win.y1 : b;
        total = verify_boundary(c, x0, x1, y0, y1, threads);
      } else {  // periods
        SampleSpec spec;
        Rat b(9);
        spec.x_min = have_window ? win.x0 : -b;
        spec.x_max = have_window ? win.x1 : b;
        spec.y_min = have_window ? win.y0 : -b;
        spec.y_max = have_window ? win.y1 : b;
        spec.lattice_denominator = lattice_den;
        spec.max_level = level_flag >= 0 ? level_flag : 6;
        spec.exclude_critical = false;
        CensusResult census = period_census(c, spec, threads);
        if (json_out) {
          for (const auto& [period, count] : census.counts) {
            json rec;
            rec["type"] = "census";
            rec["suite"] = suite;
            rec["case"] = case_name(c);
            rec["period"] = period;
            rec["count"] = count;
            out << rec.dump() << "\n";
          }
        } else {
          for (const auto& [period, count] : census.counts)
            out << "period " << period << ": " << count << " samples\n";
        }
        total = census.report;
      }
      if (json_out)
        print_report_json(out, suite, c, total);
      else
        print_report_human(out, suite, c, total);
      return total.pass() ? 0 : 1;
    }

    if (render_cmd->parsed()) {
      NamedCase c = case_from_name(case_str);
      Window win = parse_float_window(window_str);
      RenderOptions opts;
      opts.labels = labels;
      opts.palette_size = palette;
      write_file(out_path, render_levels(c, win, opts));
      out << "wrote " << out_path << "\n";
      return 0;
    }

    if (fractal_cmd->parsed()) {
      Window win = parse_float_window(window_str);
      write_file(out_path, render_fractal(alpha, depth, win));
      out << "wrote " << out_path << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tessera
