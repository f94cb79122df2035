#include "atlas/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "blaschke/atlas.hpp"
#include "blaschke/circle.hpp"
#include "blaschke/config.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/multiplier.hpp"
#include "blaschke/parallel.hpp"
#include "blaschke/polys.hpp"
#include "blaschke/records.hpp"
#include "blaschke/render.hpp"

namespace atlas {

namespace {

using blaschke::Complex;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultMaxRes = 8192;

double parse_real(std::string_view s, const std::string& flag) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(x)) {
    throw UsageError(flag + ": not a number: '" + std::string(s) + "'");
  }
  return x;
}

// "re,im" or a bare real.
Complex parse_complex(const std::string& s, const std::string& flag) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_real(s, flag), 0.0};
  return {parse_real(std::string_view(s).substr(0, comma), flag),
          parse_real(std::string_view(s).substr(comma + 1), flag)};
}

// "n" or "nx,ny".
std::pair<int, int> parse_res(const std::string& s, int max_res) {
  auto one = [&](std::string_view v) {
    int n = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), n);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || n <= 0) {
      throw UsageError("--res: expected n or nx,ny with positive integers, got '" + s + "'");
    }
    if (n > max_res) throw UsageError("--res: " + std::to_string(n) + " exceeds the maximum " + std::to_string(max_res));
    return n;
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    const int n = one(s);
    return {n, n};
  }
  return {one(std::string_view(s).substr(0, comma)), one(std::string_view(s).substr(comma + 1))};
}

// Options shared by most subcommands. Everything is kept as text so config
// values can be fed through the same parser as flags.
struct Options {
  std::string a;
  std::string z;
  std::string critical = "plus";
  std::string center = "0,0";
  double width = 16.0;
  std::optional<double> height;
  std::string res = "400";
  std::optional<int> max_iter;
  std::optional<double> eps_cycle;
  std::string out;
  std::string csv;
  std::string from_csv;
  std::optional<int> threads;
  std::string config;
  std::string family = "blaschke";
  int max_res = kDefaultMaxRes;
  int depth = 40;
  int grid = 1024;
  std::string lambda;
  std::optional<int> period;
  int homotopy_steps = 32;
};

struct Context {
  Options opt;
  std::ostream& out;
  std::ostream& err;
};

// Fills options that were not given on the command line from the config file.
void apply_config(CLI::App& sub, const blaschke::Config& cfg) {
  for (CLI::Option* o : sub.get_options()) {
    if (o->count() > 0 || o->get_lnames().empty()) continue;
    const std::string& name = o->get_lnames().front();
    if (name == "config" || name == "help") continue;
    if (auto v = cfg.get(name)) {
      o->add_result(*v);
      o->run_callback();
    }
  }
}

blaschke::OrbitSpec orbit_spec(const Options& o, blaschke::OrbitSpec base, const blaschke::Config& cfg) {
  blaschke::OrbitSpec s = cfg.apply(base);
  if (o.max_iter) s.max_iter = *o.max_iter;
  if (o.eps_cycle) s.eps_cycle = *o.eps_cycle;
  s.validate();
  return s;
}

blaschke::PlaneSpec window(const Options& o, const blaschke::OrbitSpec& spec) {
  blaschke::PlaneSpec w;
  w.center = parse_complex(o.center, "--center");
  w.width = o.width;
  const auto [nx, ny] = parse_res(o.res, o.max_res);
  w.nx = nx;
  w.ny = ny;
  w.height = o.height ? *o.height : o.width * ny / nx;
  w.orbit = spec;
  if (!(w.width > 0.0) || !(w.height > 0.0)) throw UsageError("--width/--height must be positive");
  return w;
}

int thread_count(const Options& o) {
  if (!o.threads) return blaschke::default_thread_count();
  if (*o.threads < 1) throw UsageError("--threads must be at least 1");
  return *o.threads;
}

Complex required_a(const Options& o) {
  if (o.a.empty()) throw UsageError("--a is required");
  return parse_complex(o.a, "--a");
}

void emit(Context& ctx, const std::string& text) {
  ctx.out << text << '\n';
  if (!ctx.opt.out.empty()) blaschke::write_file(ctx.opt.out, text + "\n");
}

void write_image(const Options& o, const blaschke::Image& img) {
  if (o.out.empty()) throw UsageError("--out is required");
  blaschke::write_file(o.out, blaschke::to_ppm(img));
}

std::string csv_text(const blaschke::RowGrid& g) {
  std::ostringstream os;
  blaschke::write_csv(os, g);
  return os.str();
}

std::string csv_text(const blaschke::Grid<blaschke::PolyPixel>& g, blaschke::PolyFamily f) {
  std::ostringstream os;
  blaschke::write_csv(os, g, f);
  return os.str();
}

int cmd_classify(Context& ctx, const blaschke::OrbitSpec& spec) {
  const Complex a = required_a(ctx.opt);
  if (ctx.opt.family != "blaschke") {
    const blaschke::PolyFamily f = blaschke::parse_family(ctx.opt.family);
    emit(ctx, blaschke::to_json(blaschke::poly_classify({f, a}, spec)));
    return kExitOk;
  }
  emit(ctx, blaschke::to_json(blaschke::classify_parameter(a, spec)));
  return kExitOk;
}

int cmd_orbit(Context& ctx, const blaschke::OrbitSpec& spec) {
  const blaschke::BlaschkeParam p(required_a(ctx.opt));
  Complex z0;
  if (!ctx.opt.z.empty()) {
    z0 = parse_complex(ctx.opt.z, "--z");
  } else {
    const blaschke::CriticalData c = blaschke::critical_points(p);
    if (ctx.opt.critical == "plus") {
      z0 = c.c_plus;
    } else if (ctx.opt.critical == "minus") {
      z0 = c.c_minus;
    } else {
      throw UsageError("--critical must be plus or minus");
    }
  }
  emit(ctx, blaschke::to_json(blaschke::classify_fate(p, z0, spec)));
  return kExitOk;
}

int poly_plane(Context& ctx, blaschke::PolyFamily family, const blaschke::OrbitSpec& spec) {
  const Options& o = ctx.opt;
  blaschke::Grid<blaschke::PolyPixel> grid;
  if (!o.from_csv.empty()) {
    std::istringstream is(blaschke::read_file(o.from_csv));
    grid = blaschke::read_poly_csv(is);
  } else {
    grid = blaschke::poly_plane_grid(family, window(o, spec), thread_count(o));
  }
  if (!o.csv.empty()) blaschke::write_file(o.csv, csv_text(grid, family));
  write_image(o, blaschke::render_image(grid));
  return kExitOk;
}

int cmd_param_plane(Context& ctx, const blaschke::OrbitSpec& spec) {
  const Options& o = ctx.opt;
  if (o.family != "blaschke") return poly_plane(ctx, blaschke::parse_family(o.family), spec);
  blaschke::RowGrid rows;
  if (!o.from_csv.empty()) {
    std::istringstream is(blaschke::read_file(o.from_csv));
    rows = blaschke::read_param_csv(is);
  } else {
    rows = blaschke::summarize(blaschke::param_plane_grid(window(o, spec), thread_count(o)));
  }
  if (!o.csv.empty()) blaschke::write_file(o.csv, csv_text(rows));
  write_image(o, blaschke::render_image(rows));
  return kExitOk;
}

int cmd_poly_plane(Context& ctx, const blaschke::OrbitSpec& spec) {
  if (ctx.opt.family == "blaschke") throw UsageError("poly-plane needs --family cubic|antiquadratic|antiquadratic-squared|quadratic");
  return poly_plane(ctx, blaschke::parse_family(ctx.opt.family), spec);
}

int cmd_dyn_plane(Context& ctx, const blaschke::OrbitSpec& spec) {
  const Options& o = ctx.opt;
  const Complex a = required_a(o);
  const auto grid = blaschke::dyn_plane_grid(a, window(o, spec), thread_count(o));
  write_image(o, blaschke::render_image(grid));
  return kExitOk;
}

int cmd_lift(Context& ctx, const blaschke::OrbitSpec&) {
  const Options& o = ctx.opt;
  const blaschke::BlaschkeParam p(required_a(o));
  const blaschke::LiftTable lift = blaschke::build_lift(p, o.grid);
  const blaschke::SemiconjugacySample s = blaschke::semiconjugacy(p, lift, o.depth, o.grid);
  if (!o.csv.empty()) {
    std::ostringstream os;
    blaschke::write_lift_csv(os, lift, s);
    blaschke::write_file(o.csv, os.str());
  }
  std::ostringstream js;
  js << "{\n  \"depth\": " << s.depth << ",\n  \"grid_points\": " << s.x.size() << ",\n  \"defect\": " << s.defect
     << ",\n  \"monotone\": " << (s.monotone ? "true" : "false")
     << ",\n  \"periodicity_error\": " << s.periodicity_error << "\n}";
  emit(ctx, js.str());
  return kExitOk;
}

blaschke::SolveOptions solve_options(const Options& o) {
  blaschke::SolveOptions s;
  s.max_homotopy_steps = o.homotopy_steps;
  return s;
}

int report(Context& ctx, const blaschke::SolveReport& r) {
  emit(ctx, blaschke::to_json(r));
  if (!r.converged) {
    ctx.err << "atlas: solve failed: " << r.failure << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_solve(Context& ctx, const blaschke::OrbitSpec& spec) {
  const Options& o = ctx.opt;
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  return report(ctx, blaschke::solve_multiplier(required_a(o), parse_complex(o.lambda, "--lambda"), spec,
                                                solve_options(o)));
}

int cmd_center(Context& ctx, const blaschke::OrbitSpec& spec) {
  const Options& o = ctx.opt;
  const Complex a = required_a(o);
  int period = 0;
  if (o.period) {
    period = *o.period;
  } else {
    const blaschke::ParamClassRecord rec = blaschke::classify_parameter(a, spec);
    if (!rec.cycle_plus) throw blaschke::DomainError("no cycle at the seed; pass --period");
    period = rec.cycle_plus->period;
  }
  return report(ctx, blaschke::find_superattracting(a, period, spec, solve_options(o)));
}

using Handler = int (*)(Context&, const blaschke::OrbitSpec&);

struct Command {
  const char* name;
  const char* help;
  Handler handler;
  bool plane;
};

constexpr Command kCommands[] = {
    {"classify", "Classify a parameter and print its record as JSON", cmd_classify, false},
    {"orbit", "Follow one orbit of B_a and print its fate as JSON", cmd_orbit, false},
    {"param-plane", "Render the parameter plane to a PPM image", cmd_param_plane, true},
    {"dyn-plane", "Render the dynamical plane of B_a to a PPM image", cmd_dyn_plane, true},
    {"poly-plane", "Render a comparison polynomial family's parameter plane", cmd_poly_plane, true},
    {"lift", "Build the circle lift and semiconjugacy for |a| > 2", cmd_lift, false},
    {"solve-multiplier", "Solve Lambda(a) = lambda from a seed parameter", cmd_solve, false},
    {"center", "Locate the superattracting centre of a component", cmd_center, false},
};

void add_options(CLI::App& sub, Options& o, const Command& c) {
  sub.add_option("--a", o.a, "Parameter a as re,im");
  sub.add_option("--max-iter", o.max_iter, "Iteration budget per orbit");
  sub.add_option("--eps-cycle", o.eps_cycle, "Near-return tolerance");
  sub.add_option("--out", o.out, c.plane ? "Output PPM path" : "Also write the JSON here");
  sub.add_option("--config", o.config, "Flat key=value file; flags override it");
  sub.add_option("--family", o.family, "blaschke|cubic|antiquadratic|antiquadratic-squared|quadratic");
  if (c.plane) {
    sub.add_option("--center", o.center, "Window centre re,im");
    sub.add_option("--width", o.width, "Window width");
    sub.add_option("--height", o.height, "Window height (default keeps pixels square)");
    sub.add_option("--res", o.res, "n or nx,ny");
    sub.add_option("--csv", o.csv, "Also write the grid as CSV");
    sub.add_option("--from-csv", o.from_csv, "Re-render a saved CSV grid");
    sub.add_option("--threads", o.threads, "Worker count (default ATLAS_THREADS)");
    sub.add_option("--max-res", o.max_res, "Largest accepted side length");
  }
  const std::string name = c.name;
  if (name == "orbit") {
    sub.add_option("--z", o.z, "Starting point re,im (default: a critical point)");
    sub.add_option("--critical", o.critical, "plus or minus");
  }
  if (name == "lift") {
    sub.add_option("--depth", o.depth, "Semiconjugacy depth (1..50)");
    sub.add_option("--res", o.grid, "Lift grid size");
    sub.add_option("--csv", o.csv, "Write x,F,H samples");
  }
  if (name == "solve-multiplier") sub.add_option("--lambda", o.lambda, "Target multiplier re,im");
  if (name == "center") sub.add_option("--period", o.period, "Cycle period (default: the seed's)");
  if (name == "solve-multiplier" || name == "center") {
    sub.add_option("--homotopy-steps", o.homotopy_steps, "Continuation stage cap");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameter and dynamical planes of z^3 (z - a) / (1 - conj(a) z)", "atlas"};
  app.require_subcommand(1);
  Options opt;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_options(*sub, opt, c);
    subs.emplace_back(sub, &c);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto& [sub, cmd] : subs) {
      if (!sub->parsed()) continue;
      blaschke::Config cfg;
      if (!opt.config.empty()) {
        cfg = blaschke::Config::load(opt.config);
        apply_config(*sub, cfg);
      }
      const blaschke::OrbitSpec base =
          cmd->plane ? blaschke::OrbitSpec::grid() : blaschke::OrbitSpec{};
      Context ctx{opt, out, err};
      return cmd->handler(ctx, orbit_spec(opt, base, cfg));
    }
  } catch (const UsageError& e) {
    err << "atlas: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "atlas: bad config value: " << e.what() << '\n';
    return kExitUsage;
  } catch (const blaschke::Error& e) {
    err << "atlas: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace atlas
