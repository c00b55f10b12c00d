// Command-line front end: pair classification, lemma verification, flow
// simulation, dilation norm checks and fixed-point contraction runs.

#include "inls/config.hpp"
#include "inls/diag_io.hpp"
#include "inls/duhamel.hpp"
#include "inls/lemmas.hpp"
#include "inls/report_json.hpp"
#include "inls/spectral.hpp"
#include "inls/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace inls;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBlowup = 3;
constexpr int kExitNaN = 4;

struct GlobalOpts {
  std::string config_path;
  std::string output_dir;
  std::vector<std::string> formats;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

struct ParamOverrides {
  std::optional<int> dim;
  std::optional<std::string> alpha, b, s, theta, mu, epsilon;
  std::optional<int> lambda;
};

struct GridOverrides {
  std::optional<int> dim;
  std::optional<double> extent;
  std::optional<std::size_t> points;
};

struct RunOverrides {
  std::optional<double> T, dt, ceiling;
  std::optional<int> sample_every;
};

struct ProfileOpts {
  std::string kind = "gaussian";  // gaussian | ring | plane-wave | zero
  double width = 1.0;
  std::string amplitude = "unit-mass";
  double radius = 2.0;
  double wave_k = 0.0;
};

RunConfig assemble_config(const GlobalOpts& g, const ParamOverrides& p,
                          const GridOverrides& gr, const RunOverrides& r) {
  RunConfig cfg;
  if (!g.config_path.empty()) cfg = load_run_config(g.config_path);
  if (p.dim) cfg.params.dim = *p.dim;
  if (p.alpha) cfg.params.alpha = Rational::parse(*p.alpha);
  if (p.b) cfg.params.b = Rational::parse(*p.b);
  if (p.s) cfg.params.s = Rational::parse(*p.s);
  if (p.theta) cfg.params.theta = Rational::parse(*p.theta);
  if (p.mu) cfg.params.mu = Rational::parse(*p.mu);
  if (p.epsilon) cfg.params.epsilon = Rational::parse(*p.epsilon);
  if (p.lambda) cfg.params.lambda_sign = *p.lambda;
  if (gr.dim) cfg.grid.dim = *gr.dim;
  if (gr.extent) cfg.grid.extent = *gr.extent;
  if (gr.points) cfg.grid.points = *gr.points;
  if (r.T) cfg.run.T = *r.T;
  if (r.dt) cfg.run.dt = *r.dt;
  if (r.sample_every) cfg.run.sample_every = *r.sample_every;
  if (r.ceiling) cfg.run.amplitude_ceiling = *r.ceiling;
  if (!g.output_dir.empty()) cfg.output.dir = g.output_dir;
  if (!g.formats.empty()) cfg.output.formats = g.formats;
  if (g.seed_set) cfg.seed = g.seed;
  cfg.params.require_valid();
  return cfg;
}

PotentialSpec potential_from(const ParamSet& p) {
  PotentialSpec spec;
  spec.b = p.b.to_double();
  spec.alpha = p.alpha.to_double();
  spec.lambda_sign = p.lambda_sign;
  return spec;
}

Field initial_field(const ProfileOpts& prof, const Grid& grid) {
  if (prof.kind == "zero") return Field::zeros(grid);
  if (prof.kind == "gaussian") {
    GaussianProfile g;
    g.width = prof.width;
    if (prof.amplitude == "unit-mass") {
      g.unit_mass = true;
    } else {
      g.amplitude = std::stod(prof.amplitude);
    }
    return sample_initial(g, grid);
  }
  if (prof.kind == "ring") return sample_initial(RingProfile{prof.radius, prof.width, 1.0}, grid);
  if (prof.kind == "plane-wave")
    return sample_initial(PlaneWaveProfile{{prof.wave_k, 0, 0}}, grid);
  throw std::invalid_argument("unknown profile '" + prof.kind + "'");
}

bool wants_format(const RunConfig& cfg, const std::string& fmt) {
  for (const auto& f : cfg.output.formats)
    if (f == fmt) return true;
  return false;
}

void add_param_flags(CLI::App* cmd, ParamOverrides& p) {
  cmd->add_option("--n,--dim", p.dim, "spatial dimension N");
  cmd->add_option("--alpha", p.alpha, "nonlinearity power (rational, e.g. 5/2)");
  cmd->add_option("--b", p.b, "weight exponent b (rational)");
  cmd->add_option("--s", p.s, "regularity s (rational)");
  cmd->add_option("--theta", p.theta, "auxiliary split theta (rational)");
  cmd->add_option("--mu", p.mu, "interpolation weight mu (rational)");
  cmd->add_option("--eps,--epsilon", p.epsilon, "endpoint shrink epsilon (rational)");
  cmd->add_option("--lambda", p.lambda, "+1 focusing, -1 defocusing");
}

int run_check_pair(const std::string& q, const std::string& r, int dim, const std::string& s,
                   const std::string& eps) {
  Pair pair{Rational::parse(q), Rational::parse(r)};
  const Rational reg = Rational::parse(s);
  const Rational shrink = Rational::parse(eps);
  const PairClass verdict = classify_pair(pair, dim, reg, shrink);

  Json out;
  out["q"] = pair.q.str();
  out["r"] = pair.r.str();
  out["N"] = dim;
  out["s"] = reg.str();
  out["epsilon"] = shrink.str();
  out["class"] = verdict.str();
  out["scaling_lhs"] = (Rational(2) * pair.q.reciprocal()).str();
  const Rational base = Rational(dim, 2) - Rational(dim) * pair.r.reciprocal();
  out["scaling_rhs"] = Json{{"l2", base.str()},
                            {"hs", reg.is_zero() ? base.str() : (base - reg).str()},
                            {"hs_dual", reg.is_zero() ? base.str() : (base + reg).str()}};
  out["window_check"] = verdict.admissible() ? "inside" : verdict.reason;
  std::cout << out.dump(2) << '\n';
  return verdict.admissible() ? kExitPass : kExitFail;
}

int run_lemma(const GlobalOpts& g, const std::string& name, const ParamOverrides& po,
              int sweep_count) {
  RunConfig cfg = assemble_config(g, po, {}, {});

  std::optional<LemmaId> id = lemma_from_string(name);
  if (!id) {
    // generic names dispatch on the parameters
    if (name == "local-hs")
      id = local_hs_branch(cfg.params);
    else if (name == "global-deriv")
      id = global_deriv_branch(cfg.params);
    else
      throw CLI::ValidationError("lemma", "unknown lemma '" + name + "'");
  }

  if (sweep_count > 0) {
    const SweepResult res = run_sweep(*id, sweep_count, cfg.seed);
    Json out;
    out["lemma"] = std::string(to_string(res.lemma));
    out["total"] = res.total;
    out["passed"] = res.passed;
    out["failures"] = res.failures;
    std::cout << out.dump(2) << '\n';
    return res.all_passed() ? kExitPass : kExitFail;
  }

  const LemmaReport report = verify_lemma(*id, cfg.params);
  std::cout << to_json(report).dump(2) << '\n';
  return report.pass() ? kExitPass : kExitFail;
}

int run_simulate(const GlobalOpts& g, const ParamOverrides& po, const GridOverrides& go,
                 const RunOverrides& ro, const ProfileOpts& prof) {
  const RunConfig cfg = assemble_config(g, po, go, ro);
  const Grid grid = cfg.make_grid_from_config();
  const Field u0 = initial_field(prof, grid);
  const PotentialSpec spec = potential_from(cfg.params);

  EvolveOptions opts;
  opts.sample_every = cfg.run.sample_every;
  opts.amplitude_ceiling = cfg.run.amplitude_ceiling;
  opts.hs_orders = {cfg.params.s.to_double()};
  opts.keep_frames = wants_format(cfg, "bin");

  std::filesystem::create_directories(cfg.output.dir);
  EvolveResult out;
  try {
    out = evolve(u0, cfg.run.T, cfg.run.dt, spec, opts);
  } catch (const EvolveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNaN;
  }

  const auto csv_path = std::filesystem::path(cfg.output.dir) / "diagnostics.csv";
  std::ofstream csv(csv_path);
  write_diagnostics_csv(csv, out.diagnostics);

  Json summary;
  summary["status"] =
      out.status == EvolveStatus::Completed ? "completed" : "suspected blow-up";
  summary["steps"] = out.steps_done;
  summary["mass_initial"] = out.diagnostics.mass_trace.front();
  summary["mass_final"] = out.diagnostics.mass_trace.back();
  summary["mass_drift"] =
      std::abs(out.diagnostics.mass_trace.back() - out.diagnostics.mass_trace.front()) /
      std::max(out.diagnostics.mass_trace.front(), 1e-300);
  summary["energy_initial"] = out.diagnostics.energy_trace.front();
  summary["energy_final"] = out.diagnostics.energy_trace.back();
  summary["boundary_fraction"] = out.boundary_fraction;
  summary["boundary_flagged"] = out.boundary_fraction > 1e-8;
  summary["diagnostics_csv"] = csv_path.string();

  if (wants_format(cfg, "bin")) {
    const auto bin_path = std::filesystem::path(cfg.output.dir) / "trajectory.bin";
    write_field_bin(bin_path.string(), out.frames);
    summary["trajectory_bin"] = bin_path.string();
  }
  if (wants_format(cfg, "json")) {
    std::ofstream js(std::filesystem::path(cfg.output.dir) / "summary.json");
    js << summary.dump(2) << '\n';
  }
  std::cout << summary.dump(2) << '\n';
  return out.status == EvolveStatus::Completed ? kExitPass : kExitBlowup;
}

int run_scaling_test(const GlobalOpts& g, const ParamOverrides& po, const GridOverrides& go,
                     std::vector<double> deltas, const std::vector<std::string>& s_tokens,
                     const ProfileOpts& prof) {
  const RunConfig cfg = assemble_config(g, po, go, {});
  const Grid grid = cfg.make_grid_from_config();
  const Field u0 = initial_field(prof, grid);
  const double b = cfg.params.b.to_double();
  const double alpha = cfg.params.alpha.to_double();
  const double sc = cfg.params.s_critical().to_double();
  if (deltas.empty()) deltas = {0.5, 2.0};

  auto parse_s = [&](const std::string& tok) -> double {
    if (tok == "sc") return sc;
    if (tok.rfind("sc+", 0) == 0) return sc + Rational::parse(tok.substr(3)).to_double();
    if (tok.rfind("sc-", 0) == 0) return sc - Rational::parse(tok.substr(3)).to_double();
    return std::stod(tok);
  };
  std::vector<double> orders;
  if (s_tokens.empty())
    orders = {sc, sc + 0.5, sc - 0.5};
  else
    for (const auto& tok : s_tokens) orders.push_back(parse_s(tok));

  Json rows = Json::array();
  bool all_ok = true;
  for (double delta : deltas) {
    const Field v = rescale(u0, delta, b, alpha);
    for (double s : orders) {
      const double measured = sobolev_norm(v, s) / sobolev_norm(u0, s);
      const double predicted = std::pow(delta, s - sc);
      const double err = std::abs(measured - predicted) / predicted;
      all_ok = all_ok && err < 0.01;
      Json row;
      row["delta"] = delta;
      row["s"] = s;
      row["measured_ratio"] = measured;
      row["predicted_ratio"] = predicted;
      row["relative_error"] = err;
      rows.push_back(std::move(row));
    }
  }
  Json out;
  out["s_critical"] = sc;
  out["rows"] = std::move(rows);
  out["pass"] = all_ok;
  std::cout << out.dump(2) << '\n';
  return all_ok ? kExitPass : kExitFail;
}

int run_picard(const GlobalOpts& g, const ParamOverrides& po, const GridOverrides& go,
               const RunOverrides& ro, const ProfileOpts& prof, int n_iter, int n_time,
               const std::vector<std::string>& pair_tokens) {
  const RunConfig cfg = assemble_config(g, po, go, ro);
  const Grid grid = cfg.make_grid_from_config();
  const Field u0 = initial_field(prof, grid);
  const PotentialSpec spec = potential_from(cfg.params);

  std::vector<Pair> pairs;
  for (const auto& tok : pair_tokens) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--pair", "expected 'q,r' with rational entries");
    pairs.push_back({Rational::parse(tok.substr(0, comma)),
                     Rational::parse(tok.substr(comma + 1))});
  }
  if (pairs.empty()) pairs.push_back({Rational::infinity(), Rational(2)});

  const PicardResult res = picard_iterate(u0, cfg.run.T, n_time, n_iter, spec, pairs);
  Json out;
  out["T"] = cfg.run.T;
  out["distances"] = res.distances;
  out["ratios"] = res.ratios;
  out["max_ratio"] = res.max_ratio();
  out["status"] = res.contraction() ? "contraction" : "no contraction at this T";
  std::cout << out.dump(2) << '\n';
  return res.contraction() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "inls-lab: exact admissible-pair calculus and pseudospectral simulation for the\n"
      "inhomogeneous nonlinear Schroedinger flow i u_t + Lap u + lambda |x|^-b |u|^a u = 0.\n"
      "Values from --config files are applied first; command-line flags override them."};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--config", global.config_path, "INI-style run configuration file");
  app.add_option("--output", global.output_dir, "output directory");
  app.add_option("--format", global.formats, "output formats: csv, json, bin");
  app.add_option("--seed", global.seed, "seed for randomized sweeps")
      ->each([&](const std::string&) { global.seed_set = true; });

  // check-pair
  auto* check = app.add_subcommand("check-pair", "classify a time-space exponent pair");
  std::string cp_q, cp_r, cp_s = "0", cp_eps = "1/1000";
  int cp_dim = 3;
  check->add_option("--q", cp_q, "time exponent (rational or inf)")->required();
  check->add_option("--r", cp_r, "space exponent (rational or inf)")->required();
  check->add_option("--n,--dim", cp_dim, "spatial dimension");
  check->add_option("--s", cp_s, "regularity index (rational)");
  check->add_option("--eps", cp_eps, "endpoint shrink (rational)");

  // lemma
  auto* lemma = app.add_subcommand("lemma", "verify one derived exponent system");
  std::string lemma_name;
  int sweep_count = 0;
  ParamOverrides lemma_params;
  lemma->add_option("name", lemma_name,
                    "local-l2 | local-hs[-high-dim|-low-dim|-half-dim] | global-base | "
                    "global-deriv[-high-dim|-3d|-1d|-2d|-half-dim]")
      ->required();
  add_param_flags(lemma, lemma_params);
  lemma->add_option("--sweep", sweep_count,
                    "verify this many pseudorandom parameter sets inside the hypothesis "
                    "region instead of a single report");

  // simulate
  auto* sim = app.add_subcommand("simulate", "evolve the flow and record diagnostics");
  ParamOverrides sim_params;
  GridOverrides sim_grid;
  RunOverrides sim_run;
  ProfileOpts sim_prof;
  add_param_flags(sim, sim_params);
  sim->add_option("--grid-dim", sim_grid.dim, "grid dimension (1-3)");
  sim->add_option("--extent", sim_grid.extent, "box side length");
  sim->add_option("--points", sim_grid.points, "nodes per axis (power of two)");
  sim->add_option("--T", sim_run.T, "final time");
  sim->add_option("--dt", sim_run.dt, "time step");
  sim->add_option("--sample-every", sim_run.sample_every, "diagnostic sampling stride");
  sim->add_option("--ceiling", sim_run.ceiling, "blow-up amplitude ceiling (x initial)");
  sim->add_option("--profile", sim_prof.kind, "gaussian | ring | plane-wave | zero");
  sim->add_option("--width", sim_prof.width, "profile width");
  sim->add_option("--amplitude", sim_prof.amplitude, "amplitude or 'unit-mass'");
  sim->add_option("--radius", sim_prof.radius, "ring radius");
  sim->add_option("--k", sim_prof.wave_k, "plane-wave wavenumber");

  // scaling-test
  auto* scale = app.add_subcommand("scaling-test", "dilation against the critical index");
  ParamOverrides sc_params;
  GridOverrides sc_grid;
  ProfileOpts sc_prof;
  std::vector<double> sc_deltas;
  std::vector<std::string> sc_orders;
  add_param_flags(scale, sc_params);
  scale->add_option("--grid-dim", sc_grid.dim, "grid dimension");
  scale->add_option("--extent", sc_grid.extent, "box side length");
  scale->add_option("--points", sc_grid.points, "nodes per axis (power of two)");
  scale->add_option("--delta", sc_deltas, "dilation factors (default 0.5 and 2)");
  scale->add_option("--s-list", sc_orders,
                    "regularities: numbers or sc, sc+1/2, sc-1/2 (default those three)");
  scale->add_option("--width", sc_prof.width, "gaussian width");

  // picard
  auto* pic = app.add_subcommand("picard", "fixed-point iteration of the flow map");
  ParamOverrides pc_params;
  GridOverrides pc_grid;
  RunOverrides pc_run;
  ProfileOpts pc_prof;
  int pc_iter = 6, pc_time = 17;
  std::vector<std::string> pc_pairs;
  add_param_flags(pic, pc_params);
  pic->add_option("--grid-dim", pc_grid.dim, "grid dimension");
  pic->add_option("--extent", pc_grid.extent, "box side length");
  pic->add_option("--points", pc_grid.points, "nodes per axis (power of two)");
  pic->add_option("--T", pc_run.T, "iteration horizon");
  pic->add_option("--n-iter", pc_iter, "number of iterates (>= 2)");
  pic->add_option("--n-time", pc_time, "time quadrature nodes (>= 8)");
  pic->add_option("--pair", pc_pairs, "mixed norm pair 'q,r' (repeatable; default inf,2)");
  pic->add_option("--width", pc_prof.width, "gaussian width");
  pic->add_option("--amplitude", pc_prof.amplitude, "amplitude or 'unit-mass'");
  pic->add_option("--profile", pc_prof.kind, "gaussian | zero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check_pair(cp_q, cp_r, cp_dim, cp_s, cp_eps);
    if (lemma->parsed()) return run_lemma(global, lemma_name, lemma_params, sweep_count);
    if (sim->parsed()) return run_simulate(global, sim_params, sim_grid, sim_run, sim_prof);
    if (scale->parsed())
      return run_scaling_test(global, sc_params, sc_grid, sc_deltas, sc_orders, sc_prof);
    if (pic->parsed())
      return run_picard(global, pc_params, pc_grid, pc_run, pc_prof, pc_iter, pc_time,
                        pc_pairs);
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
