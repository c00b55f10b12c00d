// Acceptance suite: one line per criterion, every tolerance pinned in code.

#include "inls/duhamel.hpp"
#include "inls/lemmas.hpp"
#include "inls/spectral.hpp"
#include "inls/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace inls;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void criterion(int number, const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, label.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

PotentialSpec defocusing_quarter() {
  PotentialSpec spec;
  spec.b = 0.25;
  spec.lambda_sign = -1;
  spec.alpha = 3.0;
  return spec;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// 1. 1000 pseudorandom parameter sets per branch, zero failed identities and
//    zero failed sign conditions, exact arithmetic.
void criterion_soundness_sweep() {
  const auto t0 = std::chrono::steady_clock::now();
  int total = 0, passed = 0;
  std::string first_failure;
  for (LemmaId id : kAllLemmas) {
    const SweepResult res = run_sweep(id, 1000, 0x11752025u);
    total += res.total;
    passed += res.passed;
    if (!res.all_passed() && first_failure.empty())
      first_failure = std::string(to_string(id)) + ": " + res.failures.front();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = passed == total && secs < 10.0;
  criterion(1, "exponent soundness sweep",
            pass,
            std::to_string(passed) + "/" + std::to_string(total) + " exact passes in " +
                fmt(secs) + " s" + (first_failure.empty() ? "" : "; " + first_failure));
}

// 2. The three ball time exponents vanish exactly at their alpha bounds.
void criterion_boundary_sharpness() {
  int checked = 0;
  bool pass = true;
  for (int n = 1; n <= 6 && pass; ++n) {
    for (long long bn = 1; bn <= 12; ++bn) {
      const Rational b(bn, 8);
      if (b < min(Rational(2), Rational(n))) {
        const Rational bound = (Rational(4) - Rational(2) * b) / Rational(n);
        pass = pass && theta2_local_l2(n, bound, b) == Rational(0);
        ++checked;
      }
      if (!(b < b_upper(n))) continue;
      for (long long sn = 1; sn <= 8; ++sn) {
        const Rational s(sn, 8);
        if (Rational(2) * s >= Rational(n) || s > Rational(1)) continue;
        const Rational bound = alpha_upper(n, s, b);
        if (n >= 3)
          pass = pass && theta2_local_hs_high_dim(n, s, bound, b) == Rational(0);
        else
          pass = pass && theta2_local_hs_low_dim(n, s, bound, b) == Rational(0);
        ++checked;
      }
    }
  }
  criterion(2, "boundary sharpness of the ball time exponents", pass,
            std::to_string(checked) + " exact rational zeros");
}

// 3. Reciprocal identity 1/a^ + 1/a~ = 2/q^ exact across the base sweep, with
//    every constructed pair re-classified through the independent path.
void criterion_reciprocal_identity() {
  std::mt19937_64 rng(0x1752u);
  int identities = 0, reclassified = 0;
  bool pass = true;
  std::string detail;
  for (int i = 0; i < 1000 && pass; ++i) {
    ParamSet params = sample_params(LemmaId::GlobalBase, rng);
    LemmaReport report;
    bool built = false;
    for (int attempt = 0; attempt < 6 && !built; ++attempt) {
      try {
        report = global_pairs(params);
        built = true;
      } catch (const HypothesisError&) {
        params.epsilon = params.eps() / Rational(8);
      }
    }
    if (!built) {
      pass = false;
      detail = "draw " + std::to_string(i) + " failed to build";
      break;
    }
    bool saw_identity = false;
    for (const auto& id : report.identities)
      if (id.desc.rfind("reciprocal identity", 0) == 0) {
        saw_identity = true;
        pass = pass && id.pass && id.lhs == id.rhs;
        ++identities;
      }
    pass = pass && saw_identity;
    for (const auto& p : report.pairs) {
      pass = pass && p.verified;
      ++reclassified;
    }
    if (!pass) detail = "draw " + std::to_string(i) + ": " + report.first_failure();
  }
  criterion(3, "global reciprocal identity and re-classification", pass,
            std::to_string(identities) + " exact identities, " +
                std::to_string(reclassified) + " pairs re-classified" +
                (detail.empty() ? "" : "; " + detail));
}

// 4. Linear flow preserves the discrete L2 norm to 1e-12; the full step
//    conserves mass to a relative drift below 1e-10 over 10^3 steps.
void criterion_conservation() {
  const auto t0 = std::chrono::steady_clock::now();

  const Grid g = make_grid(1, 2 * kPi * 12, 512);
  std::mt19937_64 rng(77);
  std::normal_distribution<double> dist;
  Field noise = Field::zeros(g);
  for (auto& v : noise.values) v = Complex(dist(rng), dist(rng));
  double unitarity_err = 0;
  const double m0 = mass(noise);
  for (double t : {0.1, 1.0, 10.0})
    unitarity_err =
        std::max(unitarity_err, std::abs(mass(linear_propagate(noise, t)) - m0) / m0);

  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  EvolveOptions opts;
  opts.sample_every = 50;
  const auto out = evolve(u0, 1.0, 1e-3, defocusing_quarter(), opts);
  double drift = 0;
  const double mref = out.diagnostics.mass_trace.front();
  for (double m : out.diagnostics.mass_trace)
    drift = std::max(drift, std::abs(m - mref) / mref);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const bool pass = unitarity_err < 1e-12 && drift < 1e-10 &&
                    out.status == EvolveStatus::Completed && out.steps_done == 1000 &&
                    secs < 5.0;
  criterion(4, "unitarity and mass conservation", pass,
            "L2 error " + fmt(unitarity_err) + ", mass drift " + fmt(drift) + " over 1000 steps in " +
                fmt(secs) + " s");
}

// 5. Energy drift of the same run converges at observed order in [1.8, 2.2].
void criterion_energy_order() {
  const Grid g = make_grid(1, 2 * kPi * 12, 512);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.5, false}, g);
  const PotentialSpec spec = defocusing_quarter();
  auto drift = [&](double dt) {
    EvolveOptions opts;
    opts.sample_every = 1 << 20;
    const auto out = evolve(u0, 0.1, dt, spec, opts);
    return std::abs(out.diagnostics.energy_trace.back() -
                    out.diagnostics.energy_trace.front());
  };
  const double d4 = drift(4e-3), d2 = drift(2e-3), d1 = drift(1e-3);
  const double order = 0.5 * std::log2(d4 / d1);
  const bool pass = order >= 1.8 && order <= 2.2 && d4 > d2 && d2 > d1;
  criterion(5, "second-order energy convergence", pass,
            "drifts " + fmt(d4) + " / " + fmt(d2) + " / " + fmt(d1) + ", observed order " +
                fmt(order));
}

// 6. Free flow of a Gaussian matches the closed form at t = 0.1 to 1e-8 on a
//    box whose boundary shell carries less than 1e-12 of the mass.
void criterion_free_gaussian() {
  const Grid g = make_grid(1, 2 * kPi * 8, 512);
  Field u = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  const double boundary = boundary_mass_fraction(u);
  const double t = 0.1;
  Field v = linear_propagate(u, t);
  double num = 0, den = 0;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    const double x = g.coordinate(0, g.unravel(i)[0]);
    const Complex a(1.0, 2.0 * t);
    const Complex exact = std::exp(-x * x / (2.0 * a)) / std::sqrt(a);
    num += std::norm(v.values[i] - exact);
    den += std::norm(exact);
  }
  const double err = std::sqrt(num / den);
  const bool pass = err < 1e-8 && boundary < 1e-12;
  criterion(6, "free-Gaussian closed-form oracle", pass,
            "relative error " + fmt(err) + ", boundary mass share " + fmt(boundary));
}

// 7. Dilation ratios match delta^(s - s_c) within 1% on the refined grid,
//    with the s = s_c row within 1% of exactly 1.
void criterion_scaling_invariance() {
  const Grid g = make_grid(1, 2 * kPi * 16, 2048);
  Field u = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  const double b = 0.5, alpha = 12.0;
  const double sc = critical_index(1, Rational(12), Rational(1, 2)).to_double();  // 3/8
  double worst = 0, worst_sc = 0;
  bool pass = true;
  for (double delta : {0.5, 2.0}) {
    const Field v = rescale(u, delta, b, alpha);
    for (double ds : {0.0, 0.5, -0.5}) {
      const double s = sc + ds;
      const double measured = sobolev_norm(v, s) / sobolev_norm(u, s);
      const double predicted = std::pow(delta, s - sc);
      const double err = std::abs(measured - predicted) / predicted;
      worst = std::max(worst, err);
      if (ds == 0.0) worst_sc = std::max(worst_sc, std::abs(measured - 1.0));
      pass = pass && err < 0.01;
    }
  }
  pass = pass && worst_sc < 0.01;
  criterion(7, "dilation invariance at the critical index", pass,
            "worst row error " + fmt(worst) + ", |ratio-1| at s_c " + fmt(worst_sc));
}

// 8. Fixed-point contraction at the time bound from the calibrated constant;
//    a hundredfold horizon reports no contraction.
void criterion_picard_contraction() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.5, false}, g);
  const PotentialSpec spec = defocusing_quarter();
  const Pair sup_l2{Rational::infinity(), Rational(2)};

  // Ball time exponents of the mass-subcritical theory at these parameters.
  const ParamSet params{1, Rational(3), Rational(1, 4), Rational(0), -1, {}, {}, {}};
  const LemmaReport local = local_l2_system(params);
  const Rational theta1 = local.theta1;  // 1/4
  const Rational theta2 = local.theta2;  // 1/11

  // Empirical calibration: largest scanned horizon whose iterate-distance
  // ratios stay below 1/4.
  double t_scan = 0;
  for (double T : {0.005, 0.01, 0.02, 0.04, 0.08}) {
    const auto probe = picard_iterate(u0, T, 17, 6, spec, {sup_l2});
    if (!probe.diverged && probe.max_ratio() < 0.25) t_scan = T;
  }
  const double norm_u0 = std::sqrt(mass(u0));
  const double t1 = theta1.to_double(), t2 = theta2.to_double();
  // c a^alpha (T^t1 + T^t2) = 1/4 with a = 2 c |u0|_L2 fixes c.
  const double c = std::pow(
      1.0 / (32.0 * std::pow(norm_u0, 3.0) * (std::pow(t_scan, t1) + std::pow(t_scan, t2))),
      0.25);
  const TimeBound bound = contraction_time(2.0 * c * norm_u0, Rational(3), theta1, theta2, c);

  const auto res = picard_iterate(u0, bound.T, 17, 6, spec, {sup_l2});
  bool ratios_ok = res.distances.size() == 6 && !res.diverged;
  for (std::size_t k = 1; k <= 4 && ratios_ok; ++k) ratios_ok = res.ratios[k] < 0.5;

  const auto far = picard_iterate(u0, 100.0 * bound.T, 17, 6, spec, {sup_l2});
  const bool no_contraction_far = !far.contraction();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const bool pass = ratios_ok && no_contraction_far && secs < 30.0;
  criterion(8, "fixed-point contraction at the calibrated time bound", pass,
            "c = " + fmt(c) + ", T = " + fmt(bound.T) + ", max ratio " +
                fmt(res.max_ratio()) + ", 100T " +
                (no_contraction_far ? "reports no contraction" : "still contracts") +
                ", " + fmt(secs) + " s");
}

// 9. The sup-L2 mixed norm equals the max of sqrt(mass) exactly; finite-q
//    norms are stable under halving the sampling step to 1%.
void criterion_strichartz_consistency() {
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  auto trajectory = [&](int n) {
    std::vector<std::pair<double, Field>> traj;
    for (int j = 0; j < n; ++j) {
      const double t = 0.5 * j / (n - 1);
      traj.emplace_back(t, linear_propagate(u0, t));
    }
    return traj;
  };
  const auto coarse = trajectory(33);
  double max_sqrt_mass = 0;
  for (const auto& [t, u] : coarse)
    max_sqrt_mass = std::max(max_sqrt_mass, std::sqrt(mass(u)));
  const double sup_norm = strichartz_norm(coarse, {Rational::infinity(), Rational(2)});
  const bool exact = sup_norm == max_sqrt_mass;

  const Pair p{Rational(8, 3), Rational(4)};
  const double nc = strichartz_norm(coarse, p);
  const double nf = strichartz_norm(trajectory(65), p);
  const double refine_err = std::abs(nc - nf) / nf;
  const bool pass = exact && refine_err < 0.01;
  criterion(9, "discrete mixed-norm self-consistency", pass,
            std::string("sup-L2 ") + (exact ? "bit-exact" : "mismatch") +
                ", refinement error " + fmt(refine_err));
}

}  // namespace

int main() {
  criterion_soundness_sweep();
  criterion_boundary_sharpness();
  criterion_reciprocal_identity();
  criterion_conservation();
  criterion_energy_order();
  criterion_free_gaussian();
  criterion_scaling_invariance();
  criterion_picard_contraction();
  criterion_strichartz_consistency();
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
