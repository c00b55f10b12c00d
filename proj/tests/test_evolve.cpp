#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inls/evolve.hpp"

#include <cmath>
#include <numbers>

using namespace inls;

namespace {

constexpr double kPi = std::numbers::pi;

PotentialSpec defocusing_quarter() {
  PotentialSpec spec;
  spec.b = 0.25;
  spec.lambda_sign = -1;
  spec.alpha = 3.0;
  return spec;
}

}  // namespace

TEST_CASE("potential weights: cap, shift and degenerate cases") {
  const Grid g = make_grid(1, 8.0, 64);  // nodes at multiples of 1/8, includes x = +-1
  PotentialSpec spec;
  spec.b = 0.5;
  spec.alpha = 2.0;

  spec.regularization = PotentialSpec::Regularization::GridCap;
  auto w = potential_weights(g, spec);
  std::size_t at_one = 0, origin = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.coordinate(0, g.unravel(i)[0]);
    if (x == 1.0) at_one = i;
    if (x == 0.0) origin = i;
  }
  CHECK(w[at_one] == 1.0);  // |x|^-b at |x| = 1 exactly
  CHECK(w[origin] == doctest::Approx(std::pow(g.spacing(0), -spec.b)));

  spec.regularization = PotentialSpec::Regularization::EpsilonShift;
  spec.eps_reg = 0.03125;
  w = potential_weights(g, spec);
  CHECK(w[origin] == doctest::Approx(std::pow(spec.eps_reg, -spec.b)));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.coordinate(0, g.unravel(i)[0]);
    if (std::abs(x) >= 1.0) CHECK(w[i] <= 1.0);
  }

  spec.b = 0.0;
  w = potential_weights(g, spec);
  for (double v : w) CHECK(v == 1.0);
}

TEST_CASE("energy: plane-wave closed form and defocusing positivity") {
  const Grid g = make_grid(1, 2 * kPi * 4, 256);
  const double k = 2.0 * kPi * 6 / g.extent[0];
  Field u = sample_initial(PlaneWaveProfile{{k, 0, 0}}, g);
  PotentialSpec spec;
  spec.b = 0.0;
  spec.alpha = 2.0;
  const double m = mass(u);

  spec.lambda_sign = +1;
  CHECK(energy(u, spec) ==
        doctest::Approx(0.5 * k * k * m - m / (spec.alpha + 2.0)).epsilon(1e-12));
  spec.lambda_sign = -1;
  CHECK(energy(u, spec) ==
        doctest::Approx(0.5 * k * k * m + m / (spec.alpha + 2.0)).epsilon(1e-12));
  CHECK(energy(u, spec) >= 0.0);

  Field zero = Field::zeros(g);
  CHECK(energy(zero, spec) == 0.0);
  CHECK(mass(zero) == 0.0);
}

TEST_CASE("phase rotation leaves the modulus pointwise invariant") {
  const Grid g = make_grid(1, 20.0, 64);
  PotentialSpec spec = defocusing_quarter();

  Field u = Field::zeros(g);
  for (auto& v : u.values) v = Complex(0.7, 0.0);
  Field rotated = nonlinear_phase_rotation(u, 1e-2, spec);
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    CHECK(std::abs(std::abs(rotated.values[i]) - 0.7) < 1e-15);
    CHECK(rotated.values[i] != u.values[i]);  // a genuine rotation
  }

  Field w = sample_initial(GaussianProfile{1.5, 2.0, false}, g);
  Field wr = nonlinear_phase_rotation(w, 0.3, spec);
  for (std::size_t i = 0; i < w.values.size(); ++i)
    CHECK(std::abs(std::abs(wr.values[i]) - std::abs(w.values[i])) <=
          1e-15 * std::abs(w.values[i]) + 1e-300);
}

TEST_CASE("mass is conserved to roundoff over a thousand steps") {
  const Grid g = make_grid(1, 2 * kPi * 12, 512);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  EvolveOptions opts;
  opts.sample_every = 100;
  const auto out = evolve(u0, 1.0, 1e-3, defocusing_quarter(), opts);
  CHECK(out.status == EvolveStatus::Completed);
  CHECK(out.steps_done == 1000);
  const double m0 = out.diagnostics.mass_trace.front();
  for (double m : out.diagnostics.mass_trace)
    CHECK(std::abs(m - m0) / m0 < 1e-10);
  CHECK(out.boundary_fraction < 1e-8);
}

TEST_CASE("energy drift shrinks at second order in dt") {
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.5, false}, g);
  const PotentialSpec spec = defocusing_quarter();
  const double T = 0.1;

  auto drift = [&](double dt) {
    EvolveOptions opts;
    opts.sample_every = 1 << 20;  // only endpoints
    const auto out = evolve(u0, T, dt, spec, opts);
    return std::abs(out.diagnostics.energy_trace.back() -
                    out.diagnostics.energy_trace.front());
  };
  const double d4 = drift(4e-3), d2 = drift(2e-3), d1 = drift(1e-3);
  const double order = 0.5 * std::log2(d4 / d1);
  CHECK(order > 1.8);
  CHECK(order < 2.2);
  CHECK(d2 < d4);
}

TEST_CASE("two-dimensional flow conserves mass as well") {
  const Grid g = make_grid(2, 24.0, 64);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  PotentialSpec spec;
  spec.b = 1.0 / 3.0;
  spec.lambda_sign = -1;
  spec.alpha = 2.0;
  EvolveOptions opts;
  opts.sample_every = 10;
  const auto out = evolve(u0, 0.05, 1e-3, spec, opts);
  CHECK(out.status == EvolveStatus::Completed);
  const double m0 = out.diagnostics.mass_trace.front();
  for (double m : out.diagnostics.mass_trace) CHECK(std::abs(m - m0) / m0 < 1e-10);
}

TEST_CASE("zero data is a fixed point of the flow") {
  const Grid g = make_grid(1, 20.0, 64);
  const auto out = evolve(Field::zeros(g), 0.5, 1e-2, defocusing_quarter());
  CHECK(out.status == EvolveStatus::Completed);
  for (double m : out.diagnostics.mass_trace) CHECK(m == 0.0);
  for (double e : out.diagnostics.energy_trace) CHECK(e == 0.0);
}

TEST_CASE("focusing data beyond the ceiling is flagged, not crashed") {
  // mass-supercritical focusing quintic in one dimension
  const Grid g = make_grid(1, 2 * kPi * 2, 1024);
  Field u0 = sample_initial(GaussianProfile{0.35, 5.0, false}, g);
  PotentialSpec spec;
  spec.b = 0.25;
  spec.lambda_sign = +1;
  spec.alpha = 5.0;
  EvolveOptions opts;
  opts.amplitude_ceiling = 1.5;  // deliberately tight
  opts.sample_every = 50;
  const auto out = evolve(u0, 0.1, 2e-5, spec, opts);
  CHECK(out.status == EvolveStatus::SuspectedBlowup);
  CHECK(out.steps_done < 5000);
}

TEST_CASE("classical cubic soliton keeps its shape") {
  // i u_t + u_xx + |u|^2 u = 0 travels as sqrt(2) a sech(a x) e^(i a^2 t).
  const Grid g = make_grid(1, 2 * kPi * 8, 512);
  const double a = 1.0;
  Field u0 = Field::zeros(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.coordinate(0, g.unravel(i)[0]);
    u0.values[i] = std::sqrt(2.0) * a / std::cosh(a * x);
  }
  PotentialSpec spec;
  spec.b = 0.0;
  spec.lambda_sign = +1;
  spec.alpha = 2.0;

  EvolveOptions opts;
  opts.sample_every = 1 << 20;
  const double T = 1.0;
  const auto fine = evolve(u0, T, 5e-4, spec, opts);
  const auto coarse = evolve(u0, T, 1e-3, spec, opts);

  // self-convergence of the two resolutions
  double num = 0, den = 0, exact_num = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    num += std::norm(fine.field.values[i] - coarse.field.values[i]);
    den += std::norm(fine.field.values[i]);
    const double x = g.coordinate(0, g.unravel(i)[0]);
    const Complex exact =
        std::sqrt(2.0) * a / std::cosh(a * x) * std::exp(Complex(0, a * a * T));
    exact_num += std::norm(fine.field.values[i] - exact);
  }
  CHECK(std::sqrt(num / den) < 1e-5);
  CHECK(std::sqrt(exact_num / den) < 1e-4);  // shape and phase preserved
}

TEST_CASE("non-finite fields raise an error carrying the step") {
  const Grid g = make_grid(1, 20.0, 64);
  Field u0 = Field::zeros(g);
  u0.values[3] = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
  EvolveOptions opts;
  try {
    evolve(u0, 0.1, 1e-2, defocusing_quarter(), opts);
    FAIL("expected EvolveError");
  } catch (const EvolveError& e) {
    CHECK(e.step == 1);
  }
}
