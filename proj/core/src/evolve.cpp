#include "inls/evolve.hpp"

#include "inls/parallel.hpp"

#include <cmath>

namespace inls {

std::vector<double> potential_weights(const Grid& grid, const PotentialSpec& spec) {
  if (spec.b < 0) throw std::invalid_argument("weight exponent b must be nonnegative");
  std::vector<double> w(grid.size(), 1.0);
  if (spec.b == 0.0) return w;

  const double eps = spec.eps_reg > 0 ? spec.eps_reg : grid.min_spacing();
  const double cap = std::pow(grid.min_spacing(), -spec.b);
  const bool shift = spec.regularization == PotentialSpec::Regularization::EpsilonShift;

  parallel_for(w.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto idx = grid.unravel(i);
      double r2 = 0;
      for (int a = 0; a < grid.dim; ++a) {
        const double x = grid.coordinate(a, idx[a]);
        r2 += x * x;
      }
      if (shift) {
        w[i] = std::pow(r2 + eps * eps, -0.5 * spec.b);
      } else {
        w[i] = r2 == 0.0 ? cap : std::min(std::pow(r2, -0.5 * spec.b), cap);
      }
    }
  });
  return w;
}

double mass(const Field& u) {
  double acc = 0;
  for (const Complex& v : u.values) acc += std::norm(v);
  return acc * u.grid.cell_volume();
}

double energy(const Field& u, const PotentialSpec& spec) {
  // Kinetic part through the spectrum, potential part by node quadrature.
  SpectralTransform st(u.grid);
  std::vector<Complex> spectrum = u.values;
  st.forward(spectrum);
  const Grid& g = u.grid;
  double kinetic = 0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const auto idx = g.unravel(i);
    double k2 = 0;
    for (int a = 0; a < g.dim; ++a) {
      const double k = g.wavenumber(a, idx[a]);
      k2 += k * k;
    }
    kinetic += k2 * std::norm(spectrum[i]);
  }
  kinetic *= 0.5 * g.cell_volume() / static_cast<double>(g.size());

  const std::vector<double> w = potential_weights(g, spec);
  double potential = 0;
  for (std::size_t i = 0; i < u.values.size(); ++i)
    potential += w[i] * std::pow(std::norm(u.values[i]), 0.5 * (spec.alpha + 2.0));
  potential *= g.cell_volume() / (spec.alpha + 2.0);

  return kinetic - spec.lambda_sign * potential;
}

namespace {

void nonlinear_phase(std::vector<Complex>& values, const std::vector<double>& w,
                     double lambda_dt, double alpha) {
  parallel_for(values.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double amp2 = std::norm(values[i]);
      const double phase = lambda_dt * w[i] * std::pow(amp2, 0.5 * alpha);
      values[i] *= Complex(std::cos(phase), std::sin(phase));
    }
  });
}

}  // namespace

Field nonlinear_phase_rotation(const Field& u, double dt, const PotentialSpec& spec) {
  Field out = u;
  nonlinear_phase(out.values, potential_weights(u.grid, spec), dt * spec.lambda_sign,
                  spec.alpha);
  return out;
}

Field split_step(const Field& u, double dt, const PotentialSpec& spec) {
  if (!(dt > 0)) throw std::invalid_argument("split_step requires dt > 0");
  SpectralTransform st(u.grid);
  const std::vector<double> w = potential_weights(u.grid, spec);
  Field out = u;
  nonlinear_phase(out.values, w, 0.5 * dt * spec.lambda_sign, spec.alpha);
  linear_propagate_inplace(st, out.values, dt);
  nonlinear_phase(out.values, w, 0.5 * dt * spec.lambda_sign, spec.alpha);
  return out;
}

EvolveResult evolve(const Field& u0, double T, double dt, const PotentialSpec& spec,
                    const EvolveOptions& options) {
  if (!(T > 0)) throw std::invalid_argument("evolve requires T > 0");
  if (!(dt > 0) || dt > T) throw std::invalid_argument("evolve requires 0 < dt <= T");

  const std::size_t steps = static_cast<std::size_t>(std::llround(T / dt));
  const double step_dt = T / static_cast<double>(steps);

  SpectralTransform st(u0.grid);
  const std::vector<double> w = potential_weights(u0.grid, spec);

  EvolveResult result;
  result.field = u0;

  double ceiling = 0;
  for (const Complex& v : u0.values) ceiling = std::max(ceiling, std::norm(v));
  ceiling = options.amplitude_ceiling * std::sqrt(ceiling);
  if (ceiling == 0) ceiling = options.amplitude_ceiling;  // zero data never trips

  result.diagnostics.hs_orders = options.hs_orders;
  result.diagnostics.hs_traces.resize(options.hs_orders.size());

  auto sample = [&](double t) {
    Diagnostics& d = result.diagnostics;
    d.times.push_back(t);
    d.mass_trace.push_back(mass(result.field));
    d.energy_trace.push_back(energy(result.field, spec));
    d.l2_trace.push_back(std::sqrt(d.mass_trace.back()));
    for (std::size_t k = 0; k < options.hs_orders.size(); ++k)
      d.hs_traces[k].push_back(sobolev_norm(result.field, options.hs_orders[k]));
    result.boundary_fraction =
        std::max(result.boundary_fraction, boundary_mass_fraction(result.field));
    if (options.keep_frames) result.frames.emplace_back(t, result.field);
  };

  sample(0.0);
  const int every = options.sample_every > 0 ? options.sample_every : 1;

  for (std::size_t step = 1; step <= steps; ++step) {
    nonlinear_phase(result.field.values, w, 0.5 * step_dt * spec.lambda_sign, spec.alpha);
    linear_propagate_inplace(st, result.field.values, step_dt);
    nonlinear_phase(result.field.values, w, 0.5 * step_dt * spec.lambda_sign, spec.alpha);
    result.steps_done = step;

    double peak = 0;
    bool finite = true;
    for (const Complex& v : result.field.values) {
      const double a2 = std::norm(v);
      if (!std::isfinite(a2)) {
        finite = false;
        break;
      }
      peak = std::max(peak, a2);
    }
    if (!finite)
      throw EvolveError(step, "non-finite field value at step " + std::to_string(step));

    if (step % static_cast<std::size_t>(every) == 0 || step == steps)
      sample(static_cast<double>(step) * step_dt);

    if (std::sqrt(peak) > ceiling) {
      result.status = EvolveStatus::SuspectedBlowup;
      if (result.diagnostics.times.back() != static_cast<double>(step) * step_dt)
        sample(static_cast<double>(step) * step_dt);
      return result;
    }
  }
  result.status = EvolveStatus::Completed;
  return result;
}

}  // namespace inls
