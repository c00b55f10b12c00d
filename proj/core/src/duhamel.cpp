#include "inls/duhamel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace inls {

namespace {

double spatial_norm(const Field& u, const Rational& r) {
  if (r.is_infinite()) {
    double peak = 0;
    for (const Complex& v : u.values) peak = std::max(peak, std::norm(v));
    return std::sqrt(peak);
  }
  if (r == Rational(2)) {  // matches mass() term for term
    double acc = 0;
    for (const Complex& v : u.values) acc += std::norm(v);
    return std::sqrt(acc * u.grid.cell_volume());
  }
  const double rd = r.to_double();
  double acc = 0;
  for (const Complex& v : u.values) acc += std::pow(std::norm(v), 0.5 * rd);
  return std::pow(acc * u.grid.cell_volume(), 1.0 / rd);
}

}  // namespace

double strichartz_norm(const std::vector<std::pair<double, Field>>& trajectory,
                       const Pair& pair) {
  if (trajectory.empty()) throw std::invalid_argument("empty trajectory");
  for (std::size_t i = 1; i < trajectory.size(); ++i)
    if (!(trajectory[i].first > trajectory[i - 1].first))
      throw std::invalid_argument("trajectory times must be increasing");

  if (pair.q.is_infinite()) {
    double peak = 0;
    for (const auto& [t, u] : trajectory) peak = std::max(peak, spatial_norm(u, pair.r));
    return peak;
  }

  const double qd = pair.q.to_double();
  const std::size_t n = trajectory.size();
  if (n == 1) return 0.0;
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double weight;
    if (i == 0)
      weight = 0.5 * (trajectory[1].first - trajectory[0].first);
    else if (i + 1 == n)
      weight = 0.5 * (trajectory[n - 1].first - trajectory[n - 2].first);
    else
      weight = 0.5 * (trajectory[i + 1].first - trajectory[i - 1].first);
    acc += weight * std::pow(spatial_norm(trajectory[i].second, pair.r), qd);
  }
  return std::pow(acc, 1.0 / qd);
}

PicardResult picard_iterate(const Field& u0, double T, int n_time, int n_iter,
                            const PotentialSpec& spec, const std::vector<Pair>& norm_pairs) {
  if (!(T > 0)) throw std::invalid_argument("picard_iterate requires T > 0");
  if (n_time < 8) throw std::invalid_argument("picard_iterate requires n_time >= 8");
  if (n_iter < 2) throw std::invalid_argument("picard_iterate requires n_iter >= 2");
  if (norm_pairs.empty()) throw std::invalid_argument("picard_iterate needs a norm pair");

  const Grid& g = u0.grid;
  const std::size_t size = g.size();
  SpectralTransform st(g);
  const std::vector<double> w = potential_weights(g, spec);
  const double dt = T / static_cast<double>(n_time - 1);

  std::vector<double> k2(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto idx = g.unravel(i);
    double acc = 0;
    for (int a = 0; a < g.dim; ++a) {
      const double k = g.wavenumber(a, idx[a]);
      acc += k * k;
    }
    k2[i] = acc;
  }
  auto phase_mul = [&](std::vector<Complex>& v, double t) {
    for (std::size_t i = 0; i < size; ++i)
      v[i] *= Complex(std::cos(k2[i] * t), -std::sin(k2[i] * t));
  };

  std::vector<Complex> u0_hat = u0.values;
  st.forward(u0_hat);

  // Free evolution seeds the iteration.
  std::vector<std::vector<Complex>> current(n_time);
  for (int j = 0; j < n_time; ++j) {
    current[j] = u0_hat;
    phase_mul(current[j], dt * j);
    st.inverse(current[j]);
  }

  const Complex i_lambda(0.0, static_cast<double>(spec.lambda_sign));
  PicardResult result;

  std::vector<std::vector<Complex>> next(n_time);
  std::vector<Complex> integral(size), prev_term(size), term(size);

  for (int iter = 0; iter < n_iter; ++iter) {
    std::fill(integral.begin(), integral.end(), Complex(0));
    for (int j = 0; j < n_time; ++j) {
      // Nonlinear term at node j, carried back to time zero in spectrum space.
      term.resize(size);
      for (std::size_t i = 0; i < size; ++i) {
        const Complex& v = current[j][i];
        term[i] = w[i] * std::pow(std::norm(v), 0.5 * spec.alpha) * v;
      }
      st.forward(term);
      phase_mul(term, -dt * j);  // U(-t_j)

      if (j > 0)
        for (std::size_t i = 0; i < size; ++i)
          integral[i] += 0.5 * dt * (prev_term[i] + term[i]);
      prev_term = term;

      next[j].assign(size, Complex(0));
      for (std::size_t i = 0; i < size; ++i)
        next[j][i] = u0_hat[i] + i_lambda * integral[i];
      phase_mul(next[j], dt * j);
      st.inverse(next[j]);
    }

    // Distance between successive iterates in the requested mixed norms.
    std::vector<std::pair<double, Field>> diff;
    diff.reserve(n_time);
    for (int j = 0; j < n_time; ++j) {
      Field d = Field::zeros(g);
      for (std::size_t i = 0; i < size; ++i) d.values[i] = next[j][i] - current[j][i];
      diff.emplace_back(dt * j, std::move(d));
    }
    double dist = 0;
    for (const Pair& p : norm_pairs) dist = std::max(dist, strichartz_norm(diff, p));
    result.distances.push_back(dist);
    if (!std::isfinite(dist)) {
      result.diverged = true;
      break;
    }
    current.swap(next);
  }

  for (std::size_t k = 0; k + 1 < result.distances.size(); ++k) {
    const double a = result.distances[k], b = result.distances[k + 1];
    result.ratios.push_back(a > 0 ? b / a : 0.0);
  }
  for (std::size_t k = 0; k + 2 < result.distances.size(); ++k)
    if (result.distances[k + 2] > 10.0 * result.distances[k] &&
        result.distances[k] > 0)
      result.diverged = true;
  return result;
}

}  // namespace inls
