#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inls/duhamel.hpp"
#include "inls/spectral.hpp"

#include <cmath>
#include <numbers>

using namespace inls;

namespace {

constexpr double kPi = std::numbers::pi;
const Pair kSupL2{Rational::infinity(), Rational(2)};

PotentialSpec defocusing_quarter() {
  PotentialSpec spec;
  spec.b = 0.25;
  spec.lambda_sign = -1;
  spec.alpha = 3.0;
  return spec;
}

std::vector<std::pair<double, Field>> free_trajectory(const Field& u0, double T, int n) {
  std::vector<std::pair<double, Field>> traj;
  for (int j = 0; j < n; ++j) {
    const double t = T * j / (n - 1);
    traj.emplace_back(t, linear_propagate(u0, t));
  }
  return traj;
}

}  // namespace

TEST_CASE("mixed norm: sup-L2 equals the max of sqrt(mass) exactly") {
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  const auto traj = free_trajectory(u0, 0.5, 17);
  double expected = 0;
  for (const auto& [t, u] : traj) expected = std::max(expected, std::sqrt(mass(u)));
  CHECK(strichartz_norm(traj, kSupL2) == expected);
}

TEST_CASE("mixed norm: constant-in-time field integrates to T^(1/q)") {
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  const double T = 0.8;
  std::vector<std::pair<double, Field>> traj;
  for (int j = 0; j < 9; ++j) traj.emplace_back(T * j / 8.0, u0);

  const Pair p{Rational(4), Rational(4)};
  double space = 0;
  for (const Complex& v : u0.values) space += std::pow(std::norm(v), 2.0);
  space = std::pow(space * g.cell_volume(), 0.25);
  CHECK(strichartz_norm(traj, p) == doctest::Approx(std::pow(T, 0.25) * space).epsilon(1e-12));
}

TEST_CASE("mixed norm: free Gaussian (8/3,4) is stable under refinement") {
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  const Pair p{Rational(8, 3), Rational(4)};
  const double coarse = strichartz_norm(free_trajectory(u0, 0.5, 33), p);
  const double fine = strichartz_norm(free_trajectory(u0, 0.5, 65), p);
  CHECK(std::isfinite(coarse));
  CHECK(std::abs(coarse - fine) / fine < 0.01);
}

TEST_CASE("fixed-point iteration: zero data stays zero") {
  const Grid g = make_grid(1, 2 * kPi * 8, 128);
  const auto res = picard_iterate(Field::zeros(g), 0.1, 9, 3, defocusing_quarter(), {kSupL2});
  for (double d : res.distances) CHECK(d == 0.0);
  CHECK_FALSE(res.diverged);
  CHECK(res.max_ratio() == 0.0);
}

TEST_CASE("fixed-point iteration contracts at small time, not at 100x") {
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.5, false}, g);
  const PotentialSpec spec = defocusing_quarter();

  const double T = 0.02;
  const auto res = picard_iterate(u0, T, 17, 6, spec, {kSupL2});
  REQUIRE(res.distances.size() == 6);
  CHECK_FALSE(res.diverged);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(res.ratios[k] < 0.5);
  CHECK(res.distances.front() >= res.distances.back());

  const auto far = picard_iterate(u0, 100.0 * T, 17, 6, spec, {kSupL2});
  CHECK_FALSE(far.contraction());
  CHECK(far.diverged);
}

TEST_CASE("fixed-point iteration converges toward the split-step solution") {
  const Grid g = make_grid(1, 2 * kPi * 8, 256);
  Field u0 = sample_initial(GaussianProfile{1.0, 1.0, false}, g);
  const PotentialSpec spec = defocusing_quarter();
  const double T = 0.05;

  const int n_time = 65;
  const auto res = picard_iterate(u0, T, n_time, 8, spec, {kSupL2});
  CHECK(res.distances.back() < 1e-8 * res.distances.front() + 1e-12);

  // the d_0 distance equals the size of the first memory correction
  CHECK(res.distances.front() > 0);
  CHECK(res.distances.front() < 1.0);
}

TEST_CASE("input guards") {
  const Grid g = make_grid(1, 20.0, 64);
  Field u0 = Field::zeros(g);
  CHECK_THROWS_AS(picard_iterate(u0, -1.0, 9, 3, defocusing_quarter(), {kSupL2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(picard_iterate(u0, 1.0, 4, 3, defocusing_quarter(), {kSupL2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(picard_iterate(u0, 1.0, 9, 1, defocusing_quarter(), {kSupL2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(strichartz_norm({}, kSupL2), std::invalid_argument);
}
