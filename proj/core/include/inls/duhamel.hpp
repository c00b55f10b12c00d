#pragma once

#include "inls/admissible.hpp"
#include "inls/evolve.hpp"
#include "inls/grid.hpp"

#include <utility>
#include <vector>

namespace inls {

/// Discrete mixed time-space Lebesgue norm over a sampled trajectory:
/// trapezoidal weights in time (sup over samples for q = inf), node
/// quadrature for the inner spatial norm (max over nodes for r = inf).
double strichartz_norm(const std::vector<std::pair<double, Field>>& trajectory,
                       const Pair& pair);

struct PicardResult {
  std::vector<double> distances;  // d_k = dist(iter k+1, iter k)
  std::vector<double> ratios;     // d_{k+1} / d_k
  bool diverged = false;          // d_k grew tenfold over two steps

  double max_ratio() const {
    double m = 0;
    for (double r : ratios) m = std::max(m, r);
    return m;
  }
  bool contraction() const { return !diverged && max_ratio() < 1.0; }
};

/// Fixed-point iteration of the integral-form flow map: starts from the free
/// evolution, applies the flow map with trapezoidal quadrature of the memory
/// integral on n_time uniform nodes, and measures successive iterate
/// distances in the given mixed norms.
PicardResult picard_iterate(const Field& u0, double T, int n_time, int n_iter,
                            const PotentialSpec& spec, const std::vector<Pair>& norm_pairs);

}  // namespace inls
