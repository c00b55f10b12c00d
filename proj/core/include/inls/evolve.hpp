#pragma once

#include "inls/grid.hpp"
#include "inls/spectral.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace inls {

/// The singular weight |x|^-b with its regularization at the origin, plus
/// the nonlinearity parameters of the flow.
struct PotentialSpec {
  double b = 0.0;
  enum class Regularization { EpsilonShift, GridCap };
  Regularization regularization = Regularization::EpsilonShift;
  double eps_reg = 0.0;  // 0 selects one grid spacing
  int lambda_sign = -1;  // +1 focusing, -1 defocusing
  double alpha = 2.0;
};

/// w(x) = (|x|^2 + eps^2)^(-b/2) or min(|x|^-b, h^-b) on the grid nodes.
std::vector<double> potential_weights(const Grid& grid, const PotentialSpec& spec);

struct Diagnostics {
  std::vector<double> times;
  std::vector<double> mass_trace;
  std::vector<double> energy_trace;
  std::vector<double> l2_trace;
  std::vector<double> hs_orders;               // requested regularities
  std::vector<std::vector<double>> hs_traces;  // one trace per order
};

struct EvolveOptions {
  int sample_every = 10;
  double amplitude_ceiling = 1e6;  // blow-up flag at ceiling * max|u0|
  std::vector<double> hs_orders;
  bool keep_frames = false;  // retain every sampled field (for dumps)
};

enum class EvolveStatus { Completed, SuspectedBlowup };

struct EvolveResult {
  Field field;
  Diagnostics diagnostics;
  EvolveStatus status = EvolveStatus::Completed;
  std::size_t steps_done = 0;
  double boundary_fraction = 0.0;  // worst sampled boundary-shell mass share
  std::vector<std::pair<double, Field>> frames;
};

/// Thrown when the field stops being finite; carries the offending step.
struct EvolveError : std::runtime_error {
  EvolveError(std::size_t at, const std::string& what)
      : std::runtime_error(what), step(at) {}
  std::size_t step;
};

double mass(const Field& u);
double energy(const Field& u, const PotentialSpec& spec);

/// The nonlinear substep alone: u -> u exp(i lambda dt w(x) |u|^alpha).
/// Leaves |u| pointwise invariant up to one complex-exponential roundoff.
Field nonlinear_phase_rotation(const Field& u, double dt, const PotentialSpec& spec);

/// One Strang step: half nonlinear phase rotation, full linear flow, half
/// nonlinear phase rotation.
Field split_step(const Field& u, double dt, const PotentialSpec& spec);

EvolveResult evolve(const Field& u0, double T, double dt, const PotentialSpec& spec,
                    const EvolveOptions& options = {});

}  // namespace inls
