#pragma once

#include "inls/grid.hpp"

#include <memory>

namespace inls {

/// Cached FFT plans for one grid shape. Transforms run in place on caller
/// buffers; plan creation is serialized internally, execution is safe from
/// concurrent threads on distinct buffers.
class SpectralTransform {
public:
  explicit SpectralTransform(const Grid& grid);
  ~SpectralTransform();
  SpectralTransform(SpectralTransform&&) noexcept;
  SpectralTransform& operator=(SpectralTransform&&) noexcept;
  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  const Grid& grid() const;

  void forward(std::vector<Complex>& values) const;  // unnormalized
  void inverse(std::vector<Complex>& values) const;  // scaled by 1/size

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Free-flow propagator: spectrum multiplied mode-wise by exp(-i |xi|^2 t).
Field linear_propagate(const Field& u, double t);
void linear_propagate_inplace(const SpectralTransform& st, std::vector<Complex>& values,
                              double t);

/// Riesz-type derivative: multiplier |xi|^s, Nyquist modes zeroed. D^0 is the
/// identity up to one transform round trip.
Field fractional_derivative(const Field& u, double s);

/// Discrete L^2-based Sobolev norm with multiplier |xi|^s (homogeneous) or
/// (1+|xi|^2)^(s/2). Negative s is supported for s > -dim/2; the zero mode is
/// dropped there, mirroring the principal-value quadrature of the flat
/// spectrum near the origin. s = 0 homogeneous is exactly the L^2 norm.
double sobolev_norm(const Field& u, double s, bool homogeneous = true);

/// Amplitude-scaled dilation x -> delta x, resampled by exact trigonometric
/// interpolation (Nyquist coefficients dropped); the amplitude prefactor is
/// delta^((2-b)/alpha). Throws when the dilated field leaks more than `tol`
/// of its mass into the boundary shell.
Field rescale(const Field& u0, double delta, double b, double alpha, double tol = 1e-8);

}  // namespace inls
