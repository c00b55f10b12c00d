#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace inls {

using Complex = std::complex<double>;

/// Periodic box [-L/2, L/2)^dim discretized by a power-of-two number of
/// nodes per axis. Wavenumbers are 2 pi k / L with k in [-M/2, M/2).
struct Grid {
  int dim = 1;
  std::array<double, 3> extent{};       // box side per axis
  std::array<std::size_t, 3> points{};  // nodes per axis

  std::size_t size() const {
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a) n *= points[a];
    return n;
  }
  double spacing(int axis) const { return extent[axis] / static_cast<double>(points[axis]); }
  double min_spacing() const;
  double cell_volume() const;

  /// Node coordinate along an axis, in [-L/2, L/2).
  double coordinate(int axis, std::size_t index) const {
    return -0.5 * extent[axis] + static_cast<double>(index) * spacing(axis);
  }
  /// Signed wavenumber of a transform index (standard FFT ordering).
  double wavenumber(int axis, std::size_t index) const;
  bool is_nyquist(int axis, std::size_t index) const {
    return index == points[axis] / 2;
  }

  /// Splits a flat row-major node index into per-axis indices.
  std::array<std::size_t, 3> unravel(std::size_t flat) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim; ++i)
      if (a.extent[i] != b.extent[i] || a.points[i] != b.points[i]) return false;
    return true;
  }
};

Grid make_grid(int dim, double extent, std::size_t points);
Grid make_grid(int dim, const std::vector<double>& extent, const std::vector<std::size_t>& points);

/// Complex scalar field sampled on a grid, row-major with the last axis
/// running fastest.
struct Field {
  Grid grid;
  std::vector<Complex> values;

  static Field zeros(const Grid& g) { return {g, std::vector<Complex>(g.size())}; }
};

struct GaussianProfile {
  double width = 1.0;
  double amplitude = 1.0;
  bool unit_mass = false;  // overrides amplitude
};
struct RingProfile {
  double radius = 1.0;
  double width = 0.25;
  double amplitude = 1.0;
};
struct PlaneWaveProfile {
  std::array<double, 3> k{};  // must lie on the wavenumber lattice
};
using Profile = std::variant<GaussianProfile, RingProfile, PlaneWaveProfile>;

Field sample_initial(const Profile& profile, const Grid& grid);

/// Fraction of |u|^2 carried by the outermost boundary shell (one sixteenth
/// of the box on each side, per axis).
double boundary_mass_fraction(const Field& u);

}  // namespace inls
