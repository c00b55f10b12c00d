#include "inls/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace inls {

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

double Grid::min_spacing() const {
  double h = spacing(0);
  for (int a = 1; a < dim; ++a) h = std::min(h, spacing(a));
  return h;
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= spacing(a);
  return v;
}

double Grid::wavenumber(int axis, std::size_t index) const {
  const std::size_t m = points[axis];
  const long long signed_k =
      index < m / 2 ? static_cast<long long>(index) : static_cast<long long>(index) - static_cast<long long>(m);
  return 2.0 * std::numbers::pi * static_cast<double>(signed_k) / extent[axis];
}

std::array<std::size_t, 3> Grid::unravel(std::size_t flat) const {
  std::array<std::size_t, 3> idx{};
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = flat % points[a];
    flat /= points[a];
  }
  return idx;
}

Grid make_grid(int dim, const std::vector<double>& extent,
               const std::vector<std::size_t>& points) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid dimension must be 1, 2 or 3");
  if (extent.size() != static_cast<std::size_t>(dim) ||
      points.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("extent/points must have one entry per axis");
  Grid g;
  g.dim = dim;
  for (int a = 0; a < dim; ++a) {
    if (!(extent[a] > 0)) throw std::invalid_argument("grid extent must be positive");
    if (points[a] < 8 || !power_of_two(points[a]))
      throw std::invalid_argument("grid points must be a power of two >= 8");
    g.extent[a] = extent[a];
    g.points[a] = points[a];
  }
  return g;
}

Grid make_grid(int dim, double extent, std::size_t points) {
  return make_grid(dim, std::vector<double>(dim, extent),
                   std::vector<std::size_t>(dim, points));
}

Field sample_initial(const Profile& profile, const Grid& grid) {
  Field f = Field::zeros(grid);
  const std::size_t n = grid.size();

  if (const auto* g = std::get_if<GaussianProfile>(&profile)) {
    if (!(g->width > 0)) throw std::invalid_argument("gaussian width must be positive");
    double amp = g->amplitude;
    if (g->unit_mass)
      amp = std::pow(g->width * std::sqrt(std::numbers::pi), -0.5 * grid.dim);
    else if (!(amp > 0))
      throw std::invalid_argument("gaussian amplitude must be positive");
    const double inv2w2 = 1.0 / (2.0 * g->width * g->width);
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = grid.unravel(i);
      double r2 = 0;
      for (int a = 0; a < grid.dim; ++a) {
        const double x = grid.coordinate(a, idx[a]);
        r2 += x * x;
      }
      f.values[i] = amp * std::exp(-r2 * inv2w2);
    }
    return f;
  }

  if (const auto* r = std::get_if<RingProfile>(&profile)) {
    if (grid.dim < 2) throw std::invalid_argument("ring requires dim >= 2");
    if (!(r->radius > 0) || !(r->width > 0) || !(r->amplitude > 0))
      throw std::invalid_argument("ring parameters must be positive");
    const double inv2w2 = 1.0 / (2.0 * r->width * r->width);
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = grid.unravel(i);
      double r2 = 0;
      for (int a = 0; a < grid.dim; ++a) {
        const double x = grid.coordinate(a, idx[a]);
        r2 += x * x;
      }
      const double d = std::sqrt(r2) - r->radius;
      f.values[i] = r->amplitude * std::exp(-d * d * inv2w2);
    }
    return f;
  }

  const auto& pw = std::get<PlaneWaveProfile>(profile);
  for (int a = 0; a < grid.dim; ++a) {
    const double mode = pw.k[a] * grid.extent[a] / (2.0 * std::numbers::pi);
    if (std::abs(mode - std::round(mode)) > 1e-9)
      throw std::invalid_argument("plane-wave k must lie on the wavenumber lattice");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = grid.unravel(i);
    double phase = 0;
    for (int a = 0; a < grid.dim; ++a) phase += pw.k[a] * grid.coordinate(a, idx[a]);
    f.values[i] = Complex(std::cos(phase), std::sin(phase));
  }
  return f;
}

double boundary_mass_fraction(const Field& u) {
  const Grid& g = u.grid;
  double total = 0, shell = 0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const double w = std::norm(u.values[i]);
    total += w;
    const auto idx = g.unravel(i);
    bool in_shell = false;
    for (int a = 0; a < g.dim; ++a) {
      const std::size_t m = g.points[a];
      if (idx[a] < m / 16 || idx[a] >= m - m / 16) in_shell = true;
    }
    if (in_shell) shell += w;
  }
  return total > 0 ? shell / total : 0.0;
}

}  // namespace inls
