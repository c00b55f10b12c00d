#include "inls/spectral.hpp"

#include "inls/parallel.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace inls {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct SpectralTransform::Impl {
  Grid grid;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit Impl(const Grid& g) : grid(g) {
    std::vector<Complex> probe(g.size());
    int dims[3];
    for (int a = 0; a < g.dim; ++a) dims[a] = static_cast<int>(g.points[a]);
    auto* data = reinterpret_cast<fftw_complex*>(probe.data());
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd = fftw_plan_dft(g.dim, dims, data, data, FFTW_FORWARD,
                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd = fftw_plan_dft(g.dim, dims, data, data, FFTW_BACKWARD,
                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!fwd || !bwd) throw std::runtime_error("fftw plan creation failed");
  }
  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

SpectralTransform::SpectralTransform(const Grid& grid) : impl_(std::make_unique<Impl>(grid)) {}
SpectralTransform::~SpectralTransform() = default;
SpectralTransform::SpectralTransform(SpectralTransform&&) noexcept = default;
SpectralTransform& SpectralTransform::operator=(SpectralTransform&&) noexcept = default;

const Grid& SpectralTransform::grid() const { return impl_->grid; }

void SpectralTransform::forward(std::vector<Complex>& values) const {
  if (values.size() != impl_->grid.size())
    throw std::invalid_argument("field size does not match transform grid");
  auto* data = reinterpret_cast<fftw_complex*>(values.data());
  fftw_execute_dft(impl_->fwd, data, data);
}

void SpectralTransform::inverse(std::vector<Complex>& values) const {
  if (values.size() != impl_->grid.size())
    throw std::invalid_argument("field size does not match transform grid");
  auto* data = reinterpret_cast<fftw_complex*>(values.data());
  fftw_execute_dft(impl_->bwd, data, data);
  const double scale = 1.0 / static_cast<double>(values.size());
  parallel_for(values.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) values[i] *= scale;
  });
}

namespace {

/// Applies fn(|xi|^2, nyquist) as a mode-wise factor to the spectrum.
template <typename Fn>
void apply_spectral_multiplier(const Grid& g, std::vector<Complex>& spectrum, Fn&& fn) {
  parallel_for(spectrum.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto idx = g.unravel(i);
      double k2 = 0;
      bool nyq = false;
      for (int a = 0; a < g.dim; ++a) {
        const double k = g.wavenumber(a, idx[a]);
        k2 += k * k;
        nyq |= g.is_nyquist(a, idx[a]);
      }
      spectrum[i] *= fn(k2, nyq);
    }
  });
}

}  // namespace

void linear_propagate_inplace(const SpectralTransform& st, std::vector<Complex>& values,
                              double t) {
  st.forward(values);
  apply_spectral_multiplier(st.grid(), values, [t](double k2, bool) {
    return Complex(std::cos(k2 * t), -std::sin(k2 * t));
  });
  st.inverse(values);
}

Field linear_propagate(const Field& u, double t) {
  SpectralTransform st(u.grid);
  Field out = u;
  linear_propagate_inplace(st, out.values, t);
  return out;
}

Field fractional_derivative(const Field& u, double s) {
  if (s < 0) throw std::invalid_argument("fractional_derivative requires s >= 0");
  SpectralTransform st(u.grid);
  Field out = u;
  st.forward(out.values);
  apply_spectral_multiplier(u.grid, out.values, [s](double k2, bool nyq) -> double {
    if (nyq) return 0.0;
    if (k2 == 0.0) return s == 0.0 ? 1.0 : 0.0;
    return std::pow(k2, 0.5 * s);
  });
  st.inverse(out.values);
  return out;
}

double sobolev_norm(const Field& u, double s, bool homogeneous) {
  if (homogeneous && 2.0 * s <= -u.grid.dim)
    throw std::invalid_argument("homogeneous norm requires s > -dim/2");
  SpectralTransform st(u.grid);
  std::vector<Complex> spectrum = u.values;
  st.forward(spectrum);
  const Grid& g = u.grid;

  // Point weights keep single modes exact for s >= 0. For s < 0 in one
  // dimension the |xi|^(2s) cusp is integrated exactly over each spectral
  // cell instead, so dilation ratios of smooth fields converge cleanly.
  const bool cell_average = homogeneous && s < 0.0 && g.dim == 1;
  const double h = cell_average ? 2.0 * std::numbers::pi / g.extent[0] : 0.0;
  const double p = 2.0 * s + 1.0;
  auto averaged = [&](double k_abs) {
    if (k_abs == 0.0) return 2.0 * std::pow(0.5 * h, p) / (p * h);
    const double hi = std::pow(k_abs + 0.5 * h, p);
    const double lo = std::pow(k_abs - 0.5 * h, p);
    return (hi - lo) / (p * h);
  };

  double acc = 0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const auto idx = g.unravel(i);
    double k2 = 0;
    for (int a = 0; a < g.dim; ++a) {
      const double k = g.wavenumber(a, idx[a]);
      k2 += k * k;
    }
    double weight;
    if (!homogeneous) {
      weight = std::pow(1.0 + k2, s);
    } else if (cell_average) {
      weight = averaged(std::sqrt(k2));
    } else if (k2 == 0.0) {
      weight = s == 0.0 ? 1.0 : 0.0;
    } else {
      weight = std::pow(k2, s);
    }
    acc += weight * std::norm(spectrum[i]);
  }
  // Parseval: sum_x |u|^2 dV == (1/size) sum_k |c_k|^2 dV.
  return std::sqrt(acc * g.cell_volume() / static_cast<double>(g.size()));
}

Field rescale(const Field& u0, double delta, double b, double alpha, double tol) {
  if (!(delta > 0)) throw std::invalid_argument("rescale requires delta > 0");
  if (!(alpha > 0)) throw std::invalid_argument("rescale requires alpha > 0");
  const Grid& g = u0.grid;
  // Dilation extends the source by zero outside its box; that is only sound
  // when the source has already decayed at the boundary.
  if (boundary_mass_fraction(u0) > tol)
    throw std::runtime_error("box too small: source field reaches the boundary shell");

  SpectralTransform st(g);
  std::vector<Complex> coeff = u0.values;
  st.forward(coeff);

  // Per-axis evaluation matrices E[j*m + k] = exp(i xi_k (delta x_j + L/2))/m,
  // with the Nyquist column dropped.
  Field out = u0;
  std::vector<Complex> work(g.size());
  for (int axis = 0; axis < g.dim; ++axis) {
    const std::size_t m = g.points[axis];
    std::vector<Complex> eval(m * m);
    for (std::size_t j = 0; j < m; ++j) {
      const double y = delta * g.coordinate(axis, j) + 0.5 * g.extent[axis];
      for (std::size_t k = 0; k < m; ++k) {
        if (g.is_nyquist(axis, k)) {
          eval[j * m + k] = 0.0;
          continue;
        }
        const double phase = g.wavenumber(axis, k) * y;
        eval[j * m + k] = Complex(std::cos(phase), std::sin(phase)) / static_cast<double>(m);
      }
    }
    // Contract the current axis: coeff is transformed along `axis`, the axes
    // before it already hold node values.
    std::size_t outer = 1, inner = 1;
    for (int a = 0; a < axis; ++a) outer *= g.points[a];
    for (int a = axis + 1; a < g.dim; ++a) inner *= g.points[a];
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t in = 0; in < inner; ++in) {
        const std::size_t base = o * m * inner + in;
        for (std::size_t j = 0; j < m; ++j) {
          Complex acc = 0;
          for (std::size_t k = 0; k < m; ++k)
            acc += eval[j * m + k] * coeff[base + k * inner];
          work[base + j * inner] = acc;
        }
      }
    }
    coeff.swap(work);
  }

  const double prefactor = std::pow(delta, (2.0 - b) / alpha);
  for (auto& v : coeff) v *= prefactor;
  out.values = std::move(coeff);

  // Nodes whose dilated preimage leaves the box read the zero extension, not
  // the periodic copy the trigonometric evaluation would alias in.
  if (delta > 1.0) {
    for (std::size_t i = 0; i < out.values.size(); ++i) {
      const auto idx = g.unravel(i);
      for (int a = 0; a < g.dim; ++a) {
        if (std::abs(delta * g.coordinate(a, idx[a])) >= 0.5 * g.extent[a]) {
          out.values[i] = 0.0;
          break;
        }
      }
    }
  }

  if (boundary_mass_fraction(out) > tol)
    throw std::runtime_error("box too small: rescaled field reaches the boundary shell");
  return out;
}

}  // namespace inls
