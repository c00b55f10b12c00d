#pragma once

#include "inls/admissible.hpp"
#include "inls/rational.hpp"

#include <optional>

namespace inls {

/// The parameter tuple governing every hypothesis of the exponent catalog:
/// dimension N, nonlinearity power alpha, weight exponent b, regularity s,
/// focusing sign, the auxiliary split theta, the endpoint shrink epsilon and
/// the interpolation weight mu used by the three-dimensional derivative
/// estimate. theta, mu and epsilon may be left empty; each consumer fills in
/// its documented default.
struct ParamSet {
  int dim = 3;
  Rational alpha = Rational(1);
  Rational b = Rational(1, 2);
  Rational s = Rational(0);
  int lambda_sign = -1;
  std::optional<Rational> theta;
  std::optional<Rational> mu;
  std::optional<Rational> epsilon;

  Rational eps() const { return epsilon.value_or(default_endpoint_shrink()); }
  Rational mu_or_default() const { return mu.value_or((Rational(1) + b) / Rational(2)); }

  Rational s_critical() const { return critical_index(dim, alpha, b); }

  /// Basic field validity: dimension 1..6, alpha > 0, b > 0, s >= 0,
  /// lambda in {-1, +1}, positive shrink. Throws std::invalid_argument.
  void require_valid() const;

  /// Constructive check that the eps-shrunk range windows at regularity s
  /// (and at the critical index, when it lies in (0, N/2)) are nonempty.
  void require_windows_nonempty() const;
};

}  // namespace inls
