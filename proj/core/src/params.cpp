#include "inls/params.hpp"

#include <stdexcept>

namespace inls {

void ParamSet::require_valid() const {
  if (dim < 1 || dim > 6) throw std::invalid_argument("dimension must lie in 1..6");
  if (!(alpha > Rational(0))) throw std::invalid_argument("alpha must be positive");
  if (!(b > Rational(0))) throw std::invalid_argument("b must be positive");
  if (s.is_negative()) throw std::invalid_argument("s must be nonnegative");
  if (lambda_sign != 1 && lambda_sign != -1)
    throw std::invalid_argument("lambda must be +1 or -1");
  if (!(eps() > Rational(0))) throw std::invalid_argument("epsilon must be positive");
  if (theta && theta->is_negative()) throw std::invalid_argument("theta must be nonnegative");
}

void ParamSet::require_windows_nonempty() const {
  const Rational e = eps();
  // Windows that are degenerate in their raw form (a single endpoint, as at
  // the upper regularity limit in dimension >= 3) put no constraint on the
  // shrink: no epsilon could open them.
  const Rational tiny(1, 1000000000000000000LL);
  auto check = [&](const Rational& reg) {
    if (!(reg > Rational(0)) || Rational(2) * reg >= Rational(dim)) return;
    if (hs_window_nonempty(dim, reg, tiny) && !hs_window_nonempty(dim, reg, e))
      throw std::invalid_argument("epsilon too large: shrunk window at s=" + reg.str() +
                                  " is empty");
    if (hs_dual_window_nonempty(dim, reg, tiny) && !hs_dual_window_nonempty(dim, reg, e))
      throw std::invalid_argument("epsilon too large: shrunk dual window at s=" + reg.str() +
                                  " is empty");
  };
  check(s);
  check(s_critical());
}

}  // namespace inls
