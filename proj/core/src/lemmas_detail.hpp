#pragma once

#include "inls/lemmas.hpp"

#include <span>

namespace inls::detail {

inline const Rational kZero(0);
inline const Rational kOne(1);
inline const Rational kTwo(2);
inline const Rational kFour(4);

inline Rational recip(const Rational& x) { return x.reciprocal(); }

/// Harmonic midpoint of an open reciprocal-linear interval (lo, hi):
/// the value m with 1/m = (1/lo + 1/hi)/2; for hi = inf this is 2*lo.
inline Rational harmonic_midpoint(const Rational& lo, const Rational& hi) {
  return kTwo / (recip(lo) + recip(hi));
}

class ReportBuilder {
public:
  ReportBuilder(LemmaId id, ParamSet resolved);

  const ParamSet& params() const { return rep_.params; }
  const Rational& sc() const { return rep_.s_critical; }

  /// Records the pair and re-derives its class through classify_pair.
  void claim_pair(std::string name, Pair pair, PairClass claimed);

  void identity(std::string desc, Rational lhs, Rational rhs);

  /// required_sign +1 demands value > 0, -1 demands value < 0.
  void sign(std::string desc, Rational value, int required_sign);

  ExponentSystem& system(std::string name, std::optional<Region> region, std::string note = {});

  /// Adds a symbol and records a positivity failure if the value is not > 0.
  void symbol(ExponentSystem& sys, std::string name, Rational value);

  void theta_exponents(Rational t1, Rational t2) {
    rep_.theta1 = std::move(t1);
    rep_.theta2 = std::move(t2);
  }

  void corollary_terms(std::vector<std::string> terms) {
    rep_.corollary_terms = std::move(terms);
  }

  /// Shrinks the recorded epsilon so that every already-claimed pair whose
  /// window has an eps-realized endpoint sits inside it whenever its margin
  /// against the raw open endpoint is positive. Call after the final
  /// claim_pair; re-runs the classifications with the shrunk value.
  void finalize_epsilon();

  LemmaReport take() { return std::move(rep_); }

private:
  LemmaReport rep_;
};

/// Shared hypothesis guards; throw HypothesisError naming the inequality.
void require(bool ok, const std::string& inequality);

LemmaReport build_local_l2(const ParamSet& params);
LemmaReport build_local_hs_high(const ParamSet& params);
LemmaReport build_local_hs_low(const ParamSet& params);
LemmaReport build_local_hs_half(const ParamSet& params);
LemmaReport build_global_base(const ParamSet& params);
LemmaReport build_global_deriv_high(const ParamSet& params);
LemmaReport build_global_deriv_3d(const ParamSet& params);
LemmaReport build_global_deriv_1d(const ParamSet& params);
LemmaReport build_global_deriv_2d(const ParamSet& params);
LemmaReport build_global_deriv_half(const ParamSet& params);

/// The four global exponents of the base family at a given theta.
struct GlobalFamily {
  Rational q_hat, r_hat, a_tilde, a_hat;
};
GlobalFamily make_global_family(int dim, const Rational& alpha, const Rational& b,
                                const Rational& theta);

/// Common hypothesis block of the global theory (throws on violation) and
/// the resolved theta (params.theta, or min(theta*/2, 1/100)). Derivative
/// branches resolve against the combined window below so their own
/// denominators stay positive at the default.
Rational resolve_global_theta(const ParamSet& params, bool include_branch_constraints);
Rational theta_window_with_branch(const ParamSet& params);

/// Hypotheses shared by every global branch.
void require_global_hypotheses(const ParamSet& params);

}  // namespace inls::detail
