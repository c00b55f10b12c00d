#pragma once

#include "inls/admissible.hpp"
#include "inls/params.hpp"
#include "inls/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inls {

/// One entry per derived exponent system of the local/global theory.
enum class LemmaId {
  LocalL2,
  LocalHsHighDim,
  LocalHsLowDim,
  LocalHsHalfDim,
  GlobalBase,
  GlobalDerivHighDim,
  GlobalDeriv3D,
  GlobalDeriv1D,
  GlobalDeriv2D,
  GlobalDerivHalfDim,
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::LocalL2,          LemmaId::LocalHsHighDim, LemmaId::LocalHsLowDim,
    LemmaId::LocalHsHalfDim,   LemmaId::GlobalBase,     LemmaId::GlobalDerivHighDim,
    LemmaId::GlobalDeriv3D,    LemmaId::GlobalDeriv1D,  LemmaId::GlobalDeriv2D,
    LemmaId::GlobalDerivHalfDim,
};

std::string_view to_string(LemmaId id);
std::optional<LemmaId> lemma_from_string(std::string_view name);

/// Thrown when a parameter set violates the named hypothesis of a lemma.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PairCheck {
  std::string name;
  Pair pair;
  PairClass claimed;
  PairClass actual;
  bool verified = false;
};

struct IdentityCheck {
  std::string desc;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

struct SignCheck {
  std::string desc;
  Rational value;
  int required_sign = +1;  // +1 => value > 0, -1 => value < 0
  bool pass = false;
};

/// Named solution of one Hoelder-splitting system, with the region it was
/// solved on and, for implementation-chosen exponents, the open interval the
/// choice was drawn from.
struct ExponentSystem {
  std::string name;
  std::optional<Region> region;
  std::vector<std::pair<std::string, Rational>> symbols;
  std::string note;
};

/// Machine-checkable record of one lemma: constructed pairs with their
/// claimed classes re-derived through classify_pair, every splitting identity
/// and sign condition evaluated in exact arithmetic, and the two time
/// exponents of the contraction estimate.
struct LemmaReport {
  LemmaId lemma = LemmaId::LocalL2;
  ParamSet params;              // with theta/mu/epsilon resolved
  Rational s_critical;
  std::vector<PairCheck> pairs;
  std::vector<ExponentSystem> systems;
  std::vector<IdentityCheck> identities;
  std::vector<SignCheck> signs;
  Rational theta1;
  Rational theta2;
  std::vector<std::string> corollary_terms;  // derivative branches only

  bool pass() const;
  std::string first_failure() const;
};

/// Mass-subcritical local theory: builds the admissible pair and ball
/// splitting for 0 < alpha < (4-2b)/N, 0 < b < min(2, N). The positivity of
/// the ball time exponent encodes the subcritical hypothesis; at the critical
/// boundary it vanishes and the report fails instead of throwing.
LemmaReport local_l2_system(const ParamSet& params);

/// Local theory at regularity max(0, s_c) < s <= min(N/2, 1); dispatches on
/// (N, s) to the high-dimension, low-dimension or half-dimension branch.
LemmaReport local_hs_system(const ParamSet& params);

/// The global pair family (q^, r^), (a^, r^), (a~, r^) with its exact
/// reciprocal identity 1/a^ + 1/a~ = 2/q^ and both time-Hoelder splittings.
LemmaReport global_pairs(const ParamSet& params);

/// Derivative estimates of the global theory; dispatches on (N, s). For N = 3
/// theta is forced to F*alpha with F = (2 - eps + mu - 2b)/(4 - 2b).
LemmaReport global_deriv_system(const ParamSet& params);

/// Largest theta* such that every denominator and strict inequality of the
/// branch activated by (N, s) holds for all 0 < theta < theta*. Exact, by
/// reduction of each constraint to a linear function of theta.
Rational theta_window(const ParamSet& params);

/// Dispatch facade; checks the branch guard of explicitly named branches.
LemmaReport verify_lemma(LemmaId lemma, const ParamSet& params);

/// Which local-hs / global-deriv branch a parameter set activates.
LemmaId local_hs_branch(const ParamSet& params);
LemmaId global_deriv_branch(const ParamSet& params);

/// Ball time exponents; each vanishes exactly at the stated alpha bound.
Rational theta2_local_l2(int dim, const Rational& alpha, const Rational& b);
Rational theta2_local_hs_high_dim(int dim, const Rational& s, const Rational& alpha,
                                  const Rational& b);
Rational theta2_local_hs_low_dim(int dim, const Rational& s, const Rational& alpha,
                                 const Rational& b);

/// Largest T with c a^alpha (T^t1 + T^t2) <= 1/4 - tol together with the
/// asymptotic exponent d = alpha / min(t1, t2) of T ~ C / a^d.
struct TimeBound {
  double T = 0;
  double a = 0;
  double c = 0;
  Rational d_exponent;
};

TimeBound contraction_time(double a, const Rational& alpha, const Rational& theta1,
                           const Rational& theta2, double c);

}  // namespace inls
