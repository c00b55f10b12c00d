#include "lemmas_detail.hpp"

#include <algorithm>
#include <cmath>

namespace inls {

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::LocalL2: return "local-l2";
    case LemmaId::LocalHsHighDim: return "local-hs-high-dim";
    case LemmaId::LocalHsLowDim: return "local-hs-low-dim";
    case LemmaId::LocalHsHalfDim: return "local-hs-half-dim";
    case LemmaId::GlobalBase: return "global-base";
    case LemmaId::GlobalDerivHighDim: return "global-deriv-high-dim";
    case LemmaId::GlobalDeriv3D: return "global-deriv-3d";
    case LemmaId::GlobalDeriv1D: return "global-deriv-1d";
    case LemmaId::GlobalDeriv2D: return "global-deriv-2d";
    case LemmaId::GlobalDerivHalfDim: return "global-deriv-half-dim";
  }
  return "local-l2";
}

std::optional<LemmaId> lemma_from_string(std::string_view name) {
  for (LemmaId id : kAllLemmas)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

bool LemmaReport::pass() const {
  for (const auto& p : pairs)
    if (!p.verified) return false;
  for (const auto& i : identities)
    if (!i.pass) return false;
  for (const auto& s : signs)
    if (!s.pass) return false;
  return true;
}

std::string LemmaReport::first_failure() const {
  for (const auto& p : pairs)
    if (!p.verified) return "pair " + p.name + ": expected " + p.claimed.str() + ", got " +
                            p.actual.str() + (p.actual.reason.empty() ? "" : " (" + p.actual.reason + ")");
  for (const auto& i : identities)
    if (!i.pass) return "identity " + i.desc + ": " + i.lhs.str() + " != " + i.rhs.str();
  for (const auto& s : signs)
    if (!s.pass) return "sign " + s.desc + ": value " + s.value.str();
  return {};
}

LemmaId local_hs_branch(const ParamSet& params) {
  const Rational half_dim(params.dim, 2);
  if (params.dim >= 3) return LemmaId::LocalHsHighDim;
  return params.s == half_dim ? LemmaId::LocalHsHalfDim : LemmaId::LocalHsLowDim;
}

LemmaId global_deriv_branch(const ParamSet& params) {
  if (params.dim >= 4) return LemmaId::GlobalDerivHighDim;
  if (params.dim == 3) return LemmaId::GlobalDeriv3D;
  const Rational half_dim(params.dim, 2);
  if (params.s == half_dim) return LemmaId::GlobalDerivHalfDim;
  return params.dim == 1 ? LemmaId::GlobalDeriv1D : LemmaId::GlobalDeriv2D;
}

LemmaReport local_hs_system(const ParamSet& params) {
  switch (local_hs_branch(params)) {
    case LemmaId::LocalHsHighDim: return detail::build_local_hs_high(params);
    case LemmaId::LocalHsLowDim: return detail::build_local_hs_low(params);
    default: return detail::build_local_hs_half(params);
  }
}

LemmaReport global_deriv_system(const ParamSet& params) {
  switch (global_deriv_branch(params)) {
    case LemmaId::GlobalDerivHighDim: return detail::build_global_deriv_high(params);
    case LemmaId::GlobalDeriv3D: return detail::build_global_deriv_3d(params);
    case LemmaId::GlobalDeriv1D: return detail::build_global_deriv_1d(params);
    case LemmaId::GlobalDeriv2D: return detail::build_global_deriv_2d(params);
    default: return detail::build_global_deriv_half(params);
  }
}

LemmaReport local_l2_system(const ParamSet& params) { return detail::build_local_l2(params); }
LemmaReport global_pairs(const ParamSet& params) { return detail::build_global_base(params); }

LemmaReport verify_lemma(LemmaId lemma, const ParamSet& params) {
  auto guard = [&](LemmaId expected, const char* what) {
    if (lemma != expected)
      throw HypothesisError(std::string("wrong dimension branch: parameters select ") +
                            std::string(to_string(expected)) + ", not " + what);
  };
  switch (lemma) {
    case LemmaId::LocalL2:
      return local_l2_system(params);
    case LemmaId::LocalHsHighDim:
    case LemmaId::LocalHsLowDim:
    case LemmaId::LocalHsHalfDim:
      guard(local_hs_branch(params), std::string(to_string(lemma)).c_str());
      return local_hs_system(params);
    case LemmaId::GlobalBase:
      return global_pairs(params);
    case LemmaId::GlobalDerivHighDim:
    case LemmaId::GlobalDeriv3D:
    case LemmaId::GlobalDeriv1D:
    case LemmaId::GlobalDeriv2D:
    case LemmaId::GlobalDerivHalfDim:
      guard(global_deriv_branch(params), std::string(to_string(lemma)).c_str());
      return global_deriv_system(params);
  }
  throw std::logic_error("unknown lemma id");
}

TimeBound contraction_time(double a, const Rational& alpha, const Rational& theta1,
                           const Rational& theta2, double c) {
  if (!(a > 0) || !(c > 0)) throw std::invalid_argument("contraction_time requires a, c > 0");
  if (!theta1.is_positive() || !theta2.is_positive())
    throw std::invalid_argument("contraction_time requires positive time exponents");

  const double t1 = theta1.to_double();
  const double t2 = theta2.to_double();
  const double scale = c * std::pow(a, alpha.to_double());
  const double target = 0.25 * (1.0 - 1e-12);
  auto f = [&](double T) { return scale * (std::pow(T, t1) + std::pow(T, t2)); };

  double hi = 1.0;
  while (f(hi) < target) hi *= 2.0;
  double lo = hi / 2.0;
  while (f(lo) > target) {
    hi = lo;
    lo /= 2.0;
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) <= target ? lo : hi) = mid;
  }

  TimeBound bound;
  bound.T = lo;
  bound.a = a;
  bound.c = c;
  bound.d_exponent = alpha / min(theta1, theta2);
  return bound;
}

namespace detail {

void require(bool ok, const std::string& inequality) {
  if (!ok) throw HypothesisError("hypothesis violated: " + inequality);
}

ReportBuilder::ReportBuilder(LemmaId id, ParamSet resolved) {
  rep_.lemma = id;
  rep_.params = std::move(resolved);
  rep_.s_critical = rep_.params.s_critical();
  rep_.theta1 = kZero;
  rep_.theta2 = kZero;
}

void ReportBuilder::claim_pair(std::string name, Pair pair, PairClass claimed) {
  PairCheck check;
  check.name = std::move(name);
  check.pair = std::move(pair);
  const Rational reg = claimed.kind == AdmissibleKind::L2 ? kZero : claimed.s;
  check.claimed = std::move(claimed);
  check.actual = classify_pair(check.pair, rep_.params.dim, reg, rep_.params.eps());
  check.verified = check.actual == check.claimed;
  rep_.pairs.push_back(std::move(check));
}

void ReportBuilder::identity(std::string desc, Rational lhs, Rational rhs) {
  bool pass = lhs == rhs;
  rep_.identities.push_back({std::move(desc), std::move(lhs), std::move(rhs), pass});
}

void ReportBuilder::sign(std::string desc, Rational value, int required_sign) {
  bool pass = required_sign > 0 ? value > kZero : value < kZero;
  rep_.signs.push_back({std::move(desc), std::move(value), required_sign, pass});
}

ExponentSystem& ReportBuilder::system(std::string name, std::optional<Region> region,
                                      std::string note) {
  rep_.systems.push_back({std::move(name), region, {}, std::move(note)});
  return rep_.systems.back();
}

void ReportBuilder::symbol(ExponentSystem& sys, std::string name, Rational value) {
  if (!(value > kZero))
    sign("system " + sys.name + " symbol " + name + " positive", value, +1);
  sys.symbols.emplace_back(std::move(name), std::move(value));
}

void ReportBuilder::finalize_epsilon() {
  const int dim = rep_.params.dim;
  Rational eps = rep_.params.eps();
  bool shrunk = false;
  for (const auto& p : rep_.pairs) {
    std::vector<Rational> margins;
    if (p.claimed.kind == AdmissibleKind::Hs && dim >= 3) {
      margins.push_back(Rational(2 * dim, dim - 2) - p.pair.r);
    } else if (p.claimed.kind == AdmissibleKind::HsDual) {
      const Rational lo = Rational(2 * dim) / (Rational(dim) - kTwo * p.claimed.s);
      if (!p.pair.r.is_infinite()) margins.push_back(p.pair.r - lo);
      if (dim >= 3) margins.push_back(Rational(2 * dim, dim - 2) - p.pair.r);
    }
    for (const auto& m : margins) {
      if (m > kZero && m / kTwo < eps) {
        eps = m / kTwo;
        shrunk = true;
      }
    }
  }
  if (!shrunk) return;
  rep_.params.epsilon = eps;
  for (auto& p : rep_.pairs) {
    const Rational reg = p.claimed.kind == AdmissibleKind::L2 ? kZero : p.claimed.s;
    p.actual = classify_pair(p.pair, dim, reg, eps);
    p.verified = p.actual == p.claimed;
  }
}

GlobalFamily make_global_family(int dim, const Rational& alpha, const Rational& b,
                                const Rational& theta) {
  const Rational N(dim);
  const Rational four_2b = kFour - kTwo * b;
  GlobalFamily fam;

  const Rational qn = kFour * alpha * (alpha + kTwo - theta);
  const Rational qd = alpha * (N * alpha + kTwo * b) - theta * (N * alpha - kFour + kTwo * b);
  if (!(qd > kZero)) throw HypothesisError("theta outside window: q-denominator not positive");
  fam.q_hat = qn / qd;

  const Rational rn = N * alpha * (alpha + kTwo - theta);
  const Rational rd = alpha * (N - b) - theta * (kTwo - b);
  if (!(rd > kZero)) throw HypothesisError("theta outside window: r-denominator not positive");
  fam.r_hat = rn / rd;

  const Rational an = kTwo * alpha * (alpha + kTwo - theta);
  const Rational ad =
      alpha * (N * (alpha + kOne - theta) - kTwo + kTwo * b) - four_2b * (kOne - theta);
  if (!(ad > kZero)) throw HypothesisError("theta outside window: dual-denominator not positive");
  fam.a_tilde = an / ad;

  const Rational ahd = four_2b - Rational(dim - 2) * alpha;
  if (!(ahd > kZero)) throw HypothesisError("alpha must satisfy alpha < (4-2b)/(N-2)");
  fam.a_hat = an / ahd;
  return fam;
}

void require_global_hypotheses(const ParamSet& params) {
  params.require_valid();
  const Rational N(params.dim);
  require(params.b < b_upper(params.dim), "b < b_upper(N)");
  require(params.alpha > (kFour - kTwo * params.b) / N, "alpha > (4-2b)/N");
  const Rational au = alpha_upper(params.dim, params.s, params.b);
  require(params.alpha < au, "alpha < alpha_upper(N, s, b)");
  require(params.s > params.s_critical(), "s > s_c");
  require(params.s <= min(Rational(params.dim, 2), kOne), "s <= min(N/2, 1)");
  try {
    params.require_windows_nonempty();
  } catch (const std::invalid_argument& e) {
    throw HypothesisError(e.what());
  }
}

Rational resolve_global_theta(const ParamSet& params, bool include_branch_constraints) {
  if (params.theta) {
    if (!(*params.theta > kZero)) throw HypothesisError("theta outside window: theta must be positive");
    return *params.theta;
  }
  const Rational window =
      include_branch_constraints ? theta_window_with_branch(params) : theta_window(params);
  return min(window / kTwo, Rational(1, 100));
}

}  // namespace detail

}  // namespace inls
