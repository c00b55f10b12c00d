#pragma once

#include "inls/rational.hpp"

#include <string>

namespace inls {

/// A time-space Lebesgue exponent pair (q, r); either component may be +inf.
struct Pair {
  Rational q;
  Rational r;

  friend bool operator==(const Pair& a, const Pair& b) { return a.q == b.q && a.r == b.r; }
};

enum class Region { Ball, BallComplement };

enum class AdmissibleKind { L2, Hs, HsDual, NotAdmissible };

/// Admissibility classification of a pair. For Hs / HsDual the regularity
/// index is carried along; for NotAdmissible `reason` names the first
/// violated condition.
struct PairClass {
  AdmissibleKind kind = AdmissibleKind::NotAdmissible;
  Rational s;
  std::string reason;

  static PairClass l2() { return {AdmissibleKind::L2, Rational(0), {}}; }
  static PairClass hs(Rational reg) { return {AdmissibleKind::Hs, std::move(reg), {}}; }
  static PairClass hs_dual(Rational reg) { return {AdmissibleKind::HsDual, std::move(reg), {}}; }
  static PairClass rejected(std::string why) {
    return {AdmissibleKind::NotAdmissible, Rational(0), std::move(why)};
  }

  bool admissible() const { return kind != AdmissibleKind::NotAdmissible; }

  /// Equality ignores the rejection reason.
  friend bool operator==(const PairClass& a, const PairClass& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == AdmissibleKind::Hs || a.kind == AdmissibleKind::HsDual) return a.s == b.s;
    return true;
  }

  std::string str() const;
  static PairClass parse(const std::string& text);
};

/// Critical regularity index N/2 - (2-b)/alpha.
Rational critical_index(int dim, const Rational& alpha, const Rational& b);

/// Upper nonlinearity bound (4-2b)/(N-2s) for s < N/2, +inf at s = N/2.
/// Throws for s > N/2.
Rational alpha_upper(int dim, const Rational& s, const Rational& b);

/// Upper bound on the weight exponent b: N/3 in dimensions 1-3, 2 above.
Rational b_upper(int dim);

/// (4-2b)/(N-2) in dimension >= 3, +inf in dimensions 1 and 2.
Rational two_star(int dim, const Rational& b);

/// The conjugate-through-a-plus exponent (a+eps)*a/eps, satisfying
/// 1/a == 1/plus_conjugate(a, eps) + 1/(a+eps) exactly.
Rational plus_conjugate(const Rational& a, const Rational& eps);

/// Componentwise Hoelder conjugates; an involution on [1, inf]^2.
Pair dual_pair(const Pair& p);

/// Whether |x|^-b_eff is gamma-integrable over the unit ball / its complement:
/// N/gamma - b_eff > 0 on the ball, < 0 outside, false at equality.
bool singular_weight_integrable(const Rational& gamma, const Rational& b_eff, int dim,
                                Region region);

inline Rational default_endpoint_shrink() { return Rational(1, 1000); }

/// Classifies (q, r) against the scaling relations and range windows at
/// regularity s. Endpoints written open in the range windows are realized by
/// the explicit shrink eps; ties on such raw endpoints are rejected.
PairClass classify_pair(const Pair& p, int dim, const Rational& s,
                        const Rational& eps = default_endpoint_shrink());

/// Range window nonemptiness for the eps-shrunk windows at regularity s
/// (requires 0 <= s < N/2 to be meaningful). Used as a constructive check
/// when parameters are assembled.
bool hs_window_nonempty(int dim, const Rational& s, const Rational& eps);
bool hs_dual_window_nonempty(int dim, const Rational& s, const Rational& eps);

}  // namespace inls
