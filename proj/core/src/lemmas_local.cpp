#include "lemmas_detail.hpp"

namespace inls {

Rational theta2_local_l2(int dim, const Rational& alpha, const Rational& b) {
  const Rational N(dim);
  return (detail::kFour - detail::kTwo * b - alpha * N) /
         (detail::kFour - detail::kTwo * b + detail::kTwo * N);
}

Rational theta2_local_hs_high_dim(int dim, const Rational& s, const Rational& alpha,
                                  const Rational& b) {
  const Rational N(dim);
  return (detail::kFour - detail::kTwo * b - alpha * (N - detail::kTwo * s)) /
         (detail::kTwo * (N - b + detail::kTwo - detail::kTwo * s));
}

Rational theta2_local_hs_low_dim(int dim, const Rational& s, const Rational& alpha,
                                 const Rational& b) {
  const Rational N(dim);
  const Rational four_2b = detail::kFour - detail::kTwo * b;
  return ((Rational(8) - detail::kTwo * N + s) / Rational(8)) *
         ((four_2b - alpha * (N - detail::kTwo * s)) / (N - detail::kTwo * s + four_2b));
}

namespace detail {

namespace {

Rational safe_recip(const Rational& x) {
  return x.is_zero() ? Rational::infinity() : x.reciprocal();
}

/// Exterior estimate shared by the two s < N/2 local branches: the pair
/// (q0, r0), the vanishing weight exponent N/gamma = 0 and the exterior time
/// exponent (4 - alpha(N-2s))/4. Returns theta1.
Rational exterior_low_regularity_block(ReportBuilder& rb, int dim, const Rational& s,
                                       const Rational& alpha, const Rational& b) {
  const Rational N(dim);
  const Rational q0 = kFour * (alpha + kTwo) / (alpha * (N - kTwo * s));
  const Rational r0 = N * (alpha + kTwo) / (N + alpha * s);
  rb.claim_pair("exterior", {q0, r0}, PairClass::l2());

  const Rational inv_r0 = recip(r0);
  rb.sign("exterior Sobolev range: N/r0 - s", N * inv_r0 - s, +1);
  const Rational alpha_r1 = N / (N * inv_r0 - s);  // alpha * r1
  const Rational r1 = alpha_r1 / alpha;
  const Rational q2 = q0 / alpha;

  auto& sys = rb.system("exterior_split", Region::BallComplement);
  const Rational inv_gamma = kOne - kTwo * inv_r0 - recip(r1);
  const Rational gamma = safe_recip(inv_gamma);
  rb.symbol(sys, "gamma", gamma);
  rb.symbol(sys, "r1", r1);
  rb.symbol(sys, "q2", q2);
  rb.identity("exterior weight exponent vanishes: N/gamma == 0", N * inv_gamma, kZero);
  rb.sign("exterior weight integrable: N/gamma - b", N * inv_gamma - b, -1);

  // Differentiated variant: same radius exponent, shifted weight.
  const Rational e = alpha_r1 / (alpha + kOne);
  const Rational inv_d = kOne - inv_r0 - recip(e);
  rb.symbol(sys, "d", safe_recip(inv_d));
  rb.symbol(sys, "e", e);
  rb.identity("exterior shifted weight: N/d == N/gamma + s", N * inv_d, N * inv_gamma + s);
  rb.sign("exterior shifted weight integrable: N/d - b - s", N * inv_d - b - s, -1);

  const Rational theta1 = kOne - (alpha + kTwo) / q0;
  rb.identity("theta1 == (4 - alpha(N-2s))/4", theta1,
              (kFour - alpha * (N - kTwo * s)) / kFour);
  rb.sign("exterior time exponent theta1", theta1, +1);
  return theta1;
}

void require_local_hs_hypotheses(const ParamSet& p) {
  p.require_valid();
  require(p.b < b_upper(p.dim), "b < b_upper(N)");
  require(p.s <= min(Rational(p.dim, 2), kOne), "s <= min(N/2, 1)");
  const Rational au = alpha_upper(p.dim, p.s, p.b);
  require(p.alpha < au, "alpha < alpha_upper(N, s, b)");
  require(p.s > max(kZero, p.s_critical()), "s > max(0, s_c)");
}

}  // namespace

LemmaReport build_local_l2(const ParamSet& params) {
  params.require_valid();
  const Rational N(params.dim);
  require(params.b < min(kTwo, N), "b < min(2, N)");

  ReportBuilder rb(LemmaId::LocalL2, params);
  const Rational& alpha = params.alpha;
  const Rational& b = params.b;
  const Rational four_2b = kFour - kTwo * b;

  const Rational r = (four_2b + kTwo * N) / (N - b);
  const Rational q = (four_2b + kTwo * N) / N;
  rb.claim_pair("main", {q, r}, PairClass::l2());

  // Unweighted exterior pair; the time exponent 1 - N alpha / 4 is an
  // implementation choice, the estimate itself being classical.
  const Rational kato_q = kFour * (alpha + kTwo) / (N * alpha);
  const Rational kato_r = alpha + kTwo;
  rb.claim_pair("exterior", {kato_q, kato_r}, PairClass::l2());
  const Rational theta1 = kOne - N * alpha / kFour;
  rb.sign("exterior time exponent theta1 (implementation-chosen)", theta1, +1);

  auto& sys = rb.system("ball_split", Region::Ball);
  const Rational r1 = r / alpha;
  const Rational q2 = q / alpha;
  const Rational inv_gamma = kOne - (alpha + kTwo) / r;
  const Rational gamma = safe_recip(inv_gamma);
  const Rational theta2 = kOne - (alpha + kTwo) / q;
  const Rational q1 = safe_recip(theta2);
  rb.symbol(sys, "gamma", gamma);
  rb.symbol(sys, "r1", r1);
  rb.symbol(sys, "q1", q1);
  rb.symbol(sys, "q2", q2);

  rb.identity("ball radius closure: 1/r' == 1/gamma + 1/r1 + 1/r", kOne - recip(r),
              inv_gamma + recip(r1) + recip(r));
  rb.identity("ball time closure: 1/q' == 1/q1 + 1/q2 + 1/q", kOne - recip(q),
              theta2 + recip(q2) + recip(q));
  rb.identity("theta2 == (4-2b-alpha N)/(4-2b+2N)", theta2,
              theta2_local_l2(params.dim, alpha, b));
  rb.sign("ball weight integrable: N/gamma - b", N * inv_gamma - b, +1);
  rb.sign("ball time exponent theta2", theta2, +1);

  rb.theta_exponents(theta1, theta2);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_local_hs_high(const ParamSet& params) {
  require(params.dim >= 3, "N >= 3");
  require_local_hs_hypotheses(params);
  ReportBuilder rb(LemmaId::LocalHsHighDim, params);
  const Rational N(params.dim);
  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;

  const Rational theta1 = exterior_low_regularity_block(rb, params.dim, s, alpha, b);

  const Rational r_den = N * (N - kTwo * s) + kFour * s - b * N;
  const Rational r = kTwo * N * (N - b + kTwo * (kOne - s)) / r_den;
  const Rational q = kTwo * (N - b + kTwo * (kOne - s)) / (N - kTwo * s);
  rb.claim_pair("ball", {q, r}, PairClass::l2());

  const Rational inv_r = recip(r);
  rb.sign("ball Sobolev range: N/r - s", N * inv_r - s, +1);
  rb.sign("range condition: N - b - 2s", N - b - kTwo * s, +1);

  auto& sys = rb.system("ball_split", Region::Ball);
  const Rational alpha_r1 = N / (N * inv_r - s);
  const Rational r1 = alpha_r1 / alpha;
  const Rational q2 = q / alpha;
  const Rational inv_gamma = kOne - kTwo * inv_r - recip(r1);
  rb.symbol(sys, "gamma", safe_recip(inv_gamma));
  rb.symbol(sys, "r1", r1);
  rb.symbol(sys, "q2", q2);
  rb.identity("ball weight exponent: N/gamma == N - (alpha+2)N/r + alpha s",
              N * inv_gamma, N - (alpha + kTwo) * N * inv_r + alpha * s);
  rb.sign("ball weight integrable: N/gamma - b", N * inv_gamma - b, +1);

  const Rational theta2 = kOne - (alpha + kTwo) / q;
  rb.identity("theta2 == (4-2b-alpha(N-2s))/(2(N-b+2-2s))", theta2,
              theta2_local_hs_high_dim(params.dim, s, alpha, b));
  rb.sign("ball time exponent theta2", theta2, +1);

  // Differentiated variant on the ball: shifted weight |x|^(-b-s).
  const Rational e = alpha_r1 / (alpha + kOne);
  const Rational inv_d = kOne - inv_r - recip(e);
  rb.symbol(sys, "d", safe_recip(inv_d));
  rb.symbol(sys, "e", e);
  rb.identity("ball shifted weight: N/d == N/gamma + s", N * inv_d, N * inv_gamma + s);
  rb.sign("ball shifted weight integrable: N/d - b - s", N * inv_d - b - s, +1);
  rb.identity("derivative time closure: 1/q' == 1/q1 + (alpha+1)/q", kOne - recip(q),
              theta2 + (alpha + kOne) / q);

  rb.theta_exponents(theta1, theta2);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_local_hs_low(const ParamSet& params) {
  require(params.dim <= 2, "N <= 2");
  require(params.s < Rational(params.dim, 2), "s < N/2");
  require_local_hs_hypotheses(params);
  ReportBuilder rb(LemmaId::LocalHsLowDim, params);
  const Rational N(params.dim);
  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;
  const Rational four_2b = kFour - kTwo * b;

  const Rational theta1 = exterior_low_regularity_block(rb, params.dim, s, alpha, b);

  const Rational q_bar = Rational(8) / (kTwo * N - s);
  const Rational r_bar = kFour * N / s;
  rb.claim_pair("ball_anchor", {q_bar, r_bar}, PairClass::l2());

  const Rational head = N - kTwo * s + four_2b;
  const Rational r_den = kFour * s * four_2b + (N - kTwo * s) * (kFour * N - kFour * b - s);
  const Rational r = kFour * N * head / r_den;
  const Rational q = Rational(8) * head / ((Rational(8) - kTwo * N + s) * (N - kTwo * s));
  rb.claim_pair("ball", {q, r}, PairClass::l2());

  const Rational inv_r = recip(r);
  rb.sign("ball Sobolev range: N/r - s", N * inv_r - s, +1);
  rb.sign("range condition: 4N - 4b - 5s", kFour * N - kFour * b - Rational(5) * s, +1);

  auto& sys = rb.system("ball_split", Region::Ball);
  const Rational alpha_r1 = N / (N * inv_r - s);
  const Rational r1 = alpha_r1 / alpha;
  const Rational q2 = q / alpha;
  const Rational inv_gamma = kOne - recip(r_bar) - recip(r1) - inv_r;
  rb.symbol(sys, "gamma", safe_recip(inv_gamma));
  rb.symbol(sys, "r1", r1);
  rb.symbol(sys, "q2", q2);
  rb.identity("ball weight exponent: N/gamma == N - s/4 - (alpha+1)N/r + alpha s",
              N * inv_gamma, N - s / kFour - (alpha + kOne) * N * inv_r + alpha * s);
  rb.sign("ball weight integrable: N/gamma - b", N * inv_gamma - b, +1);

  const Rational theta2 = kOne - recip(q_bar) - (alpha + kOne) / q;
  rb.identity("theta2 == ((8-2N+s)/8)((4-2b-alpha(N-2s))/(N-2s+4-2b))", theta2,
              theta2_local_hs_low_dim(params.dim, s, alpha, b));
  rb.sign("ball time exponent theta2", theta2, +1);

  const Rational e = alpha_r1 / (alpha + kOne);
  const Rational inv_d = kOne - recip(r_bar) - recip(e);
  rb.symbol(sys, "d", safe_recip(inv_d));
  rb.symbol(sys, "e", e);
  rb.identity("ball shifted weight: N/d == N/gamma + s", N * inv_d, N * inv_gamma + s);
  rb.sign("ball shifted weight integrable: N/d - b - s", N * inv_d - b - s, +1);

  rb.theta_exponents(theta1, theta2);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_local_hs_half(const ParamSet& params) {
  require(params.dim <= 2, "N <= 2");
  require(params.s == Rational(params.dim, 2), "s == N/2");
  params.require_valid();
  require(params.b < b_upper(params.dim), "b < N/3");
  ReportBuilder rb(LemmaId::LocalHsHalfDim, params);
  const Rational N(params.dim);
  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;

  // The exterior estimate of the differentiated part needs a Lebesgue
  // exponent in [2, 2N alpha (alpha+2) / ((alpha+1)(N-2b))), which is empty
  // for small alpha.
  require(N * alpha * (alpha + kTwo) > (alpha + kOne) * (N - kTwo * b),
          "N alpha (alpha+2) > (alpha+1)(N-2b)");

  const Rational r = N * (alpha + kTwo) / (N - kTwo * b);
  const Rational q = kFour * (alpha + kTwo) / (N * alpha + kFour * b);
  rb.claim_pair("value_pair", {q, r}, PairClass::l2());

  // Ambient Lebesgue exponent window L for alpha*r1 in the undifferentiated
  // estimate; ball takes (L, inf), exterior (2, L).
  const Rational L = kTwo * N * (alpha + kTwo) / (N - kTwo * b);
  const Rational weight_margin = alpha * (N - kTwo * b) / (kTwo * (alpha + kTwo));

  {
    auto& sys = rb.system("value_ball_split", Region::Ball,
                          "alpha*r1 chosen as 2L from the open interval (L, inf), L = 2N(alpha+2)/(N-2b)");
    const Rational alpha_r1 = kTwo * L;
    const Rational r1 = alpha_r1 / alpha;
    const Rational inv_gamma = kOne - recip(r) - recip(r1) - Rational(1, 2);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    rb.identity("ball weight margin: N/gamma - b == alpha(N-2b)/(2(alpha+2)) - N/r1",
                N * inv_gamma - b, weight_margin - N * recip(r1));
    rb.sign("ball weight integrable: N/gamma - b", N * inv_gamma - b, +1);
  }
  {
    // The interval (2, L) is trimmed from below so the weight slot of the
    // Hoelder split stays nonnegative: alpha*r1 >= 2N alpha(alpha+2)/(N alpha+4b).
    const Rational gamma_floor = kTwo * N * alpha * (alpha + kTwo) / (N * alpha + kFour * b);
    auto& sys = rb.system("value_exterior_split", Region::BallComplement,
                          "alpha*r1 is the harmonic midpoint of (max(2, gamma floor), L)");
    const Rational alpha_r1 = harmonic_midpoint(max(kTwo, gamma_floor), L);
    const Rational r1 = alpha_r1 / alpha;
    const Rational inv_gamma = kOne - recip(r) - recip(r1) - Rational(1, 2);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    rb.sign("exterior weight integrable: N/gamma - b", N * inv_gamma - b, -1);
  }

  const Rational theta1 = kOne - recip(q);
  rb.sign("value time exponent theta1 = 1/q'", theta1, +1);

  // Differentiated estimate.
  rb.sign("derivative radius denominator: N - b - s", N - b - s, +1);
  const Rational rd = N * (alpha + kTwo) / (N - b - s);
  const Rational qd = kFour * (alpha + kTwo) / (alpha * N + kTwo * b + kTwo * s);
  rb.claim_pair("derivative_pair", {qd, rd}, PairClass::l2());

  const Rational A = kTwo * N * (alpha + kTwo) / ((alpha + kOne) * (N - kTwo * b));
  const Rational shifted_margin = (alpha + kOne) * (N - kTwo * b) / (kTwo * (alpha + kTwo));
  {
    auto& sys = rb.system("derivative_ball_split", Region::Ball,
                          "r1 = 2 max(A, 2/alpha), e = 2A from the open intervals (A, inf)");
    const Rational r1 = kTwo * max(A, kTwo / alpha);
    const Rational e = kTwo * A;
    const Rational inv_gamma = kOne - recip(rd) - recip(r1) - Rational(1, 2);
    const Rational inv_d = kOne - recip(rd) - recip(e);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", e);
    rb.identity("ball weight margin: N/gamma - b == (alpha+1)(N-2b)/(2(alpha+2)) - N/r1",
                N * inv_gamma - b, shifted_margin - N * recip(r1));
    rb.identity("ball shifted margin: N/d - b - s == (alpha+1)(N-2b)/(2(alpha+2)) - N/e",
                N * inv_d - b - s, shifted_margin - N * recip(e));
    rb.sign("ball weight integrable: N/gamma - b", N * inv_gamma - b, +1);
    rb.sign("ball shifted weight integrable: N/d - b - s", N * inv_d - b - s, +1);
    rb.sign("ball embedding range: alpha r1 - 2", alpha * r1 - kTwo, +1);
    rb.sign("ball embedding range: (alpha+1)e - 2", (alpha + kOne) * e - kTwo, +1);
  }
  {
    // As above, both intervals are trimmed so the gamma- and d-slots of the
    // splits stay nonnegative.
    const Rational gamma_floor =
        kTwo * N * alpha * (alpha + kTwo) / (N * alpha + kTwo * b + kTwo * s);
    const Rational d_floor = N * (alpha + kOne) * (alpha + kTwo) / (N * alpha + b + s);
    auto& sys = rb.system("derivative_exterior_split", Region::BallComplement,
                          "alpha*r1 and (alpha+1)e are harmonic midpoints of the trimmed "
                          "intervals (_, alpha A) and (_, L)");
    rb.sign("exterior interval nonempty: alpha A - 2", alpha * A - kTwo, +1);
    const Rational alpha_r1 = harmonic_midpoint(max(kTwo, gamma_floor), alpha * A);
    const Rational r1 = alpha_r1 / alpha;
    const Rational e = harmonic_midpoint(max(kTwo, d_floor), L) / (alpha + kOne);
    const Rational inv_gamma = kOne - recip(rd) - recip(r1) - Rational(1, 2);
    const Rational inv_d = kOne - recip(rd) - recip(e);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", e);
    rb.sign("exterior weight integrable: N/gamma - b", N * inv_gamma - b, -1);
    rb.sign("exterior shifted weight integrable: N/d - b - s", N * inv_d - b - s, -1);
  }

  const Rational theta2 = kOne - recip(qd);
  rb.sign("derivative time exponent theta2 = 1/q'", theta2, +1);

  rb.theta_exponents(theta1, theta2);
  rb.finalize_epsilon();
  return rb.take();
}

}  // namespace detail

}  // namespace inls
