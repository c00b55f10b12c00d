#include "lemmas_detail.hpp"

namespace inls::detail {

namespace {

Rational safe_recip(const Rational& x) {
  return x.is_zero() ? Rational::infinity() : x.reciprocal();
}

Rational conj_inv(const Rational& q) { return kOne - recip(q); }  // 1/q'

/// Exterior Lebesgue exponent X for a split whose integrability margin reads
/// C - K/X and whose weight slot is (margin + b_eff) / N: the harmonic
/// midpoint of the open interval on which the slot stays positive, the margin
/// negative, and the composite exponent inside the embedding range [2, embed].
Rational exterior_exponent(const Rational& K, const Rational& C, const Rational& b_eff,
                           const Rational& embed) {
  const Rational lo = max(kTwo, K / (C + b_eff));
  Rational hi = C > kZero ? K / C : Rational::infinity();
  hi = min(hi, embed);
  require(lo < hi, "no valid exterior Hoelder exponent");
  return harmonic_midpoint(lo, hi);
}

/// Weight-splitting block shared by the global branches built on a pair
/// (time, radius) whose inner Lebesgue exponent is `inner` (the exponent
/// carrying u^(alpha-theta) and the derivative factor): records gamma from
/// the Hoelder closure, the exact margin identity
///   N/gamma - b == theta(2-b)/alpha - N/r1
/// and the region sign for the stated theta*r1 choice.
void weight_split(ReportBuilder& rb, const std::string& name, Region region,
                  const Rational& radius, const Rational& inner, const Rational& theta_r1,
                  const Rational& theta, std::string note = {}) {
  const ParamSet& p = rb.params();
  const Rational N(p.dim);
  const Rational r1 = theta_r1 / theta;
  const Rational inv_gamma =
      kOne - recip(radius) - recip(r1) - (p.alpha + kOne - theta) * recip(inner);
  auto& sys = rb.system(name, region, std::move(note));
  rb.symbol(sys, "gamma", safe_recip(inv_gamma));
  rb.symbol(sys, "r1", r1);
  const Rational margin = N * inv_gamma - p.b;
  rb.identity(name + " margin: N/gamma - b == theta(2-b)/alpha - N/r1", margin,
              theta * (kTwo - p.b) / p.alpha - N * recip(r1));
  if (region == Region::Ball) {
    rb.sign(name + " weight integrable: N/gamma - b", margin, +1);
  } else {
    rb.sign(name + " weight integrable: N/gamma - b", margin, -1);
  }
}

}  // namespace

LemmaReport build_global_base(const ParamSet& params) {
  require_global_hypotheses(params);
  ParamSet resolved = params;
  resolved.theta = resolve_global_theta(params, false);
  const Rational theta = *resolved.theta;
  ReportBuilder rb(LemmaId::GlobalBase, resolved);

  const Rational N(params.dim);
  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;
  const Rational sc = rb.sc();
  require(theta < alpha, "theta < alpha");

  const GlobalFamily fam = make_global_family(params.dim, alpha, b, theta);
  rb.claim_pair("l2_pair", {fam.q_hat, fam.r_hat}, PairClass::l2());
  rb.claim_pair("critical_pair", {fam.a_hat, fam.r_hat}, PairClass::hs(sc));
  rb.claim_pair("dual_critical_pair", {fam.a_tilde, fam.r_hat}, PairClass::hs_dual(sc));

  rb.identity("reciprocal identity: 1/a_hat + 1/a_tilde == 2/q_hat",
              recip(fam.a_hat) + recip(fam.a_tilde), kTwo * recip(fam.q_hat));
  rb.identity("time split: 1/q_hat' == (alpha-theta)/a_hat + 1/q_hat", conj_inv(fam.q_hat),
              (alpha - theta) / fam.a_hat + recip(fam.q_hat));
  rb.identity("dual time split: 1/a_tilde' == (alpha-theta)/a_hat + 1/a_hat",
              conj_inv(fam.a_tilde), (alpha - theta) / fam.a_hat + recip(fam.a_hat));

  rb.sign("s - s_c", s - sc, +1);
  rb.sign("(s - s_c)(alpha - theta)", (s - sc) * (alpha - theta), +1);
  const Rational window_lo = N * alpha / (kTwo - b);
  rb.sign("exterior interval nonempty: N alpha/(2-b) - 2", window_lo - kTwo, +1);

  const Rational half_dim(params.dim, 2);
  if (s < half_dim) {
    weight_split(rb, "ball_split", Region::Ball, fam.r_hat, fam.r_hat,
                 kTwo * N / (N - kTwo * s), theta,
                 "theta*r1 = 2N/(N-2s); margin reduces to theta(s - s_c)");
    rb.identity("ball margin value: N/gamma - b == theta(s - s_c)",
                theta * (kTwo - b) / alpha - (N - kTwo * s) * theta / kTwo,
                theta * (s - sc));
  } else {
    weight_split(rb, "ball_split", Region::Ball, fam.r_hat, fam.r_hat, kTwo * window_lo,
                 theta, "theta*r1 = 2 N alpha/(2-b) from the open interval (N alpha/(2-b), inf)");
  }
  const Rational margin_slope = theta * (kTwo - b) / alpha;
  const Rational embed_hi =
      s < half_dim ? kTwo * N / (N - kTwo * s) : Rational::infinity();
  weight_split(rb, "exterior_split", Region::BallComplement, fam.r_hat, fam.r_hat,
               exterior_exponent(N * theta, margin_slope, b, embed_hi), theta,
               "theta*r1 harmonically centered in its valid open interval");

  rb.theta_exponents(theta, theta);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_global_deriv_high(const ParamSet& params) {
  require(params.dim >= 4, "N >= 4");
  require_global_hypotheses(params);
  ParamSet resolved = params;
  resolved.theta = resolve_global_theta(params, true);
  const Rational theta = *resolved.theta;
  ReportBuilder rb(LemmaId::GlobalDerivHighDim, resolved);

  const Rational N(params.dim);
  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;
  const Rational sc = rb.sc();
  require(theta < alpha, "theta < alpha");

  const GlobalFamily fam = make_global_family(params.dim, alpha, b, theta);
  rb.claim_pair("l2_pair", {fam.q_hat, fam.r_hat}, PairClass::l2());
  rb.claim_pair("critical_pair", {fam.a_hat, fam.r_hat}, PairClass::hs(sc));
  rb.identity("time split: 1/q_hat' == (alpha-theta)/a_hat + 1/q_hat", conj_inv(fam.q_hat),
              (alpha - theta) / fam.a_hat + recip(fam.q_hat));

  weight_split(rb, "ball_split", Region::Ball, fam.r_hat, fam.r_hat,
               kTwo * N / (N - kTwo * s), theta);
  rb.identity("ball margin value: N/gamma - b == theta(s - s_c)",
              theta * (kTwo - b) / alpha - (N - kTwo * s) * theta / kTwo, theta * (s - sc));
  const Rational window_lo = N * alpha / (kTwo - b);
  const Rational margin_slope = theta * (kTwo - b) / alpha;
  const Rational embed_hi = kTwo * N / (N - kTwo * s);
  weight_split(rb, "exterior_split", Region::BallComplement, fam.r_hat, fam.r_hat,
               exterior_exponent(N * theta, margin_slope, b, embed_hi), theta);
  rb.sign("exterior interval nonempty: N alpha/(2-b) - 2", window_lo - kTwo, +1);

  // Shifted-weight split: the derivative of the weight pairs with the
  // Sobolev exponent r3, which exists only when s < N/r_hat.
  const Rational sobolev_gap = N * recip(fam.r_hat) - s;
  rb.sign("dimension gate: N/r_hat - s", sobolev_gap, +1);
  const Rational r3 = N / sobolev_gap;
  const Rational r2 = fam.r_hat / (alpha - theta);

  auto shifted = [&](const char* name, Region region, const Rational& theta_r1,
                     int required) {
    const Rational r1 = theta_r1 / theta;
    const Rational inv_e = recip(r1) + recip(r2) + recip(r3);
    const Rational inv_d = conj_inv(fam.r_hat) - inv_e;
    auto& sys = rb.system(name, region);
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", safe_recip(inv_e));
    rb.symbol(sys, "r1", r1);
    rb.symbol(sys, "r2", r2);
    rb.symbol(sys, "r3", r3);
    const Rational margin = N * inv_d - b - s;
    rb.identity(std::string(name) + " margin: N/d - b - s == theta(2-b)/alpha - N/r1", margin,
                margin_slope - N * recip(r1));
    if (region == Region::Ball)
      rb.identity(std::string(name) + " margin value", margin, theta * (s - sc));
    rb.sign(std::string(name) + " shifted weight integrable: N/d - b - s", margin, required);
  };
  shifted("shifted_ball_split", Region::Ball, kTwo * N / (N - kTwo * s), +1);
  shifted("shifted_exterior_split", Region::BallComplement,
          exterior_exponent(N * theta, margin_slope, b + s, embed_hi), -1);
  rb.sign("-theta s_c", -(theta * sc), -1);
  rb.sign("(s - s_c)(alpha - theta)", (s - sc) * (alpha - theta), +1);

  rb.corollary_terms({"Ds_u"});
  rb.theta_exponents(theta, theta);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_global_deriv_3d(const ParamSet& params) {
  require(params.dim == 3, "N == 3");
  require_global_hypotheses(params);

  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;
  const Rational mu = params.mu_or_default();
  require(mu > b && mu < kOne, "mu inside (b, 1)");
  const Rational eps = params.epsilon.value_or((mu - b) / kFour);
  require(eps > kZero && eps < mu - b, "epsilon inside (0, mu - b)");

  const Rational four_2b = kFour - kTwo * b;
  const Rational F = (kTwo - eps + mu - kTwo * b) / four_2b;
  const Rational theta = F * alpha;

  ParamSet resolved = params;
  resolved.mu = mu;
  resolved.epsilon = eps;
  resolved.theta = theta;
  ReportBuilder rb(LemmaId::GlobalDeriv3D, resolved);
  const Rational N(3);
  const Rational sc = rb.sc();

  rb.sign("F - 1/2", F - Rational(1, 2), +1);
  rb.sign("1 - F", kOne - F, +1);
  rb.sign("alpha - theta", alpha - theta, +1);

  const Rational D = alpha - theta + mu;
  const Rational gap = kTwo + eps - D;
  rb.sign("2 + eps - D", gap, +1);
  require(gap > kZero, "2 + eps - D > 0");
  const Rational rstar_den = four_2b * theta - gap * alpha;
  rb.sign("(4-2b)theta - (2+eps-D)alpha", rstar_den, +1);
  require(rstar_den > kZero, "(4-2b)theta - (2+eps-D)alpha > 0");
  require(four_2b - alpha > kZero, "alpha < 4 - 2b");

  const Rational k = kFour * alpha * (alpha + kOne - theta) / (four_2b - alpha);
  const Rational p = Rational(6) * alpha * (alpha + kOne - theta) / (four_2b * (alpha - theta) + alpha);
  const Rational l_den = alpha * (Rational(3) * alpha - kTwo + kTwo * b) -
                         theta * (Rational(3) * alpha - kFour + kTwo * b);
  require(l_den > kZero, "l-denominator positive");
  const Rational l = kFour * alpha * (alpha + kOne - theta) / l_den;
  const Rational m = kFour * D / (D - eps);
  const Rational n = Rational(6) * D / (kTwo * D + eps);
  const Rational a_star = kFour * theta / gap;
  const Rational r_star = Rational(6) * alpha * theta / rstar_den;

  rb.claim_pair("anchor", {kTwo, Rational(6)}, PairClass::l2());
  rb.claim_pair("l2_pair", {l, p}, PairClass::l2());
  rb.claim_pair("l2_pair_mu", {m, n}, PairClass::l2());
  rb.claim_pair("critical_pair", {k, p}, PairClass::hs(sc));
  rb.claim_pair("critical_pair_mu", {a_star, r_star}, PairClass::hs(sc));

  rb.identity("time split: 1/2' == (alpha-theta)/k + 1/l", Rational(1, 2),
              (alpha - theta) / k + recip(l));
  rb.identity("time split (mu side): 1/2' == theta/a* + D/m", Rational(1, 2),
              theta / a_star + D / m);

  // Chain-rule part, weight |x|^-b against the radius exponent p.
  const Rational margin_slope = theta * (kTwo - b) / alpha;
  const Rational embed_hi = Rational(6) / (Rational(3) - kTwo * s);
  const Rational exterior_x = exterior_exponent(Rational(3) * theta, margin_slope, b, embed_hi);
  auto chain = [&](const char* name, Region region, const Rational& theta_r1) {
    const Rational r1 = theta_r1 / theta;
    const Rational inv_gamma = Rational(5, 6) - recip(r1) - (alpha + kOne - theta) * recip(p);
    auto& sys = rb.system(name, region);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    const Rational margin = N * inv_gamma - b;
    rb.identity(std::string(name) + " margin: 3/gamma - b == theta(2-b)/alpha - 3/r1", margin,
                margin_slope - Rational(3) * recip(r1));
    rb.sign(std::string(name) + " weight integrable: 3/gamma - b", margin,
            region == Region::Ball ? +1 : -1);
  };
  chain("ball_split", Region::Ball, embed_hi);
  chain("exterior_split", Region::BallComplement, exterior_x);

  // Shifted weight |x|^-(b+s), exterior: same Lebesgue frame as the chain part.
  {
    const Rational r1 = exterior_x / theta;
    const Rational inv_e = recip(r1) + (alpha - theta) * recip(p) + recip(p);
    const Rational inv_d = Rational(5, 6) - inv_e;
    auto& sys = rb.system("shifted_exterior_split", Region::BallComplement);
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", safe_recip(inv_e));
    rb.symbol(sys, "r1", r1);
    rb.identity("shifted exterior margin: 3/d - b == theta(2-b)/alpha - 3/r1",
                N * inv_d - b, margin_slope - Rational(3) * recip(r1));
    rb.sign("shifted exterior integrable: 3/d - b - s", N * inv_d - b - s, -1);
  }
  // Shifted weight on the ball: the mu-interpolated frame.
  {
    const Rational r1 = r_star / theta;
    const Rational inner_gap = Rational(3) * recip(n) - s;
    rb.sign("mu-frame Sobolev gap: 3/n - s", inner_gap, +1);
    const Rational r2 = Rational(3) / inner_gap / (alpha - theta);
    const Rational r3 = Rational(3) / inner_gap / mu;
    const Rational r4 = Rational(6) / (Rational(3) - kTwo * s) / (kOne - mu);
    const Rational inv_e = recip(r1) + recip(r2) + recip(r3) + recip(r4);
    const Rational inv_d = Rational(5, 6) - inv_e;
    auto& sys = rb.system("shifted_ball_split", Region::Ball,
                          "(1-mu) r4 = 6/(3-2s); r* = theta r1");
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", safe_recip(inv_e));
    rb.symbol(sys, "r1", r1);
    rb.symbol(sys, "r2", r2);
    rb.symbol(sys, "r3", r3);
    rb.symbol(sys, "r4", r4);
    const Rational margin = N * inv_d - b - s;
    rb.identity("shifted ball margin: 3/d - b - s == (s - s_c)(alpha - theta)", margin,
                (s - sc) * (alpha - theta));
    rb.sign("shifted ball integrable: 3/d - b - s", margin, +1);
  }
  rb.sign("-theta s_c", -(theta * sc), -1);
  rb.sign("(s - s_c)(alpha - theta)", (s - sc) * (alpha - theta), +1);

  rb.corollary_terms({"Ds_u", "u", "mu_Ds_power"});
  rb.theta_exponents(theta, theta);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_global_deriv_1d(const ParamSet& params) {
  require(params.dim == 1, "N == 1");
  require(params.s < Rational(1, 2), "s < 1/2");
  require_global_hypotheses(params);
  ParamSet resolved = params;
  resolved.theta = resolve_global_theta(params, true);
  const Rational theta = *resolved.theta;
  ReportBuilder rb(LemmaId::GlobalDeriv1D, resolved);

  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;
  const Rational sc = rb.sc();
  require(theta < alpha, "theta < alpha");
  const Rational four_2b = kFour - kTwo * b;

  const Rational q0 = kTwo * alpha / (alpha * b + theta * (kTwo - b));
  const Rational r0_den = alpha * (kOne - kTwo * b) - theta * four_2b;
  require(r0_den > kZero, "theta outside window: r0-denominator positive");
  const Rational r0 = kTwo * alpha / r0_den;
  const Rational kstar_den = four_2b * (alpha - theta + kOne) - alpha;
  require(kstar_den > kZero, "theta outside window: k*-denominator positive");
  const Rational k_star = kFour * alpha * (alpha + kOne - theta) / kstar_den;
  const Rational l_star = kFour * (alpha + kOne - theta) / (alpha - theta);
  const Rational p_star = kTwo * (alpha + kOne - theta);

  rb.claim_pair("l2_time_anchor", {q0, r0}, PairClass::l2());
  rb.claim_pair("l2_pair", {l_star, p_star}, PairClass::l2());
  rb.claim_pair("critical_pair", {k_star, p_star}, PairClass::hs(sc));
  rb.sign("1 - 2 s_c", kOne - kTwo * sc, +1);
  const Rational q_sup = kFour / (kOne - kTwo * sc);
  rb.claim_pair("critical_sup_pair", {q_sup, Rational::infinity()}, PairClass::hs(sc));

  rb.identity("time split: 1/q0' == (alpha-theta)/k* + 1/l*", conj_inv(q0),
              (alpha - theta) / k_star + recip(l_star));
  rb.identity("(alpha-theta) q0' == 4/(1-2s_c)", (alpha - theta) / conj_inv(q0), q_sup);

  // Chain-rule weight split against p*.
  const Rational margin_slope = theta * (kTwo - b) / alpha;
  const Rational embed_hi = kTwo / (kOne - kTwo * s);
  auto chain = [&](const char* name, Region region, const Rational& theta_r1,
                   const std::optional<Rational>& expect, int required) {
    const Rational r1 = theta_r1 / theta;
    const Rational inv_gamma =
        conj_inv(r0) - recip(r1) - (alpha + kOne - theta) * recip(p_star);
    auto& sys = rb.system(name, region);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    const Rational margin = inv_gamma - b;
    rb.identity(std::string(name) + " margin: 1/gamma - b == theta(2-b)/alpha - 1/r1", margin,
                margin_slope - recip(r1));
    if (expect) rb.identity(std::string(name) + " margin value", margin, *expect);
    rb.sign(std::string(name) + " weight integrable: 1/gamma - b", margin, required);
  };
  chain("ball_split", Region::Ball, embed_hi, theta * (s - sc), +1);
  chain("exterior_split", Region::BallComplement,
        exterior_exponent(theta, margin_slope, b, embed_hi), std::nullopt, -1);

  // Shifted weight |x|^-(b+s), paired with the sup norm in space.
  auto shifted = [&](const char* name, Region region, const Rational& theta1_e,
                     const std::optional<Rational>& expect_shift, int required) {
    const Rational e = theta1_e / (theta + kOne);
    const Rational inv_d = conj_inv(r0) - recip(e);
    auto& sys = rb.system(name, region);
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", e);
    rb.identity(std::string(name) + " margin: 1/d - b == 1/2 + theta(2-b)/alpha - 1/e",
                inv_d - b, Rational(1, 2) + margin_slope - recip(e));
    if (expect_shift)
      rb.identity(std::string(name) + " margin value", inv_d - b - s, *expect_shift);
    rb.sign(std::string(name) + " shifted weight integrable: 1/d - b - s", inv_d - b - s,
            required);
  };
  shifted("shifted_ball_split", Region::Ball, embed_hi, theta * (s - sc), +1);
  shifted("shifted_exterior_split", Region::BallComplement,
          exterior_exponent(theta + kOne, Rational(1, 2) - s + margin_slope, b + s, embed_hi),
          std::nullopt, -1);

  rb.sign("-theta s_c", -(theta * sc), -1);
  rb.sign("(s - s_c)(alpha - theta)", (s - sc) * (alpha - theta), +1);

  rb.corollary_terms({"Ds_u", "u_Hs"});
  rb.theta_exponents(theta, theta);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_global_deriv_2d(const ParamSet& params) {
  require(params.dim == 2, "N == 2");
  require(params.s < kOne, "s < 1");
  require_global_hypotheses(params);
  ParamSet resolved = params;
  resolved.theta = resolve_global_theta(params, true);
  const Rational theta = *resolved.theta;
  const Rational eps = params.eps();
  ReportBuilder rb(LemmaId::GlobalDeriv2D, resolved);

  const Rational N(2);
  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;
  const Rational sc = rb.sc();
  require(theta < alpha, "theta < alpha");
  require(eps < Rational(1, 2), "epsilon < 1/2");
  require(kTwo - b - kTwo * eps * alpha > kZero,
          "epsilon too large: 2 - b - 2 eps alpha must stay positive");
  require(recip(eps) >= kTwo / (kOne - sc),
          "epsilon too large: 1/eps below the critical window");

  const Rational spread = kTwo * eps * (alpha - theta);
  const Rational qt = kTwo * alpha / (alpha * (b + spread) + theta * (kTwo - b));
  const Rational rt_den = alpha * (kOne - b - spread) - theta * (kTwo - b);
  require(rt_den > kZero, "theta outside window: r~-denominator positive");
  const Rational rt = kTwo * alpha / rt_den;
  const Rational l0 = kTwo * (alpha + kOne - theta) / ((alpha - theta) * (kOne - kTwo * eps));
  const Rational p0 = kTwo * (alpha + kOne - theta) / (kOne + spread);
  const Rational k0_den = alpha * (kOne - b - spread) + (kTwo - b) * (kOne - theta);
  require(k0_den > kZero, "theta outside window: k0-denominator positive");
  const Rational k0 = kTwo * alpha * (alpha + kOne - theta) / k0_den;

  rb.claim_pair("l2_time_anchor", {qt, rt}, PairClass::l2());
  rb.claim_pair("l2_pair", {l0, p0}, PairClass::l2());
  rb.claim_pair("critical_pair", {k0, p0}, PairClass::hs(sc));
  const Rational q_eps = kTwo * alpha / (kTwo - b - kTwo * eps * alpha);
  rb.claim_pair("critical_eps_pair", {q_eps, recip(eps)}, PairClass::hs(sc));

  rb.identity("time split: 1/q~' == (alpha-theta)/k0 + 1/l0", conj_inv(qt),
              (alpha - theta) / k0 + recip(l0));
  rb.identity("(alpha-theta) q~' == 2 alpha/(2 - b - 2 eps alpha)",
              (alpha - theta) / conj_inv(qt), q_eps);

  const Rational margin_slope = theta * (kTwo - b) / alpha;
  const Rational embed_hi = kTwo / (kOne - s);
  auto chain = [&](const char* name, Region region, const Rational& theta_r1,
                   const std::optional<Rational>& expect, int required) {
    const Rational r1 = theta_r1 / theta;
    const Rational inv_gamma = conj_inv(rt) - recip(r1) - (alpha + kOne - theta) * recip(p0);
    auto& sys = rb.system(name, region);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    const Rational margin = N * inv_gamma - b;
    rb.identity(std::string(name) + " margin: 2/gamma - b == theta(2-b)/alpha - 2/r1", margin,
                margin_slope - kTwo * recip(r1));
    if (expect) rb.identity(std::string(name) + " margin value", margin, *expect);
    rb.sign(std::string(name) + " weight integrable: 2/gamma - b", margin, required);
  };
  chain("ball_split", Region::Ball, embed_hi, theta * (s - sc), +1);
  chain("exterior_split", Region::BallComplement,
        exterior_exponent(kTwo * theta, margin_slope, b, embed_hi), std::nullopt, -1);

  // Shifted weight: u^(alpha-theta) sits at the Lebesgue exponent 1/eps.
  auto shifted = [&](const char* name, Region region, const Rational& theta1_r1,
                     const std::optional<Rational>& expect_shift, int required) {
    const Rational r1 = theta1_r1 / (theta + kOne);
    const Rational inv_e = recip(r1) + eps * (alpha - theta);
    const Rational inv_d = conj_inv(rt) - inv_e;
    auto& sys = rb.system(name, region, "(alpha-theta) r2 = 1/eps");
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", safe_recip(inv_e));
    rb.symbol(sys, "r1", r1);
    rb.identity(std::string(name) + " margin: 2/d == 1 + b + theta(2-b)/alpha - 2/r1",
                N * inv_d, kOne + b + margin_slope - kTwo * recip(r1));
    if (expect_shift)
      rb.identity(std::string(name) + " margin value", N * inv_d - b - s, *expect_shift);
    rb.sign(std::string(name) + " shifted weight integrable: 2/d - b - s", N * inv_d - b - s,
            required);
  };
  shifted("shifted_ball_split", Region::Ball, embed_hi, theta * (s - sc), +1);
  shifted("shifted_exterior_split", Region::BallComplement,
          exterior_exponent(kTwo * (theta + kOne), kOne - s + margin_slope, b + s, embed_hi),
          std::nullopt, -1);

  rb.sign("-theta s_c", -(theta * sc), -1);
  rb.sign("(s - s_c)(alpha - theta)", (s - sc) * (alpha - theta), +1);

  rb.corollary_terms({"Ds_u", "u_Hs"});
  rb.theta_exponents(theta, theta);
  rb.finalize_epsilon();
  return rb.take();
}

LemmaReport build_global_deriv_half(const ParamSet& params) {
  require(params.dim <= 2, "N <= 2");
  require(params.s == Rational(params.dim, 2), "s == N/2");
  require_global_hypotheses(params);
  ParamSet resolved = params;
  resolved.theta = resolve_global_theta(params, true);
  const Rational theta = *resolved.theta;
  ReportBuilder rb(LemmaId::GlobalDerivHalfDim, resolved);

  const Rational N(params.dim);
  const Rational &alpha = params.alpha, &b = params.b, &s = params.s;
  const Rational sc = rb.sc();
  require(theta < alpha, "theta < alpha");

  const Rational w = alpha + kOne - theta;  // recurring block
  const Rational a_bar = kTwo * w / (kTwo - sc);
  const Rational q_bar = kTwo * w / (kTwo + sc * (alpha - theta));
  const Rational r_den = N * w - kTwo * sc * (alpha - theta) - kFour;
  require(r_den > kZero, "theta outside window: r-denominator positive");
  const Rational r_bar = kTwo * N * w / r_den;
  const Rational k_den = kTwo * (alpha - theta) * (kOne - sc) - sc;
  require(k_den > kZero, "theta outside window: k-denominator positive");
  const Rational k_bar = kTwo * w * w / k_den;
  const Rational l_den = kTwo * (alpha - theta) * (kOne - sc) + sc * (w * w - kOne);
  require(l_den > kZero, "theta outside window: l-denominator positive");
  const Rational l_bar = kTwo * w * w / l_den;
  const Rational p_den =
      (N - kTwo * sc) * w * w - kFour * (alpha - theta) * (kOne - sc) + kTwo * sc;
  require(p_den > kZero, "theta outside window: p-denominator positive");
  const Rational p_bar = kTwo * N * w * w / p_den;

  rb.claim_pair("l2_time_anchor", {q_bar, r_bar}, PairClass::l2());
  rb.claim_pair("l2_pair", {l_bar, p_bar}, PairClass::l2());
  rb.claim_pair("critical_time_anchor", {a_bar, r_bar}, PairClass::hs(sc));
  rb.claim_pair("critical_pair", {k_bar, p_bar}, PairClass::hs(sc));

  rb.identity("a_bar == (alpha - theta) q_bar'", a_bar, (alpha - theta) / conj_inv(q_bar));
  rb.identity("time split: 1/q_bar' == (alpha-theta)/k_bar + 1/l_bar", conj_inv(q_bar),
              (alpha - theta) / k_bar + recip(l_bar));

  const Rational window_lo = N * alpha / (kTwo - b);
  rb.sign("interval nonempty: N alpha/(2-b) - 2", window_lo - kTwo, +1);
  const Rational margin_slope = theta * (kTwo - b) / alpha;

  auto chain = [&](const char* name, Region region, const Rational& theta_r1, int required) {
    const Rational r1 = theta_r1 / theta;
    const Rational inv_gamma = conj_inv(r_bar) - recip(r1) - w * recip(p_bar);
    auto& sys = rb.system(name, region);
    rb.symbol(sys, "gamma", safe_recip(inv_gamma));
    rb.symbol(sys, "r1", r1);
    const Rational margin = N * inv_gamma - b;
    rb.identity(std::string(name) + " margin: N/gamma - b == theta(2-b)/alpha - N/r1", margin,
                margin_slope - N * recip(r1));
    rb.sign(std::string(name) + " weight integrable: N/gamma - b", margin, required);
  };
  chain("ball_split", Region::Ball, kTwo * window_lo, +1);
  chain("exterior_split", Region::BallComplement,
        exterior_exponent(N * theta, margin_slope, b, Rational::infinity()), -1);

  auto shifted = [&](const char* name, Region region, const Rational& theta_r1,
                     int required) {
    const Rational r1 = theta_r1 / theta;
    const Rational inv_e = recip(r1) + (alpha - theta) * recip(r_bar);
    const Rational inv_d = conj_inv(r_bar) - inv_e;
    auto& sys = rb.system(name, region);
    rb.symbol(sys, "d", safe_recip(inv_d));
    rb.symbol(sys, "e", safe_recip(inv_e));
    rb.symbol(sys, "r1", r1);
    const Rational margin = N * inv_d - b - s;
    rb.identity(std::string(name) + " margin: N/d - b - s == theta(2-b)/alpha - N/r1", margin,
                margin_slope - N * recip(r1));
    rb.sign(std::string(name) + " shifted weight integrable: N/d - b - s", margin, required);
    rb.sign(std::string(name) + " embedding range: (theta+1) r1 - 2",
            (theta + kOne) * r1 - kTwo, +1);
  };
  shifted("shifted_ball_split", Region::Ball, kTwo * window_lo, +1);
  shifted("shifted_exterior_split", Region::BallComplement,
          exterior_exponent(N * theta, margin_slope, b + s, Rational::infinity()), -1);

  rb.sign("(s - s_c)(alpha - theta)", (s - sc) * (alpha - theta), +1);

  rb.corollary_terms({"Ds_u", "u_Hs"});
  rb.theta_exponents(theta, theta);
  rb.finalize_epsilon();
  return rb.take();
}

}  // namespace inls::detail
