#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inls/admissible.hpp"

#include <random>

using namespace inls;

namespace {
const Rational inf = Rational::infinity();
Pair pair_of(Rational q, Rational r) { return {std::move(q), std::move(r)}; }
}  // namespace

TEST_CASE("critical index evaluates the scaling formula exactly") {
  // mass-critical: alpha = (4-2b)/N gives index 0
  CHECK(critical_index(3, Rational(2, 3), Rational(1)) == Rational(0));
  // energy-critical: alpha = (4-2b)/(N-2) gives index 1
  CHECK(critical_index(3, Rational(2), Rational(1)) == Rational(1));
  CHECK(critical_index(3, Rational(2), Rational(0)) == Rational(1, 2));
  CHECK(critical_index(2, Rational(2), Rational(0)) == Rational(0));
  CHECK_THROWS_AS(critical_index(3, Rational(0), Rational(1)), std::domain_error);

  // exact rational identity across dimensions and weights
  for (int n = 3; n <= 6; ++n) {
    for (long long bn = 1; bn < 8; ++bn) {
      const Rational b(bn, 4);
      if (!(b < Rational(2))) continue;
      const Rational four_2b = Rational(4) - Rational(2) * b;
      CHECK(critical_index(n, four_2b / Rational(n), b) == Rational(0));
      CHECK(critical_index(n, four_2b / Rational(n - 2), b) == Rational(1));
    }
  }
}

TEST_CASE("alpha_upper, b_upper and two_star windows") {
  CHECK(alpha_upper(3, Rational(1), Rational(1)) == Rational(2));
  CHECK(alpha_upper(1, Rational(1, 2), Rational(1, 4)) == inf);
  CHECK(alpha_upper(4, Rational(1), Rational(0)) == Rational(2));
  CHECK_THROWS_AS(alpha_upper(1, Rational(2, 3), Rational(0)), std::domain_error);

  CHECK(b_upper(1) == Rational(1, 3));
  CHECK(b_upper(2) == Rational(2, 3));
  CHECK(b_upper(3) == Rational(1));
  CHECK(b_upper(5) == Rational(2));

  CHECK(two_star(3, Rational(1)) == Rational(2));
  CHECK(two_star(2, Rational(1, 3)) == inf);
  CHECK(two_star(4, Rational(0)) == Rational(2));
}

TEST_CASE("plus conjugate satisfies its defining identity exactly") {
  CHECK(plus_conjugate(Rational(2), Rational(1, 2)) == Rational(10));
  CHECK(plus_conjugate(Rational(4), Rational(1)) == Rational(20));
  // 1/a == 1/(a+)' + 1/(a+eps) exactly, for random a > 1 and eps > 0
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> num(1, 60);
  for (int i = 0; i < 200; ++i) {
    const Rational a = Rational(1) + Rational(num(rng), 7);
    const Rational eps(num(rng), 997);
    const Rational conj = plus_conjugate(a, eps);
    CHECK(conj.reciprocal() + (a + eps).reciprocal() == a.reciprocal());
    // strictly larger for smaller eps
    CHECK(plus_conjugate(a, eps / Rational(2)) > conj);
  }
  CHECK_THROWS_AS(plus_conjugate(Rational(2), Rational(0)), std::domain_error);
}

TEST_CASE("dual_pair conjugates componentwise and is an involution") {
  CHECK(dual_pair(pair_of(inf, Rational(2))) == pair_of(Rational(1), Rational(2)));
  CHECK(dual_pair(pair_of(Rational(2), Rational(6))) == pair_of(Rational(2), Rational(6, 5)));
  CHECK(dual_pair(pair_of(Rational(8, 3), Rational(4))) ==
        pair_of(Rational(8, 5), Rational(4, 3)));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> num(0, 400);
  for (int i = 0; i < 300; ++i) {
    Pair p{Rational(1) + Rational(num(rng), 13), Rational(1) + Rational(num(rng), 13)};
    if (i % 17 == 0) p.q = inf;
    if (i % 23 == 0) p.r = inf;
    const Pair d = dual_pair(p);
    CHECK(dual_pair(d) == p);
    if (!p.q.is_infinite() && p.q != Rational(1))
      CHECK(p.q.reciprocal() + d.q.reciprocal() == Rational(1));
  }
}

TEST_CASE("singular weight integrability criterion") {
  CHECK(singular_weight_integrable(Rational(3), Rational(1, 2), 3, Region::Ball));
  CHECK(singular_weight_integrable(Rational(3), Rational(2), 3, Region::BallComplement));
  // logarithmic divergence at N/gamma == b, both regions
  CHECK_FALSE(singular_weight_integrable(Rational(6), Rational(1, 2), 3, Region::Ball));
  CHECK_FALSE(
      singular_weight_integrable(Rational(6), Rational(1, 2), 3, Region::BallComplement));

  // antitone in b on the ball, monotone on the complement
  const Rational gamma(5, 2);
  for (int n = 1; n <= 6; ++n) {
    bool prev_ball = true, prev_comp = false;
    for (long long bn = 1; bn <= 40; ++bn) {
      const bool ball = singular_weight_integrable(gamma, Rational(bn, 8), n, Region::Ball);
      const bool comp =
          singular_weight_integrable(gamma, Rational(bn, 8), n, Region::BallComplement);
      CHECK((prev_ball || !ball));   // once false, stays false
      CHECK((!prev_comp || comp));   // once true, stays true
      prev_ball = ball;
      prev_comp = comp;
    }
  }
}

TEST_CASE("classify_pair: L2 scaling line with closed window") {
  for (int n = 1; n <= 6; ++n)
    CHECK(classify_pair(pair_of(inf, Rational(2)), n, Rational(0)) == PairClass::l2());
  CHECK(classify_pair(pair_of(Rational(2), Rational(6)), 3, Rational(0)) == PairClass::l2());
  CHECK(classify_pair(pair_of(Rational(8, 3), Rational(4)), 3, Rational(0)) ==
        PairClass::l2());
  // scaling violation
  CHECK_FALSE(classify_pair(pair_of(Rational(2), Rational(7)), 3, Rational(0)).admissible());
  // above the endpoint in 3d
  CHECK_FALSE(classify_pair(pair_of(Rational(2), Rational(13, 2)), 3, Rational(0)).admissible());
  // r = inf excluded in dimension 2, included in dimension 1
  CHECK_FALSE(classify_pair(pair_of(Rational(1), inf), 2, Rational(0)).admissible());
  CHECK(classify_pair(pair_of(Rational(4), inf), 1, Rational(0)) == PairClass::l2());
  // below-1 exponents rejected
  CHECK_FALSE(classify_pair(pair_of(Rational(1, 2), Rational(2)), 3, Rational(0)).admissible());
}

TEST_CASE("classify_pair: critical windows honor the eps-shrunk endpoints") {
  const Rational s(1, 2);
  const Rational eps(1, 1000);
  // N=3, s=1/2: window [3, 6-eps]; scaling 2/q = 3/2 - 3/r - 1/2.
  auto hs_pair = [&](const Rational& r) {
    const Rational inv_q = (Rational(1) - Rational(3) * r.reciprocal()) / Rational(2);
    return pair_of(inv_q.is_zero() ? inf : inv_q.reciprocal(), r);
  };
  CHECK(classify_pair(hs_pair(Rational(3)), 3, s, eps) == PairClass::hs(s));
  CHECK(classify_pair(hs_pair(Rational(4)), 3, s, eps) == PairClass::hs(s));
  CHECK(classify_pair(hs_pair(Rational(6) - eps), 3, s, eps) == PairClass::hs(s));
  // the raw open endpoint itself is rejected
  CHECK_FALSE(classify_pair(hs_pair(Rational(6)), 3, s, eps).admissible());

  // dual window: lower endpoint open, realized as lo + eps
  auto dual_pair_at = [&](const Rational& r) {
    const Rational inv_q =
        (Rational(3, 2) - Rational(3) * r.reciprocal() + s) / Rational(2);
    return pair_of(inv_q.reciprocal(), r);
  };
  CHECK_FALSE(classify_pair(dual_pair_at(Rational(3)), 3, s, eps).admissible());
  CHECK(classify_pair(dual_pair_at(Rational(3) + eps), 3, s, eps) == PairClass::hs_dual(s));

  // no window at s >= N/2 (the scaling line degenerates to (inf, inf))
  CHECK_FALSE(classify_pair(pair_of(inf, inf), 1, s, eps).admissible());
}

TEST_CASE("classified pairs satisfy the scaling relation exactly") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> rn(2, 200);
  const Rational eps(1, 1000);
  int found = 0;
  for (int i = 0; i < 4000; ++i) {
    const int n = 1 + static_cast<int>(rn(rng)) % 6;
    const Rational s(rn(rng) % 3, 4);
    const Rational r = Rational(rn(rng), 16);
    const Rational scale = Rational(n, 2) - Rational(n) / r - s;
    if (!scale.is_positive()) continue;
    const Pair p = pair_of(Rational(2) / scale, r);
    const PairClass c = classify_pair(p, n, s, eps);
    if (c.kind == AdmissibleKind::Hs) {
      ++found;
      CHECK(Rational(2) * p.q.reciprocal() ==
            Rational(n, 2) - Rational(n) * p.r.reciprocal() - s);
    }
  }
  CHECK(found > 50);
}

TEST_CASE("pair class string form round-trips") {
  CHECK(PairClass::parse("L2Admissible") == PairClass::l2());
  CHECK(PairClass::parse("HsAdmissible(9/10)") == PairClass::hs(Rational(9, 10)));
  CHECK(PairClass::parse("HsDualAdmissible(1/16)") == PairClass::hs_dual(Rational(1, 16)));
  CHECK(PairClass::parse(PairClass::hs(Rational(3, 8)).str()) == PairClass::hs(Rational(3, 8)));
}
