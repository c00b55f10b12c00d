#include "lemmas_detail.hpp"

#include <vector>

namespace inls {

namespace {

using detail::kFour;
using detail::kOne;
using detail::kTwo;
using detail::kZero;

/// Polynomial in theta with exact rational coefficients, degree <= 2 here.
struct Poly {
  std::vector<Rational> c;  // c[0] + c[1] t + c[2] t^2

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  int degree() const {
    int d = static_cast<int>(c.size()) - 1;
    while (d > 0 && c[d] == kZero) --d;
    return d;
  }
};

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}
Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}
Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}
Poly operator*(const Rational& k, const Poly& a) {
  Poly r = a;
  for (auto& x : r.c) x *= k;
  return r;
}
Poly constant(Rational v) { return Poly{{std::move(v)}}; }
Poly theta_term() { return Poly{{Rational(0), Rational(1)}}; }

struct Constraint {
  std::string name;
  Poly value;  // must stay positive on (0, theta*)
};

/// Exact square root of a nonnegative rational if it is one, else nullopt.
std::optional<Rational> rational_sqrt(const Rational& x) {
  using boost::multiprecision::sqrt;
  if (x.is_negative()) return std::nullopt;
  BigInt ns = sqrt(x.numerator());
  BigInt ds = sqrt(x.denominator());
  if (ns * ns != x.numerator() || ds * ds != x.denominator()) return std::nullopt;
  return Rational(ns, ds);
}

/// Certified rational lower bound for the root of f inside (lo, hi] with
/// f(lo) > 0 >= f(hi); exact sign evaluations throughout.
Rational bisect_root(const Poly& f, Rational lo, Rational hi) {
  for (int i = 0; i < 64; ++i) {
    Rational mid = (lo + hi) / kTwo;
    if (f.eval(mid) > kZero)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// First theta > 0 at which the constraint stops being positive (infinity if
/// it never does). Requires value(0+) > 0; throws HypothesisError otherwise.
Rational positivity_bound(const Constraint& cons) {
  Poly f = cons.value;
  Rational at0 = f.eval(kZero);
  if (at0 == kZero && f.degree() >= 1) {
    // Factor one theta out of constraints vanishing at the origin.
    f.c.erase(f.c.begin());
    at0 = f.eval(kZero);
  }
  const int deg = f.degree();
  if (!(at0 > kZero))
    throw HypothesisError("no positive theta window: " + cons.name +
                          " fails already at theta = 0");
  if (deg == 0) return Rational::infinity();
  if (deg == 1) {
    const Rational& slope = f.c[1];
    if (!slope.is_negative()) return Rational::infinity();
    return -at0 / slope;
  }
  const Rational a = f.c[2], b = f.c[1], c = f.c[0];
  const Rational disc = b * b - kFour * a * c;
  if (a > kZero) {
    // Roots share the sign of -b/a; positive roots need b < 0 and disc >= 0.
    if (!b.is_negative() || disc < kZero) return Rational::infinity();
    const Rational vertex = -b / (kTwo * a);
    if (disc == kZero) return vertex;
    if (auto root = rational_sqrt(disc)) return (-b - *root) / (kTwo * a);
    return bisect_root(f, kZero, vertex);
  }
  // a < 0: exactly one positive crossing, at (-b - sqrt(disc))/(2a).
  if (auto root = rational_sqrt(disc)) return (-b - *root) / (kTwo * a);
  Rational hi = kOne;
  while (f.eval(hi) > kZero) hi *= kTwo;
  return bisect_root(f, kZero, hi);
}

void add(std::vector<Constraint>& v, std::string name, Poly p) {
  v.push_back({std::move(name), std::move(p)});
}

/// Range-window constraints for a ratio num/den against the raw endpoints of
/// the class windows; open endpoints enter strictly, without the shrink.
void add_ratio_windows(std::vector<Constraint>& v, const std::string& tag, const Poly& num,
                       const Poly& den, int dim, const Rational& sc, bool l2, bool hs,
                       bool dual) {
  if (l2) {
    add(v, tag + " >= 2", num - kTwo * den);
    if (dim >= 3) add(v, tag + " <= 2N/(N-2)", Rational(2 * dim, dim - 2) * den - num);
  }
  const Rational crit_lo = Rational(2 * dim) / (Rational(dim) - kTwo * sc);
  if (hs) {
    add(v, tag + " >= 2N/(N-2s_c)", num - crit_lo * den);
    if (dim >= 3) add(v, tag + " < 2N/(N-2)", Rational(2 * dim, dim - 2) * den - num);
  }
  if (dual) {
    add(v, tag + " > 2N/(N-2s_c)", num - crit_lo * den);
    if (dim >= 3) add(v, tag + " < 2N/(N-2)", Rational(2 * dim, dim - 2) * den - num);
  }
}

std::vector<Constraint> base_constraints(const ParamSet& p) {
  std::vector<Constraint> v;
  const Rational N(p.dim);
  const Rational &alpha = p.alpha, &b = p.b;
  const Rational sc = p.s_critical();
  const Rational four_2b = kFour - kTwo * b;
  const Poly t = theta_term();

  add(v, "theta < alpha", constant(alpha) - t);

  const Poly q_num = constant(kFour * alpha * (alpha + kTwo)) - kFour * alpha * t;
  const Poly q_den =
      constant(alpha * (N * alpha + kTwo * b)) - (N * alpha - kFour + kTwo * b) * t;
  const Poly r_num = constant(N * alpha * (alpha + kTwo)) - N * alpha * t;
  const Poly r_den = constant(alpha * (N - b)) - (kTwo - b) * t;
  const Poly at_num = constant(kTwo * alpha * (alpha + kTwo)) - kTwo * alpha * t;
  const Poly at_den = constant(alpha * (N * (alpha + kOne) - kTwo + kTwo * b) - four_2b) +
                      (four_2b - alpha * N) * t;

  add(v, "q-denominator", q_den);
  add(v, "r-denominator", r_den);
  add(v, "dual denominator", at_den);
  add(v, "q_hat >= 1", q_num - q_den);
  add(v, "a_tilde >= 1", at_num - at_den);

  add_ratio_windows(v, "r_hat", r_num, r_den, p.dim, sc, true, true, true);
  return v;
}

void high_dim_constraints(const ParamSet& p, std::vector<Constraint>& v) {
  const Rational N(p.dim);
  const Poly t = theta_term();
  const Poly r_num = constant(N * p.alpha * (p.alpha + kTwo)) - N * p.alpha * t;
  const Poly r_den = constant(p.alpha * (N - p.b)) - (kTwo - p.b) * t;
  add(v, "N/r_hat > s", N * r_den - p.s * r_num);
}

void one_dim_constraints(const ParamSet& p, std::vector<Constraint>& v) {
  const Rational &alpha = p.alpha, &b = p.b;
  const Rational four_2b = kFour - kTwo * b;
  const Rational sc = p.s_critical();
  const Poly t = theta_term();

  add(v, "r0-denominator", constant(alpha * (kOne - kTwo * b)) - four_2b * t);
  add(v, "k*-denominator", constant(four_2b * (alpha + kOne) - alpha) - four_2b * t);
  add(v, "q0 >= 1", constant(kTwo * alpha - alpha * b) - (kTwo - b) * t);
  add(v, "k* >= 1",
      constant(kFour * alpha * (alpha + kOne) - four_2b * (alpha + kOne) + alpha) -
          (kFour * alpha - four_2b) * t);
  // (k*, p*) window: p* = 2(alpha+1-theta) >= 2/(1-2s_c) = alpha/(2-b)
  add(v, "p* above critical window",
      constant(kTwo * (alpha + kOne) - alpha / (kTwo - b)) - kTwo * t);
  (void)sc;
}

void two_dim_constraints(const ParamSet& p, std::vector<Constraint>& v) {
  const Rational &alpha = p.alpha, &b = p.b;
  const Rational eps = p.eps();
  const Rational sc = p.s_critical();
  const Poly t = theta_term();

  const Poly rt_den =
      constant(alpha * (kOne - b) - kTwo * eps * alpha * alpha) + (kTwo * eps * alpha - (kTwo - b)) * t;
  add(v, "r~-denominator", rt_den);
  const Poly k0_den = rt_den + constant(kTwo - b);
  add(v, "k0-denominator", k0_den);
  add(v, "q~ >= 1",
      constant(kTwo * alpha - alpha * b - kTwo * eps * alpha * alpha) +
          (kTwo * eps * alpha - (kTwo - b)) * t);
  add(v, "k0 >= 1", constant(kTwo * alpha * (alpha + kOne)) - kTwo * alpha * t - k0_den);

  const Poly p0_num = constant(kTwo * (alpha + kOne)) - kTwo * t;
  const Poly p0_den = constant(kOne + kTwo * eps * alpha) - kTwo * eps * t;
  add(v, "p0-denominator", p0_den);
  add(v, "p0 >= 2", p0_num - kTwo * p0_den);
  add(v, "p0 above critical window", (kTwo - b) * p0_num - kTwo * alpha * p0_den);
  (void)sc;
}

void half_dim_constraints(const ParamSet& p, std::vector<Constraint>& v) {
  const Rational N(p.dim);
  const Rational &alpha = p.alpha, &b = p.b;
  const Rational sc = p.s_critical();
  const Poly t = theta_term();
  const Poly w = constant(alpha + kOne) - t;       // alpha + 1 - theta
  const Poly u = constant(alpha) - t;              // alpha - theta
  const Poly w2 = w * w;

  const Poly r_den = N * w - kTwo * sc * u - constant(kFour);
  add(v, "r_bar-denominator", r_den);
  const Poly k_den = kTwo * (kOne - sc) * u - constant(sc);
  add(v, "k_bar-denominator", k_den);
  const Poly l_den = kTwo * (kOne - sc) * u + sc * w2 - constant(sc);
  add(v, "l_bar-denominator", l_den);
  const Poly p_den = (N - kTwo * sc) * w2 - kFour * (kOne - sc) * u + constant(kTwo * sc);
  add(v, "p_bar-denominator", p_den);

  const Poly r_num = kTwo * N * w;
  const Poly p_num = kTwo * N * w2;
  add(v, "r_bar >= 2", r_num - kTwo * r_den);
  add(v, "p_bar >= 2", p_num - kTwo * p_den);
  // 2N/(N-2s_c) == N alpha/(2-b)
  add(v, "r_bar above critical window", (kTwo - b) * r_num - N * alpha * r_den);
  add(v, "p_bar above critical window", (kTwo - b) * p_num - N * alpha * p_den);
  add(v, "a_bar >= 1", kTwo * w - constant(kTwo - sc));
  add(v, "k_bar >= 1", kTwo * w2 - k_den);
  add(v, "l_bar >= 1", kTwo * w2 - l_den);
}

Rational window_of(std::vector<Constraint> v) {
  Rational window = Rational::infinity();
  for (const auto& cons : v) window = min(window, positivity_bound(cons));
  // "theta < alpha" always contributes a finite bound.
  if (!(window > kZero) || window.is_infinite())
    throw HypothesisError("no positive theta window");
  return window;
}

}  // namespace

Rational theta_window(const ParamSet& params) {
  detail::require_global_hypotheses(params);
  return window_of(base_constraints(params));
}

namespace detail {

// Window for the derivative branch activated by (N, s): the base family
// constraints plus the branch's own denominators and range windows. The
// three-dimensional branch pins its theta independently, so it adds nothing.
Rational theta_window_with_branch(const ParamSet& params) {
  require_global_hypotheses(params);
  std::vector<Constraint> v = base_constraints(params);
  const Rational half_dim(params.dim, 2);
  if (params.dim >= 4) {
    high_dim_constraints(params, v);
  } else if (params.dim <= 2) {
    if (params.s == half_dim)
      half_dim_constraints(params, v);
    else if (params.dim == 1)
      one_dim_constraints(params, v);
    else
      two_dim_constraints(params, v);
  }
  return window_of(std::move(v));
}

}  // namespace detail

}  // namespace inls
