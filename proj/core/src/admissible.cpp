#include "inls/admissible.hpp"

#include <stdexcept>

namespace inls {

namespace {

const Rational kTwo(2);

struct Window {
  Rational lo;
  bool lo_closed;
  Rational hi;
  bool hi_closed;
};

bool window_contains(const Window& w, const Rational& r, std::string* why,
                     const char* lo_name, const char* hi_name) {
  if (r < w.lo || (!w.lo_closed && r == w.lo)) {
    if (why) *why = std::string("r below window lower endpoint ") + lo_name;
    return false;
  }
  if (r > w.hi || (!w.hi_closed && r == w.hi)) {
    if (why) *why = std::string("r above window upper endpoint ") + hi_name;
    return false;
  }
  return true;
}

// Closed L^2 range window for r (the Keel-Tao endpoint is included).
bool l2_window(int dim, const Rational& r, std::string* why) {
  if (r < kTwo) {
    if (why) *why = "r below 2";
    return false;
  }
  if (dim >= 3) {
    Rational hi = Rational(2 * dim) / Rational(dim - 2);
    if (r > hi) {
      if (why) *why = "r above 2N/(N-2)";
      return false;
    }
  } else if (dim == 2 && r.is_infinite()) {
    if (why) *why = "r = inf excluded in dimension 2";
    return false;
  }
  return true;
}

}  // namespace

std::string PairClass::str() const {
  switch (kind) {
    case AdmissibleKind::L2:
      return "L2Admissible";
    case AdmissibleKind::Hs:
      return "HsAdmissible(" + s.str() + ")";
    case AdmissibleKind::HsDual:
      return "HsDualAdmissible(" + s.str() + ")";
    case AdmissibleKind::NotAdmissible:
      return "NotAdmissible";
  }
  return "NotAdmissible";
}

PairClass PairClass::parse(const std::string& text) {
  if (text == "L2Admissible") return l2();
  auto grab = [&](const char* prefix) -> std::optional<Rational> {
    std::string p(prefix);
    if (text.rfind(p + "(", 0) == 0 && text.back() == ')')
      return Rational::parse(text.substr(p.size() + 1, text.size() - p.size() - 2));
    return std::nullopt;
  };
  if (auto s = grab("HsAdmissible")) return hs(*s);
  if (auto s = grab("HsDualAdmissible")) return hs_dual(*s);
  if (text == "NotAdmissible") return rejected("");
  throw std::invalid_argument("not a pair class: '" + text + "'");
}

Rational critical_index(int dim, const Rational& alpha, const Rational& b) {
  if (!(alpha > Rational(0))) throw std::domain_error("undefined critical index: alpha must be positive");
  return Rational(dim, 2) - (kTwo - b) / alpha;
}

Rational alpha_upper(int dim, const Rational& s, const Rational& b) {
  Rational half_dim(dim, 2);
  if (s > half_dim) throw std::domain_error("regularity above N/2 unsupported");
  if (s == half_dim) return Rational::infinity();
  return (Rational(4) - kTwo * b) / (Rational(dim) - kTwo * s);
}

Rational b_upper(int dim) {
  if (dim < 1) throw std::domain_error("dimension must be positive");
  return dim <= 3 ? Rational(dim, 3) : Rational(2);
}

Rational two_star(int dim, const Rational& b) {
  if (dim < 1) throw std::domain_error("dimension must be positive");
  if (dim <= 2) return Rational::infinity();
  return (Rational(4) - kTwo * b) / Rational(dim - 2);
}

Rational plus_conjugate(const Rational& a, const Rational& eps) {
  if (!(eps > Rational(0))) throw std::domain_error("plus_conjugate requires eps > 0");
  if (!(a > Rational(1))) throw std::domain_error("plus_conjugate requires a > 1");
  return (a + eps) * a / eps;
}

Pair dual_pair(const Pair& p) {
  auto conj = [](const Rational& x) -> Rational {
    if (x < Rational(1)) throw std::domain_error("Hoelder conjugate requires exponent >= 1");
    if (x.is_infinite()) return Rational(1);
    if (x == Rational(1)) return Rational::infinity();
    return x / (x - Rational(1));
  };
  return {conj(p.q), conj(p.r)};
}

bool singular_weight_integrable(const Rational& gamma, const Rational& b_eff, int dim,
                                Region region) {
  if (!(gamma > Rational(0))) throw std::domain_error("integrability exponent must be positive");
  if (!(b_eff > Rational(0))) throw std::domain_error("weight exponent must be positive");
  Rational margin = Rational(dim) * gamma.reciprocal() - b_eff;
  return region == Region::Ball ? margin > Rational(0) : margin < Rational(0);
}

namespace {

// Shared lower endpoint 2N/(N-2s) of the shrunk windows; requires s < N/2.
Rational hs_window_lower(int dim, const Rational& s) {
  return Rational(2 * dim) / (Rational(dim) - kTwo * s);
}

Window hs_window(int dim, const Rational& s, const Rational& eps) {
  Window w;
  w.lo = hs_window_lower(dim, s);
  w.lo_closed = true;
  w.hi_closed = true;
  if (dim >= 3) {
    w.hi = Rational(2 * dim) / Rational(dim - 2) - eps;
  } else if (dim == 2) {
    w.hi = plus_conjugate(w.lo, eps);
  } else {
    w.hi = Rational::infinity();
  }
  return w;
}

Window hs_dual_window(int dim, const Rational& s, const Rational& eps) {
  Window w;
  w.lo = hs_window_lower(dim, s) + eps;
  w.lo_closed = true;
  w.hi_closed = true;
  if (dim >= 3) {
    w.hi = Rational(2 * dim) / Rational(dim - 2) - eps;
  } else if (dim == 2) {
    w.hi = plus_conjugate(kTwo / (Rational(1) + s), eps);
  } else {
    w.hi = Rational::infinity();
  }
  return w;
}

}  // namespace

bool hs_window_nonempty(int dim, const Rational& s, const Rational& eps) {
  if (kTwo * s >= Rational(dim)) return false;
  Window w = hs_window(dim, s, eps);
  return w.lo <= w.hi;
}

bool hs_dual_window_nonempty(int dim, const Rational& s, const Rational& eps) {
  if (kTwo * s >= Rational(dim)) return false;
  Window w = hs_dual_window(dim, s, eps);
  return w.lo <= w.hi;
}

PairClass classify_pair(const Pair& p, int dim, const Rational& s, const Rational& eps) {
  if (dim < 1) throw std::domain_error("dimension must be positive");
  if (!(eps > Rational(0))) throw std::domain_error("classify_pair requires eps > 0");
  if (p.q < Rational(1)) return PairClass::rejected("q below 1");
  if (p.r < Rational(1)) return PairClass::rejected("r below 1");
  if (s.is_negative()) return PairClass::rejected("negative regularity");

  const Rational lhs = kTwo * p.q.reciprocal();
  const Rational scale = Rational(dim, 2) - Rational(dim) * p.r.reciprocal();

  if (lhs == scale) {
    std::string why;
    if (!l2_window(dim, p.r, &why)) return PairClass::rejected(why);
    return PairClass::l2();
  }

  if (s > Rational(0)) {
    if (kTwo * s >= Rational(dim)) {
      if (lhs == scale - s || lhs == scale + s)
        return PairClass::rejected("no range window at regularity >= N/2");
    } else if (lhs == scale - s) {
      std::string why;
      if (!window_contains(hs_window(dim, s, eps), p.r, &why, "2N/(N-2s)",
                           dim >= 3 ? "2N/(N-2) - eps" : "((2N/(N-2s))^+)'"))
        return PairClass::rejected(why);
      return PairClass::hs(s);
    } else if (lhs == scale + s) {
      std::string why;
      if (!window_contains(hs_dual_window(dim, s, eps), p.r, &why, "2N/(N-2s) + eps",
                           dim >= 3 ? "2N/(N-2) - eps" : "((2/(1+s))^+)'"))
        return PairClass::rejected(why);
      return PairClass::hs_dual(s);
    }
  }

  return PairClass::rejected("scaling relation 2/q = N/2 - N/r -+ s fails");
}

}  // namespace inls
