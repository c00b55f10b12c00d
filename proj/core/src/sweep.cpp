#include "inls/sweep.hpp"

namespace inls {

namespace {

const Rational kGridSpan(8);  // width used for intervals unbounded above

/// Uniform grid point strictly inside (lo, hi); with include_hi the closed
/// upper endpoint may be drawn as well.
Rational sample_in(const Rational& lo, const Rational& hi, std::mt19937_64& rng,
                   bool include_hi = false) {
  const Rational top = hi.is_infinite() ? lo + kGridSpan : hi;
  std::uniform_int_distribution<int> grid(1, include_hi ? 64 : 63);
  return lo + (top - lo) * Rational(grid(rng), 64);
}

int sample_dim(std::initializer_list<int> dims, std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> pick(0, dims.size() - 1);
  return *(dims.begin() + pick(rng));
}

}  // namespace

ParamSet sample_params(LemmaId id, std::mt19937_64& rng) {
  ParamSet p;
  p.lambda_sign = -1;
  const Rational zero(0), one(1);

  switch (id) {
    case LemmaId::LocalL2: {
      p.dim = sample_dim({1, 2, 3, 4, 5, 6}, rng);
      p.b = sample_in(zero, min(Rational(2), Rational(p.dim)), rng);
      p.alpha = sample_in(zero, (Rational(4) - Rational(2) * p.b) / Rational(p.dim), rng);
      p.s = zero;
      return p;
    }
    case LemmaId::LocalHsHighDim: {
      p.dim = sample_dim({3, 4, 5, 6}, rng);
      p.b = sample_in(zero, b_upper(p.dim), rng);
      p.s = sample_in(zero, one, rng, /*include_hi=*/true);
      p.alpha = sample_in(zero, alpha_upper(p.dim, p.s, p.b), rng);
      return p;
    }
    case LemmaId::LocalHsLowDim: {
      p.dim = sample_dim({1, 2}, rng);
      p.b = sample_in(zero, b_upper(p.dim), rng);
      p.s = sample_in(zero, Rational(p.dim, 2), rng);
      p.alpha = sample_in(zero, alpha_upper(p.dim, p.s, p.b), rng);
      return p;
    }
    case LemmaId::LocalHsHalfDim: {
      p.dim = sample_dim({1, 2}, rng);
      p.b = sample_in(zero, b_upper(p.dim), rng);
      p.s = Rational(p.dim, 2);
      const Rational lo = (Rational(4) - Rational(2) * p.b) / Rational(p.dim);
      p.alpha = sample_in(lo, Rational::infinity(), rng);
      return p;
    }
    case LemmaId::GlobalBase:
      p.dim = sample_dim({1, 2, 3, 4, 5, 6}, rng);
      break;
    case LemmaId::GlobalDerivHighDim:
      p.dim = sample_dim({4, 5, 6}, rng);
      break;
    case LemmaId::GlobalDeriv3D:
      p.dim = 3;
      break;
    case LemmaId::GlobalDeriv1D:
      p.dim = 1;
      break;
    case LemmaId::GlobalDeriv2D:
      p.dim = 2;
      break;
    case LemmaId::GlobalDerivHalfDim:
      p.dim = sample_dim({1, 2}, rng);
      break;
  }

  // Global branches: b in (0, b_upper), s below/at min(N/2, 1) as the branch
  // demands, then alpha in ((4-2b)/N, alpha_upper).
  p.b = sample_in(zero, b_upper(p.dim), rng);
  const Rational s_max = min(Rational(p.dim, 2), one);
  switch (id) {
    case LemmaId::GlobalBase:
      p.s = sample_in(zero, s_max, rng, /*include_hi=*/true);
      break;
    case LemmaId::GlobalDerivHighDim:
    case LemmaId::GlobalDeriv3D:
      p.s = sample_in(zero, one, rng, /*include_hi=*/true);
      break;
    case LemmaId::GlobalDeriv1D:
    case LemmaId::GlobalDeriv2D:
      p.s = sample_in(zero, s_max, rng);
      break;
    default:  // GlobalDerivHalfDim
      p.s = s_max;
      break;
  }
  const Rational alpha_lo = (Rational(4) - Rational(2) * p.b) / Rational(p.dim);
  p.alpha = sample_in(alpha_lo, alpha_upper(p.dim, p.s, p.b), rng);
  return p;
}

SweepResult run_sweep(LemmaId id, int count, std::uint64_t seed) {
  SweepResult result;
  result.lemma = id;
  result.total = count;
  std::mt19937_64 rng(seed);

  for (int i = 0; i < count; ++i) {
    ParamSet params = sample_params(id, rng);
    LemmaReport report;
    bool built = false;
    std::string error;
    // The endpoint shrink may be too coarse near a hypothesis boundary;
    // retry with a smaller one before counting a failure.
    for (int attempt = 0; attempt < 6 && !built; ++attempt) {
      try {
        report = verify_lemma(id, params);
        built = true;
      } catch (const HypothesisError& e) {
        error = e.what();
        params.epsilon = params.eps() / Rational(8);
      }
    }
    if (!built) {
      if (result.failures.size() < 8)
        result.failures.push_back("draw " + std::to_string(i) + ": " + error);
      continue;
    }
    if (report.pass()) {
      ++result.passed;
    } else if (result.failures.size() < 8) {
      result.failures.push_back("draw " + std::to_string(i) + ": " + report.first_failure());
    }
  }
  return result;
}

}  // namespace inls
