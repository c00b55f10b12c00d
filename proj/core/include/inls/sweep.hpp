#pragma once

#include "inls/lemmas.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace inls {

/// Draws a parameter set strictly inside the hypothesis region of the given
/// branch; rationals land on a 1/64 grid of each admissible interval.
ParamSet sample_params(LemmaId id, std::mt19937_64& rng);

struct SweepResult {
  LemmaId lemma = LemmaId::LocalL2;
  int total = 0;
  int passed = 0;
  std::vector<std::string> failures;  // first few failure descriptions

  bool all_passed() const { return passed == total; }
};

/// Runs `count` pseudorandom parameter sets through verify_lemma.
SweepResult run_sweep(LemmaId id, int count, std::uint64_t seed);

}  // namespace inls
