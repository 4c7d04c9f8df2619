#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "a5def/algebra.hpp"

namespace a5def {

struct SimplicityReport {
  enum class Verdict { Simple, ProperIdealFound, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Vec> witness;  // echelonized ideal basis when one is found
  int trials_used = 0;
  uint64_t seed = 0;
  int certificate_trial = -1;   // trial that produced the Norton certificate
  int certificate_nullity = 0;  // nullity of the certifying element
};

const char* verdict_name(SimplicityReport::Verdict v);

// Iteratively closes span{v} under bracketing with all basis vectors;
// returns an echelonized basis. v must be nonzero.
std::vector<Vec> smallest_ideal_containing(const LieAlgebra& alg, const Vec& v);

// Norton irreducibility test on the adjoint module (ideals = submodules).
// Each trial draws a random element of the enveloping algebra (sums of
// products of ad operators, words up to length 4); a singular element whose
// null vectors all generate the full module, with the dual check on the
// transpose, certifies irreducibility. Any discovered proper submodule is
// re-verified by bracket closure and returned as a witness. Deterministic
// for a fixed seed.
SimplicityReport is_simple(const LieAlgebra& alg, int trials = 64, uint64_t seed = 0);

}  // namespace a5def
