#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "a5def/cochain.hpp"
#include "a5def/cohomology.hpp"

namespace a5def {

// Raised when a construction that verifies itself (type II/III builders,
// specialization preconditions, report expectations) finds a mismatch.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bracket polynomial in t with 2-cochain coefficients b0 + t b1 + ... ;
// b0 is always the structure-constant bracket of the algebra.
class DeformedBracket {
 public:
  explicit DeformedBracket(std::vector<Cochain> terms);

  const LieAlgebra& algebra() const { return terms_[0].algebra(); }
  int t_degree() const { return int(terms_.size()) - 1; }
  const Cochain& term(int d) const { return terms_[d]; }
  const std::vector<Cochain>& terms() const { return terms_; }

 private:
  std::vector<Cochain> terms_;
};

// Coefficient of t^d in f(f(x,y),z) + f(f(y,z),x) + f(f(z,x),y) for
// d = 0..2m; f satisfies the Jacobi identity over polynomials in t iff all
// coefficients vanish.
std::map<int, Cochain> jacobi_coefficients(const DeformedBracket& f);

// The explicit six-set 2-cochain of weight 2(e1-e6) whose differential is
// [psi1, psi2].
Cochain phi_paper(const LieAlgebra& L);

// b0 + t psi_{e1+e2+e3-e4-e5-e6}; Jacobi coefficients verified zero.
DeformedBracket build_type_ii(const LieAlgebra& L);

// b0 + t (psi1 + psi2) + t^2 phi; Jacobi coefficients at t^1..t^4 verified
// zero.
DeformedBracket build_type_iii(const LieAlgebra& L);

struct ObstructionReport {
  bool vanishes_identically = false;
  bool coboundary = false;
  std::optional<Cochain> witness;  // some phi' with d(phi') = psi u psi
};

// Necessary condition for prolongation: triviality of psi u psi in H^3.
ObstructionReport obstruction_status(const Cohomology& coh, const Cochain& psi);

// The 34-dimensional algebra with bracket sum_d t0^d b_d. Requires all
// Jacobi coefficients of f to vanish.
LieAlgebra specialize(const DeformedBracket& f, uint8_t t0);

}  // namespace a5def
