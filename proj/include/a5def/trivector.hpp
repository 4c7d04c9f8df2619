#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "a5def/cochain.hpp"
#include "a5def/cohomology.hpp"

namespace a5def {

// Element of Lambda^3 V, dim V = 6, stored by coefficients on increasing
// index triples (1-based).
class Trivector {
 public:
  explicit Trivector(const Field& f) : field_(&f) {}

  const Field& field() const { return *field_; }
  const std::map<std::array<int, 3>, uint8_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // any index order; a repeated index wedges to zero (characteristic 2:
  // reordering carries no sign)
  void add_term(std::array<int, 3> t, uint8_t c);
  uint8_t coeff(std::array<int, 3> t) const;

  Trivector operator+(const Trivector& o) const;
  friend bool operator==(const Trivector& a, const Trivector& b) {
    return a.field_->degree() == b.field_->degree() && a.coeffs_ == b.coeffs_;
  }

 private:
  const Field* field_;
  std::map<std::array<int, 3>, uint8_t> coeffs_;
};

enum class OrbitTag { I, II, III, IV, V };
enum class TrivectorClass { I, II, III, RANK6 };

const char* orbit_tag_name(OrbitTag t);
const char* trivector_class_name(TrivectorClass c);
std::optional<OrbitTag> orbit_tag_from_name(const std::string& s);

// The five canonical representatives:
//   (I) 0, (II) e1^e2^e3, (III) e1^(e2^e3 + e4^e5),
//   (IV) e1^e5^e6 + e2^e6^e4 + e3^e4^e5, (V) e1^e2^e3 + e4^e5^e6.
Trivector canonical(OrbitTag tag, const Field& f);

// Rank = dimension of the span of all double contractions, i.e. of the
// smallest subspace U with w in Lambda^3 U.
int trivector_rank(const Trivector& w);

// I / II / III for ranks 0 / 3 / 5, RANK6 for rank 6. Ranks 1, 2, 4 are
// impossible for trivectors and throw std::logic_error.
TrivectorClass classify(const Trivector& w);

// u1 ^ u2 ^ u3 for columns over the field of w.
Trivector wedge(const Field& f, const Vec& u1, const Vec& u2, const Vec& u3);

// Natural GL(6) action, coefficients transformed by 3x3 minors.
Trivector apply_gl(const Matrix& g, const Trivector& w);

Weight weight_of_triple(const std::array<int, 3>& t);
std::array<int, 3> triple_of_weight(const Weight& mu);

// sum c_T e_T  ->  sum c_T^2 psi_{mu(T)}; the coefficient squaring is the
// Frobenius twist (identity over GF(2)).
Cochain to_cocycle(const LieAlgebra& L, const Trivector& w);

// Project the class of a 2-cocycle onto the 20 H^2 weight lines, read off
// the psi_mu coefficients, take square roots, assemble the trivector.
// Inverse of to_cocycle on classes.
Trivector from_class(const LieAlgebra& L, const Cochain& z);

// Best-effort randomized search for w = u1^u2^u3 + v1^v2^v3. Diagnostic
// only: a missing witness proves nothing (the rank-6 orbit question is
// open in characteristic 2).
std::optional<std::pair<std::array<Vec, 3>, std::array<Vec, 3>>> pair_decomposition_search(
    const Trivector& w, int trials, uint64_t seed);

}  // namespace a5def
