#pragma once

#include <map>
#include <optional>
#include <vector>

#include "a5def/algebra.hpp"

namespace a5def {

// Strictly increasing index tuple of degree <= 4 packed 6 bits per index,
// first index in the high bits, so key order is lexicographic tuple order.
using TupleKey = uint32_t;
TupleKey pack_tuple(const std::vector<int>& sorted_idx);
std::vector<int> unpack_tuple(TupleKey key, int degree);

// Alternating k-cochain C^k(L, L), k <= 4, stored sparsely on strictly
// increasing basis-index tuples. In characteristic 2 the cochain is
// symmetric under argument swaps and vanishes on repeated arguments, so the
// canonical table determines it; equality is table comparison.
class Cochain {
 public:
  Cochain(const LieAlgebra& L, int degree);

  int degree() const { return degree_; }
  const LieAlgebra& algebra() const { return *alg_; }
  const std::map<TupleKey, Vec>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  size_t entry_count() const { return entries_.size(); }

  // accumulate coeff*v at the alternating class of idx (any argument order;
  // a repeated index contributes nothing)
  void accumulate(std::vector<int> idx, const Vec& v, uint8_t coeff = 1);
  void accumulate_coord(std::vector<int> idx, int m, uint8_t coeff);

  // value on basis vectors, any argument order; repeats give zero
  Vec value_on_basis(std::vector<int> idx) const;
  const Vec* find_pair(int i, int j) const;  // degree 2 fast path, i != j

  // full multilinear evaluation
  Vec evaluate(const std::vector<Vec>& args) const;

  Cochain operator+(const Cochain& o) const;
  Cochain scaled(uint8_t c) const;
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  const LieAlgebra* alg_;
  int degree_;
  std::map<TupleKey, Vec> entries_;
};

// The Lie bracket of L as a 2-cochain.
Cochain bracket_cochain(const LieAlgebra& L);

// Chevalley-Eilenberg differential in characteristic 2 (all signs 1):
// (dc)(x_0..x_k) = sum_i [x_i, c(..x^_i..)] + sum_{i<j} c([x_i,x_j], ..x^_i..x^_j..).
// Degree of c at most 3.
Cochain differential(const Cochain& c);

// cup(a,b)(x,y,z) = a(b(x,y),z) + a(b(y,z),x) + a(b(z,x),y), both degree 2.
Cochain cup(const Cochain& a, const Cochain& b);

// [a,b] = cup(a,b) + cup(b,a)
Cochain cbracket(const Cochain& a, const Cochain& b);

// Number of "sets" [{args}, value]: stored entries whose arguments are all
// root vectors, counting value coordinates that are root vectors with
// coefficient 1. An entry whose value has any Cartan coordinate is excluded
// entirely.
size_t set_count(const Cochain& c);

// (g.c)(x_1..x_k) = g.c(g^{-1}x_1, .., g^{-1}x_k) through the 6x6
// conjugation action. Throws on singular g.
Cochain act(const Matrix& g, const Cochain& c);

// Weight of the single entry coordinate: wt(value) - sum of argument weights.
Weight entry_weight(const LieAlgebra& L, TupleKey key, int degree, int value_coord);

// Decomposition into weight-homogeneous parts; the parts sum back to c.
std::map<Weight, Cochain> weight_components(const Cochain& c);

// The common weight when c is homogeneous and nonzero.
std::optional<Weight> homogeneous_weight(const Cochain& c);

}  // namespace a5def
