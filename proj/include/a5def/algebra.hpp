#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "a5def/linalg.hpp"
#include "a5def/weights.hpp"

namespace a5def {

// Finite-dimensional algebra over GF(2^e) presented by a structure-constant
// table on a labelled, weight-tagged basis. Weight-0 basis vectors (the
// Cartan part) come first. Immutable after construction and shareable across
// threads.
class LieAlgebra {
 public:
  LieAlgebra(const Field& f, std::vector<std::string> labels, std::vector<Weight> weights,
             std::map<std::pair<int, int>, Vec> constants);  // keys i < j, nonzero values

  int dim() const { return dim_; }
  const Field& field() const { return *field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight_of(int i) const { return weights_[i]; }
  int cartan_count() const { return cartan_count_; }
  bool is_root_vector(int i) const { return i >= cartan_count_; }

  int index_of(const std::string& label) const;  // -1 when absent
  int root_index(const Weight& r) const;         // -1 when absent

  const std::map<std::pair<int, int>, Vec>& constants() const { return constants_; }
  const Vec& bracket_basis(int i, int j) const;    // [e_i, e_j]
  Vec bracket_basis_with(int i, const Vec& v) const;  // [e_i, v]
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec basis_vector(int i) const { return unit_vec(dim_, i); }

  // pairs (a, b, coeff), a < b, such that e_m appears in [e_a, e_b] with the
  // given coefficient
  const std::vector<std::tuple<int, int, uint8_t>>& pairs_hitting(int m) const {
    return hitting_[m];
  }

  bool jacobi_holds_on_basis() const;
  bool weights_grade_bracket() const;

 private:
  const Field* field_;
  int dim_;
  int cartan_count_;
  std::vector<std::string> labels_;
  std::vector<Weight> weights_;
  std::map<std::pair<int, int>, Vec> constants_;
  std::vector<std::vector<std::tuple<int, int, uint8_t>>> hitting_;
  std::map<std::string, int> label_index_;
  std::map<Weight, int> root_index_;
  Vec zero_;
};

std::string root_label(const Weight& r);  // "E+1-2" for epsilon_1 - epsilon_2

// sl(6) over GF(2^e) in the Chevalley basis H1..H5, E+i-j. dim 35.
LieAlgebra build_sl6(int field_degree);

// Basis of {z : [z, x] = 0 for all x}, via the kernel of the stacked
// adjoint matrices.
std::vector<Vec> center(const LieAlgebra& alg);

// The 34-dimensional quotient by the center H1+H3+H5; the H5 coordinate is
// rewritten as H1+H3. Requires the center to be exactly span{H1+H3+H5}.
LieAlgebra quotient_by_center(const LieAlgebra& alg);

// Section into traceless 6x6 matrices: Hk -> E_kk + E_{k+1,k+1},
// E+i-j -> E_ij; and its inverse on matrices of trace 0.
Matrix lift_to_matrix(const LieAlgebra& alg, const Vec& x);
Vec project_from_matrix(const LieAlgebra& alg, const Matrix& m);

// Conjugation action x -> g s(x) g^{-1} through the section. Throws on a
// singular g.
Vec act_gl(const LieAlgebra& alg, const Matrix& g, const Vec& x);
Vec act_gl_pre(const LieAlgebra& alg, const Matrix& g, const Matrix& g_inv, const Vec& x);

}  // namespace a5def
