#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "a5def/cochain.hpp"

namespace a5def {

struct H2Block {
  Weight weight;
  int dim_c2 = 0;
  int dim_z2 = 0;
  int dim_b2 = 0;
  int dim_h2 = 0;
};

struct H2Summary {
  int total_h2 = 0;
  std::vector<H2Block> blocks;  // every weight with dim C^2_w > 0, ascending
  std::vector<std::pair<Weight, Cochain>> basis_cocycles;  // h2_weights() order
  const H2Block* block(const Weight& w) const;
};

// psi_mu: (E_{b1}, E_{b2}) -> E_{b1+b2+mu} over unordered pairs of distinct
// roots with b1+b2+mu a root; zero on Cartan arguments. mu must be one of
// the 20 weights of h2_weights().
Cochain basis_cocycle(const LieAlgebra& L, const Weight& mu);

// Weight-blocked linear algebra on the complex C^1 -> C^2 -> C^3 of L. The
// unblocked d2 matrix is ~19k x 203k over GF(2); per weight no block exceeds
// a few hundred columns, so every computation here is a stack of small exact
// solves. Blocks are independent; h2_summary fans them out over
// A5DEF_THREADS workers.
class Cohomology {
 public:
  explicit Cohomology(const LieAlgebra& L);

  const LieAlgebra& algebra() const { return *L_; }

  // Z^2/B^2/H^2 dimensions per weight block plus the 20 basis cocycles.
  // A nonzero shuffle_seed randomizes the in-block column order (the
  // dimensions must not depend on it).
  H2Summary h2_summary(uint64_t shuffle_seed = 0) const;

  // Some phi with d(phi) = c, or nullopt when c is not in the image of d
  // on C^2. Solved independently on each weight block of c.
  std::optional<Cochain> is_coboundary(const Cochain& c) const;

  // Whether a + b is a coboundary of a 1-cochain; both inputs must be
  // cocycles.
  bool classes_equal(const Cochain& a, const Cochain& b) const;

 private:
  struct C2Entry {
    int i, j, m;  // cochain (e_i, e_j) -> e_m with i < j
  };
  struct C1Entry {
    int i, m;  // cochain e_i -> e_m
  };
  using SparseVec = std::vector<std::pair<uint64_t, uint8_t>>;  // sorted keys

  const LieAlgebra* L_;
  std::map<Weight, std::vector<C2Entry>> c2_;
  std::map<Weight, std::vector<C1Entry>> c1_;
  mutable std::map<Weight, std::vector<SparseVec>> d2_cols_;  // lazy, per weight
  mutable std::map<Weight, std::vector<SparseVec>> d1_cols_;

  std::vector<SparseVec> d2_images(const Weight& w) const;
  std::vector<SparseVec> d1_images(const Weight& w) const;
  const std::vector<SparseVec>& d2_images_cached(const Weight& w) const;
  const std::vector<SparseVec>& d1_images_cached(const Weight& w) const;
};

}  // namespace a5def
