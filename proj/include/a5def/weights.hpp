#pragma once

#include <array>
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace a5def {

// Integer weight of the diagonal torus in the epsilon basis. Roots of A5 are
// the weights epsilon_i - epsilon_j, i != j.
struct Weight {
  std::array<int, 6> c{};

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;

  bool is_zero() const;
  bool is_root() const;  // exactly one +1, one -1, rest 0
  int coordinate_sum() const;

  static Weight zero() { return Weight{}; }
  static Weight root(int i, int j);  // epsilon_i - epsilon_j, 1-based

  std::string str() const;  // e.g. "+e1-e2" for diagnostics
};

// All 30 roots in a fixed order: pairs (i, j), i != j, lexicographic.
const std::vector<Weight>& roots();

// Orbit of mu under S6 permuting the epsilon coordinates.
std::set<Weight> weyl_orbit(const Weight& mu);

// The 20 weights with three +1 and three -1 coordinates, ordered
// lexicographically by the index triple carrying +1.
const std::vector<Weight>& h2_weights();

// All multisets of k roots summing to mu that contain at least
// `distinct_at_least` pairwise distinct roots (0 = no constraint).
// Each multiset is returned sorted; the list is exhaustive.
std::vector<std::vector<Weight>> decompositions(const Weight& mu, int k, int distinct_at_least);

}  // namespace a5def
