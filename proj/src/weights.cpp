#include "a5def/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace a5def {

Weight Weight::operator+(const Weight& o) const {
  Weight r;
  for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r;
  for (int i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r;
  for (int i = 0; i < 6; ++i) r.c[i] = -c[i];
  return r;
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Weight::is_root() const {
  int plus = 0, minus = 0;
  for (int x : c) {
    if (x == 1)
      ++plus;
    else if (x == -1)
      ++minus;
    else if (x != 0)
      return false;
  }
  return plus == 1 && minus == 1;
}

int Weight::coordinate_sum() const { return std::accumulate(c.begin(), c.end(), 0); }

Weight Weight::root(int i, int j) {
  if (i < 1 || i > 6 || j < 1 || j > 6 || i == j)
    throw std::invalid_argument("Weight::root: indices must be distinct and in 1..6");
  Weight r;
  r.c[i - 1] = 1;
  r.c[j - 1] = -1;
  return r;
}

std::string Weight::str() const {
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (c[i] == 0) continue;
    int v = c[i];
    s += (v > 0 ? '+' : '-');
    if (std::abs(v) != 1) s += std::to_string(std::abs(v));
    s += 'e';
    s += std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

const std::vector<Weight>& roots() {
  static const std::vector<Weight> r = [] {
    std::vector<Weight> out;
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        if (i != j) out.push_back(Weight::root(i, j));
    return out;
  }();
  return r;
}

std::set<Weight> weyl_orbit(const Weight& mu) {
  std::set<Weight> orbit;
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  do {
    Weight w;
    for (int i = 0; i < 6; ++i) w.c[i] = mu.c[perm[i]];
    orbit.insert(w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit;
}

const std::vector<Weight>& h2_weights() {
  static const std::vector<Weight> ws = [] {
    std::vector<Weight> out;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          Weight w;
          for (int t = 0; t < 6; ++t) w.c[t] = (t == i || t == j || t == k) ? 1 : -1;
          out.push_back(w);
        }
    return out;
  }();
  return ws;
}

namespace {

// a sum of `left` roots moves at most `left` units of positive and of
// negative mass
bool feasible(const Weight& rem, int left) {
  int pos = 0, neg = 0;
  for (int x : rem.c) {
    if (x > 0)
      pos += x;
    else
      neg -= x;
  }
  return pos <= left && neg <= left;
}

void search(const std::vector<Weight>& R, int start, int left, const Weight& rem,
            std::vector<int>& picked, int need_distinct,
            std::vector<std::vector<Weight>>& out) {
  if (left == 0) {
    if (!rem.is_zero()) return;
    int distinct = 0;
    for (size_t t = 0; t < picked.size(); ++t)
      if (t == 0 || picked[t] != picked[t - 1]) ++distinct;
    if (distinct < need_distinct) return;
    std::vector<Weight> ms;
    ms.reserve(picked.size());
    for (int idx : picked) ms.push_back(R[idx]);
    std::sort(ms.begin(), ms.end());
    out.push_back(std::move(ms));
    return;
  }
  for (int idx = start; idx < int(R.size()); ++idx) {
    Weight next = rem - R[idx];
    if (!feasible(next, left - 1)) continue;
    picked.push_back(idx);
    search(R, idx, left - 1, next, picked, need_distinct, out);
    picked.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Weight>> decompositions(const Weight& mu, int k, int distinct_at_least) {
  if (k < 1 || k > 4) throw std::invalid_argument("decompositions: k must be in 1..4");
  if (distinct_at_least < 0 || distinct_at_least > k)
    throw std::invalid_argument("decompositions: distinct_at_least must be in 0..k");
  std::vector<std::vector<Weight>> out;
  if (mu.coordinate_sum() != 0) return out;
  std::vector<int> picked;
  search(roots(), 0, k, mu, picked, distinct_at_least, out);
  return out;
}

}  // namespace a5def
