#include "a5def/algebra.hpp"

#include <stdexcept>

namespace a5def {

LieAlgebra::LieAlgebra(const Field& f, std::vector<std::string> labels,
                       std::vector<Weight> weights, std::map<std::pair<int, int>, Vec> constants)
    : field_(&f),
      dim_(int(labels.size())),
      labels_(std::move(labels)),
      weights_(std::move(weights)),
      constants_(std::move(constants)),
      zero_(labels_.size(), 0) {
  if (weights_.size() != labels_.size())
    throw std::invalid_argument("LieAlgebra: labels/weights size mismatch");
  cartan_count_ = 0;
  while (cartan_count_ < dim_ && weights_[cartan_count_].is_zero()) ++cartan_count_;
  for (int i = 0; i < dim_; ++i) {
    label_index_[labels_[i]] = i;
    if (i >= cartan_count_) root_index_[weights_[i]] = i;
  }
  for (auto it = constants_.begin(); it != constants_.end();) {
    auto [i, j] = it->first;
    if (i < 0 || j >= dim_ || i >= j) throw std::invalid_argument("LieAlgebra: bad constant key");
    if (it->second.size() != size_t(dim_))
      throw std::invalid_argument("LieAlgebra: bad constant length");
    if (is_zero(it->second))
      it = constants_.erase(it);
    else
      ++it;
  }
  hitting_.resize(dim_);
  for (const auto& [key, v] : constants_)
    for (int m = 0; m < dim_; ++m)
      if (v[m]) hitting_[m].emplace_back(key.first, key.second, v[m]);
}

int LieAlgebra::index_of(const std::string& label) const {
  auto it = label_index_.find(label);
  return it == label_index_.end() ? -1 : it->second;
}

int LieAlgebra::root_index(const Weight& r) const {
  auto it = root_index_.find(r);
  return it == root_index_.end() ? -1 : it->second;
}

const Vec& LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return zero_;
  auto it = constants_.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
  return it == constants_.end() ? zero_ : it->second;  // char 2: [x,y] = [y,x]
}

Vec LieAlgebra::bracket_basis_with(int i, const Vec& v) const {
  Vec out(dim_, 0);
  for (int m = 0; m < dim_; ++m)
    if (v[m]) add_scaled(out, bracket_basis(i, m), v[m], *field_);
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!y[j] || i == j) continue;
      add_scaled(out, bracket_basis(i, j), field_->mul(x[i], y[j]), *field_);
    }
  }
  return out;
}

bool LieAlgebra::jacobi_holds_on_basis() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vec acc = bracket_basis_with(k, bracket_basis(i, j));
        add_scaled(acc, bracket_basis_with(i, bracket_basis(j, k)), 1, *field_);
        add_scaled(acc, bracket_basis_with(j, bracket_basis(k, i)), 1, *field_);
        if (!is_zero(acc)) return false;
      }
  return true;
}

bool LieAlgebra::weights_grade_bracket() const {
  for (const auto& [key, v] : constants_) {
    Weight sum = weights_[key.first] + weights_[key.second];
    for (int m = 0; m < dim_; ++m)
      if (v[m] && !(weights_[m] == sum)) return false;
  }
  return true;
}

std::string root_label(const Weight& r) {
  int i = 0, j = 0;
  for (int t = 0; t < 6; ++t) {
    if (r.c[t] == 1) i = t + 1;
    if (r.c[t] == -1) j = t + 1;
  }
  return "E+" + std::to_string(i) + "-" + std::to_string(j);
}

namespace {

// Express a traceless 6x6 matrix in the basis H1..H{cc}, E+i-j. The diagonal
// part is written in H1..H5 by prefix sums; for the 34-dimensional quotient
// (cc = 4) the H5 coordinate folds into H1 and H3.
Vec matrix_to_coords(const Matrix& m, int cartan_count, const Field& f) {
  int dim = cartan_count + 30;
  Vec out(dim, 0);
  uint8_t lam[5];
  uint8_t acc = 0;
  for (int k = 0; k < 5; ++k) {
    acc = f.add(acc, m.get(k, k));
    lam[k] = acc;
  }
  if (f.add(acc, m.get(5, 5)) != 0)
    throw std::invalid_argument("matrix_to_coords: matrix has nonzero trace");
  if (cartan_count == 5) {
    for (int k = 0; k < 5; ++k) out[k] = lam[k];
  } else if (cartan_count == 4) {
    out[0] = f.add(lam[0], lam[4]);
    out[1] = lam[1];
    out[2] = f.add(lam[2], lam[4]);
    out[3] = lam[3];
  } else {
    throw std::invalid_argument("matrix_to_coords: unsupported Cartan size");
  }
  int p = cartan_count;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      out[p++] = m.get(i - 1, j - 1);
    }
  return out;
}

Matrix coords_to_matrix(const LieAlgebra& alg, const Vec& x) {
  const Field& f = alg.field();
  Matrix m(6, 6, f);
  int cc = alg.cartan_count();
  for (int k = 0; k < cc; ++k) {
    if (!x[k]) continue;
    m.set(k, k, f.add(m.get(k, k), x[k]));
    m.set(k + 1, k + 1, f.add(m.get(k + 1, k + 1), x[k]));
  }
  int p = cc;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      if (x[p]) m.set(i - 1, j - 1, x[p]);
      ++p;
    }
  return m;
}

}  // namespace

LieAlgebra build_sl6(int field_degree) {
  const Field& f = Field::get(field_degree);
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (int k = 1; k <= 5; ++k) {
    labels.push_back("H" + std::to_string(k));
    weights.push_back(Weight::zero());
  }
  for (const Weight& r : roots()) {
    labels.push_back(root_label(r));
    weights.push_back(r);
  }

  std::vector<Matrix> mats;
  for (int k = 0; k < 5; ++k) {
    Matrix m(6, 6, f);
    m.set(k, k, 1);
    m.set(k + 1, k + 1, 1);
    mats.push_back(m);
  }
  for (const Weight& r : roots()) {
    int i = 0, j = 0;
    for (int t = 0; t < 6; ++t) {
      if (r.c[t] == 1) i = t;
      if (r.c[t] == -1) j = t;
    }
    Matrix m(6, 6, f);
    m.set(i, j, 1);
    mats.push_back(m);
  }

  std::map<std::pair<int, int>, Vec> constants;
  int dim = int(mats.size());
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Matrix c = mats[i] * mats[j] + mats[j] * mats[i];
      Vec v = matrix_to_coords(c, 5, f);
      if (!is_zero(v)) constants[{i, j}] = std::move(v);
    }
  return LieAlgebra(f, std::move(labels), std::move(weights), std::move(constants));
}

std::vector<Vec> center(const LieAlgebra& alg) {
  int n = alg.dim();
  Matrix m(size_t(n) * n, n, alg.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& v = alg.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        if (v[k]) m.set(size_t(j) * n + k, i, v[k]);
    }
  return m.kernel_basis();
}

LieAlgebra quotient_by_center(const LieAlgebra& alg) {
  const Field& f = alg.field();
  auto z = center(alg);
  bool ok = z.size() == 1 && alg.dim() == 35;
  if (ok) {
    Vec v = z[0];
    uint8_t lead = v[0];
    if (lead == 0)
      ok = false;
    else {
      uint8_t li = f.inv(lead);
      for (auto& x : v) x = f.mul(li, x);
      for (int k = 0; k < 35; ++k) {
        uint8_t want = (k == 0 || k == 2 || k == 4) ? 1 : 0;
        if (v[k] != want) ok = false;
      }
    }
  }
  if (!ok)
    throw std::invalid_argument("quotient_by_center: center is not span{H1+H3+H5}");

  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (int k = 1; k <= 4; ++k) {
    labels.push_back("H" + std::to_string(k));
    weights.push_back(Weight::zero());
  }
  for (const Weight& r : roots()) {
    labels.push_back(root_label(r));
    weights.push_back(r);
  }
  // L index -> A index: Cartan 0..3 -> 0..3, roots shift by one
  auto a_index = [](int li) { return li < 4 ? li : li + 1; };
  auto fold = [&](const Vec& av) {
    Vec lv(34, 0);
    for (int k = 0; k < 4; ++k) lv[k] = av[k];
    lv[0] = f.add(lv[0], av[4]);  // H5 = H1 + H3 modulo the center
    lv[2] = f.add(lv[2], av[4]);
    for (int r = 0; r < 30; ++r) lv[4 + r] = av[5 + r];
    return lv;
  };
  std::map<std::pair<int, int>, Vec> constants;
  for (int i = 0; i < 34; ++i)
    for (int j = i + 1; j < 34; ++j) {
      Vec lv = fold(alg.bracket_basis(a_index(i), a_index(j)));
      if (!is_zero(lv)) constants[{i, j}] = std::move(lv);
    }
  return LieAlgebra(f, std::move(labels), std::move(weights), std::move(constants));
}

Matrix lift_to_matrix(const LieAlgebra& alg, const Vec& x) { return coords_to_matrix(alg, x); }

Vec project_from_matrix(const LieAlgebra& alg, const Matrix& m) {
  return matrix_to_coords(m, alg.cartan_count(), alg.field());
}

Vec act_gl_pre(const LieAlgebra& alg, const Matrix& g, const Matrix& g_inv, const Vec& x) {
  Matrix conj = g * coords_to_matrix(alg, x) * g_inv;
  return matrix_to_coords(conj, alg.cartan_count(), alg.field());
}

Vec act_gl(const LieAlgebra& alg, const Matrix& g, const Vec& x) {
  auto gi = g.inverse();
  if (!gi) throw std::invalid_argument("act_gl: matrix is singular");
  return act_gl_pre(alg, g, *gi, x);
}

}  // namespace a5def
