#include "a5def/cohomology.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <stdexcept>

#include "a5def/util.hpp"

namespace a5def {

const H2Block* H2Summary::block(const Weight& w) const {
  for (const auto& b : blocks)
    if (b.weight == w) return &b;
  return nullptr;
}

Cochain basis_cocycle(const LieAlgebra& L, const Weight& mu) {
  const auto& h2w = h2_weights();
  if (std::find(h2w.begin(), h2w.end(), mu) == h2w.end())
    throw std::invalid_argument("basis_cocycle: " + mu.str() + " is not an H^2 weight");
  Cochain psi(L, 2);
  const auto& R = roots();
  for (size_t a = 0; a < R.size(); ++a)
    for (size_t b = a + 1; b < R.size(); ++b) {
      Weight target = R[a] + R[b] + mu;
      if (!target.is_root()) continue;
      psi.accumulate_coord({L.root_index(R[a]), L.root_index(R[b])}, L.root_index(target), 1);
    }
  return psi;
}

namespace {

uint64_t coord_key(TupleKey t, int m) { return (uint64_t(t) << 8) | uint64_t(m); }

using SparseVec = std::vector<std::pair<uint64_t, uint8_t>>;

SparseVec sparse_of(const Cochain& c) {
  SparseVec out;
  for (const auto& [key, v] : c.entries())
    for (int m = 0; m < c.algebra().dim(); ++m)
      if (v[m]) out.emplace_back(coord_key(key, m), v[m]);
  return out;  // map iteration keeps keys sorted
}

size_t rank_of(const std::vector<SparseVec>& cols, const Field& f) {
  std::vector<uint64_t> keys;
  for (const auto& col : cols)
    for (const auto& [k, v] : col) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::map<uint64_t, size_t> row_of;
  for (size_t r = 0; r < keys.size(); ++r) row_of[keys[r]] = r;
  Matrix m(cols.size(), keys.size(), f);
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [k, v] : cols[c]) m.set(c, row_of[k], v);
  return m.rank();
}

// Solve sum_c x_c * cols[c] = rhs exactly.
std::optional<Vec> solve_sparse(const std::vector<SparseVec>& cols, const SparseVec& rhs,
                                const Field& f) {
  std::vector<uint64_t> keys;
  for (const auto& col : cols)
    for (const auto& [k, v] : col) keys.push_back(k);
  for (const auto& [k, v] : rhs) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::map<uint64_t, size_t> row_of;
  for (size_t r = 0; r < keys.size(); ++r) row_of[keys[r]] = r;
  Matrix m(keys.size(), cols.size(), f);
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [k, v] : cols[c]) m.set(row_of[k], c, v);
  Vec b(keys.size(), 0);
  for (const auto& [k, v] : rhs) b[row_of[k]] = v;
  return m.solve(b);
}

}  // namespace

Cohomology::Cohomology(const LieAlgebra& L) : L_(&L) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight base = Weight::zero() - L.weight_of(i) - L.weight_of(j);
      for (int m = 0; m < n; ++m) c2_[base + L.weight_of(m)].push_back({i, j, m});
    }
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) c1_[L.weight_of(m) - L.weight_of(i)].push_back({i, m});
}

std::vector<Cohomology::SparseVec> Cohomology::d2_images(const Weight& w) const {
  auto it = c2_.find(w);
  std::vector<SparseVec> cols;
  if (it == c2_.end()) return cols;
  cols.reserve(it->second.size());
  for (const auto& e : it->second) {
    Cochain c(*L_, 2);
    c.accumulate_coord({e.i, e.j}, e.m, 1);
    cols.push_back(sparse_of(differential(c)));
  }
  return cols;
}

std::vector<Cohomology::SparseVec> Cohomology::d1_images(const Weight& w) const {
  auto it = c1_.find(w);
  std::vector<SparseVec> cols;
  if (it == c1_.end()) return cols;
  cols.reserve(it->second.size());
  for (const auto& e : it->second) {
    Cochain c(*L_, 1);
    c.accumulate_coord({e.i}, e.m, 1);
    cols.push_back(sparse_of(differential(c)));
  }
  return cols;
}

const std::vector<Cohomology::SparseVec>& Cohomology::d2_images_cached(const Weight& w) const {
  auto it = d2_cols_.find(w);
  if (it == d2_cols_.end()) it = d2_cols_.emplace(w, d2_images(w)).first;
  return it->second;
}

const std::vector<Cohomology::SparseVec>& Cohomology::d1_images_cached(const Weight& w) const {
  auto it = d1_cols_.find(w);
  if (it == d1_cols_.end()) it = d1_cols_.emplace(w, d1_images(w)).first;
  return it->second;
}

H2Summary Cohomology::h2_summary(uint64_t shuffle_seed) const {
  std::vector<Weight> weights;
  weights.reserve(c2_.size());
  for (const auto& [w, entries] : c2_) weights.push_back(w);

  auto compute_block = [&](const Weight& w, size_t widx) {
    H2Block blk;
    blk.weight = w;
    auto cols = d2_images(w);
    if (shuffle_seed != 0) {
      std::mt19937_64 rng(shuffle_seed + widx);
      std::shuffle(cols.begin(), cols.end(), rng);
    }
    blk.dim_c2 = int(cols.size());
    blk.dim_z2 = blk.dim_c2 - int(rank_of(cols, L_->field()));
    auto bcols = d1_images(w);
    if (shuffle_seed != 0) {
      std::mt19937_64 rng(shuffle_seed * 31 + widx);
      std::shuffle(bcols.begin(), bcols.end(), rng);
    }
    blk.dim_b2 = int(rank_of(bcols, L_->field()));
    blk.dim_h2 = blk.dim_z2 - blk.dim_b2;
    return blk;
  };

  H2Summary out;
  out.blocks.resize(weights.size());
  int workers = thread_count();
  if (workers <= 1) {
    for (size_t i = 0; i < weights.size(); ++i) out.blocks[i] = compute_block(weights[i], i);
  } else {
    std::vector<std::future<void>> futs;
    for (int t = 0; t < workers; ++t)
      futs.push_back(std::async(std::launch::async, [&, t] {
        for (size_t i = t; i < weights.size(); i += workers)
          out.blocks[i] = compute_block(weights[i], i);
      }));
    for (auto& f : futs) f.get();
  }
  for (const auto& b : out.blocks) out.total_h2 += b.dim_h2;
  for (const Weight& mu : h2_weights()) out.basis_cocycles.emplace_back(mu, basis_cocycle(*L_, mu));
  return out;
}

std::optional<Cochain> Cohomology::is_coboundary(const Cochain& c) const {
  if (c.degree() != 3) throw std::invalid_argument("is_coboundary: expected a 3-cochain");
  Cochain phi(*L_, 2);
  for (const auto& [w, comp] : weight_components(c)) {
    auto bucket = c2_.find(w);
    if (bucket == c2_.end()) return std::nullopt;
    const auto& cols = d2_images_cached(w);
    auto sol = solve_sparse(cols, sparse_of(comp), L_->field());
    if (!sol) return std::nullopt;
    const auto& entries = bucket->second;
    for (size_t k = 0; k < entries.size(); ++k)
      if ((*sol)[k]) phi.accumulate_coord({entries[k].i, entries[k].j}, entries[k].m, (*sol)[k]);
  }
  return phi;
}

bool Cohomology::classes_equal(const Cochain& a, const Cochain& b) const {
  if (a.degree() != 2 || b.degree() != 2)
    throw std::invalid_argument("classes_equal: expected 2-cochains");
  if (!differential(a).is_zero() || !differential(b).is_zero())
    throw std::invalid_argument("classes_equal: inputs must be cocycles");
  Cochain s = a + b;
  for (const auto& [w, comp] : weight_components(s)) {
    auto bucket = c1_.find(w);
    if (bucket == c1_.end()) return false;
    const auto& cols = d1_images_cached(w);
    if (!solve_sparse(cols, sparse_of(comp), L_->field())) return false;
  }
  return true;
}

}  // namespace a5def
