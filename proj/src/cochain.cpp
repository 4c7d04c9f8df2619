#include "a5def/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace a5def {

TupleKey pack_tuple(const std::vector<int>& idx) {
  TupleKey key = 0;
  for (int i : idx) key = (key << 6) | TupleKey(i + 1);  // +1 so index 0 is visible
  return key;
}

std::vector<int> unpack_tuple(TupleKey key, int degree) {
  std::vector<int> idx(degree);
  for (int p = degree - 1; p >= 0; --p) {
    idx[p] = int(key & 0x3f) - 1;
    key >>= 6;
  }
  return idx;
}

Cochain::Cochain(const LieAlgebra& L, int degree) : alg_(&L), degree_(degree) {
  if (degree < 0 || degree > 4) throw std::invalid_argument("Cochain: degree must be in 0..4");
}

void Cochain::accumulate(std::vector<int> idx, const Vec& v, uint8_t coeff) {
  if (int(idx.size()) != degree_) throw std::invalid_argument("Cochain: tuple arity mismatch");
  if (coeff == 0 || is_zero(v)) return;
  std::sort(idx.begin(), idx.end());
  for (size_t t = 1; t < idx.size(); ++t)
    if (idx[t] == idx[t - 1]) return;  // alternating
  TupleKey key = pack_tuple(idx);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    Vec w(alg_->dim(), 0);
    add_scaled(w, v, coeff, alg_->field());
    entries_.emplace(key, std::move(w));
  } else {
    add_scaled(it->second, v, coeff, alg_->field());
    if (is_zero(it->second)) entries_.erase(it);
  }
}

void Cochain::accumulate_coord(std::vector<int> idx, int m, uint8_t coeff) {
  accumulate(std::move(idx), unit_vec(alg_->dim(), m), coeff);
}

Vec Cochain::value_on_basis(std::vector<int> idx) const {
  if (int(idx.size()) != degree_) throw std::invalid_argument("Cochain: tuple arity mismatch");
  std::sort(idx.begin(), idx.end());
  for (size_t t = 1; t < idx.size(); ++t)
    if (idx[t] == idx[t - 1]) return Vec(alg_->dim(), 0);
  auto it = entries_.find(pack_tuple(idx));
  return it == entries_.end() ? Vec(alg_->dim(), 0) : it->second;
}

const Vec* Cochain::find_pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = entries_.find(pack_tuple({i, j}));
  return it == entries_.end() ? nullptr : &it->second;
}

Vec Cochain::evaluate(const std::vector<Vec>& args) const {
  if (int(args.size()) != degree_)
    throw std::invalid_argument("Cochain::evaluate: expected " + std::to_string(degree_) +
                                " arguments");
  const Field& f = alg_->field();
  Vec out(alg_->dim(), 0);
  std::vector<int> perm(degree_);
  for (const auto& [key, v] : entries_) {
    auto idx = unpack_tuple(key, degree_);
    // permanent of args[j][idx[perm(j)]] (characteristic 2: no signs)
    for (int p = 0; p < degree_; ++p) perm[p] = p;
    uint8_t total = 0;
    do {
      uint8_t term = 1;
      for (int p = 0; p < degree_ && term; ++p) term = f.mul(term, args[p][idx[perm[p]]]);
      total = f.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (degree_ == 0) total = 1;
    add_scaled(out, v, total, f);
  }
  return out;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (alg_ != o.alg_ || degree_ != o.degree_)
    throw std::invalid_argument("Cochain: cannot add cochains of different type");
  Cochain r = *this;
  for (const auto& [key, v] : o.entries_) {
    auto it = r.entries_.find(key);
    if (it == r.entries_.end()) {
      r.entries_.emplace(key, v);
    } else {
      add_scaled(it->second, v, 1, alg_->field());
      if (is_zero(it->second)) r.entries_.erase(it);
    }
  }
  return r;
}

Cochain Cochain::scaled(uint8_t c) const {
  Cochain r(*alg_, degree_);
  if (c == 0) return r;
  for (const auto& [key, v] : entries_) {
    Vec w(alg_->dim(), 0);
    add_scaled(w, v, c, alg_->field());
    r.entries_.emplace(key, std::move(w));
  }
  return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.alg_ == b.alg_ && a.degree_ == b.degree_ && a.entries_ == b.entries_;
}

Cochain bracket_cochain(const LieAlgebra& L) {
  Cochain b(L, 2);
  for (const auto& [key, v] : L.constants()) b.accumulate({key.first, key.second}, v);
  return b;
}

Cochain differential(const Cochain& c) {
  const LieAlgebra& L = c.algebra();
  if (c.degree() > 3)
    throw std::invalid_argument("differential: degree capped at 3 (result degree 4)");
  Cochain d(L, c.degree() + 1);
  std::vector<int> idx;
  for (const auto& [key, v] : c.entries()) {
    auto t = unpack_tuple(key, c.degree());
    auto in_t = [&](int a) { return std::find(t.begin(), t.end(), a) != t.end(); };
    // [e_a, c(t)] at t + {a}
    for (int a = 0; a < L.dim(); ++a) {
      if (in_t(a)) continue;
      Vec w = L.bracket_basis_with(a, v);
      if (is_zero(w)) continue;
      idx = t;
      idx.push_back(a);
      d.accumulate(idx, w);
    }
    // c([e_a, e_b], t \ {m}) at (t \ {m}) + {a, b}
    for (size_t p = 0; p < t.size(); ++p) {
      std::vector<int> rest;
      rest.reserve(t.size() - 1);
      for (size_t q = 0; q < t.size(); ++q)
        if (q != p) rest.push_back(t[q]);
      auto in_rest = [&](int a) { return std::find(rest.begin(), rest.end(), a) != rest.end(); };
      for (const auto& [a, b, coeff] : L.pairs_hitting(t[p])) {
        if (in_rest(a) || in_rest(b)) continue;
        idx = rest;
        idx.push_back(a);
        idx.push_back(b);
        d.accumulate(idx, v, coeff);
      }
    }
  }
  return d;
}

Cochain cup(const Cochain& a, const Cochain& b) {
  if (a.degree() != 2 || b.degree() != 2)
    throw std::invalid_argument("cup: both cochains must have degree 2");
  if (&a.algebra() != &b.algebra()) throw std::invalid_argument("cup: different algebras");
  const LieAlgebra& L = a.algebra();
  const Field& f = L.field();
  Cochain r(L, 3);
  for (const auto& [key, v] : b.entries()) {
    auto t = unpack_tuple(key, 2);
    for (int z = 0; z < L.dim(); ++z) {
      if (z == t[0] || z == t[1]) continue;
      Vec val(L.dim(), 0);
      for (int m = 0; m < L.dim(); ++m) {
        if (!v[m] || m == z) continue;
        if (const Vec* av = a.find_pair(m, z)) add_scaled(val, *av, v[m], f);
      }
      if (!is_zero(val)) r.accumulate({t[0], t[1], z}, val);
    }
  }
  return r;
}

Cochain cbracket(const Cochain& a, const Cochain& b) { return cup(a, b) + cup(b, a); }

size_t set_count(const Cochain& c) {
  const LieAlgebra& L = c.algebra();
  int cartan = L.cartan_count();
  size_t n = 0;
  for (const auto& [key, v] : c.entries()) {
    auto t = unpack_tuple(key, c.degree());
    if (std::any_of(t.begin(), t.end(), [&](int i) { return i < cartan; })) continue;
    bool cartan_value = false;
    size_t unit_roots = 0;
    for (int m = 0; m < L.dim(); ++m) {
      if (!v[m]) continue;
      if (m < cartan)
        cartan_value = true;
      else if (v[m] == 1)
        ++unit_roots;
    }
    if (!cartan_value) n += unit_roots;
  }
  return n;
}

Cochain act(const Matrix& g, const Cochain& c) {
  const LieAlgebra& L = c.algebra();
  const Field& f = L.field();
  auto gi = g.inverse();
  if (!gi) throw std::invalid_argument("act: matrix is singular");
  int n = L.dim();
  std::vector<Vec> binv(n);
  for (int i = 0; i < n; ++i) binv[i] = act_gl_pre(L, *gi, g, L.basis_vector(i));

  Cochain r(L, c.degree());
  if (c.degree() == 2) {
    for (const auto& [key, v] : c.entries()) {
      auto t = unpack_tuple(key, 2);
      Vec gv = act_gl_pre(L, g, *gi, v);
      for (int i = 0; i < n; ++i) {
        uint8_t bip = binv[i][t[0]], biq = binv[i][t[1]];
        if (!bip && !biq) continue;
        for (int j = i + 1; j < n; ++j) {
          uint8_t coeff = f.add(f.mul(bip, binv[j][t[1]]), f.mul(biq, binv[j][t[0]]));
          if (coeff) r.accumulate({i, j}, gv, coeff);
        }
      }
    }
    return r;
  }
  // generic degree: evaluate on every increasing tuple
  int k = c.degree();
  std::vector<int> tup(k);
  for (int p = 0; p < k; ++p) tup[p] = p;
  auto advance = [&]() {
    int p = k - 1;
    while (p >= 0 && tup[p] == n - k + p) --p;
    if (p < 0) return false;
    ++tup[p];
    for (int q = p + 1; q < k; ++q) tup[q] = tup[q - 1] + 1;
    return true;
  };
  if (k == 0) {
    Vec val = c.evaluate({});
    r.accumulate({}, act_gl_pre(L, g, *gi, val));
    return r;
  }
  do {
    std::vector<Vec> args;
    args.reserve(k);
    for (int p = 0; p < k; ++p) args.push_back(binv[tup[p]]);
    Vec val = c.evaluate(args);
    if (!is_zero(val)) r.accumulate(tup, act_gl_pre(L, g, *gi, val));
  } while (advance());
  return r;
}

Weight entry_weight(const LieAlgebra& L, TupleKey key, int degree, int value_coord) {
  Weight w = L.weight_of(value_coord);
  for (int i : unpack_tuple(key, degree)) w = w - L.weight_of(i);
  return w;
}

std::map<Weight, Cochain> weight_components(const Cochain& c) {
  const LieAlgebra& L = c.algebra();
  std::map<Weight, Cochain> out;
  for (const auto& [key, v] : c.entries()) {
    auto idx = unpack_tuple(key, c.degree());
    Weight base = Weight::zero();
    for (int i : idx) base = base - L.weight_of(i);
    for (int m = 0; m < L.dim(); ++m) {
      if (!v[m]) continue;
      Weight w = base + L.weight_of(m);
      auto it = out.find(w);
      if (it == out.end()) it = out.emplace(w, Cochain(L, c.degree())).first;
      it->second.accumulate_coord(idx, m, v[m]);
    }
  }
  return out;
}

std::optional<Weight> homogeneous_weight(const Cochain& c) {
  auto comps = weight_components(c);
  if (comps.size() != 1) return std::nullopt;
  return comps.begin()->first;
}

}  // namespace a5def
