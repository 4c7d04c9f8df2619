#include "a5def/trivector.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace a5def {

void Trivector::add_term(std::array<int, 3> t, uint8_t c) {
  if (c == 0) return;
  std::sort(t.begin(), t.end());
  if (t[0] < 1 || t[2] > 6) throw std::invalid_argument("Trivector: indices must be in 1..6");
  if (t[0] == t[1] || t[1] == t[2]) return;
  uint8_t v = field_->add(coeff(t), c);
  if (v)
    coeffs_[t] = v;
  else
    coeffs_.erase(t);
}

uint8_t Trivector::coeff(std::array<int, 3> t) const {
  std::sort(t.begin(), t.end());
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? 0 : it->second;
}

Trivector Trivector::operator+(const Trivector& o) const {
  Trivector r = *this;
  for (const auto& [t, c] : o.coeffs_) r.add_term(t, c);
  return r;
}

const char* orbit_tag_name(OrbitTag t) {
  switch (t) {
    case OrbitTag::I: return "I";
    case OrbitTag::II: return "II";
    case OrbitTag::III: return "III";
    case OrbitTag::IV: return "IV";
    case OrbitTag::V: return "V";
  }
  return "?";
}

const char* trivector_class_name(TrivectorClass c) {
  switch (c) {
    case TrivectorClass::I: return "I";
    case TrivectorClass::II: return "II";
    case TrivectorClass::III: return "III";
    case TrivectorClass::RANK6: return "RANK6";
  }
  return "?";
}

std::optional<OrbitTag> orbit_tag_from_name(const std::string& s) {
  if (s == "I") return OrbitTag::I;
  if (s == "II") return OrbitTag::II;
  if (s == "III") return OrbitTag::III;
  if (s == "IV") return OrbitTag::IV;
  if (s == "V") return OrbitTag::V;
  return std::nullopt;
}

Trivector canonical(OrbitTag tag, const Field& f) {
  Trivector w(f);
  switch (tag) {
    case OrbitTag::I:
      break;
    case OrbitTag::II:
      w.add_term({1, 2, 3}, 1);
      break;
    case OrbitTag::III:
      w.add_term({1, 2, 3}, 1);
      w.add_term({1, 4, 5}, 1);
      break;
    case OrbitTag::IV:
      w.add_term({1, 5, 6}, 1);
      w.add_term({2, 6, 4}, 1);
      w.add_term({3, 4, 5}, 1);
      break;
    case OrbitTag::V:
      w.add_term({1, 2, 3}, 1);
      w.add_term({4, 5, 6}, 1);
      break;
  }
  return w;
}

int trivector_rank(const Trivector& w) {
  const Field& f = w.field();
  Matrix m(15, 6, f);
  int row = 0;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b, ++row)
      for (const auto& [t, c] : w.coeffs()) {
        bool has_a = t[0] == a || t[1] == a || t[2] == a;
        bool has_b = t[0] == b || t[1] == b || t[2] == b;
        if (!has_a || !has_b) continue;
        int third = t[0] + t[1] + t[2] - a - b;
        m.set(row, third - 1, f.add(m.get(row, third - 1), c));
      }
  return int(m.rank());
}

TrivectorClass classify(const Trivector& w) {
  switch (trivector_rank(w)) {
    case 0: return TrivectorClass::I;
    case 3: return TrivectorClass::II;
    case 5: return TrivectorClass::III;
    case 6: return TrivectorClass::RANK6;
    default:
      throw std::logic_error("classify: computed rank violates exterior-algebra structure");
  }
}

Trivector wedge(const Field& f, const Vec& u1, const Vec& u2, const Vec& u3) {
  Trivector w(f);
  const Vec* u[3] = {&u1, &u2, &u3};
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) {
        // 3x3 determinant = permanent in characteristic 2
        int rows[3] = {i - 1, j - 1, k - 1};
        uint8_t det = 0;
        int perm[3] = {0, 1, 2};
        do {
          uint8_t t = 1;
          for (int p = 0; p < 3 && t; ++p) t = f.mul(t, (*u[perm[p]])[rows[p]]);
          det = f.add(det, t);
        } while (std::next_permutation(perm, perm + 3));
        if (det) w.add_term({i, j, k}, det);
      }
  return w;
}

Trivector apply_gl(const Matrix& g, const Trivector& w) {
  if (g.rows() != 6 || g.cols() != 6) throw std::invalid_argument("apply_gl: expected 6x6");
  const Field& f = w.field();
  Trivector out(f);
  for (const auto& [t, c] : w.coeffs()) {
    Vec cols[3];
    for (int p = 0; p < 3; ++p) {
      cols[p].assign(6, 0);
      for (int r = 0; r < 6; ++r) cols[p][r] = g.get(r, t[p] - 1);
    }
    Trivector piece = wedge(f, cols[0], cols[1], cols[2]);
    for (const auto& [s, d] : piece.coeffs()) out.add_term(s, f.mul(c, d));
  }
  return out;
}

Weight weight_of_triple(const std::array<int, 3>& t) {
  Weight mu;
  for (int i = 0; i < 6; ++i) mu.c[i] = -1;
  for (int p : t) mu.c[p - 1] = 1;
  return mu;
}

std::array<int, 3> triple_of_weight(const Weight& mu) {
  std::array<int, 3> t{};
  int n = 0;
  for (int i = 0; i < 6; ++i)
    if (mu.c[i] == 1) {
      if (n == 3) throw std::invalid_argument("triple_of_weight: not an H^2 weight");
      t[n++] = i + 1;
    }
  if (n != 3) throw std::invalid_argument("triple_of_weight: not an H^2 weight");
  return t;
}

Cochain to_cocycle(const LieAlgebra& L, const Trivector& w) {
  const Field& f = L.field();
  Cochain acc(L, 2);
  for (const auto& [t, c] : w.coeffs())
    acc = acc + basis_cocycle(L, weight_of_triple(t)).scaled(f.mul(c, c));
  return acc;
}

Trivector from_class(const LieAlgebra& L, const Cochain& z) {
  if (z.degree() != 2) throw std::invalid_argument("from_class: expected a 2-cochain");
  if (!differential(z).is_zero()) throw std::invalid_argument("from_class: input is not a cocycle");
  const Field& f = L.field();
  Trivector w(f);
  auto comps = weight_components(z);
  for (const Weight& mu : h2_weights()) {
    auto it = comps.find(mu);
    if (it == comps.end()) continue;
    Cochain psi = basis_cocycle(L, mu);
    // Z^2 at an H^2 weight is the line through psi_mu, so the component is
    // lambda * psi_mu; read lambda off the first entry.
    const auto& [key, v] = *psi.entries().begin();
    uint8_t lambda = 0;
    for (int m = 0; m < L.dim(); ++m)
      if (v[m]) {
        auto cit = it->second.entries().find(key);
        if (cit != it->second.entries().end()) lambda = f.mul(cit->second[m], f.inv(v[m]));
        break;
      }
    if (!(it->second == psi.scaled(lambda)))
      throw std::logic_error("from_class: cocycle component is not proportional to psi_mu");
    if (lambda) w.add_term(triple_of_weight(mu), f.sqrt(lambda));
  }
  return w;
}

std::optional<std::pair<std::array<Vec, 3>, std::array<Vec, 3>>> pair_decomposition_search(
    const Trivector& w, int trials, uint64_t seed) {
  const Field& f = w.field();
  std::mt19937_64 rng(seed);
  auto random_vec = [&] {
    Vec v(6, 0);
    for (auto& x : v) x = uint8_t(rng() % f.order());
    return v;
  };
  for (int t = 0; t < trials; ++t) {
    std::array<Vec, 3> u{random_vec(), random_vec(), random_vec()};
    Trivector rest = w + wedge(f, u[0], u[1], u[2]);
    int r = rest.is_zero() ? 0 : trivector_rank(rest);
    if (r != 0 && r != 3) continue;
    std::array<Vec, 3> v{Vec(6, 0), Vec(6, 0), Vec(6, 0)};
    if (r == 3) {
      // rank 3 means rest = c * (basis of its support wedge); recover a basis
      // from the double-contraction span
      Matrix m(15, 6, f);
      int row = 0;
      for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b, ++row)
          for (const auto& [tr, c] : rest.coeffs()) {
            bool has_a = tr[0] == a || tr[1] == a || tr[2] == a;
            bool has_b = tr[0] == b || tr[1] == b || tr[2] == b;
            if (!has_a || !has_b) continue;
            int third = tr[0] + tr[1] + tr[2] - a - b;
            m.set(row, third - 1, f.add(m.get(row, third - 1), c));
          }
      // echelonize the 15 contraction rows to get 3 independent vectors
      Matrix mt = m.transposed();
      std::vector<Vec> basis;
      {
        std::vector<Vec> rows;
        for (size_t rr = 0; rr < 15; ++rr) {
          Vec x(6, 0);
          bool nz = false;
          for (int cc = 0; cc < 6; ++cc) {
            x[cc] = m.get(rr, cc);
            nz = nz || x[cc];
          }
          if (nz) rows.push_back(x);
        }
        for (auto& x : rows) {
          for (const auto& bvec : basis) {
            int lead = 0;
            while (lead < 6 && !bvec[lead]) ++lead;
            if (lead < 6 && x[lead]) add_scaled(x, bvec, f.mul(x[lead], f.inv(bvec[lead])), f);
          }
          if (!is_zero(x) && basis.size() < 3) basis.push_back(x);
        }
      }
      if (basis.size() != 3) continue;
      Trivector probe = wedge(f, basis[0], basis[1], basis[2]);
      // rest = c * probe for some scalar c; fold c into the first vector
      uint8_t c = 0;
      if (!probe.is_zero()) {
        auto [pt, pc] = *probe.coeffs().begin();
        c = f.mul(rest.coeff(pt), f.inv(pc));
      }
      Vec scaled = basis[0];
      for (auto& x : scaled) x = f.mul(c, x);
      if (!(wedge(f, scaled, basis[1], basis[2]) == rest)) continue;
      v = {scaled, basis[1], basis[2]};
    }
    if (wedge(f, u[0], u[1], u[2]) + wedge(f, v[0], v[1], v[2]) == w)
      return std::make_pair(u, v);
  }
  return std::nullopt;
}

}  // namespace a5def
