#include "a5def/simplicity.hpp"

#include <random>
#include <stdexcept>

namespace a5def {

const char* verdict_name(SimplicityReport::Verdict v) {
  switch (v) {
    case SimplicityReport::Verdict::Simple: return "simple";
    case SimplicityReport::Verdict::ProperIdealFound: return "proper_ideal_found";
    case SimplicityReport::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Echelon basis keyed by leading index.
struct Echelon {
  const Field* f;
  std::vector<Vec> rows;  // each with unit leading coefficient, leads increasing insert order

  // reduce x against the rows; x becomes the residue
  void reduce(Vec& x) const {
    for (const auto& r : rows) {
      size_t lead = 0;
      while (lead < r.size() && !r[lead]) ++lead;
      if (lead < x.size() && x[lead]) add_scaled(x, r, x[lead], *f);
    }
  }
  // returns true when x was new (inserted)
  bool insert(Vec x) {
    reduce(x);
    size_t lead = 0;
    while (lead < x.size() && !x[lead]) ++lead;
    if (lead == x.size()) return false;
    uint8_t li = f->inv(x[lead]);
    for (auto& c : x) c = f->mul(li, c);
    rows.push_back(std::move(x));
    return true;
  }
};

template <typename Apply>
std::vector<Vec> spin(const Field& f, int n_gens, const Vec& v, Apply&& apply) {
  Echelon ech{&f, {}};
  std::vector<Vec> queue;
  if (ech.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vec x = std::move(queue.back());
    queue.pop_back();
    for (int g = 0; g < n_gens; ++g) {
      Vec y = apply(g, x);
      if (ech.insert(y)) queue.push_back(std::move(y));
    }
  }
  return ech.rows;
}

// enumerate nonzero coefficient vectors in F_q^s with unit leading
// coefficient (one per projective point)
template <typename Fn>
void for_each_projective(const Field& f, int s, Fn&& fn) {
  unsigned q = f.order();
  std::vector<uint8_t> c(s, 0);
  for (int lead = s - 1; lead >= 0; --lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    // free positions after lead run over all field values
    int free = s - 1 - lead;
    unsigned total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (unsigned code = 0; code < total; ++code) {
      unsigned x = code;
      for (int i = lead + 1; i < s; ++i) {
        c[i] = uint8_t(x % q);
        x /= q;
      }
      if (!fn(c)) return;
    }
  }
}

bool closed_under_brackets(const LieAlgebra& alg, const std::vector<Vec>& basis) {
  Echelon ech{&alg.field(), {}};
  for (const auto& b : basis) ech.insert(b);
  for (const auto& b : basis)
    for (int i = 0; i < alg.dim(); ++i) {
      Vec y = alg.bracket_basis_with(i, b);
      ech.reduce(y);
      if (!is_zero(y)) return false;
    }
  return true;
}

}  // namespace

std::vector<Vec> smallest_ideal_containing(const LieAlgebra& alg, const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("smallest_ideal_containing: v must be nonzero");
  return spin(alg.field(), alg.dim(), v,
              [&](int g, const Vec& x) { return alg.bracket_basis_with(g, x); });
}

SimplicityReport is_simple(const LieAlgebra& alg, int trials, uint64_t seed) {
  if (alg.dim() < 2) throw std::invalid_argument("is_simple: dim must be >= 2");
  const Field& f = alg.field();
  int n = alg.dim();
  SimplicityReport rep;
  rep.seed = seed;

  std::vector<Matrix> ad;
  ad.reserve(n);
  for (int i = 0; i < n; ++i) {
    Matrix m(n, n, f);
    for (int j = 0; j < n; ++j) {
      const Vec& v = alg.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        if (v[k]) m.set(k, j, v[k]);
    }
    ad.push_back(std::move(m));
  }
  std::vector<Matrix> adt;
  adt.reserve(n);
  for (int i = 0; i < n; ++i) adt.push_back(ad[i].transposed());

  std::mt19937_64 rng(seed);
  const int max_nullity = 10;  // enumerating larger null spaces is wasteful; redraw instead

  auto emit_witness = [&](std::vector<Vec> basis, int trial) {
    if (basis.empty() || int(basis.size()) >= n || !closed_under_brackets(alg, basis))
      throw std::logic_error("is_simple: witness failed re-verification");
    rep.verdict = SimplicityReport::Verdict::ProperIdealFound;
    rep.witness = std::move(basis);
    rep.trials_used = trial;
    return rep;
  };

  for (int trial = 1; trial <= trials; ++trial) {
    rep.trials_used = trial;
    // random element of the enveloping algebra: sum of products of ads,
    // words up to length 4
    Matrix theta(n, n, f);
    int words = 1 + int(rng() % 4);
    for (int w = 0; w < words; ++w) {
      int len = 1 + int(rng() % 4);
      Matrix m = ad[rng() % n];
      for (int s = 1; s < len; ++s) m = m * ad[rng() % n];
      theta = theta + m;
    }
    auto null_basis = theta.kernel_basis();
    int s = int(null_basis.size());
    if (s == 0 || s > max_nullity) continue;

    // primal side: every nonzero null vector must generate everything
    bool primal_full = true;
    Vec bad;
    for_each_projective(f, s, [&](const std::vector<uint8_t>& coeffs) {
      Vec v(n, 0);
      for (int i = 0; i < s; ++i) add_scaled(v, null_basis[i], coeffs[i], f);
      auto sub = spin(f, n, v, [&](int g, const Vec& x) { return ad[g].apply(x); });
      if (int(sub.size()) < n) {
        primal_full = false;
        bad = v;
        return false;
      }
      return true;
    });
    if (!primal_full) return emit_witness(smallest_ideal_containing(alg, bad), trial);

    // dual side on the transpose module; a proper dual submodule D gives the
    // proper ideal {x : f(x) = 0 for all f in D}
    Matrix theta_t = theta.transposed();
    auto dual_null = theta_t.kernel_basis();
    int st = int(dual_null.size());
    bool dual_full = true;
    std::vector<Vec> dual_sub;
    for_each_projective(f, st, [&](const std::vector<uint8_t>& coeffs) {
      Vec v(n, 0);
      for (int i = 0; i < st; ++i) add_scaled(v, dual_null[i], coeffs[i], f);
      auto sub = spin(f, n, v, [&](int g, const Vec& x) { return adt[g].apply(x); });
      if (int(sub.size()) < n) {
        dual_full = false;
        dual_sub = sub;
        return false;
      }
      return true;
    });
    if (!dual_full) {
      Matrix functionals(dual_sub.size(), n, f);
      for (size_t r = 0; r < dual_sub.size(); ++r)
        for (int c = 0; c < n; ++c)
          if (dual_sub[r][c]) functionals.set(r, c, dual_sub[r][c]);
      return emit_witness(functionals.kernel_basis(), trial);
    }

    rep.verdict = SimplicityReport::Verdict::Simple;
    rep.certificate_trial = trial;
    rep.certificate_nullity = s;
    return rep;
  }
  rep.verdict = SimplicityReport::Verdict::Inconclusive;
  return rep;
}

}  // namespace a5def
