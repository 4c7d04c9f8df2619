#include "a5def/deform.hpp"

namespace a5def {

DeformedBracket::DeformedBracket(std::vector<Cochain> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("DeformedBracket: no terms");
  for (const auto& t : terms_) {
    if (t.degree() != 2) throw std::invalid_argument("DeformedBracket: terms must have degree 2");
    if (&t.algebra() != &terms_[0].algebra())
      throw std::invalid_argument("DeformedBracket: mixed algebras");
  }
  if (!(terms_[0] == bracket_cochain(terms_[0].algebra())))
    throw std::invalid_argument("DeformedBracket: b0 must be the bracket of the algebra");
}

std::map<int, Cochain> jacobi_coefficients(const DeformedBracket& f) {
  const LieAlgebra& L = f.algebra();
  int m = f.t_degree();
  std::map<int, Cochain> out;
  for (int d = 0; d <= 2 * m; ++d) {
    Cochain acc(L, 3);
    for (int i = std::max(0, d - m); i <= std::min(m, d); ++i)
      acc = acc + cup(f.term(i), f.term(d - i));
    out.emplace(d, std::move(acc));
  }
  return out;
}

Cochain phi_paper(const LieAlgebra& L) {
  auto E = [&](int i, int j) { return L.root_index(Weight::root(i, j)); };
  Cochain phi(L, 2);
  phi.accumulate_coord({E(5, 1), E(6, 5)}, E(1, 6), 1);
  phi.accumulate_coord({E(5, 1), E(6, 1)}, E(5, 6), 1);
  phi.accumulate_coord({E(6, 1), E(6, 5)}, E(1, 5), 1);
  phi.accumulate_coord({E(6, 4), E(4, 1)}, E(1, 6), 1);
  phi.accumulate_coord({E(4, 1), E(6, 1)}, E(4, 6), 1);
  phi.accumulate_coord({E(6, 1), E(6, 4)}, E(1, 4), 1);
  return phi;
}

namespace {

void verify_jacobi_zero(const DeformedBracket& f, const char* what) {
  for (const auto& [d, c] : jacobi_coefficients(f))
    if (!c.is_zero())
      throw verification_error(std::string(what) + ": Jacobi coefficient at t^" +
                               std::to_string(d) + " is nonzero");
}

}  // namespace

DeformedBracket build_type_ii(const LieAlgebra& L) {
  Cochain psi = basis_cocycle(L, h2_weights().front());  // e1+e2+e3-e4-e5-e6
  DeformedBracket f({bracket_cochain(L), psi});
  verify_jacobi_zero(f, "build_type_ii");
  return f;
}

DeformedBracket build_type_iii(const LieAlgebra& L) {
  Weight mu1 = h2_weights().front();
  Weight mu2;
  mu2.c = {1, -1, -1, 1, 1, -1};
  Cochain psi = basis_cocycle(L, mu1) + basis_cocycle(L, mu2);
  DeformedBracket f({bracket_cochain(L), psi, phi_paper(L)});
  verify_jacobi_zero(f, "build_type_iii");
  return f;
}

ObstructionReport obstruction_status(const Cohomology& coh, const Cochain& psi) {
  if (psi.degree() != 2) throw std::invalid_argument("obstruction_status: expected a 2-cochain");
  if (!differential(psi).is_zero())
    throw std::invalid_argument("obstruction_status: input is not a cocycle");
  ObstructionReport rep;
  Cochain q = cup(psi, psi);
  if (q.is_zero()) {
    rep.vanishes_identically = true;
    rep.coboundary = true;
    rep.witness = Cochain(psi.algebra(), 2);
    return rep;
  }
  auto sol = coh.is_coboundary(q);
  rep.coboundary = sol.has_value();
  rep.witness = std::move(sol);
  return rep;
}

LieAlgebra specialize(const DeformedBracket& f, uint8_t t0) {
  const LieAlgebra& L = f.algebra();
  const Field& fld = L.field();
  for (const auto& [d, c] : jacobi_coefficients(f))
    if (!c.is_zero())
      throw verification_error("specialize: Jacobi coefficient at t^" + std::to_string(d) +
                               " does not vanish");
  std::map<std::pair<int, int>, Vec> constants;
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      Vec acc(L.dim(), 0);
      for (int d = 0; d <= f.t_degree(); ++d)
        add_scaled(acc, f.term(d).value_on_basis({i, j}), fld.pow(t0, d), fld);
      if (!is_zero(acc)) constants[{i, j}] = std::move(acc);
    }
  return LieAlgebra(fld, L.labels(), L.weights(), std::move(constants));
}

}  // namespace a5def
