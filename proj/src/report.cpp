#include "a5def/report.hpp"

#include <algorithm>

#include "a5def/simplicity.hpp"

namespace a5def {

namespace {

template <typename T>
void expect(PaperReport& r, const std::string& what, const T& got, const T& want) {
  if (!(got == want)) {
    if constexpr (std::is_same_v<T, bool>)
      r.mismatches.push_back(what + ": got " + (got ? "true" : "false"));
    else if constexpr (std::is_arithmetic_v<T>)
      r.mismatches.push_back(what + ": got " + std::to_string(got) + ", expected " +
                             std::to_string(want));
    else
      r.mismatches.push_back(what + ": mismatch");
  }
}

}  // namespace

PaperReport run_paper_report(int field_degree, uint64_t seed, int trials) {
  PaperReport r;
  r.seed = seed;
  r.trials = trials;

  LieAlgebra A = build_sl6(field_degree);
  r.dim_a = A.dim();
  expect(r, "dim A", r.dim_a, 35);
  auto z = center(A);
  r.center_dim = int(z.size());
  expect(r, "center dim", r.center_dim, 1);

  LieAlgebra L = quotient_by_center(A);
  r.dim_l = L.dim();
  expect(r, "dim L", r.dim_l, 34);

  Cohomology coh(L);
  H2Summary h2 = coh.h2_summary();
  r.dim_h2 = h2.total_h2;
  expect(r, "dim H2", r.dim_h2, 20);

  std::set<Weight> orbit = weyl_orbit(h2_weights().front());
  std::set<Weight> found;
  r.h2_all_one_dimensional = true;
  r.b2_zero_at_h2_weights = true;
  for (const auto& b : h2.blocks)
    if (b.dim_h2 > 0) {
      found.insert(b.weight);
      if (b.dim_h2 != 1) r.h2_all_one_dimensional = false;
      if (b.dim_b2 != 0) r.b2_zero_at_h2_weights = false;
    }
  r.h2_weights_are_orbit = found == orbit;
  expect(r, "H2 weights = Weyl orbit of a1+a3+a5", r.h2_weights_are_orbit, true);
  expect(r, "every H2 weight space one-dimensional", r.h2_all_one_dimensional, true);
  expect(r, "B2 = 0 at H2 weights", r.b2_zero_at_h2_weights, true);

  Weight mu1 = h2_weights().front();
  Weight mu2;
  mu2.c = {1, -1, -1, 1, 1, -1};
  Cochain psi1 = basis_cocycle(L, mu1);
  Cochain psi2 = basis_cocycle(L, mu2);
  r.count_cup_12 = set_count(cup(psi1, psi2));
  r.count_cup_21 = set_count(cup(psi2, psi1));
  r.count_bracket = set_count(cbracket(psi1, psi2));
  expect(r, "sets in psi1 u psi2", r.count_cup_12, size_t(28));
  expect(r, "sets in psi2 u psi1", r.count_cup_21, size_t(28));
  expect(r, "sets in [psi1, psi2]", r.count_bracket, size_t(48));

  Cochain phi = phi_paper(L);
  r.count_phi = set_count(phi);
  expect(r, "sets in phi", r.count_phi, size_t(6));
  Cochain dphi = differential(phi);
  r.count_dphi = set_count(dphi);
  expect(r, "sets in d(phi)", r.count_dphi, size_t(48));
  r.dphi_equals_bracket = dphi == cbracket(psi1, psi2);
  expect(r, "d(phi) = [psi1, psi2]", r.dphi_equals_bracket, true);

  {
    Cochain part1(L, 2);
    auto E = [&](int i, int j) { return L.root_index(Weight::root(i, j)); };
    part1.accumulate_coord({E(5, 1), E(6, 5)}, E(1, 6), 1);
    r.count_dphi_part1 = set_count(differential(part1));
    expect(r, "root-valued sets in d(first part of phi)", r.count_dphi_part1, size_t(14));
  }

  try {
    DeformedBracket f2 = build_type_ii(L);
    for (const auto& [d, c] : jacobi_coefficients(f2)) r.type_ii_jacobi_zero[d] = c.is_zero();
  } catch (const verification_error& e) {
    r.mismatches.push_back(std::string("type II: ") + e.what());
  }
  r.type_ii_ok = !r.type_ii_jacobi_zero.empty() &&
                 std::all_of(r.type_ii_jacobi_zero.begin(), r.type_ii_jacobi_zero.end(),
                             [](const auto& kv) { return kv.second; });
  expect(r, "type II Jacobi coefficients vanish", r.type_ii_ok, true);

  try {
    DeformedBracket f3 = build_type_iii(L);
    for (const auto& [d, c] : jacobi_coefficients(f3)) r.type_iii_jacobi_zero[d] = c.is_zero();
  } catch (const verification_error& e) {
    r.mismatches.push_back(std::string("type III: ") + e.what());
  }
  r.type_iii_ok = !r.type_iii_jacobi_zero.empty() &&
                  std::all_of(r.type_iii_jacobi_zero.begin(), r.type_iii_jacobi_zero.end(),
                              [](const auto& kv) { return kv.second; });
  expect(r, "type III Jacobi coefficients vanish", r.type_iii_ok, true);

  const Field& f = L.field();
  const std::pair<OrbitTag, int> expected_ranks[] = {{OrbitTag::I, 0},
                                                     {OrbitTag::II, 3},
                                                     {OrbitTag::III, 5},
                                                     {OrbitTag::IV, 6},
                                                     {OrbitTag::V, 6}};
  for (auto [tag, want] : expected_ranks) {
    Trivector w = canonical(tag, f);
    int got = trivector_rank(w);
    r.trivector_ranks[orbit_tag_name(tag)] = got;
    r.trivector_classes[orbit_tag_name(tag)] = trivector_class_name(classify(w));
    expect(r, std::string("rank of canonical (") + orbit_tag_name(tag) + ")", got, want);
  }

  auto record_simplicity = [&](const std::string& name, const LieAlgebra& alg,
                               const char* want) {
    SimplicityReport rep = is_simple(alg, trials, seed);
    r.simplicity[name] = verdict_name(rep.verdict);
    expect(r, "simplicity of " + name, std::string(verdict_name(rep.verdict)),
           std::string(want));
    return rep;
  };
  SimplicityReport rep_a = record_simplicity("sl6", A, "proper_ideal_found");
  if (rep_a.verdict == SimplicityReport::Verdict::ProperIdealFound &&
      rep_a.witness.size() == 1 && !z.empty()) {
    Vec w = rep_a.witness[0];
    r.center_is_simplicity_witness = w == z[0];
  }
  expect(r, "sl6 simplicity witness is the center", r.center_is_simplicity_witness, true);
  record_simplicity("quotient", L, "simple");
  try {
    record_simplicity("type_ii_at_1", specialize(build_type_ii(L), 1), "simple");
    record_simplicity("type_iii_at_1", specialize(build_type_iii(L), 1), "simple");
  } catch (const verification_error& e) {
    r.mismatches.push_back(std::string("specialize: ") + e.what());
  }
  return r;
}

json report_to_json(const PaperReport& r) {
  json jacobi_ii = json::object(), jacobi_iii = json::object();
  for (const auto& [d, ok] : r.type_ii_jacobi_zero) jacobi_ii["t^" + std::to_string(d)] = ok;
  for (const auto& [d, ok] : r.type_iii_jacobi_zero) jacobi_iii["t^" + std::to_string(d)] = ok;
  return json{{"dim_a", r.dim_a},
              {"center_dim", r.center_dim},
              {"dim_l", r.dim_l},
              {"dim_h2", r.dim_h2},
              {"h2_weights_are_weyl_orbit", r.h2_weights_are_orbit},
              {"h2_all_one_dimensional", r.h2_all_one_dimensional},
              {"b2_zero_at_h2_weights", r.b2_zero_at_h2_weights},
              {"set_counts",
               {{"cup_psi1_psi2", r.count_cup_12},
                {"cup_psi2_psi1", r.count_cup_21},
                {"bracket_psi1_psi2", r.count_bracket},
                {"phi", r.count_phi},
                {"d_phi", r.count_dphi},
                {"d_phi_first_part", r.count_dphi_part1}}},
              {"dphi_equals_bracket", r.dphi_equals_bracket},
              {"type_ii_jacobi_zero", jacobi_ii},
              {"type_iii_jacobi_zero", jacobi_iii},
              {"trivector_ranks", r.trivector_ranks},
              {"trivector_classes", r.trivector_classes},
              {"simplicity", r.simplicity},
              {"center_is_simplicity_witness", r.center_is_simplicity_witness},
              {"seed", r.seed},
              {"trials", r.trials},
              {"mismatches", r.mismatches},
              {"ok", r.ok()}};
}

}  // namespace a5def
