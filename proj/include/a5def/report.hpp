#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "a5def/io.hpp"

namespace a5def {

// End-to-end reproduction of the headline numbers: dimensions, H^2, set
// counts, the dphi = [psi1, psi2] identity, Jacobi status of both deformed
// brackets, canonical trivector ranks and simplicity verdicts. Every
// deviation from the expected value is recorded in `mismatches`, never
// dropped.
struct PaperReport {
  int dim_a = 0, center_dim = 0, dim_l = 0, dim_h2 = 0;
  bool h2_weights_are_orbit = false;
  bool h2_all_one_dimensional = false;
  bool b2_zero_at_h2_weights = false;
  size_t count_cup_12 = 0, count_cup_21 = 0, count_bracket = 0;
  size_t count_phi = 0, count_dphi = 0, count_dphi_part1 = 0;
  bool dphi_equals_bracket = false;
  std::map<int, bool> type_ii_jacobi_zero;   // t-degree -> coefficient vanishes
  std::map<int, bool> type_iii_jacobi_zero;
  bool type_ii_ok = false, type_iii_ok = false;
  std::map<std::string, int> trivector_ranks;          // orbit tag -> rank
  std::map<std::string, std::string> trivector_classes;
  std::map<std::string, std::string> simplicity;       // algebra -> verdict
  bool center_is_simplicity_witness = false;
  uint64_t seed = 0;
  int trials = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

PaperReport run_paper_report(int field_degree = 1, uint64_t seed = 20240517, int trials = 64);
json report_to_json(const PaperReport& r);

}  // namespace a5def
