#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "a5def/cohomology.hpp"
#include "a5def/deform.hpp"
#include "a5def/simplicity.hpp"
#include "a5def/trivector.hpp"

namespace a5def {

// Malformed or inconsistent input; the message names the offending field.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j, const std::string& path);

json vec_to_json(const LieAlgebra& alg, const Vec& v);  // {label: hex}, nonzero only
Vec vec_from_json(const LieAlgebra& alg, const json& j, const std::string& path);

json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const LieAlgebra& alg, const json& j, const std::string& path);

json trivector_to_json(const Trivector& w);
Trivector trivector_from_json(const Field& f, const json& j, const std::string& path);

json deformed_to_json(const DeformedBracket& f);
DeformedBracket deformed_from_json(const LieAlgebra& alg, const json& j, const std::string& path);

json h2_summary_to_json(const H2Summary& s, bool include_cocycles = true);
json simplicity_report_to_json(const LieAlgebra& alg, const SimplicityReport& r);

json algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const json& j, const std::string& path);

// Precomputed tables: both algebras plus the 20 basis cocycles, protected by
// an FNV-1a checksum over the canonical dump.
struct Tables {
  std::shared_ptr<LieAlgebra> sl6;
  std::shared_ptr<LieAlgebra> quotient;
  std::vector<std::pair<Weight, Cochain>> basis_cocycles;
};
json make_tables(int field_degree);
Tables load_tables(const json& j, const std::string& path);

uint64_t fnv1a64(const std::string& s);
json parse_json_text(const std::string& text, const std::string& what);

}  // namespace a5def
