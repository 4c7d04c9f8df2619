#include "a5def/io.hpp"

namespace a5def {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw io_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw io_error(path + "." + key + ": missing");
  return *it;
}

int need_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw io_error(path + ": expected an integer");
  return j.get<int>();
}

std::string need_str(const json& j, const std::string& path) {
  if (!j.is_string()) throw io_error(path + ": expected a string");
  return j.get<std::string>();
}

const json& need_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw io_error(path + ": expected an array");
  return j;
}

uint8_t scalar_from_json(const Field& f, const json& j, const std::string& path) {
  try {
    return f.from_hex(need_str(j, path));
  } catch (const std::invalid_argument& e) {
    throw io_error(path + ": " + e.what());
  }
}

}  // namespace

json weight_to_json(const Weight& w) {
  json a = json::array();
  for (int x : w.c) a.push_back(x);
  return a;
}

Weight weight_from_json(const json& j, const std::string& path) {
  need_array(j, path);
  if (j.size() != 6) throw io_error(path + ": expected 6 coordinates");
  Weight w;
  for (int i = 0; i < 6; ++i) w.c[i] = need_int(j[i], path + "[" + std::to_string(i) + "]");
  return w;
}

json vec_to_json(const LieAlgebra& alg, const Vec& v) {
  json o = json::object();
  for (int i = 0; i < alg.dim(); ++i)
    if (v[i]) o[alg.label(i)] = Field::to_hex(v[i]);
  return o;
}

Vec vec_from_json(const LieAlgebra& alg, const json& j, const std::string& path) {
  if (!j.is_object()) throw io_error(path + ": expected an object of label -> hex coefficient");
  Vec v(alg.dim(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int idx = alg.index_of(it.key());
    if (idx < 0) throw io_error(path + ": unknown basis label '" + it.key() + "'");
    v[idx] = alg.field().add(v[idx], scalar_from_json(alg.field(), it.value(), path + "." + it.key()));
  }
  return v;
}

json cochain_to_json(const Cochain& c) {
  const LieAlgebra& L = c.algebra();
  json entries = json::array();
  for (const auto& [key, v] : c.entries()) {
    json args = json::array();
    for (int i : unpack_tuple(key, c.degree())) args.push_back(L.label(i));
    entries.push_back(json{{"args", args}, {"value", vec_to_json(L, v)}});
  }
  return json{{"degree", c.degree()}, {"entries", entries}};
}

Cochain cochain_from_json(const LieAlgebra& alg, const json& j, const std::string& path) {
  int degree = need_int(need(j, "degree", path), path + ".degree");
  if (degree < 0 || degree > 4) throw io_error(path + ".degree: must be in 0..4");
  Cochain c(alg, degree);
  const json& entries = need_array(need(j, "entries", path), path + ".entries");
  for (size_t n = 0; n < entries.size(); ++n) {
    std::string ep = path + ".entries[" + std::to_string(n) + "]";
    const json& args = need_array(need(entries[n], "args", ep), ep + ".args");
    if (int(args.size()) != degree)
      throw io_error(ep + ".args: expected " + std::to_string(degree) + " labels");
    std::vector<int> idx;
    for (size_t a = 0; a < args.size(); ++a) {
      std::string ap = ep + ".args[" + std::to_string(a) + "]";
      int i = alg.index_of(need_str(args[a], ap));
      if (i < 0) throw io_error(ap + ": unknown basis label '" + args[a].get<std::string>() + "'");
      idx.push_back(i);
    }
    Vec v = vec_from_json(alg, need(entries[n], "value", ep), ep + ".value");
    c.accumulate(idx, v);
  }
  return c;
}

json trivector_to_json(const Trivector& w) {
  json coeffs = json::array();
  for (const auto& [t, c] : w.coeffs())
    coeffs.push_back(json{{"triple", json::array({t[0], t[1], t[2]})}, {"value", Field::to_hex(c)}});
  return json{{"coeffs", coeffs}};
}

Trivector trivector_from_json(const Field& f, const json& j, const std::string& path) {
  Trivector w(f);
  const json& coeffs = need_array(need(j, "coeffs", path), path + ".coeffs");
  for (size_t n = 0; n < coeffs.size(); ++n) {
    std::string cp = path + ".coeffs[" + std::to_string(n) + "]";
    const json& triple = need_array(need(coeffs[n], "triple", cp), cp + ".triple");
    if (triple.size() != 3) throw io_error(cp + ".triple: expected 3 indices");
    std::array<int, 3> t{};
    for (int i = 0; i < 3; ++i) {
      t[i] = need_int(triple[i], cp + ".triple[" + std::to_string(i) + "]");
      if (t[i] < 1 || t[i] > 6)
        throw io_error(cp + ".triple[" + std::to_string(i) + "]: index must be in 1..6");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw io_error(cp + ".triple: indices must be distinct");
    w.add_term(t, scalar_from_json(f, need(coeffs[n], "value", cp), cp + ".value"));
  }
  return w;
}

json deformed_to_json(const DeformedBracket& f) {
  json terms = json::array();
  for (int d = 0; d <= f.t_degree(); ++d)
    terms.push_back(json{{"t_degree", d}, {"cochain", cochain_to_json(f.term(d))}});
  return json{{"field_degree", f.algebra().field().degree()}, {"terms", terms}};
}

DeformedBracket deformed_from_json(const LieAlgebra& alg, const json& j, const std::string& path) {
  int e = need_int(need(j, "field_degree", path), path + ".field_degree");
  if (e != alg.field().degree())
    throw io_error(path + ".field_degree: file has degree " + std::to_string(e) +
                   " but the session field has degree " + std::to_string(alg.field().degree()));
  const json& terms = need_array(need(j, "terms", path), path + ".terms");
  if (terms.empty()) throw io_error(path + ".terms: must not be empty");
  std::vector<Cochain> out;
  for (size_t n = 0; n < terms.size(); ++n) {
    std::string tp = path + ".terms[" + std::to_string(n) + "]";
    int d = need_int(need(terms[n], "t_degree", tp), tp + ".t_degree");
    if (d != int(n)) throw io_error(tp + ".t_degree: terms must be listed as 0,1,2,...");
    out.push_back(cochain_from_json(alg, need(terms[n], "cochain", tp), tp + ".cochain"));
  }
  try {
    return DeformedBracket(std::move(out));
  } catch (const std::invalid_argument& e2) {
    throw io_error(path + ": " + e2.what());
  }
}

json h2_summary_to_json(const H2Summary& s, bool include_cocycles) {
  json blocks = json::array();
  for (const auto& b : s.blocks)
    blocks.push_back(json{{"weight", weight_to_json(b.weight)},
                          {"dim_c2", b.dim_c2},
                          {"dim_z2", b.dim_z2},
                          {"dim_b2", b.dim_b2},
                          {"dim_h2", b.dim_h2}});
  json out{{"total_h2", s.total_h2}, {"blocks", blocks}};
  if (include_cocycles) {
    json cocycles = json::array();
    for (const auto& [w, c] : s.basis_cocycles)
      cocycles.push_back(json{{"weight", weight_to_json(w)}, {"cochain", cochain_to_json(c)}});
    out["basis_cocycles"] = cocycles;
  }
  return out;
}

json simplicity_report_to_json(const LieAlgebra& alg, const SimplicityReport& r) {
  json witness = json::array();
  for (const auto& v : r.witness) witness.push_back(vec_to_json(alg, v));
  return json{{"verdict", verdict_name(r.verdict)},
              {"witness", witness},
              {"trials_used", r.trials_used},
              {"seed", r.seed},
              {"certificate_trial", r.certificate_trial},
              {"certificate_nullity", r.certificate_nullity}};
}

json algebra_to_json(const LieAlgebra& alg) {
  json labels = json::array();
  for (const auto& l : alg.labels()) labels.push_back(l);
  json weights = json::array();
  for (const auto& w : alg.weights()) weights.push_back(weight_to_json(w));
  json constants = json::array();
  for (const auto& [key, v] : alg.constants())
    constants.push_back(
        json{{"i", key.first}, {"j", key.second}, {"value", vec_to_json(alg, v)}});
  return json{{"dim", alg.dim()},
              {"field_degree", alg.field().degree()},
              {"labels", labels},
              {"weights", weights},
              {"constants", constants}};
}

LieAlgebra algebra_from_json(const json& j, const std::string& path) {
  int e = need_int(need(j, "field_degree", path), path + ".field_degree");
  const Field& f = [&]() -> const Field& {
    try {
      return Field::get(e);
    } catch (const std::invalid_argument& err) {
      throw io_error(path + ".field_degree: " + err.what());
    }
  }();
  const json& jl = need_array(need(j, "labels", path), path + ".labels");
  const json& jw = need_array(need(j, "weights", path), path + ".weights");
  if (jl.size() != jw.size()) throw io_error(path + ".weights: length differs from labels");
  std::vector<std::string> labels;
  for (size_t i = 0; i < jl.size(); ++i)
    labels.push_back(need_str(jl[i], path + ".labels[" + std::to_string(i) + "]"));
  std::vector<Weight> weights;
  for (size_t i = 0; i < jw.size(); ++i)
    weights.push_back(weight_from_json(jw[i], path + ".weights[" + std::to_string(i) + "]"));
  int dim = need_int(need(j, "dim", path), path + ".dim");
  if (dim != int(labels.size())) throw io_error(path + ".dim: does not match label count");

  // need an algebra handle to parse label-keyed vectors; build with empty
  // constants first
  LieAlgebra shell(f, labels, weights, {});
  const json& jc = need_array(need(j, "constants", path), path + ".constants");
  std::map<std::pair<int, int>, Vec> constants;
  for (size_t n = 0; n < jc.size(); ++n) {
    std::string cp = path + ".constants[" + std::to_string(n) + "]";
    int i = need_int(need(jc[n], "i", cp), cp + ".i");
    int jj = need_int(need(jc[n], "j", cp), cp + ".j");
    if (i < 0 || jj <= i || jj >= dim) throw io_error(cp + ": bad index pair");
    constants[{i, jj}] = vec_from_json(shell, need(jc[n], "value", cp), cp + ".value");
  }
  return LieAlgebra(f, std::move(labels), std::move(weights), std::move(constants));
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json make_tables(int field_degree) {
  LieAlgebra a = build_sl6(field_degree);
  LieAlgebra l = quotient_by_center(a);
  json cocycles = json::array();
  for (const Weight& mu : h2_weights())
    cocycles.push_back(
        json{{"weight", weight_to_json(mu)}, {"cochain", cochain_to_json(basis_cocycle(l, mu))}});
  json t{{"format", "a5def-tables-v1"},
         {"field_degree", field_degree},
         {"sl6", algebra_to_json(a)},
         {"quotient", algebra_to_json(l)},
         {"basis_cocycles", cocycles}};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(t.dump()));
  t["checksum"] = buf;
  return t;
}

Tables load_tables(const json& j, const std::string& path) {
  if (need_str(need(j, "format", path), path + ".format") != "a5def-tables-v1")
    throw io_error(path + ".format: unrecognized tables format");
  std::string checksum = need_str(need(j, "checksum", path), path + ".checksum");
  json body = j;
  body.erase("checksum");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(body.dump()));
  if (checksum != buf)
    throw io_error(path + ".checksum: mismatch (file corrupted or stale; regenerate with --rebuild-tables)");
  Tables t;
  t.sl6 = std::make_shared<LieAlgebra>(algebra_from_json(need(j, "sl6", path), path + ".sl6"));
  t.quotient = std::make_shared<LieAlgebra>(
      algebra_from_json(need(j, "quotient", path), path + ".quotient"));
  const json& cocycles = need_array(need(j, "basis_cocycles", path), path + ".basis_cocycles");
  for (size_t n = 0; n < cocycles.size(); ++n) {
    std::string cp = path + ".basis_cocycles[" + std::to_string(n) + "]";
    Weight w = weight_from_json(need(cocycles[n], "weight", cp), cp + ".weight");
    t.basis_cocycles.emplace_back(
        w, cochain_from_json(*t.quotient, need(cocycles[n], "cochain", cp), cp + ".cochain"));
  }
  return t;
}

json parse_json_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw io_error(what + ": not valid JSON");
  return j;
}

}  // namespace a5def
