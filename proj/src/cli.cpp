#include "a5def/cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "a5def/io.hpp"
#include "a5def/report.hpp"
#include "a5def/simplicity.hpp"

namespace a5def {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io_error(path + ": cannot open file for writing");
  out << text;
}

struct Context {
  int field_degree = 1;
  bool compact = false;
  std::string tables_path;
  bool rebuild_tables = false;

  std::shared_ptr<LieAlgebra> sl6, quotient;
  std::unique_ptr<Cohomology> coh;

  void ensure_algebras() {
    if (quotient) return;
    if (!tables_path.empty()) {
      std::ifstream probe(tables_path);
      if (probe) {
        Tables t = load_tables(read_json_file(tables_path), tables_path);
        if (t.quotient->field().degree() != field_degree)
          throw io_error(tables_path + ".field_degree: does not match --field-degree");
        sl6 = t.sl6;
        quotient = t.quotient;
        return;
      }
      throw io_error(tables_path + ": cannot open file (use --rebuild-tables to create it)");
    }
    sl6 = std::make_shared<LieAlgebra>(build_sl6(field_degree));
    quotient = std::make_shared<LieAlgebra>(quotient_by_center(*sl6));
  }

  Cohomology& cohomology() {
    ensure_algebras();
    if (!coh) coh = std::make_unique<Cohomology>(*quotient);
    return *coh;
  }

  void emit(std::ostream& out, const json& j, const std::string& out_path = "") {
    std::string text = compact ? j.dump() : j.dump(2);
    text += "\n";
    if (out_path.empty())
      out << text;
    else
      write_text_file(out_path, text);
  }
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  std::function<int()> action;

  CLI::App app{"exact workbench for characteristic-2 deformations of sl(6)/Z"};
  app.set_help_all_flag("--help-all");
  app.add_option("--field-degree", ctx.field_degree, "field degree e of GF(2^e), one of 1,2,4,8")
      ->default_val(1);
  app.add_flag("--json", ctx.compact, "compact machine-readable output");
  app.add_option("--tables", ctx.tables_path, "precomputed tables file (checksum-verified)");
  app.add_flag("--rebuild-tables", ctx.rebuild_tables, "regenerate the --tables file");
  app.require_subcommand(0, 1);

  // ---- algebra ----
  auto* algebra = app.add_subcommand("algebra", "the algebras sl(6) and sl(6)/Z");
  auto* algebra_info = algebra->add_subcommand("info", "dimensions, center, basis labels");
  algebra_info->callback([&] {
    action = [&]() {
      ctx.ensure_algebras();
      auto z = center(*ctx.sl6);
      json zb = json::array();
      for (const auto& v : z) zb.push_back(vec_to_json(*ctx.sl6, v));
      json labels_a = json::array(), labels_l = json::array();
      for (const auto& l : ctx.sl6->labels()) labels_a.push_back(l);
      for (const auto& l : ctx.quotient->labels()) labels_l.push_back(l);
      ctx.emit(out, json{{"field_degree", ctx.field_degree},
                         {"dim_a", ctx.sl6->dim()},
                         {"center_dim", z.size()},
                         {"center_basis", zb},
                         {"dim_l", ctx.quotient->dim()},
                         {"basis_a", labels_a},
                         {"basis_l", labels_l}});
      return 0;
    };
  });
  auto* algebra_constants =
      algebra->add_subcommand("constants", "structure-constant table as JSON");
  auto alg_which = std::make_shared<std::string>("l");
  auto alg_out = std::make_shared<std::string>();
  algebra_constants->add_option("--algebra", *alg_which, "a (sl6) or l (quotient)")
      ->check(CLI::IsMember({"a", "l"}));
  algebra_constants->add_option("--out", *alg_out, "write to file instead of stdout");
  algebra_constants->callback([&, alg_which, alg_out] {
    action = [&, alg_which, alg_out]() {
      ctx.ensure_algebras();
      const LieAlgebra& alg = *alg_which == "a" ? *ctx.sl6 : *ctx.quotient;
      ctx.emit(out, algebra_to_json(alg), *alg_out);
      return 0;
    };
  });

  // ---- cohomology ----
  auto* cohom = app.add_subcommand("cohomology", "weight-blocked H^2 of the quotient");
  auto* h2cmd = cohom->add_subcommand("h2", "dimensions of Z^2, B^2, H^2 per weight");
  auto h2_weight = std::make_shared<std::string>();
  auto h2_emit = std::make_shared<std::string>();
  auto h2_out = std::make_shared<std::string>();
  h2cmd->add_option("--weight", *h2_weight, "restrict to one weight, e.g. [1,1,1,-1,-1,-1]");
  h2cmd->add_option("--emit-cocycle", *h2_emit, "dump the basis cocycle of the given weight");
  h2cmd->add_option("--out", *h2_out, "write to file instead of stdout");
  h2cmd->callback([&, h2_weight, h2_emit, h2_out] {
    action = [&, h2_weight, h2_emit, h2_out]() {
      if (!h2_emit->empty()) {
        Weight mu = weight_from_json(parse_json_text(*h2_emit, "--emit-cocycle"), "--emit-cocycle");
        ctx.ensure_algebras();
        ctx.emit(out, cochain_to_json(basis_cocycle(*ctx.quotient, mu)), *h2_out);
        return 0;
      }
      H2Summary s = ctx.cohomology().h2_summary();
      if (!h2_weight->empty()) {
        Weight w = weight_from_json(parse_json_text(*h2_weight, "--weight"), "--weight");
        const H2Block* b = s.block(w);
        H2Block empty;
        empty.weight = w;
        if (!b) b = &empty;
        ctx.emit(out, json{{"weight", weight_to_json(b->weight)},
                           {"dim_c2", b->dim_c2},
                           {"dim_z2", b->dim_z2},
                           {"dim_b2", b->dim_b2},
                           {"dim_h2", b->dim_h2}},
                 *h2_out);
        return 0;
      }
      ctx.emit(out, h2_summary_to_json(s), *h2_out);
      return 0;
    };
  });

  // ---- trivector ----
  auto* triv = app.add_subcommand("trivector", "elements of Lambda^3 of a 6-space");
  auto tv_in = std::make_shared<std::string>();
  auto tv_out = std::make_shared<std::string>();
  auto tv_trials = std::make_shared<int>(2000);
  auto tv_seed = std::make_shared<uint64_t>(1);
  auto tv_diag = std::make_shared<bool>(false);
  auto* tv_classify = triv->add_subcommand("classify", "orbit type I/II/III/RANK6 by rank");
  tv_classify->add_option("--in", *tv_in, "trivector JSON file")->required();
  tv_classify->add_flag("--diagnose-decomposition", *tv_diag,
                        "also search for a sum of two decomposables (diagnostic only)");
  tv_classify->add_option("--trials", *tv_trials, "search trials for the diagnostic");
  tv_classify->add_option("--seed", *tv_seed, "search seed for the diagnostic");
  tv_classify->callback([&, tv_in, tv_trials, tv_seed, tv_diag] {
    action = [&, tv_in, tv_trials, tv_seed, tv_diag]() {
      const Field& f = Field::get(ctx.field_degree);
      Trivector w = trivector_from_json(f, read_json_file(*tv_in), *tv_in);
      json j{{"rank", trivector_rank(w)}, {"class", trivector_class_name(classify(w))}};
      if (*tv_diag) {
        auto found = pair_decomposition_search(w, *tv_trials, *tv_seed);
        j["pair_decomposition_found"] = found.has_value();
        j["pair_decomposition_note"] =
            "diagnostic only: a missing witness proves nothing";
      }
      ctx.emit(out, j);
      return 0;
    };
  });
  auto* tv_rank = triv->add_subcommand("rank", "rank of a trivector");
  tv_rank->add_option("--in", *tv_in, "trivector JSON file")->required();
  tv_rank->callback([&, tv_in] {
    action = [&, tv_in]() {
      const Field& f = Field::get(ctx.field_degree);
      Trivector w = trivector_from_json(f, read_json_file(*tv_in), *tv_in);
      ctx.emit(out, json{{"rank", trivector_rank(w)}});
      return 0;
    };
  });
  auto* tv_tc = triv->add_subcommand("to-cocycle", "the 2-cocycle of a trivector");
  tv_tc->add_option("--in", *tv_in, "trivector JSON file")->required();
  tv_tc->add_option("--out", *tv_out, "write to file instead of stdout");
  tv_tc->callback([&, tv_in, tv_out] {
    action = [&, tv_in, tv_out]() {
      ctx.ensure_algebras();
      Trivector w =
          trivector_from_json(ctx.quotient->field(), read_json_file(*tv_in), *tv_in);
      ctx.emit(out, cochain_to_json(to_cocycle(*ctx.quotient, w)), *tv_out);
      return 0;
    };
  });

  // ---- cup ----
  auto* cupcmd = app.add_subcommand("cup", "cup product of two 2-cochains");
  auto cup_left = std::make_shared<std::string>();
  auto cup_right = std::make_shared<std::string>();
  auto cup_out = std::make_shared<std::string>();
  auto cup_count = std::make_shared<bool>(false);
  cupcmd->add_option("--left", *cup_left, "left cochain JSON file")->required();
  cupcmd->add_option("--right", *cup_right, "right cochain JSON file")->required();
  cupcmd->add_flag("--count-sets", *cup_count, "include the set count of the product");
  cupcmd->add_option("--out", *cup_out, "write to file instead of stdout");
  cupcmd->callback([&, cup_left, cup_right, cup_out, cup_count] {
    action = [&, cup_left, cup_right, cup_out, cup_count]() {
      ctx.ensure_algebras();
      Cochain a = cochain_from_json(*ctx.quotient, read_json_file(*cup_left), *cup_left);
      Cochain b = cochain_from_json(*ctx.quotient, read_json_file(*cup_right), *cup_right);
      Cochain c = cup(a, b);
      json j = cochain_to_json(c);
      if (*cup_count) j["set_count"] = set_count(c);
      ctx.emit(out, j, *cup_out);
      return 0;
    };
  });

  // ---- deform ----
  auto* deform = app.add_subcommand("deform", "deformed brackets of the quotient");
  auto df_type = std::make_shared<std::string>();
  auto df_in = std::make_shared<std::string>();
  auto df_out = std::make_shared<std::string>();
  auto df_t0 = std::make_shared<std::string>("1");
  auto df_seed = std::make_shared<uint64_t>(0);
  auto df_trials = std::make_shared<int>(64);
  auto* df_build = deform->add_subcommand("build", "construct a verified deformation");
  df_build->add_option("--type", *df_type, "II or III")
      ->required()
      ->check(CLI::IsMember({"II", "III"}));
  df_build->add_option("--out", *df_out, "write to file instead of stdout");
  df_build->callback([&, df_type, df_out] {
    action = [&, df_type, df_out]() {
      ctx.ensure_algebras();
      DeformedBracket f =
          *df_type == "II" ? build_type_ii(*ctx.quotient) : build_type_iii(*ctx.quotient);
      ctx.emit(out, deformed_to_json(f), *df_out);
      return 0;
    };
  });
  auto* df_verify = deform->add_subcommand("verify", "per-degree Jacobi status of a bracket file");
  df_verify->add_option("--in", *df_in, "deformed bracket JSON file")->required();
  df_verify->callback([&, df_in] {
    action = [&, df_in]() {
      ctx.ensure_algebras();
      DeformedBracket f = deformed_from_json(*ctx.quotient, read_json_file(*df_in), *df_in);
      json degrees = json::object();
      bool all_zero = true;
      for (const auto& [d, c] : jacobi_coefficients(f)) {
        bool z = c.is_zero();
        degrees["t^" + std::to_string(d)] = z ? "zero" : "nonzero";
        all_zero = all_zero && z;
      }
      ctx.emit(out, json{{"t_degree", f.t_degree()},
                         {"jacobi_coefficients", degrees},
                         {"all_zero", all_zero}});
      return all_zero ? 0 : 1;
    };
  });
  auto* df_spec = deform->add_subcommand("specialize", "structure constants at a field point");
  df_spec->add_option("--in", *df_in, "deformed bracket JSON file")->required();
  df_spec->add_option("--t0", *df_t0, "field point as lowercase hex")->required();
  df_spec->add_option("--out", *df_out, "write to file instead of stdout");
  df_spec->callback([&, df_in, df_t0, df_out] {
    action = [&, df_in, df_t0, df_out]() {
      ctx.ensure_algebras();
      const Field& f = ctx.quotient->field();
      DeformedBracket fb = deformed_from_json(*ctx.quotient, read_json_file(*df_in), *df_in);
      LieAlgebra spec = specialize(fb, f.from_hex(*df_t0));
      json j = algebra_to_json(spec);
      j["jacobi_on_basis"] = spec.jacobi_holds_on_basis();
      ctx.emit(out, j, *df_out);
      return 0;
    };
  });
  auto* df_simp = deform->add_subcommand("simplicity", "MeatAxe simplicity of a specialization");
  df_simp->add_option("--in", *df_in, "deformed bracket JSON file")->required();
  df_simp->add_option("--t0", *df_t0, "field point as lowercase hex")->required();
  df_simp->add_option("--seed", *df_seed, "random seed (required for reproducibility)")
      ->required();
  df_simp->add_option("--trials", *df_trials, "maximum Norton trials");
  df_simp->callback([&, df_in, df_t0, df_seed, df_trials] {
    action = [&, df_in, df_t0, df_seed, df_trials]() {
      ctx.ensure_algebras();
      const Field& f = ctx.quotient->field();
      DeformedBracket fb = deformed_from_json(*ctx.quotient, read_json_file(*df_in), *df_in);
      LieAlgebra spec = specialize(fb, f.from_hex(*df_t0));
      SimplicityReport rep = is_simple(spec, *df_trials, *df_seed);
      ctx.emit(out, simplicity_report_to_json(spec, rep));
      return 0;
    };
  });

  // ---- report ----
  auto* report = app.add_subcommand("report", "aggregate verifications");
  auto* report_paper = report->add_subcommand("paper", "reproduce the headline numbers");
  auto rp_seed = std::make_shared<uint64_t>(20240517);
  auto rp_trials = std::make_shared<int>(64);
  auto rp_out = std::make_shared<std::string>();
  report_paper->add_option("--seed", *rp_seed, "seed for the simplicity tests");
  report_paper->add_option("--trials", *rp_trials, "Norton trials for the simplicity tests");
  report_paper->add_option("--out", *rp_out, "write to file instead of stdout");
  report_paper->callback([&, rp_seed, rp_trials, rp_out] {
    action = [&, rp_seed, rp_trials, rp_out]() {
      PaperReport r = run_paper_report(ctx.field_degree, *rp_seed, *rp_trials);
      ctx.emit(out, report_to_json(r), *rp_out);
      return r.ok() ? 0 : 1;
    };
  });

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());  // CLI11 wants reversed argv
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ctx.rebuild_tables) {
      if (ctx.tables_path.empty())
        throw io_error("--rebuild-tables: requires --tables FILE");
      json t = make_tables(ctx.field_degree);
      write_text_file(ctx.tables_path, t.dump(2) + "\n");
      if (!action) {
        ctx.emit(out, json{{"written", ctx.tables_path}, {"checksum", t["checksum"]}});
        return 0;
      }
    }
    if (!action) {
      err << app.help();
      return 2;
    }
    return action();
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const verification_error& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace a5def
