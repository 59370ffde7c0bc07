#include "thetakit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "thetakit/errors.hpp"
#include "thetakit/serialize.hpp"

namespace thetakit {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;

ParamSubstitution parse_params(const std::vector<std::string>& kv) {
  ParamSubstitution sub;
  for (const std::string& s : kv) {
    size_t eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--params expects name=value: " + s);
    std::string name = s.substr(0, eq);
    std::string value = s.substr(eq + 1);
    try {
      sub[name] = AffineForm(rational_from_string(value));
    } catch (const UsageError&) {
      sub[name] = AffineForm::symbol(value);  // rename to another symbol
    }
  }
  return sub;
}

struct AlgebraChoice {
  Presentation presentation;
  std::optional<MatrixQuantumGroup> group;  // set for su:n and torus:n
};

DeformationMatrix preset_matrix(const std::string& kind, int n, int dim,
                                const std::string& preset) {
  if (preset.empty() || preset == "generic") {
    if (kind == "su") return su_parameter_matrix(n);
    return generic_antisymmetric(dim, "lambda");
  }
  if (preset == "0" || preset == "zero") return DeformationMatrix::zero(dim);
  if (preset == "theta") {
    if (kind == "su" && n == 3) return su_parameter_matrix(3);
    AffineForm t = AffineForm::symbol("theta");
    if (dim == 2) return DeformationMatrix(2, {AffineForm(), t, -t, AffineForm()});
    throw UsageError("preset 'theta' needs a 2x2 parameter matrix");
  }
  if (preset == "thetaprime") {
    if (dim != 4) throw UsageError("preset 'thetaprime' is the 4x4 seven-sphere twist");
    return s7_twist_matrix();
  }
  if (preset == "s5") {
    if (dim != 3) throw UsageError("preset 's5' is a 3x3 twist");
    return s5_twist_matrix();
  }
  throw UsageError("unknown matrix preset: " + preset);
}

AlgebraChoice build_algebra(const std::string& name, const std::string& preset,
                            const ParamSubstitution& params) {
  AlgebraChoice choice;
  auto apply_params = [&](AlgebraChoice c) {
    if (params.empty()) return c;
    c.presentation = c.presentation.substituted(params);
    if (c.group) c.group = c.group->substituted(params);
    return c;
  };
  if (name.rfind("file:", 0) == 0) {
    std::ifstream in(name.substr(5));
    if (!in) throw UsageError("cannot open presentation file: " + name.substr(5));
    json j = json::parse(in);
    choice.presentation = presentation_from_json(j);
    return apply_params(std::move(choice));
  }
  size_t colon = name.find(':');
  if (colon == std::string::npos) throw UsageError("algebra names look like su:3, sphere:4, torus:2");
  std::string kind = name.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(name.substr(colon + 1));
  } catch (...) {
    throw UsageError("malformed algebra name: " + name);
  }
  if (kind == "su") {
    if (n < 2) throw UsageError("su:n needs n >= 2");
    MatrixQuantumGroup q = build_su_theta(n, preset_matrix(kind, n, n - 1, preset));
    choice.presentation = q.presentation;
    choice.group = std::move(q);
  } else if (kind == "sphere") {
    if (n < 1) throw UsageError("sphere:n needs n >= 1");
    choice.presentation = build_sphere(preset_matrix(kind, n, n, preset), n);
  } else if (kind == "torus") {
    if (n < 1) throw UsageError("torus:n needs n >= 1");
    choice.presentation = build_nc_torus(preset_matrix(kind, n, n, preset));
    choice.group = build_torus_group(n, preset_matrix(kind, n, n, preset));
  } else {
    throw UsageError("unknown algebra family: " + kind);
  }
  return apply_params(std::move(choice));
}

int exit_code_from(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return kExitPass;
    case CheckStatus::Fail: return kExitFail;
    case CheckStatus::Undecided: return kExitUndecided;
  }
  return kExitFail;
}

void print_check_report(const CheckReport& report, TableFormat format, std::ostream& out) {
  if (format == TableFormat::Json) {
    out << check_report_to_json(report).dump(2) << "\n";
    return;
  }
  for (const CheckItem& item : report.items) {
    out << (item.status == CheckStatus::Pass ? "PASS " : item.status == CheckStatus::Fail ? "FAIL " : "UNDECIDED ")
        << item.name;
    if (!item.detail.empty()) out << " -- " << item.detail;
    out << "\n";
  }
  out << "overall: " << check_status_name(report.overall()) << "\n";
}

void print_constraint_report(const ConstraintReport& report, TableFormat format,
                             std::ostream& out) {
  if (format == TableFormat::Json) {
    out << constraint_report_to_json(report).dump(2) << "\n";
    return;
  }
  out << "status: " << report.status_name() << "\n";
  for (const AffineForm& f : report.constraints) {
    out << "constraint: " << f.to_string() << " = 0\n";
  }
  size_t shown = 0;
  for (const auto& [a, b] : report.witnesses) {
    if (++shown > 8) {
      out << "... (" << report.witnesses.size() - 8 << " more witness pairs)\n";
      break;
    }
    out << "witness pair: (" << a << ", " << b << ")\n";
  }
  for (const CheckItem& item : report.structural) {
    out << "structural " << item.name << ": " << check_status_name(item.status);
    if (!item.detail.empty()) out << " (" << item.detail << ")";
    out << "\n";
  }
}

int run_cli_inner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for torus-twisted *-algebras and matrix quantum groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  // relations
  auto* rel = app.add_subcommand("relations", "print the exchange relation table of an algebra");
  std::string rel_algebra;
  std::string rel_matrix;
  std::vector<std::string> rel_params;
  bool rel_structural = false, rel_starred = false, rel_approx = false;
  rel->add_option("algebra", rel_algebra, "su:n | sphere:n | torus:n | file:<path>")->required();
  rel->add_option("--K,--matrix,--lambda", rel_matrix,
                  "parameter matrix preset: generic | theta | thetaprime | s5 | zero");
  rel->add_option("--params", rel_params, "parameter values, e.g. theta=1/3")->delimiter(',');
  rel->add_flag("--include-structural", rel_structural, "append structural relations");
  rel->add_flag("--starred-pairs", rel_starred, "include mixed pairs (g, h*)");
  rel->add_flag("--approx", rel_approx, "add floating-point phase values to exports");

  // hopf-check
  auto* hc = app.add_subcommand("hopf-check", "verify the quantum group structure of an algebra");
  std::string hc_algebra, hc_matrix, hc_theta_full;
  std::vector<std::string> hc_params;
  int hc_bound = -1;
  hc->add_option("algebra", hc_algebra, "su:n | torus:n")->required();
  hc->add_option("--K,--matrix", hc_matrix, "parameter matrix preset");
  hc->add_option("--params", hc_params, "parameter values")->delimiter(',');
  hc->add_option("--degree-bound", hc_bound, "ideal reduction bound (default 2)");
  hc->add_option("--theta-full", hc_theta_full,
                 "probe an arbitrary grid twist instead: generic | zero");

  // act-check
  auto* ac = app.add_subcommand("act-check", "extension criterion for a coaction spec");
  std::string ac_spec;
  std::vector<std::string> ac_params;
  int ac_bound = 4;
  ac->add_option("spec", ac_spec, "built-in name (su3-on-s5, su3-on-su4, su2-on-su3, identity:<algebra>) or file:<path>")
      ->required();
  ac->add_option("--params", ac_params, "parameter values")->delimiter(',');
  ac->add_option("--degree-bound", ac_bound, "structural reduction bound (default 4)");

  // fixed-points
  auto* fp = app.add_subcommand("fixed-points", "invariant subalgebra of a coaction");
  std::string fp_spec;
  std::vector<std::string> fp_params;
  int fp_bound = 2;
  fp->add_option("spec", fp_spec, "built-in coaction spec name")->required();
  fp->add_option("--params", fp_params, "parameter values")->delimiter(',');
  fp->add_option("--degree-bound", fp_bound, "search bound (default 2)");

  // export
  auto* ex = app.add_subcommand("export", "write a presentation as JSON");
  std::string ex_algebra, ex_matrix, ex_out;
  std::vector<std::string> ex_params;
  bool ex_approx = false;
  ex->add_option("algebra", ex_algebra, "su:n | sphere:n | torus:n | file:<path>")->required();
  ex->add_option("--K,--matrix,--lambda", ex_matrix, "parameter matrix preset");
  ex->add_option("--params", ex_params, "parameter values")->delimiter(',');
  ex->add_option("--out", ex_out, "output path (default stdout)");
  ex->add_flag("--approx", ex_approx, "add floating-point values (approximate, export only)");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  TableFormat format = format_name == "json"    ? TableFormat::Json
                       : format_name == "latex" ? TableFormat::Latex
                                                : TableFormat::Text;

  if (rel->parsed()) {
    AlgebraChoice choice = build_algebra(rel_algebra, rel_matrix, parse_params(rel_params));
    auto pairs = rel_starred ? ExchangePairs::UnstarredAndMixed : ExchangePairs::Unstarred;
    auto relations = generate_exchange_relations(choice.presentation.ctx, pairs);
    for (const ExchangeRelation& r : relations) {
      if (!r.residual.is_zero()) {
        err << "internal error: exchange identity failed to verify\n";
        return kExitFail;
      }
    }
    out << format_relations(choice.presentation.ctx, relations,
                            rel_structural ? &choice.presentation : nullptr, format, rel_approx);
    return kExitPass;
  }

  if (hc->parsed()) {
    AlgebraChoice choice = build_algebra(hc_algebra, hc_matrix, parse_params(hc_params));
    if (!choice.group) throw UsageError("hopf-check needs a quantum group (su:n or torus:n)");
    const MatrixQuantumGroup& Q = *choice.group;
    if (!hc_theta_full.empty()) {
      DeformationMatrix probe =
          hc_theta_full == "zero"
              ? DeformationMatrix::zero(2 * (Q.n - 1))
              : generic_antisymmetric(2 * (Q.n - 1), "t");
      ConstraintReport report = check_coproduct_homomorphism(Q.n, probe);
      print_constraint_report(report, format, out);
      return report.status == ConstraintReport::Status::ExtendsUnconditionally ? kExitPass
                                                                               : kExitFail;
    }
    int bound = hc_bound > 0 ? hc_bound : 2;
    CheckReport report;
    for (CheckReport part :
         {check_coassociativity(Q), check_counit_laws(Q), check_antipode_axiom(Q, bound),
          check_corep_unitarity(Q, bound), check_haar_identities(Q, bound)}) {
      report.items.insert(report.items.end(), part.items.begin(), part.items.end());
    }
    if (Q.diagonal) {
      bool ok = true;
      for (int i = 0; i < Q.ctx->letter_count() && ok; ++i) {
        for (int j = 0; j < Q.ctx->letter_count() && ok; ++j) {
          ok = chi(Q.theta, Q.ctx->letter(i).weight, Q.ctx->letter(j).weight).is_zero();
        }
      }
      report.add("coproduct-homomorphism", ok ? CheckStatus::Pass : CheckStatus::Fail,
                 ok ? "twist vanishes on diagonal weights" : "");
    } else {
      ConstraintReport hom = check_coproduct_homomorphism(Q.n, Q.theta);
      report.add("coproduct-homomorphism",
                 hom.status == ConstraintReport::Status::ExtendsUnconditionally
                     ? CheckStatus::Pass
                     : CheckStatus::Fail);
    }
    print_check_report(report, format, out);
    return exit_code_from(report.overall());
  }

  if (ac->parsed()) {
    ParamSubstitution params = parse_params(ac_params);
    CoactionSpec spec = builtin_spec(ac_spec);
    if (!params.empty()) spec = spec.substituted(params);
    ConstraintReport report = check_extension(spec, ac_bound);
    print_constraint_report(report, format, out);
    if (report.status == ConstraintReport::Status::FailsIdentically) return kExitFail;
    for (const CheckItem& item : report.structural) {
      if (item.status == CheckStatus::Undecided) return kExitUndecided;
    }
    return kExitPass;
  }

  if (fp->parsed()) {
    ParamSubstitution params = parse_params(fp_params);
    CoactionSpec spec = builtin_spec(fp_spec);
    if (!params.empty()) spec = spec.substituted(params);
    ConstraintReport ext = check_extension(spec, fp_bound >= 2 ? fp_bound : 2);
    if (ext.status == ConstraintReport::Status::FailsIdentically) {
      print_constraint_report(ext, format, out);
      return kExitFail;
    }
    CoactionSpec solved = ext.constraints.empty()
                              ? spec
                              : spec.substituted(ext.solving_substitution());
    FixedPointResult result = fixed_points(solved, fp_bound);
    std::optional<MatchReport> match;
    bool homogeneous = !result.generators.empty();
    for (const Element& g : result.generators) {
      if (homogeneous_components(g).size() != 1) homogeneous = false;
    }
    if (homogeneous) {
      match = match_presentation(result.generators, solved.target, "sphere", fp_bound);
    }
    if (format == TableFormat::Json) {
      out << fixed_points_to_json(solved.target.ctx, result, match ? &*match : nullptr).dump(2)
          << "\n";
    } else {
      if (result.generators.empty()) {
        out << "invariants: constants only\n";
      } else {
        for (const Element& g : result.generators) out << "generator: " << g.to_string() << "\n";
      }
      for (const std::string& n : result.notes) out << "note: " << n << "\n";
      if (match && match->matched) {
        out << "matched: " << match->family_instance << "\n";
        for (int j = 0; j < match->induced.dim(); ++j) {
          out << "  twist[" << j + 1 << "]:";
          for (int k = 0; k < match->induced.dim(); ++k) {
            out << " " << match->induced.entry(j, k).to_string();
          }
          out << "\n";
        }
      }
    }
    return result.non_closed ? kExitUndecided : kExitPass;
  }

  if (ex->parsed()) {
    AlgebraChoice choice = build_algebra(ex_algebra, ex_matrix, parse_params(ex_params));
    json j = presentation_to_json(choice.presentation, ex_approx);
    if (ex_out.empty()) {
      out << j.dump(2) << "\n";
    } else {
      std::ofstream f(ex_out);
      if (!f) throw UsageError("cannot write: " + ex_out);
      f << j.dump(2) << "\n";
    }
    return kExitPass;
  }

  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_cli_inner(args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace thetakit
