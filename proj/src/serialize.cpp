#include "thetakit/serialize.hpp"

#include <sstream>

#include "thetakit/errors.hpp"

namespace thetakit {

json affine_to_json(const AffineForm& f) {
  json coeffs = json::object();
  for (const auto& [name, c] : f.terms()) coeffs[name] = rational_to_string(c);
  return json{{"constant", rational_to_string(f.constant())}, {"coeffs", coeffs}};
}

AffineForm affine_from_json(const json& j) {
  AffineForm f(rational_from_string(j.at("constant").get<std::string>()));
  for (const auto& [name, c] : j.at("coeffs").items()) {
    f += AffineForm::symbol(name, rational_from_string(c.get<std::string>()));
  }
  return f;
}

json coefficient_to_json(const Coefficient& c, bool approx) {
  json terms = json::array();
  for (const auto& [scalar, exp] : c.canonical_terms()) {
    json t{{"scalar", rational_to_string(scalar)}, {"exponent", affine_to_json(exp.form())}};
    terms.push_back(std::move(t));
  }
  json out{{"terms", terms}};
  if (approx) {
    try {
      auto z = c.to_complex();
      out["approx"] = {{"re", z.real()}, {"im", z.imag()}};
    } catch (const InvariantViolation&) {
      // symbolic parameters present; no numeric value
    }
  }
  return out;
}

Coefficient coefficient_from_json(const json& j) {
  Coefficient c;
  for (const json& t : j.at("terms")) {
    PhaseExponent exp{affine_from_json(t.at("exponent"))};
    c += Coefficient::from_phase(exp, rational_from_string(t.at("scalar").get<std::string>()));
  }
  return c;
}

json presentation_to_json(const Presentation& p, bool approx) {
  const AlgebraContext& ctx = *p.ctx;
  json gens = json::array();
  for (const Letter& l : ctx.letters()) {
    json g{{"name", l.name}, {"starred", l.starred}, {"weight", l.weight}};
    if (l.row >= 0) g["row"] = l.row;
    if (l.col >= 0) g["col"] = l.col;
    gens.push_back(std::move(g));
  }
  json matrix = json::array();
  for (int j = 0; j < ctx.weight_dim(); ++j) {
    json row = json::array();
    for (int k = 0; k < ctx.weight_dim(); ++k) {
      row.push_back(affine_to_json(ctx.theta().entry(j, k)));
    }
    matrix.push_back(std::move(row));
  }
  json rels = json::array();
  for (size_t i = 0; i < p.relations.size(); ++i) {
    json terms = json::array();
    for (const auto& [w, c] : p.relations[i].terms()) {
      terms.push_back(json{{"word", w}, {"coefficient", coefficient_to_json(c, approx)}});
    }
    rels.push_back(json{{"label", p.relation_labels[i]}, {"terms", terms}});
  }
  std::set<std::string> params;
  ctx.theta().collect_parameters(params);
  return json{{"name", p.name},
              {"dimension", ctx.weight_dim()},
              {"parameters", params},
              {"generators", gens},
              {"deformation_matrix", matrix},
              {"relations", rels}};
}

Presentation presentation_from_json(const json& j) {
  int dim = j.at("dimension").get<int>();
  std::vector<AffineForm> entries;
  for (const json& row : j.at("deformation_matrix")) {
    for (const json& e : row) entries.push_back(affine_from_json(e));
  }
  DeformationMatrix theta(dim, std::move(entries));

  std::vector<GeneratorSpec> specs;
  const json& gens = j.at("generators");
  for (const json& g : gens) {
    if (g.at("starred").get<bool>()) continue;
    GeneratorSpec s;
    s.name = g.at("name").get<std::string>();
    s.row = g.value("row", -1);
    s.col = g.value("col", -1);
    s.weight = g.at("weight").get<Weight>();
    specs.push_back(std::move(s));
  }
  Presentation p;
  p.name = j.at("name").get<std::string>();
  p.ctx = AlgebraContext::make(std::move(theta), specs);

  // map serialized generator indices to rebuilt letter ids
  std::vector<int> letter_map;
  for (const json& g : gens) {
    int id = p.ctx->find_letter(0, g.at("name").get<std::string>(), g.value("row", -1),
                                g.value("col", -1), g.at("starred").get<bool>());
    if (id < 0) throw UsageError("inconsistent generator table in presentation file");
    letter_map.push_back(id);
  }
  for (const json& r : j.at("relations")) {
    Element e(p.ctx);
    for (const json& t : r.at("terms")) {
      Word w;
      for (int idx : t.at("word").get<std::vector<int>>()) {
        if (idx < 0 || idx >= static_cast<int>(letter_map.size())) {
          throw UsageError("word index out of range in presentation file");
        }
        w.push_back(letter_map[static_cast<size_t>(idx)]);
      }
      std::sort(w.begin(), w.end());
      e.add_term(w, coefficient_from_json(t.at("coefficient")));
    }
    p.add_relation(r.at("label").get<std::string>(), std::move(e));
  }
  return p;
}

bool presentations_equal(const Presentation& a, const Presentation& b) {
  if (a.name != b.name) return false;
  const AlgebraContext &ca = *a.ctx, &cb = *b.ctx;
  if (ca.weight_dim() != cb.weight_dim()) return false;
  if (!(ca.theta() == cb.theta())) return false;
  if (ca.letter_count() != cb.letter_count()) return false;
  for (int i = 0; i < ca.letter_count(); ++i) {
    const Letter &la = ca.letter(i), &lb = cb.letter(i);
    if (std::tie(la.leg, la.starred, la.name, la.row, la.col, la.weight) !=
        std::tie(lb.leg, lb.starred, lb.name, lb.row, lb.col, lb.weight)) {
      return false;
    }
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (size_t i = 0; i < a.relations.size(); ++i) {
    if (a.relation_labels[i] != b.relation_labels[i]) return false;
    // word ids agree because the letter tables agree
    const auto &ta = a.relations[i].terms(), &tb = b.relations[i].terms();
    if (ta.size() != tb.size()) return false;
    auto it = ta.begin();
    auto jt = tb.begin();
    for (; it != ta.end(); ++it, ++jt) {
      if (it->first != jt->first || it->second != jt->second) return false;
    }
  }
  return true;
}

std::string phase_factor_text(const PhaseExponent& p) {
  if (p.is_zero()) return "";
  return "e^{2pi i(" + p.to_string() + ")}";
}

std::string phase_factor_latex(const PhaseExponent& p) {
  if (p.is_zero()) return "";
  return "e^{2\\pi i(" + p.form().to_latex() + ")}";
}

std::string letter_latex(const Letter& l) {
  std::string out = l.name;
  if (l.row >= 0 || l.col >= 0) {
    out += "_{";
    if (l.row >= 0) out += std::to_string(l.row);
    if (l.col >= 0) out += std::to_string(l.col);
    out += "}";
  }
  if (l.starred) out += "^*";
  return out;
}

std::string format_relations(const AlgebraContext::Ptr& ctx,
                             const std::vector<ExchangeRelation>& relations,
                             const Presentation* structural, TableFormat format, bool approx) {
  std::ostringstream os;
  if (format == TableFormat::Json) {
    json rels = json::array();
    for (const ExchangeRelation& r : relations) {
      rels.push_back(json{{"left", ctx->letter(r.left_letter).display},
                          {"right", ctx->letter(r.right_letter).display},
                          {"exponent", affine_to_json(r.phase.form())},
                          {"commutator", r.is_commutator()}});
    }
    json out{{"exchange_relations", rels}};
    if (structural) {
      json st = json::array();
      for (size_t i = 0; i < structural->relations.size(); ++i) {
        json terms = json::array();
        for (const auto& [w, c] : structural->relations[i].terms()) {
          terms.push_back(json{{"word", ctx->word_to_string(w)},
                               {"coefficient", coefficient_to_json(c, approx)}});
        }
        st.push_back(json{{"label", structural->relation_labels[i]}, {"terms", terms}});
      }
      out["structural_relations"] = st;
    }
    return out.dump(2) + "\n";
  }

  for (const ExchangeRelation& r : relations) {
    const Letter &g = ctx->letter(r.left_letter), &h = ctx->letter(r.right_letter);
    if (format == TableFormat::Latex) {
      if (r.is_commutator()) {
        os << "\\left[" << letter_latex(g) << "," << letter_latex(h) << "\\right]=0\\\\\n";
      } else {
        os << letter_latex(g) << letter_latex(h) << " = " << phase_factor_latex(r.phase)
           << "\\," << letter_latex(h) << letter_latex(g) << "\\\\\n";
      }
    } else {
      if (r.is_commutator()) {
        os << "[" << g.display << "," << h.display << "] = 0\n";
      } else {
        os << g.display << "." << h.display << " = " << phase_factor_text(r.phase) << " "
           << h.display << "." << g.display << "\n";
      }
    }
  }
  if (structural) {
    os << (format == TableFormat::Latex ? "% structural relations\n" : "# structural relations\n");
    for (size_t i = 0; i < structural->relations.size(); ++i) {
      os << structural->relation_labels[i] << ": " << structural->relations[i].to_string()
         << (format == TableFormat::Latex ? " = 0\\\\\n" : " = 0\n");
    }
  }
  return os.str();
}

json constraint_report_to_json(const ConstraintReport& r) {
  json constraints = json::array();
  for (const AffineForm& f : r.constraints) {
    constraints.push_back(json{{"form", affine_to_json(f)}, {"text", f.to_string() + " = 0"}});
  }
  json witnesses = json::array();
  for (const auto& [a, b] : r.witnesses) witnesses.push_back(json::array({a, b}));
  json structural = json::array();
  for (const CheckItem& item : r.structural) {
    structural.push_back(json{{"relation", item.name},
                              {"status", check_status_name(item.status)},
                              {"detail", item.detail}});
  }
  return json{{"status", r.status_name()},
              {"constraints", constraints},
              {"witnesses", witnesses},
              {"structural", structural}};
}

json check_report_to_json(const CheckReport& r) {
  json items = json::array();
  for (const CheckItem& item : r.items) {
    items.push_back(json{{"name", item.name},
                         {"status", check_status_name(item.status)},
                         {"detail", item.detail}});
  }
  return json{{"overall", check_status_name(r.overall())}, {"checks", items}};
}

json fixed_points_to_json(const AlgebraContext::Ptr& ctx, const FixedPointResult& r,
                          const MatchReport* match) {
  (void)ctx;
  json gens = json::array();
  for (const Element& g : r.generators) gens.push_back(g.to_string());
  json out{{"generators", gens}, {"non_closed", r.non_closed}, {"notes", r.notes}};
  if (match) {
    json matrix = json::array();
    for (int j = 0; j < match->induced.dim(); ++j) {
      json row = json::array();
      for (int k = 0; k < match->induced.dim(); ++k) {
        row.push_back(affine_to_json(match->induced.entry(j, k)));
      }
      matrix.push_back(std::move(row));
    }
    out["match"] = json{{"matched", match->matched},
                        {"family", match->family_instance},
                        {"induced_matrix", matrix},
                        {"radius_status", check_status_name(match->radius.status)},
                        {"detail", match->detail}};
  }
  return out;
}

}  // namespace thetakit
