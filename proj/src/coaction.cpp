#include "thetakit/coaction.hpp"

#include <algorithm>
#include <sstream>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

// Incremental consistency check for a partial lattice map tau: pairs
// (v, y) assert tau(v) = y; linearity over Q decides consistency.
class LatticeMapCheck {
 public:
  bool add(const Weight& v, const Weight& y) {
    std::vector<Rational> row(v.begin(), v.end());
    std::vector<Rational> val(y.begin(), y.end());
    for (const auto& [bv, bval] : rows_) {
      size_t p = pivot_of(bv);
      if (p >= row.size() || row[p] == 0) continue;
      Rational f = row[p] / bv[p];
      for (size_t i = 0; i < row.size(); ++i) row[i] -= f * bv[i];
      for (size_t i = 0; i < val.size(); ++i) val[i] -= f * bval[i];
    }
    bool row_zero = std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; });
    if (row_zero) {
      return std::all_of(val.begin(), val.end(), [](const Rational& q) { return q == 0; });
    }
    rows_.emplace_back(std::move(row), std::move(val));
    return true;
  }

 private:
  static size_t pivot_of(const std::vector<Rational>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) return i;
    }
    return v.size();
  }
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> rows_;
};

void validate_weight_correspondence(const CoactionSpec& spec) {
  const AlgebraContext& T = *spec.tensor_ctx;
  const int h_dim = spec.hopf.ctx->weight_dim();
  const int half = h_dim / 2;
  const int a_dim = spec.target.ctx->weight_dim();
  LatticeMapCheck tau;
  for (int id = 0; id < spec.target.ctx->letter_count(); ++id) {
    const Element& img = spec.images[static_cast<size_t>(id)];
    if (img.is_zero()) throw InvariantViolation("coaction image of a generator is zero");
    Weight src = spec.target.ctx->letter(id).weight;
    for (const auto& [w, c] : img.terms()) {
      Weight full = T.weight_of(w);
      Weight h_left(full.begin(), full.begin() + half);
      Weight h_right(full.begin() + half, full.begin() + h_dim);
      Weight a_part(full.begin() + h_dim, full.begin() + h_dim + a_dim);
      if (!tau.add(src, h_left) || !tau.add(a_part, h_right)) {
        throw InvariantViolation("coaction images are not weight-consistent on " +
                                 spec.target.ctx->letter(id).display);
      }
    }
  }
}

}  // namespace

CoactionSpec CoactionSpec::substituted(const ParamSubstitution& sub) const {
  CoactionSpec s;
  s.name = name;
  s.hopf = hopf.substituted(sub);
  s.target = target.substituted(sub);
  s.tensor_ctx = AlgebraContext::tensor({s.hopf.ctx, s.target.ctx});
  s.images.reserve(images.size());
  for (const Element& img : images) {
    s.images.push_back(substitute_element(img, s.tensor_ctx, sub));
  }
  return s;
}

CoactionSpec make_coaction(std::string name, MatrixQuantumGroup hopf, Presentation target,
                           const std::map<int, Element>& unstarred_images) {
  CoactionSpec spec;
  spec.name = std::move(name);
  spec.hopf = std::move(hopf);
  spec.target = std::move(target);
  if (unstarred_images.empty()) throw InvariantViolation("coaction needs generator images");
  spec.tensor_ctx = unstarred_images.begin()->second.context();
  if (spec.tensor_ctx->leg_count() != spec.hopf.ctx->leg_count() + spec.target.ctx->leg_count() ||
      spec.tensor_ctx->leg_source(0) != spec.hopf.ctx ||
      spec.tensor_ctx->leg_source(spec.hopf.ctx->leg_count()) != spec.target.ctx) {
    throw ContextError("images must live on the tensor of the Hopf and target contexts");
  }
  spec.images.assign(static_cast<size_t>(spec.target.ctx->letter_count()),
                     Element(spec.tensor_ctx));
  for (int id : spec.target.ctx->unstarred_letters()) {
    auto it = unstarred_images.find(id);
    if (it == unstarred_images.end()) {
      throw InvariantViolation("missing coaction image for generator " +
                               spec.target.ctx->letter(id).display);
    }
    if (it->second.context() != spec.tensor_ctx) {
      throw ContextError("coaction image not over the tensor context");
    }
    spec.images[static_cast<size_t>(id)] = it->second;
    spec.images[static_cast<size_t>(spec.target.ctx->star_of(id))] = star(it->second);
  }
  validate_weight_correspondence(spec);
  return spec;
}

namespace {

Presentation tensor_presentation(const CoactionSpec& spec) {
  Presentation p;
  p.name = spec.hopf.presentation.name + "(x)" + spec.target.name;
  p.ctx = spec.tensor_ctx;
  for (size_t i = 0; i < spec.hopf.presentation.relations.size(); ++i) {
    p.add_relation("H:" + spec.hopf.presentation.relation_labels[i],
                   embed(spec.hopf.presentation.relations[i], spec.tensor_ctx, 0));
  }
  for (size_t i = 0; i < spec.target.relations.size(); ++i) {
    p.add_relation("A:" + spec.target.relation_labels[i],
                   embed(spec.target.relations[i], spec.tensor_ctx, 1));
  }
  return p;
}

std::set<std::string> context_parameters(const CoactionSpec& spec) {
  std::set<std::string> params;
  spec.hopf.theta.collect_parameters(params);
  spec.target.ctx->theta().collect_parameters(params);
  return params;
}

}  // namespace

ConstraintReport check_extension(const CoactionSpec& spec, int degree_bound) {
  ConstraintReport report;
  ConstraintSolver solver;
  const AlgebraContext& A = *spec.target.ctx;
  const AlgebraContext& T = *spec.tensor_ctx;

  for (int x = 0; x < A.letter_count() && !solver.inconsistent(); ++x) {
    for (int y = 0; y < A.letter_count() && !solver.inconsistent(); ++y) {
      AffineForm lhs =
          A.theta().pairing(A.letter(x).weight, A.letter(y).weight) * make_rational(1, 2);
      auto cx = homogeneous_components(spec.images[static_cast<size_t>(x)]);
      auto cy = homogeneous_components(spec.images[static_cast<size_t>(y)]);
      bool offending = false;
      for (const auto& [w1, e1] : cx) {
        for (const auto& [w2, e2] : cy) {
          AffineForm rhs = T.theta().pairing(w1, w2) * make_rational(1, 2);
          AffineForm constraint = lhs - rhs;
          if (constraint.is_zero()) continue;
          offending = true;
          solver.add(constraint);
        }
      }
      if (offending) {
        report.witnesses.emplace_back(A.letter(x).display, A.letter(y).display);
      }
    }
  }

  std::set<std::string> params = context_parameters(spec);
  if (solver.inconsistent() || (!solver.empty() && solver.forces_all_zero(params))) {
    report.status = ConstraintReport::Status::FailsIdentically;
    report.constraints = solver.basis();
    return report;
  }
  report.status = solver.empty() ? ConstraintReport::Status::ExtendsUnconditionally
                                 : ConstraintReport::Status::ExtendsIff;
  report.constraints = solver.basis();

  // Structural relations of the target must map into the tensor ideal under
  // the solved substitution. The span is built once over the union of the
  // images' weight supports and leg-degree boxes.
  ParamSubstitution sub = solver.pivot_substitution();
  CoactionSpec s = sub.empty() ? spec : spec.substituted(sub);
  Presentation tp = tensor_presentation(s);

  std::vector<std::pair<size_t, Element>> pending;
  std::set<Weight> support;
  std::vector<int> leg_caps(static_cast<size_t>(s.tensor_ctx->leg_count()), 0);
  for (size_t i = 0; i < s.target.relations.size(); ++i) {
    const std::string& label = s.target.relation_labels[i];
    Element image = apply_algebra_map(s.target.relations[i], s.tensor_ctx, s.images);
    if (image.is_zero()) {
      report.structural.push_back({label, CheckStatus::Pass, ""});
      continue;
    }
    if (image.max_degree() > degree_bound) {
      report.structural.push_back(
          {label, CheckStatus::Undecided,
           "image degree " + std::to_string(image.max_degree()) + " exceeds bound " +
               std::to_string(degree_bound)});
      continue;
    }
    for (const auto& [w, c] : image.terms()) {
      support.insert(s.tensor_ctx->weight_of(w));
      std::vector<int> ld = s.tensor_ctx->leg_degrees(w);
      for (size_t l = 0; l < ld.size(); ++l) leg_caps[l] = std::max(leg_caps[l], ld[l]);
    }
    report.structural.push_back({label, CheckStatus::Undecided, ""});
    pending.emplace_back(report.structural.size() - 1, std::move(image));
  }
  if (!pending.empty()) {
    IdealSpan span(tp, degree_bound, leg_caps, support);
    for (auto& [idx, image] : pending) {
      Membership m = span.reduce(image);
      report.structural[idx].status =
          m == Membership::Member ? CheckStatus::Pass : CheckStatus::Undecided;
      report.structural[idx].detail =
          m == Membership::Member ? "" : "not decided at bound " + std::to_string(degree_bound);
    }
  }
  return report;
}

CheckReport check_coaction_axioms(const CoactionSpec& spec) {
  CheckReport report;
  const MatrixQuantumGroup& H = spec.hopf;
  AlgebraContext::Ptr T3 = AlgebraContext::tensor({H.ctx, H.ctx, spec.target.ctx});

  std::vector<Element> delta = coproduct_images(H);
  const AlgebraContext& T = *spec.tensor_ctx;
  std::vector<Element> left_images(static_cast<size_t>(T.letter_count()));
  std::vector<Element> right_images(static_cast<size_t>(T.letter_count()));
  for (int id = 0; id < T.letter_count(); ++id) {
    const Letter& l = T.letter(id);
    if (l.leg == 0) {
      left_images[static_cast<size_t>(id)] =
          embed(delta[static_cast<size_t>(l.source_id)], T3, 0);
      right_images[static_cast<size_t>(id)] =
          embed(Element::generator(H.ctx, l.source_id), T3, 0);
    } else {
      left_images[static_cast<size_t>(id)] =
          embed(Element::generator(spec.target.ctx, l.source_id), T3, 2);
      right_images[static_cast<size_t>(id)] =
          embed(spec.images[static_cast<size_t>(l.source_id)], T3, 1);
    }
  }

  auto eps_word = [&](const Word& w) {
    return counit(H, Element::word(H.ctx, w, Coefficient::one()));
  };

  for (int a = 0; a < spec.target.ctx->letter_count(); ++a) {
    const Element& img = spec.images[static_cast<size_t>(a)];
    Element lhs = apply_algebra_map(img, T3, left_images);
    Element rhs = apply_algebra_map(img, T3, right_images);
    std::string display = spec.target.ctx->letter(a).display;
    report.add("(Delta(x)id)rho=(id(x)rho)rho[" + display + "]",
               lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
    if (lhs != rhs) return report;
    Element counital = contract_leg(img, 0, eps_word, spec.target.ctx);
    Element expected = Element::generator(spec.target.ctx, a);
    report.add("(eps(x)id)rho=id[" + display + "]",
               counital == expected ? CheckStatus::Pass : CheckStatus::Fail);
    if (counital != expected) return report;
  }
  return report;
}

Element conditional_expectation(const CoactionSpec& spec, const Element& a) {
  if (a.context() != spec.target.ctx) {
    throw ContextError("element not over the coaction target");
  }
  Element rho = apply_algebra_map(a, spec.tensor_ctx, spec.images);
  auto mu_word = [&](const Word& w) { return haar_state_word(spec.hopf, w); };
  return contract_leg(rho, 0, mu_word, spec.target.ctx);
}

namespace {

void enumerate_target_words(const AlgebraContext& ctx, int bound, std::vector<Word>& out) {
  std::vector<Word> frontier = {{}};
  for (int d = 1; d <= bound; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      int lo = w.empty() ? 0 : w.back();
      for (int id = lo; id < ctx.letter_count(); ++id) {
        Word e = w;
        e.push_back(id);
        out.push_back(e);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

FixedPointResult fixed_points(const CoactionSpec& spec, int degree_bound) {
  FixedPointResult result;
  const AlgebraContext::Ptr& A = spec.target.ctx;

  std::vector<Word> words;
  enumerate_target_words(*A, degree_bound, words);

  std::map<Weight, std::vector<Word>> classes;
  for (const Word& w : words) classes[A->weight_of(w)].push_back(w);

  std::vector<Element> solutions;
  for (const auto& [wt, cls] : classes) {
    // pre-filter: if the conditional expectation is supported on the whole
    // class and kills it, the class holds no invariants
    bool supported = true, all_zero = true;
    for (const Word& w : cls) {
      try {
        Element e = conditional_expectation(spec, Element::word(A, w, Coefficient::one()));
        if (!e.is_zero()) all_zero = false;
      } catch (const UnsupportedDegree&) {
        supported = false;
        break;
      }
      if (!all_zero) break;
    }
    if (supported && all_zero) continue;

    SpanBasis basis;
    std::vector<SpanBasis::TaggedRow> zero_rows;
    for (size_t i = 0; i < cls.size(); ++i) {
      Element candidate = Element::word(A, cls[i], Coefficient::one());
      Element image = apply_algebra_map(candidate, spec.tensor_ctx, spec.images);
      image -= embed(candidate, spec.tensor_ctx, 1);
      SpanBasis::TaggedRow row;
      row.value = element_to_row(image);
      row.tag.emplace(static_cast<int>(i), Coefficient::one());
      basis.reduce(row);
      if (row.value.empty()) {
        Element sol(A);
        for (const auto& [idx, c] : row.tag) {
          sol += Element::word(A, cls[static_cast<size_t>(idx)], c);
        }
        if (!sol.is_zero()) solutions.push_back(std::move(sol));
      } else {
        basis.insert(std::move(row));
      }
    }
  }

  std::stable_sort(solutions.begin(), solutions.end(),
                   [](const Element& a, const Element& b) {
                     return a.max_degree() < b.max_degree();
                   });

  // Extract a minimal generating set: discard solutions lying in the span of
  // products of already-found generators (and their stars) and constants.
  SpanBasis known;
  std::vector<Element> pool = {Element::unit(A)};
  known.insert_element(Element::unit(A));
  auto grow_closure = [&](const Element& g) {
    std::vector<Element> added = {g, star(g)};
    for (size_t i = 0; i < added.size(); ++i) {
      const Element& x = added[i];
      if (x.max_degree() > degree_bound) continue;
      bool fresh = known.insert_element(x);
      if (!fresh) continue;
      pool.push_back(x);
      size_t snapshot = pool.size();
      for (size_t j = 0; j + 1 < snapshot; ++j) {
        Element prod = twisted_product(pool[j], x);
        if (prod.max_degree() <= degree_bound) added.push_back(prod);
        Element prod2 = twisted_product(x, pool[j]);
        if (prod2.max_degree() <= degree_bound) added.push_back(prod2);
      }
    }
  };

  for (const Element& sol : solutions) {
    SpanBasis::TaggedRow rem = known.reduce_element(sol);
    if (rem.value.empty()) continue;
    Element g(A);
    for (const auto& [w, c] : rem.value) g += Element::word(A, w, c);
    // normalize: unit leading coefficient for readable output
    g = g.scaled(rem.value.begin()->second.leading_term_unit().unit_inverse());
    if (g.max_degree() >= degree_bound) result.non_closed = true;
    result.generators.push_back(g);
    grow_closure(g);
  }
  if (result.non_closed) {
    result.notes.push_back("new generators appeared at the degree bound; the invariant algebra "
                           "may not be closed at this bound");
  }
  return result;
}

MatchReport match_presentation(const std::vector<Element>& generators,
                               const Presentation& ambient, const std::string& family,
                               int degree_bound) {
  MatchReport report;
  if (family != "sphere") {
    report.detail = "unsupported family: " + family;
    return report;
  }
  const AlgebraContext::Ptr& ctx = ambient.ctx;
  int m = static_cast<int>(generators.size());
  std::vector<Weight> weights;
  for (const Element& g : generators) {
    if (g.context() != ctx) throw ContextError("generator not over the ambient context");
    auto comps = homogeneous_components(g);
    if (comps.size() != 1) {
      report.detail = "generators must be homogeneous to match a sphere presentation";
      return report;
    }
    weights.push_back(comps.begin()->first);
  }

  std::vector<AffineForm> entries(static_cast<size_t>(m) * m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      entries[static_cast<size_t>(j) * m + k] = ctx->theta().pairing(weights[j], weights[k]);
    }
  }
  report.induced = DeformationMatrix(m, std::move(entries));

  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      PhaseExponent phase = exchange_phase(ctx->theta(), weights[j], weights[k]);
      // the exchange identity must hold exactly in the ambient algebra
      Element lhs = twisted_product(generators[j], generators[k]);
      Element rhs = twisted_product(generators[k], generators[j])
                        .scaled(Coefficient::from_phase(phase));
      if (lhs != rhs) {
        report.detail = "exchange identity fails between generators " + std::to_string(j + 1) +
                        " and " + std::to_string(k + 1);
        return report;
      }
      report.exchanges.push_back({j, k, phase});
    }
  }

  Element radius(ctx);
  for (const Element& g : generators) radius += twisted_product(g, star(g));
  radius -= Element::unit(ctx);
  Membership mem = radius.is_zero() ? Membership::Member
                                    : ideal_membership(ambient, radius, degree_bound);
  report.radius = {"radius", mem == Membership::Member ? CheckStatus::Pass : CheckStatus::Undecided,
                   mem == Membership::Member
                       ? ""
                       : "not decided at bound " + std::to_string(degree_bound)};
  report.matched = mem == Membership::Member;
  report.family_instance = "sphere:" + std::to_string(m);
  return report;
}

namespace {

CoactionSpec make_su3_on_s5() {
  MatrixQuantumGroup H = build_su_theta(3, su_parameter_matrix(3));
  Presentation A = build_sphere(sphere_parameter_matrix(3), 3);
  AlgebraContext::Ptr T = AlgebraContext::tensor({H.ctx, A.ctx});
  std::map<int, Element> images;
  for (int j = 1; j <= 3; ++j) {
    int zj = A.ctx->find_letter(0, "z", j, -1, false);
    Element img(T);
    for (int k = 1; k <= 3; ++k) {
      int zk = A.ctx->find_letter(0, "z", k, -1, false);
      img += twisted_product(embed(H.gen(j, k), T, 0),
                             embed(Element::generator(A.ctx, zk), T, 1));
    }
    images.emplace(zj, std::move(img));
  }
  return make_coaction("su3-on-s5", std::move(H), std::move(A), images);
}

CoactionSpec make_su3_on_su4() {
  MatrixQuantumGroup H = build_su_theta(3, su_parameter_matrix(3));
  MatrixQuantumGroup A4 = build_su_theta(4, su_parameter_matrix(4));
  Presentation A = A4.presentation;
  AlgebraContext::Ptr T = AlgebraContext::tensor({H.ctx, A.ctx});
  std::map<int, Element> images;
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= 4; ++l) {
      int vkl = A4.grid_letter(k, l);
      Element img(T);
      if (k == 4) {
        img = embed(A4.gen(k, l), T, 1);
      } else {
        for (int alpha = 1; alpha <= 3; ++alpha) {
          img += twisted_product(embed(H.gen(k, alpha), T, 0),
                                 embed(A4.gen(alpha, l), T, 1));
        }
      }
      images.emplace(vkl, std::move(img));
    }
  }
  return make_coaction("su3-on-su4", std::move(H), std::move(A), images);
}

CoactionSpec make_su2_on_su3() {
  MatrixQuantumGroup H = build_su_theta(2, DeformationMatrix::zero(1));
  MatrixQuantumGroup A3 = build_su_theta(3, su_parameter_matrix(3));
  Presentation A = A3.presentation;
  AlgebraContext::Ptr T = AlgebraContext::tensor({H.ctx, A.ctx});
  std::map<int, Element> images;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      Element img(T);
      if (i == 3) {
        img = embed(A3.gen(3, j), T, 1);
      } else {
        for (int k = 1; k <= 2; ++k) {
          img += twisted_product(embed(H.gen(i, k), T, 0), embed(A3.gen(k, j), T, 1));
        }
      }
      images.emplace(A3.grid_letter(i, j), std::move(img));
    }
  }
  return make_coaction("su2-on-su3", std::move(H), std::move(A), images);
}

}  // namespace

CoactionSpec identity_coaction(Presentation target) {
  MatrixQuantumGroup H = build_torus_group(1, DeformationMatrix::zero(1));
  AlgebraContext::Ptr T = AlgebraContext::tensor({H.ctx, target.ctx});
  std::map<int, Element> images;
  for (int id : target.ctx->unstarred_letters()) {
    images.emplace(id, embed(Element::generator(target.ctx, id), T, 1));
  }
  return make_coaction("identity:" + target.name, std::move(H), std::move(target), images);
}

CoactionSpec builtin_spec(const std::string& name) {
  if (name == "su3-on-s5") return make_su3_on_s5();
  if (name == "su3-on-su4") return make_su3_on_su4();
  if (name == "su2-on-su3") return make_su2_on_su3();
  if (name.rfind("identity:", 0) == 0) {
    std::string alg = name.substr(9);
    if (alg.rfind("sphere:", 0) == 0) {
      int n = std::stoi(alg.substr(7));
      return identity_coaction(build_sphere(sphere_parameter_matrix(n), n));
    }
    if (alg.rfind("torus:", 0) == 0) {
      int n = std::stoi(alg.substr(6));
      return identity_coaction(build_nc_torus(generic_antisymmetric(n, "lambda")));
    }
    if (alg.rfind("su:", 0) == 0) {
      int n = std::stoi(alg.substr(3));
      return identity_coaction(build_su_theta(n, su_parameter_matrix(n)).presentation);
    }
  }
  throw UsageError("unknown coaction spec: " + name);
}

}  // namespace thetakit
