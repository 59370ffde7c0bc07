#include "thetakit/hopf.hpp"

#include <sstream>

#include "thetakit/errors.hpp"

namespace thetakit {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Undecided: return "undecided";
  }
  return "?";
}

int MatrixQuantumGroup::grid_letter(int i, int j, bool starred) const {
  int id = ctx->find_letter(0, grid_name, i, j, starred);
  if (id < 0) throw InvariantViolation("grid letter out of range");
  return id;
}

std::optional<std::tuple<int, int, bool>> MatrixQuantumGroup::grid_position(int letter) const {
  const Letter& l = ctx->letter(letter);
  if (l.name != grid_name || l.row < 1 || l.col < 1) return std::nullopt;
  return std::make_tuple(l.row, l.col, l.starred);
}

MatrixQuantumGroup MatrixQuantumGroup::substituted(const ParamSubstitution& sub) const {
  MatrixQuantumGroup q;
  q.n = n;
  q.grid_name = grid_name;
  q.diagonal = diagonal;
  q.K = K.substituted(sub);
  q.theta = theta.substituted(sub);
  q.presentation = presentation.substituted(sub);
  q.ctx = q.presentation.ctx;
  q.ctx2 = AlgebraContext::tensor({q.ctx, q.ctx});
  q.warnings = warnings;
  return q;
}

std::vector<Element> coproduct_images(const MatrixQuantumGroup& Q) {
  std::vector<Element> images(static_cast<size_t>(Q.ctx->letter_count()));
  if (Q.diagonal) {
    for (int j = 1; j <= Q.n; ++j) {
      Element img = twisted_product(embed(Q.gen(j, j), Q.ctx2, 0), embed(Q.gen(j, j), Q.ctx2, 1));
      images[static_cast<size_t>(Q.grid_letter(j, j))] = img;
      images[static_cast<size_t>(Q.grid_letter(j, j, true))] = star(img);
    }
    return images;
  }
  for (int i = 1; i <= Q.n; ++i) {
    for (int j = 1; j <= Q.n; ++j) {
      Element img(Q.ctx2);
      for (int k = 1; k <= Q.n; ++k) {
        img += twisted_product(embed(Q.gen(i, k), Q.ctx2, 0), embed(Q.gen(k, j), Q.ctx2, 1));
      }
      images[static_cast<size_t>(Q.grid_letter(i, j))] = img;
      images[static_cast<size_t>(Q.grid_letter(i, j, true))] = star(img);
    }
  }
  return images;
}

Element coproduct(const MatrixQuantumGroup& Q, const Element& a) {
  return apply_algebra_map(a, Q.ctx2, coproduct_images(Q));
}

namespace {

std::vector<Coefficient> counit_images(const MatrixQuantumGroup& Q) {
  std::vector<Coefficient> images(static_cast<size_t>(Q.ctx->letter_count()));
  for (int id = 0; id < Q.ctx->letter_count(); ++id) {
    auto pos = Q.grid_position(id);
    if (!pos) throw InvariantViolation("non-grid letter in quantum group context");
    auto [i, j, starred] = *pos;
    images[static_cast<size_t>(id)] =
        i == j ? Coefficient::one() : Coefficient::zero();
  }
  return images;
}

std::vector<Element> antipode_images(const MatrixQuantumGroup& Q) {
  std::vector<Element> images(static_cast<size_t>(Q.ctx->letter_count()));
  for (int id = 0; id < Q.ctx->letter_count(); ++id) {
    auto pos = Q.grid_position(id);
    if (!pos) throw InvariantViolation("non-grid letter in quantum group context");
    auto [i, j, starred] = *pos;
    images[static_cast<size_t>(id)] =
        Element::generator(Q.ctx, Q.grid_letter(j, i, !starred));
  }
  return images;
}

std::vector<Element> test_words(const MatrixQuantumGroup& Q) {
  std::vector<Element> out;
  int L = Q.ctx->letter_count();
  for (int i = 0; i < L; ++i) out.push_back(Element::generator(Q.ctx, i));
  for (int i = 0; i < L; ++i) {
    for (int j = i; j < L; ++j) {
      out.push_back(Element::word(Q.ctx, {i, j}, Coefficient::one()));
    }
  }
  return out;
}

}  // namespace

Coefficient counit(const MatrixQuantumGroup& Q, const Element& a) {
  return apply_scalar_map(a, counit_images(Q));
}

Element antipode(const MatrixQuantumGroup& Q, const Element& a) {
  return apply_algebra_map(a, Q.ctx, antipode_images(Q), /*antimultiplicative=*/true);
}

CheckReport check_coassociativity(const MatrixQuantumGroup& Q,
                                  const std::vector<Element>* images) {
  CheckReport report;
  std::vector<Element> delta = images ? *images : coproduct_images(Q);
  AlgebraContext::Ptr ctx3 = AlgebraContext::tensor({Q.ctx, Q.ctx, Q.ctx});

  // images of the tensor-square letters under Delta (x) id and id (x) Delta
  std::vector<Element> left_images(static_cast<size_t>(Q.ctx2->letter_count()));
  std::vector<Element> right_images(static_cast<size_t>(Q.ctx2->letter_count()));
  for (int id = 0; id < Q.ctx2->letter_count(); ++id) {
    const Letter& l = Q.ctx2->letter(id);
    if (l.leg == 0) {
      left_images[static_cast<size_t>(id)] = embed(delta[static_cast<size_t>(l.source_id)], ctx3, 0);
      right_images[static_cast<size_t>(id)] = embed(Element::generator(Q.ctx, l.source_id), ctx3, 0);
    } else {
      left_images[static_cast<size_t>(id)] = embed(Element::generator(Q.ctx, l.source_id), ctx3, 2);
      right_images[static_cast<size_t>(id)] = embed(delta[static_cast<size_t>(l.source_id)], ctx3, 1);
    }
  }

  for (const Element& x : test_words(Q)) {
    Element dx = apply_algebra_map(x, Q.ctx2, delta);
    Element lhs = apply_algebra_map(dx, ctx3, left_images);
    Element rhs = apply_algebra_map(dx, ctx3, right_images);
    std::string label = "coassociativity[" + Q.ctx->word_to_string(x.terms().begin()->first) + "]";
    if (lhs == rhs) {
      report.add(label, CheckStatus::Pass);
    } else {
      report.add(label, CheckStatus::Fail, "the two iterated coproducts differ on this word");
      return report;
    }
  }
  return report;
}

CheckReport check_counit_laws(const MatrixQuantumGroup& Q) {
  CheckReport report;
  std::vector<Element> delta = coproduct_images(Q);
  auto eps_word = [&](const Word& w) {
    return counit(Q, Element::word(Q.ctx, w, Coefficient::one()));
  };
  for (const Element& x : test_words(Q)) {
    Element dx = apply_algebra_map(x, Q.ctx2, delta);
    Element left = contract_leg(dx, 0, eps_word, Q.ctx);
    Element right = contract_leg(dx, 1, eps_word, Q.ctx);
    std::string label = "counit[" + Q.ctx->word_to_string(x.terms().begin()->first) + "]";
    if (left == x && right == x) {
      report.add(label, CheckStatus::Pass);
    } else {
      report.add(label, CheckStatus::Fail, "counit law fails on this word");
      return report;
    }
  }
  return report;
}

namespace {

// m o (id (x) S) or m o (S (x) id) applied to an element of the tensor square.
Element multiply_with_antipode(const MatrixQuantumGroup& Q, const Element& t, bool s_on_left) {
  Element out(Q.ctx);
  for (const auto& [w, c] : t.terms()) {
    std::vector<Word> parts = Q.ctx2->split_word(w);
    Element a = Element::word(Q.ctx, parts[0], Coefficient::one());
    Element b = Element::word(Q.ctx, parts[1], Coefficient::one());
    Element prod = s_on_left ? twisted_product(antipode(Q, a), b)
                             : twisted_product(a, antipode(Q, b));
    out += prod.scaled(c);
  }
  return out;
}

CheckStatus reduce_to_zero(const MatrixQuantumGroup& Q, const Element& e, int bound,
                           std::string* detail) {
  if (e.is_zero()) return CheckStatus::Pass;
  if (!counit(Q, e).is_zero()) {
    *detail = "counit of the residual is nonzero; it cannot lie in the ideal";
    return CheckStatus::Fail;
  }
  if (ideal_membership(Q.presentation, e, bound) == Membership::Member) {
    return CheckStatus::Pass;
  }
  *detail = "not decided at bound " + std::to_string(bound);
  return CheckStatus::Undecided;
}

}  // namespace

CheckReport check_antipode_axiom(const MatrixQuantumGroup& Q, int degree_bound) {
  CheckReport report;
  for (int i = 1; i <= Q.n; ++i) {
    for (int j = 1; j <= Q.n; ++j) {
      if (Q.diagonal && i != j) continue;
      for (bool starred : {false, true}) {
        Element x = Element::generator(Q.ctx, Q.grid_letter(i, j, starred));
        Element dx = coproduct(Q, x);
        Coefficient eps = counit(Q, x);
        for (bool s_on_left : {false, true}) {
          Element m = multiply_with_antipode(Q, dx, s_on_left);
          m -= Element::scalar(Q.ctx, eps);
          std::string detail;
          CheckStatus st = reduce_to_zero(Q, m, degree_bound, &detail);
          std::ostringstream label;
          label << (s_on_left ? "m(S(x)id)Delta" : "m(id(x)S)Delta") << "["
                << Q.ctx->letter(Q.grid_letter(i, j, starred)).display << "]";
          report.add(label.str(), st, detail);
          if (st == CheckStatus::Fail) return report;
        }
      }
    }
  }
  return report;
}

CheckReport check_corep_unitarity(const MatrixQuantumGroup& Q, int degree_bound,
                                  const std::vector<Element>* coproduct_override) {
  CheckReport report;
  for (int j = 1; j <= Q.n; ++j) {
    for (int l = 1; l <= Q.n; ++l) {
      Element uu(Q.ctx), su(Q.ctx);
      if (Q.diagonal) {
        if (j != l) continue;  // off-diagonal entries of U U* vanish termwise
        uu = twisted_product(Q.gen(j, j), Element::generator(Q.ctx, Q.grid_letter(j, j, true)));
        su = twisted_product(Element::generator(Q.ctx, Q.grid_letter(j, j, true)), Q.gen(j, j));
      } else {
        for (int k = 1; k <= Q.n; ++k) {
          uu += twisted_product(Q.gen(j, k),
                                Element::generator(Q.ctx, Q.grid_letter(l, k, true)));
          su += twisted_product(Element::generator(Q.ctx, Q.grid_letter(k, j, true)),
                                Q.gen(k, l));
        }
      }
      Coefficient delta = j == l ? Coefficient::one() : Coefficient::zero();
      uu -= Element::scalar(Q.ctx, delta);
      su -= Element::scalar(Q.ctx, delta);
      std::string detail;
      CheckStatus st = reduce_to_zero(Q, uu, degree_bound, &detail);
      report.add("UU*[" + std::to_string(j) + "," + std::to_string(l) + "]", st, detail);
      if (st == CheckStatus::Fail) return report;
      st = reduce_to_zero(Q, su, degree_bound, &detail);
      report.add("U*U[" + std::to_string(j) + "," + std::to_string(l) + "]", st, detail);
      if (st == CheckStatus::Fail) return report;
    }
  }
  // corepresentation condition: Delta(u_ij) = sum_k u_ik (x) u_kj
  const std::vector<Element> delta_images =
      coproduct_override ? *coproduct_override : coproduct_images(Q);
  for (int i = 1; i <= Q.n; ++i) {
    for (int j = 1; j <= Q.n; ++j) {
      if (Q.diagonal && i != j) continue;
      Element expected(Q.ctx2);
      if (Q.diagonal) {
        expected = twisted_product(embed(Q.gen(i, i), Q.ctx2, 0), embed(Q.gen(i, i), Q.ctx2, 1));
      } else {
        for (int k = 1; k <= Q.n; ++k) {
          expected += twisted_product(embed(Q.gen(i, k), Q.ctx2, 0),
                                      embed(Q.gen(k, j), Q.ctx2, 1));
        }
      }
      const Element& actual = delta_images[static_cast<size_t>(Q.grid_letter(i, j))];
      std::string label =
          "(id(x)Delta)U[" + std::to_string(i) + "," + std::to_string(j) + "]";
      if (actual == expected) {
        report.add(label, CheckStatus::Pass);
      } else {
        report.add(label, CheckStatus::Fail, "coproduct is not the matrix coproduct");
        return report;
      }
    }
  }
  return report;
}

ConstraintReport check_coproduct_homomorphism(int n, const DeformationMatrix& theta_full) {
  if (theta_full.dim() != 2 * (n - 1)) {
    throw DimensionError("grid twist must have dimension 2(n-1)");
  }
  const int half = n - 1;
  auto torus_weight = [&](int i) {
    Weight w(static_cast<size_t>(half), 0);
    if (i < n) {
      w[static_cast<size_t>(i - 1)] = 1;
    } else {
      for (int k = 0; k < half; ++k) w[static_cast<size_t>(k)] = -1;
    }
    return w;
  };
  auto grid_weight = [&](int i, int j, bool starred) {
    Weight w = torus_weight(i);
    Weight r = torus_weight(j);
    w.insert(w.end(), r.begin(), r.end());
    return starred ? weight_neg(w) : w;
  };

  struct GridLetter {
    int i, j;
    bool starred;
  };
  std::vector<GridLetter> letters;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      letters.push_back({i, j, false});
      letters.push_back({i, j, true});
    }
  }

  ConstraintReport report;
  ConstraintSolver solver;
  for (const GridLetter& x : letters) {
    for (const GridLetter& y : letters) {
      AffineForm lhs = theta_full.pairing(grid_weight(x.i, x.j, x.starred),
                                          grid_weight(y.i, y.j, y.starred));
      bool offending = false;
      for (int m = 1; m <= n; ++m) {
        for (int mp = 1; mp <= n; ++mp) {
          // coproduct components u_im (x) u_mj and u_km' (x) u_m'l
          AffineForm rhs = theta_full.pairing(grid_weight(x.i, m, x.starred),
                                              grid_weight(y.i, mp, y.starred)) +
                           theta_full.pairing(grid_weight(m, x.j, x.starred),
                                              grid_weight(mp, y.j, y.starred));
          AffineForm c = (lhs - rhs) * make_rational(1, 2);
          if (c.is_zero()) continue;
          offending = true;
          solver.add(c);
        }
      }
      if (offending) {
        auto display = [](const GridLetter& g) {
          return "u" + std::to_string(g.i) + std::to_string(g.j) + (g.starred ? "*" : "");
        };
        report.witnesses.emplace_back(display(x), display(y));
      }
    }
  }

  std::set<std::string> params;
  theta_full.collect_parameters(params);
  if (solver.inconsistent() || (!solver.empty() && solver.forces_all_zero(params))) {
    report.status = ConstraintReport::Status::FailsIdentically;
  } else if (solver.empty()) {
    report.status = ConstraintReport::Status::ExtendsUnconditionally;
  } else {
    report.status = ConstraintReport::Status::ExtendsIff;
  }
  report.constraints = solver.basis();
  return report;
}

PhaseExponent braiding(const DeformationMatrix& theta, const Weight& p, const Weight& q) {
  return chi(theta, p, q);
}

Coefficient haar_state_word(const MatrixQuantumGroup& Q, const Word& w) {
  if (w.empty()) return Coefficient::one();
  if (!weight_is_zero(Q.ctx->weight_of(w))) return Coefficient::zero();
  auto [plain, starred] = Q.ctx->bidegree_of(w);
  if (plain == 1 && starred == 1) {
    auto p0 = Q.grid_position(w[0]);
    auto p1 = Q.grid_position(w[1]);
    if (p0 && p1) {
      auto [i, j, s0] = *p0;
      auto [k, l, s1] = *p1;
      if (s0 != s1) {
        bool match = i == k && j == l;
        long dim = Q.diagonal ? 1 : Q.n;  // Schur: 1/dim of the irrep
        return match ? Coefficient::from_rational(make_rational(1, dim))
                     : Coefficient::zero();
      }
    }
  }
  std::ostringstream os;
  os << "Haar state unsupported on weight-zero word " << Q.ctx->word_to_string(w)
     << " of bidegree (" << plain << "," << starred << ")";
  throw UnsupportedDegree(os.str());
}

Coefficient haar_state(const MatrixQuantumGroup& Q, const Element& a) {
  if (a.context() != Q.ctx) throw ContextError("element not over the quantum group context");
  Coefficient out;
  for (const auto& [w, c] : a.terms()) {
    out += c * haar_state_word(Q, w);
  }
  return out;
}

CheckReport check_haar_identities(const MatrixQuantumGroup& Q, int degree_bound) {
  CheckReport report;
  std::vector<Element> domain;
  std::vector<std::string> names;
  for (int id = 0; id < Q.ctx->letter_count(); ++id) {
    domain.push_back(Element::generator(Q.ctx, id));
    names.push_back(Q.ctx->letter(id).display);
  }
  for (int i = 1; i <= Q.n; ++i) {
    for (int j = 1; j <= Q.n; ++j) {
      if (Q.diagonal && i != j) continue;
      for (int k = 1; k <= Q.n; ++k) {
        for (int l = 1; l <= Q.n; ++l) {
          if (Q.diagonal && k != l) continue;
          domain.push_back(twisted_product(
              Q.gen(i, j), Element::generator(Q.ctx, Q.grid_letter(k, l, true))));
          names.push_back(Q.ctx->letter(Q.grid_letter(i, j)).display + "." +
                          Q.ctx->letter(Q.grid_letter(k, l, true)).display);
        }
      }
    }
  }

  auto mu_word = [&](const Word& w) { return haar_state_word(Q, w); };
  for (size_t t = 0; t < domain.size(); ++t) {
    const Element& a = domain[t];
    Coefficient mu = haar_state(Q, a);
    Element dx = coproduct(Q, a);
    Element left = contract_leg(dx, 1, mu_word, Q.ctx);   // (id (x) mu) Delta
    Element right = contract_leg(dx, 0, mu_word, Q.ctx);  // (mu (x) id) Delta
    Element target = Element::scalar(Q.ctx, mu);
    for (auto [elem, label] : {std::pair<Element*, const char*>{&left, "(id(x)mu)Delta"},
                               std::pair<Element*, const char*>{&right, "(mu(x)id)Delta"}}) {
      std::string detail;
      CheckStatus st = reduce_to_zero(Q, *elem - target, degree_bound, &detail);
      report.add(std::string(label) + "[" + names[t] + "]", st, detail);
      if (st == CheckStatus::Fail) return report;
    }
    Coefficient mu_s = haar_state(Q, antipode(Q, a));
    report.add("mu(S(a))=mu(a)[" + names[t] + "]",
               mu_s == mu ? CheckStatus::Pass : CheckStatus::Fail);
    if (mu_s != mu) return report;
  }
  return report;
}

}  // namespace thetakit
