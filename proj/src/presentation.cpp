#include "thetakit/presentation.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "thetakit/errors.hpp"

namespace thetakit {

void Presentation::add_relation(std::string label, Element rel) {
  if (rel.context() != ctx) throw ContextError("relation belongs to a different context");
  relation_labels.push_back(std::move(label));
  relations.push_back(std::move(rel));
}

Presentation Presentation::substituted(const ParamSubstitution& sub) const {
  Presentation p;
  p.name = name;
  p.ctx = ctx->substituted(sub);
  p.relation_labels = relation_labels;
  p.relations.reserve(relations.size());
  for (const Element& r : relations) {
    p.relations.push_back(substitute_element(r, p.ctx, sub));
  }
  return p;
}

std::vector<ExchangeRelation> generate_exchange_relations(const AlgebraContext::Ptr& ctx,
                                                          ExchangePairs pairs,
                                                          bool include_commutators) {
  std::vector<ExchangeRelation> out;
  std::vector<int> plain = ctx->unstarred_letters();
  auto emit = [&](int g, int h) {
    PhaseExponent phase =
        exchange_phase(ctx->theta(), ctx->letter(g).weight, ctx->letter(h).weight);
    if (phase.is_zero() && !include_commutators) return;
    Element gh = twisted_product(Element::generator(ctx, g), Element::generator(ctx, h));
    Element hg = twisted_product(Element::generator(ctx, h), Element::generator(ctx, g));
    ExchangeRelation rel;
    rel.left_letter = g;
    rel.right_letter = h;
    rel.phase = phase;
    rel.residual = gh - hg.scaled(Coefficient::from_phase(phase));
    out.push_back(std::move(rel));
  };
  for (size_t i = 0; i < plain.size(); ++i) {
    for (size_t j = i + 1; j < plain.size(); ++j) {
      emit(plain[i], plain[j]);
    }
  }
  if (pairs == ExchangePairs::UnstarredAndMixed) {
    for (size_t i = 0; i < plain.size(); ++i) {
      for (size_t j = 0; j < plain.size(); ++j) {
        if (plain[i] == plain[j] && !include_commutators) continue;
        emit(plain[i], ctx->star_of(plain[j]));
      }
    }
  }
  return out;
}

SpanBasis::Row element_to_row(const Element& e) {
  SpanBasis::Row r;
  for (const auto& [w, c] : e.terms()) r.emplace(w, c);
  return r;
}

namespace {

void row_add_scaled(SpanBasis::TaggedRow& dst, const SpanBasis::TaggedRow& src,
                    const Coefficient& factor) {
  for (const auto& [w, c] : src.value) {
    Coefficient add = c * factor;
    auto [it, inserted] = dst.value.try_emplace(w, add);
    if (!inserted) {
      it->second += add;
      if (it->second.is_zero()) dst.value.erase(it);
    }
  }
  for (const auto& [k, c] : src.tag) {
    Coefficient add = c * factor;
    auto [it, inserted] = dst.tag.try_emplace(k, add);
    if (!inserted) {
      it->second += add;
      if (it->second.is_zero()) dst.tag.erase(it);
    }
  }
}

void row_scale(SpanBasis::TaggedRow& r, const Coefficient& factor) {
  for (auto& [w, c] : r.value) c *= factor;
  for (auto& [k, c] : r.tag) c *= factor;
}

}  // namespace

void SpanBasis::reduce(TaggedRow& r) const {
  // Pivot rows have their pivot word as their smallest word with unit-
  // normalized leading term, so elimination only introduces larger words;
  // scanning ascending terminates.
  auto it = r.value.begin();
  while (it != r.value.end()) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const TaggedRow& prow = pivot->second;
    const Coefficient& pv = prow.value.at(pivot->first);
    Coefficient rv = it->second;
    Word word = it->first;
    if (pv.is_single_term()) {
      // pivot value is exactly 1 after normalization
      row_add_scaled(r, prow, -rv);
    } else {
      // cross-multiply: r := pv * r - rv * prow, cancelling the pivot word
      row_scale(r, pv);
      row_add_scaled(r, prow, -rv);
    }
    it = r.value.lower_bound(word);
  }
}

bool SpanBasis::insert(TaggedRow r) {
  reduce(r);
  if (r.value.empty()) return false;
  const Word pivot_word = r.value.begin()->first;
  Coefficient unit = r.value.begin()->second.leading_term_unit();
  row_scale(r, unit.unit_inverse());
  rows_.emplace(pivot_word, std::move(r));
  return true;
}

bool SpanBasis::insert_element(const Element& e) {
  TaggedRow r;
  r.value = element_to_row(e);
  return insert(std::move(r));
}

SpanBasis::TaggedRow SpanBasis::reduce_element(const Element& e) const {
  TaggedRow r;
  r.value = element_to_row(e);
  reduce(r);
  return r;
}

namespace {

// Enumerates sorted words over a letter subset with degree <= max_degree.
void enumerate_words(const std::vector<int>& letters, int max_degree,
                     std::vector<Word>& out) {
  out.push_back({});
  size_t level_begin = 0;
  for (int d = 1; d <= max_degree; ++d) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      int lo = out[i].empty() ? 0 : out[i].back();
      for (int id : letters) {
        if (id < lo) continue;
        Word w = out[i];
        w.push_back(id);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
}

}  // namespace

IdealSpan::IdealSpan(const Presentation& pres, int degree_bound, std::vector<int> leg_caps,
                     std::set<Weight> weight_support)
    : ctx_(pres.ctx), degree_bound_(degree_bound) {
  const AlgebraContext::Ptr& ctx = pres.ctx;

  // Relations, closed under star, with weight and leg-degree profile.
  struct RelInfo {
    Element rel;
    int degree;
    std::optional<Weight> weight;  // set when homogeneous
    std::vector<int> min_leg_deg;
  };
  std::vector<RelInfo> rels;
  auto push_rel = [&](const Element& r) {
    if (r.is_zero()) return;
    for (const RelInfo& ri : rels) {
      if (ri.rel == r) return;
    }
    RelInfo info;
    info.rel = r;
    info.degree = r.max_degree();
    bool homogeneous = true;
    Weight wt;
    std::vector<int> min_ld(static_cast<size_t>(ctx->leg_count()),
                            std::numeric_limits<int>::max());
    bool first = true;
    for (const auto& [w, c] : r.terms()) {
      Weight ww = ctx->weight_of(w);
      if (first) {
        wt = ww;
        first = false;
      } else if (ww != wt) {
        homogeneous = false;
      }
      std::vector<int> ld = ctx->leg_degrees(w);
      for (size_t i = 0; i < ld.size(); ++i) min_ld[i] = std::min(min_ld[i], ld[i]);
    }
    if (homogeneous) info.weight = wt;
    info.min_leg_deg = std::move(min_ld);
    rels.push_back(std::move(info));
  };
  for (const Element& r : pres.relations) {
    push_rel(r);
    push_rel(star(r));
  }
  if (rels.empty()) return;

  const bool use_weight = !weight_support.empty();
  const bool use_leg_cap = !leg_caps.empty() && ctx->leg_count() > 1;

  int max_slack = 0;
  for (const RelInfo& ri : rels) max_slack = std::max(max_slack, degree_bound - ri.degree);
  if (max_slack < 0) return;

  std::vector<int> all_letters(static_cast<size_t>(ctx->letter_count()));
  for (int i = 0; i < ctx->letter_count(); ++i) all_letters[static_cast<size_t>(i)] = i;
  std::vector<Word> monomials;
  enumerate_words(all_letters, max_slack, monomials);

  struct MonoInfo {
    Weight weight;
    std::vector<int> leg_deg;
  };
  std::vector<MonoInfo> mono_info;
  mono_info.reserve(monomials.size());
  for (const Word& m : monomials) {
    mono_info.push_back({ctx->weight_of(m), ctx->leg_degrees(m)});
  }

  auto word_fits = [&](const Word& w) {
    if (!use_leg_cap) return true;
    std::vector<int> ld = ctx->leg_degrees(w);
    for (size_t i = 0; i < ld.size(); ++i) {
      if (ld[i] > leg_caps[i]) return false;
    }
    return true;
  };

  for (const RelInfo& ri : rels) {
    int slack = degree_bound - ri.degree;
    if (slack < 0) continue;
    for (size_t i1 = 0; i1 < monomials.size(); ++i1) {
      const Word& m1 = monomials[i1];
      if (static_cast<int>(m1.size()) > slack) continue;
      for (size_t i2 = 0; i2 < monomials.size(); ++i2) {
        const Word& m2 = monomials[i2];
        if (static_cast<int>(m1.size() + m2.size()) > slack) continue;
        if (use_leg_cap) {
          bool feasible = true;
          for (size_t l = 0; l < leg_caps.size(); ++l) {
            if (ri.min_leg_deg[l] + mono_info[i1].leg_deg[l] + mono_info[i2].leg_deg[l] >
                leg_caps[l]) {
              feasible = false;
              break;
            }
          }
          if (!feasible) continue;
        }
        if (use_weight && ri.weight) {
          Weight vw = weight_add(weight_add(*ri.weight, mono_info[i1].weight),
                                 mono_info[i2].weight);
          if (!weight_support.count(vw)) continue;
        }
        Element v = ri.rel;
        if (!m1.empty()) {
          v = twisted_product(Element::word(ctx, m1, Coefficient::one()), v);
        }
        if (!m2.empty()) {
          v = twisted_product(v, Element::word(ctx, m2, Coefficient::one()));
        }
        bool keep = !v.is_zero();
        for (const auto& [w, c] : v.terms()) {
          if (!word_fits(w)) {
            keep = false;
            break;
          }
        }
        if (!keep) continue;
        basis_.insert_element(v);
      }
    }
  }
}

Membership IdealSpan::reduce(const Element& a) const {
  if (a.context() != ctx_) throw ContextError("element not over the span's context");
  if (degree_bound_ < a.max_degree()) {
    throw BoundError("degree bound smaller than the degree of the element");
  }
  SpanBasis::TaggedRow rem = basis_.reduce_element(a);
  return rem.value.empty() ? Membership::Member : Membership::Undecided;
}

Membership ideal_membership(const Presentation& pres, const Element& a, int degree_bound) {
  if (a.context() != pres.ctx) throw ContextError("element not over the presentation context");
  if (degree_bound < a.max_degree()) {
    throw BoundError("degree bound smaller than the degree of the element");
  }
  if (a.is_zero()) return Membership::Member;

  std::set<Weight> target_weights;
  std::vector<int> leg_cap(static_cast<size_t>(pres.ctx->leg_count()), 0);
  for (const auto& [w, c] : a.terms()) {
    target_weights.insert(pres.ctx->weight_of(w));
    std::vector<int> ld = pres.ctx->leg_degrees(w);
    for (size_t i = 0; i < ld.size(); ++i) leg_cap[i] = std::max(leg_cap[i], ld[i]);
  }
  IdealSpan span(pres, degree_bound, std::move(leg_cap), std::move(target_weights));
  return span.reduce(a);
}

bool is_ideal_member(const Presentation& pres, const Element& a, int degree_bound) {
  return ideal_membership(pres, a, degree_bound) == Membership::Member;
}

int default_degree_bound(const Presentation& pres) {
  int d = 0;
  for (const Element& r : pres.relations) d = std::max(d, r.max_degree());
  return d + 2;
}

}  // namespace thetakit
