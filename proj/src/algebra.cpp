#include "thetakit/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

std::string make_display(const std::string& name, int row, int col, bool starred) {
  std::string d = name;
  if (row >= 0) d += std::to_string(row);
  if (col >= 0) d += std::to_string(col);
  if (starred) d += "*";
  return d;
}

// Canonical letter order: leg-major, unstarred before starred, then by
// (name, row, col). Any fixed order works; this one keeps tensor legs
// contiguous and matches the chosen normal form.
bool letter_less(const Letter& a, const Letter& b) {
  return std::tie(a.leg, a.starred, a.name, a.row, a.col) <
         std::tie(b.leg, b.starred, b.name, b.row, b.col);
}

}  // namespace

void AlgebraContext::index_letters() {
  lookup_.clear();
  for (size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    lookup_[{l.leg, l.name, l.row, l.col, l.starred}] = static_cast<int>(i);
  }
  // resolve star partners
  for (size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    auto it = lookup_.find({l.leg, l.name, l.row, l.col, !l.starred});
    if (it == lookup_.end()) throw InvariantViolation("letter without star partner");
    letters_[i].partner = it->second;
  }
}

AlgebraContext::Ptr AlgebraContext::make(DeformationMatrix theta,
                                         const std::vector<GeneratorSpec>& gens) {
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
  ctx->theta_ = std::move(theta);
  for (const GeneratorSpec& g : gens) {
    if (static_cast<int>(g.weight.size()) != ctx->theta_.dim()) {
      throw DimensionError("generator weight dimension does not match context");
    }
    Letter plain;
    plain.leg = 0;
    plain.starred = false;
    plain.name = g.name;
    plain.row = g.row;
    plain.col = g.col;
    plain.weight = g.weight;
    plain.display = make_display(g.name, g.row, g.col, false);
    Letter starred = plain;
    starred.starred = true;
    starred.weight = weight_neg(g.weight);
    starred.display = make_display(g.name, g.row, g.col, true);
    ctx->letters_.push_back(std::move(plain));
    ctx->letters_.push_back(std::move(starred));
  }
  std::sort(ctx->letters_.begin(), ctx->letters_.end(), letter_less);
  for (size_t i = 1; i < ctx->letters_.size(); ++i) {
    if (!letter_less(ctx->letters_[i - 1], ctx->letters_[i])) {
      throw InvariantViolation("duplicate generator in context");
    }
  }
  for (size_t i = 0; i < ctx->letters_.size(); ++i) {
    ctx->letters_[i].source_id = static_cast<int>(i);
  }
  ctx->leg_sources_ = {nullptr};
  ctx->index_letters();
  return ctx;
}

AlgebraContext::Ptr AlgebraContext::tensor(const std::vector<Ptr>& factors) {
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
  DeformationMatrix theta = DeformationMatrix::zero(0);
  int leg_offset = 0;
  int dim_offset = 0;
  std::vector<int> factor_dim_offsets;
  for (const Ptr& f : factors) {
    factor_dim_offsets.push_back(dim_offset);
    theta = theta.direct_sum(f->theta());
    dim_offset += f->weight_dim();
  }
  ctx->theta_ = std::move(theta);
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    const Ptr& f = factors[fi];
    for (int id = 0; id < f->letter_count(); ++id) {
      Letter l = f->letter(id);
      Weight w(dim_offset, 0);
      for (size_t k = 0; k < l.weight.size(); ++k) {
        w[factor_dim_offsets[fi] + k] = l.weight[k];
      }
      l.weight = std::move(w);
      l.leg += leg_offset;
      l.source_id = id;
      ctx->letters_.push_back(std::move(l));
    }
    for (int leg = 0; leg < f->leg_count(); ++leg) {
      ctx->leg_sources_.push_back(f->leg_source(leg));
    }
    leg_offset += f->leg_count();
  }
  std::sort(ctx->letters_.begin(), ctx->letters_.end(), letter_less);
  ctx->index_letters();
  return ctx;
}

AlgebraContext::Ptr AlgebraContext::substituted(const ParamSubstitution& sub) const {
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
  ctx->theta_ = theta_.substituted(sub);
  ctx->letters_ = letters_;
  ctx->leg_sources_.assign(leg_sources_.size(), nullptr);
  for (size_t leg = 0; leg < leg_sources_.size(); ++leg) {
    if (leg_sources_[leg]) {
      ctx->leg_sources_[leg] = leg_sources_[leg]->substituted(sub);
    }
  }
  ctx->index_letters();
  return ctx;
}

int AlgebraContext::find_letter(int leg, const std::string& name, int row, int col,
                                bool starred) const {
  auto it = lookup_.find({leg, name, row, col, starred});
  return it == lookup_.end() ? -1 : it->second;
}

std::vector<int> AlgebraContext::unstarred_letters() const {
  std::vector<int> ids;
  for (int i = 0; i < letter_count(); ++i) {
    if (!letters_[static_cast<size_t>(i)].starred) ids.push_back(i);
  }
  return ids;
}

Weight AlgebraContext::weight_of(const Word& w) const {
  Weight acc(static_cast<size_t>(weight_dim()), 0);
  for (int id : w) acc = weight_add(acc, letter(id).weight);
  return acc;
}

std::vector<int> AlgebraContext::leg_degrees(const Word& w) const {
  std::vector<int> d(static_cast<size_t>(leg_count()), 0);
  for (int id : w) d[static_cast<size_t>(letter(id).leg)]++;
  return d;
}

std::pair<int, int> AlgebraContext::bidegree_of(const Word& w) const {
  int plain = 0, starred = 0;
  for (int id : w) (letter(id).starred ? starred : plain)++;
  return {plain, starred};
}

Word AlgebraContext::star_word(const Word& w) const {
  Word r;
  r.reserve(w.size());
  for (int id : w) r.push_back(star_of(id));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Word> AlgebraContext::split_word(const Word& w) const {
  std::vector<Word> parts(static_cast<size_t>(leg_count()));
  for (int id : w) {
    const Letter& l = letter(id);
    parts[static_cast<size_t>(l.leg)].push_back(l.source_id);
  }
  for (Word& p : parts) std::sort(p.begin(), p.end());
  return parts;
}

PhaseExponent AlgebraContext::chi_weights(const Weight& r, const Weight& s) const {
  return chi(theta_, r, s);
}

PhaseExponent AlgebraContext::word_phase(const Word& w) const {
  AffineForm acc;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      acc += theta_.pairing(letter(w[i]).weight, letter(w[j]).weight);
    }
  }
  return PhaseExponent(acc * make_rational(1, 2));
}

std::string AlgebraContext::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  int prev_leg = letter(w[0]).leg;
  for (size_t i = 0; i < w.size(); ++i) {
    const Letter& l = letter(w[i]);
    if (l.leg != prev_leg) {
      os << " (x) ";
      prev_leg = l.leg;
    } else if (i) {
      os << ".";
    }
    os << l.display;
  }
  return os.str();
}

Element Element::unit(AlgebraContext::Ptr ctx) {
  return scalar(std::move(ctx), Coefficient::one());
}

Element Element::scalar(AlgebraContext::Ptr ctx, const Coefficient& c) {
  Element e(std::move(ctx));
  e.add_term({}, c);
  return e;
}

Element Element::generator(AlgebraContext::Ptr ctx, int letter) {
  Element e(std::move(ctx));
  e.add_term({letter}, Coefficient::one());
  return e;
}

Element Element::word(AlgebraContext::Ptr ctx, Word w, const Coefficient& c) {
  if (!std::is_sorted(w.begin(), w.end())) std::sort(w.begin(), w.end());
  Element e(std::move(ctx));
  e.add_term(w, c);
  return e;
}

int Element::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

Coefficient Element::coefficient_of(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coefficient::zero() : it->second;
}

void Element::add_term(const Word& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void require_same_context(const Element& a, const Element& b) {
  if (a.context() != b.context()) {
    throw ContextError("elements belong to different algebra contexts");
  }
}
}  // namespace

Element Element::operator+(const Element& o) const {
  require_same_context(*this, o);
  Element r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

bool Element::operator==(const Element& o) const {
  require_same_context(*this, o);
  return (*this - o).is_zero();
}

Element Element::scaled(const Coefficient& c) const {
  Element r(ctx_);
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

Element Element::scaled(const Rational& q) const { return scaled(Coefficient::from_rational(q)); }

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!w.empty()) os << "*" << ctx_->word_to_string(w);
  }
  return os.str();
}

Element twisted_product(const Element& a, const Element& b) {
  require_same_context(a, b);
  const AlgebraContext& ctx = *a.context();
  Element r(a.context());
  for (const auto& [w1, c1] : a.terms()) {
    Weight r1 = ctx.weight_of(w1);
    for (const auto& [w2, c2] : b.terms()) {
      PhaseExponent phase = ctx.chi_weights(r1, ctx.weight_of(w2));
      Word merged;
      merged.reserve(w1.size() + w2.size());
      std::merge(w1.begin(), w1.end(), w2.begin(), w2.end(), std::back_inserter(merged));
      r.add_term(merged, (c1 * c2).phase_shifted(phase));
    }
  }
  return r;
}

Element star(const Element& a) {
  const AlgebraContext& ctx = *a.context();
  Element r(a.context());
  for (const auto& [w, c] : a.terms()) {
    r.add_term(ctx.star_word(w), c.conjugated());
  }
  return r;
}

std::map<Weight, Element> homogeneous_components(const Element& a) {
  std::map<Weight, Element> parts;
  const AlgebraContext& ctx = *a.context();
  for (const auto& [w, c] : a.terms()) {
    Weight wt = ctx.weight_of(w);
    auto it = parts.find(wt);
    if (it == parts.end()) it = parts.emplace(wt, Element(a.context())).first;
    it->second.add_term(w, c);
  }
  return parts;
}

Element apply_algebra_map(const Element& a, const AlgebraContext::Ptr& target,
                          const std::vector<Element>& images, bool antimultiplicative) {
  if (images.size() != static_cast<size_t>(a.context()->letter_count())) {
    throw ContextError("image table does not match source context");
  }
  Element r(target);
  for (const auto& [w, c] : a.terms()) {
    Element acc = Element::unit(target);
    if (antimultiplicative) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        acc = twisted_product(acc, images[static_cast<size_t>(*it)]);
      }
    } else {
      for (int id : w) acc = twisted_product(acc, images[static_cast<size_t>(id)]);
    }
    PhaseExponent correction = -a.context()->word_phase(w);
    r += acc.scaled(c.phase_shifted(correction));
  }
  return r;
}

Coefficient apply_scalar_map(const Element& a, const std::vector<Coefficient>& images) {
  if (images.size() != static_cast<size_t>(a.context()->letter_count())) {
    throw ContextError("image table does not match source context");
  }
  Coefficient r;
  for (const auto& [w, c] : a.terms()) {
    Coefficient acc = Coefficient::one();
    for (int id : w) acc *= images[static_cast<size_t>(id)];
    PhaseExponent correction = -a.context()->word_phase(w);
    r += acc * c.phase_shifted(correction);
  }
  return r;
}

Element embed(const Element& a, const AlgebraContext::Ptr& target, int first_leg) {
  const AlgebraContext& src = *a.context();
  std::vector<int> map(static_cast<size_t>(src.letter_count()), -1);
  for (int id = 0; id < src.letter_count(); ++id) {
    const Letter& l = src.letter(id);
    int t = target->find_letter(first_leg + l.leg, l.name, l.row, l.col, l.starred);
    if (t < 0) throw ContextError("letter not present in tensor target: " + l.display);
    map[static_cast<size_t>(id)] = t;
  }
  Element r(target);
  for (const auto& [w, c] : a.terms()) {
    Word t;
    t.reserve(w.size());
    for (int id : w) t.push_back(map[static_cast<size_t>(id)]);
    std::sort(t.begin(), t.end());
    r.add_term(t, c);
  }
  return r;
}

Element contract_leg(const Element& a, int leg,
                     const std::function<Coefficient(const Word&)>& functional,
                     const AlgebraContext::Ptr& result_ctx) {
  const AlgebraContext& src = *a.context();
  std::vector<int> map(static_cast<size_t>(src.letter_count()), -1);
  for (int id = 0; id < src.letter_count(); ++id) {
    const Letter& l = src.letter(id);
    if (l.leg == leg) continue;
    int target_leg = l.leg > leg ? l.leg - 1 : l.leg;
    int t = result_ctx->find_letter(target_leg, l.name, l.row, l.col, l.starred);
    if (t < 0) throw ContextError("letter not present in contraction target: " + l.display);
    map[static_cast<size_t>(id)] = t;
  }
  Element r(result_ctx);
  for (const auto& [w, c] : a.terms()) {
    Word contracted_leg_word;
    Word rest;
    for (int id : w) {
      const Letter& l = src.letter(id);
      if (l.leg == leg) {
        contracted_leg_word.push_back(l.source_id);
      } else {
        rest.push_back(map[static_cast<size_t>(id)]);
      }
    }
    std::sort(contracted_leg_word.begin(), contracted_leg_word.end());
    std::sort(rest.begin(), rest.end());
    Coefficient value = functional(contracted_leg_word);
    if (value.is_zero()) continue;
    r.add_term(rest, c * value);
  }
  return r;
}

Element substitute_element(const Element& a, const AlgebraContext::Ptr& new_ctx,
                           const ParamSubstitution& sub) {
  if (new_ctx->letter_count() != a.context()->letter_count()) {
    throw ContextError("substituted context does not match element");
  }
  Element r(new_ctx);
  for (const auto& [w, c] : a.terms()) {
    r.add_term(w, c.substituted(sub));
  }
  return r;
}

}  // namespace thetakit
