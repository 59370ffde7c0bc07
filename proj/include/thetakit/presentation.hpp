#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetakit/algebra.hpp"

namespace thetakit {

/// A presented torus-graded *-algebra: a context plus structural relations
/// (each understood as relation = 0). Exchange relations of the deformation
/// are identities of the twisted product on the sorted-word basis and are
/// not stored; only structural relations (unitarity, radius, determinant)
/// generate a nontrivial ideal.
struct Presentation {
  std::string name;                   // e.g. "su:3"
  AlgebraContext::Ptr ctx;
  std::vector<Element> relations;
  std::vector<std::string> relation_labels;

  void add_relation(std::string label, Element rel);
  Presentation substituted(const ParamSubstitution& sub) const;
};

/// One exchange relation g h = e^{2 pi i phase} h g, together with the
/// residual element g x h - e^{2 pi i phase} h x g, which vanishes
/// identically on the sorted-word basis; generate_exchange_relations
/// verifies this and reports the verified records.
struct ExchangeRelation {
  int left_letter;
  int right_letter;
  PhaseExponent phase;   // exponent x of e^{2 pi i x}
  Element residual;      // zero when the exchange identity holds
  bool is_commutator() const { return phase.is_zero(); }
};

enum class ExchangePairs {
  Unstarred,           // unordered pairs of unstarred generators
  UnstarredAndMixed,   // additionally pairs (g, h*), including normality g g*
};

std::vector<ExchangeRelation> generate_exchange_relations(
    const AlgebraContext::Ptr& ctx, ExchangePairs pairs = ExchangePairs::Unstarred,
    bool include_commutators = true);

/// Incremental reduced basis of a subspace of the free module over the word
/// basis, with exact coefficient arithmetic. Rows are reduced against pivot
/// words; pivots are normalized by a unit so elimination needs no general
/// division. Optional integer tags ride along for nullspace extraction.
class SpanBasis {
 public:
  using Row = std::map<Word, Coefficient>;
  struct TaggedRow {
    Row value;
    std::map<int, Coefficient> tag;
  };

  /// Reduces r against the basis in place.
  void reduce(TaggedRow& r) const;
  /// Reduces and inserts; returns false when r reduced to zero.
  bool insert(TaggedRow r);
  bool insert_element(const Element& e);
  TaggedRow reduce_element(const Element& e) const;

  size_t rank() const { return rows_.size(); }

 private:
  std::map<Word, TaggedRow> rows_;  // keyed by pivot word
};

SpanBasis::Row element_to_row(const Element& e);

enum class Membership { Member, Undecided };

/// Reduced span of { m1 x rel x m2 : total degree <= degree_bound } built
/// once for a batch of membership queries. Span vectors are pruned to a
/// weight support and per-leg degree box (usually those of the intended
/// targets); pruning can only make a Member verdict harder to reach, never
/// wrong, so failures surface as Undecided rather than as non-membership.
/// Relations are closed under star, and homogeneous relations are filtered
/// by weight before any product is formed.
class IdealSpan {
 public:
  IdealSpan(const Presentation& pres, int degree_bound, std::vector<int> leg_caps,
            std::set<Weight> weight_support);
  Membership reduce(const Element& a) const;
  int degree_bound() const { return degree_bound_; }

 private:
  AlgebraContext::Ptr ctx_;
  int degree_bound_;
  SpanBasis basis_;
};

/// Decides membership of `a` in the span of { m1 x rel x m2 } over words m1,
/// m2 with total degree <= degree_bound, by exact linear algebra on the
/// canonical word basis.
Membership ideal_membership(const Presentation& pres, const Element& a, int degree_bound);

bool is_ideal_member(const Presentation& pres, const Element& a, int degree_bound);

/// Default reduction bound: 2 + the maximal relation degree.
int default_degree_bound(const Presentation& pres);

}  // namespace thetakit
