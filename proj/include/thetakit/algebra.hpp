#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thetakit/coefficient.hpp"
#include "thetakit/phase.hpp"

namespace thetakit {

/// Canonical word: weakly increasing sequence of letter ids of one context.
using Word = std::vector<int>;

struct Letter {
  int leg = 0;             // tensor factor index (0 for atomic contexts)
  bool starred = false;
  std::string name;        // base name, e.g. "u"
  int row = -1, col = -1;  // optional indices; -1 when absent
  Weight weight;           // full weight in the context's lattice
  int partner = -1;        // letter id of the star partner
  int source_id = -1;      // letter id inside the leg's source context
  std::string display;     // e.g. "u12*" or "z3"
};

struct GeneratorSpec {
  std::string name;
  int row = -1, col = -1;
  Weight weight;
};

/// Torus-graded *-algebra context: a weight lattice Z^d, a deformation
/// matrix on it, and a fixed totally ordered alphabet of generators and
/// their stars. Tensor contexts are flattened: letters carry a leg index,
/// the deformation matrix is the direct sum of the legs' matrices, and the
/// letter order is leg-major, so the commutative word basis of the tensor
/// algebra is the leg-wise product basis.
class AlgebraContext : public std::enable_shared_from_this<AlgebraContext> {
 public:
  using Ptr = std::shared_ptr<const AlgebraContext>;

  static Ptr make(DeformationMatrix theta, const std::vector<GeneratorSpec>& gens);
  static Ptr tensor(const std::vector<Ptr>& factors);
  Ptr substituted(const ParamSubstitution& sub) const;

  int weight_dim() const { return theta_.dim(); }
  const DeformationMatrix& theta() const { return theta_; }
  int letter_count() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int id) const { return letters_[static_cast<size_t>(id)]; }
  int star_of(int id) const { return letters_[static_cast<size_t>(id)].partner; }
  const std::vector<Letter>& letters() const { return letters_; }

  int leg_count() const { return static_cast<int>(leg_sources_.size()); }
  Ptr leg_source(int leg) const {
    const Ptr& p = leg_sources_[static_cast<size_t>(leg)];
    return p ? p : shared_from_this();  // atomic contexts are their own leg
  }

  /// Letter lookup by structure; returns -1 when absent.
  int find_letter(int leg, const std::string& name, int row, int col, bool starred) const;
  /// Unstarred letter ids in order.
  std::vector<int> unstarred_letters() const;

  Weight weight_of(const Word& w) const;
  int degree_of(const Word& w) const { return static_cast<int>(w.size()); }
  std::vector<int> leg_degrees(const Word& w) const;
  /// Bidegree (#unstarred, #starred).
  std::pair<int, int> bidegree_of(const Word& w) const;
  Word star_word(const Word& w) const;
  /// Splits a tensor word into per-leg words in the leg sources' letter ids.
  std::vector<Word> split_word(const Word& w) const;

  PhaseExponent chi_weights(const Weight& r, const Weight& s) const;
  /// Phase phi(w) with g_1 x g_2 x ... x g_k = e^{2 pi i phi(w)} w for the
  /// sorted word w = g_1 g_2 ... g_k.
  PhaseExponent word_phase(const Word& w) const;

  std::string word_to_string(const Word& w) const;

 private:
  AlgebraContext() : theta_(DeformationMatrix::zero(0)) {}
  void index_letters();

  DeformationMatrix theta_;
  std::vector<Letter> letters_;
  std::vector<Ptr> leg_sources_;
  std::map<std::tuple<int, std::string, int, int, bool>, int> lookup_;
};

/// Finite linear combination of canonical words with exact coefficients; the
/// universal value type of the kernel. All noncommutativity is carried by
/// the twisted product; the word basis itself is the underlying commutative
/// coordinate picture.
class Element {
 public:
  Element() = default;
  explicit Element(AlgebraContext::Ptr ctx) : ctx_(std::move(ctx)) {}

  static Element zero(AlgebraContext::Ptr ctx) { return Element(std::move(ctx)); }
  static Element unit(AlgebraContext::Ptr ctx);
  static Element scalar(AlgebraContext::Ptr ctx, const Coefficient& c);
  static Element generator(AlgebraContext::Ptr ctx, int letter);
  static Element word(AlgebraContext::Ptr ctx, Word w, const Coefficient& c);

  const AlgebraContext::Ptr& context() const { return ctx_; }
  const std::map<Word, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;
  size_t term_count() const { return terms_.size(); }
  Coefficient coefficient_of(const Word& w) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  Element scaled(const Coefficient& c) const;
  Element scaled(const Rational& q) const;

  void add_term(const Word& w, const Coefficient& c);

  std::string to_string() const;

 private:
  AlgebraContext::Ptr ctx_;
  std::map<Word, Coefficient> terms_;
};

/// Deformed product: bilinear extension of
///   w1 x w2 = chi(wt w1, wt w2) * merge(w1, w2).
Element twisted_product(const Element& a, const Element& b);
/// Antilinear involution: conjugates coefficients, stars letters, re-sorts.
Element star(const Element& a);
/// Partition by word weight; summing the components returns the input.
std::map<Weight, Element> homogeneous_components(const Element& a);

/// Multiplicative (or antimultiplicative) extension of a generator-image
/// assignment to a map between twisted algebras. `images` is indexed by
/// letter id of a's context and must produce elements of `target`.
Element apply_algebra_map(const Element& a, const AlgebraContext::Ptr& target,
                          const std::vector<Element>& images, bool antimultiplicative = false);

/// Multiplicative extension of a scalar-valued generator assignment.
Coefficient apply_scalar_map(const Element& a, const std::vector<Coefficient>& images);

/// Re-tags an element of `a.context()` into the tensor context `target`,
/// placing leg l of the source at leg `first_leg + l`.
Element embed(const Element& a, const AlgebraContext::Ptr& target, int first_leg);

/// Applies a word functional to one leg of a tensor element and maps the
/// remaining legs into `result_ctx` (legs after `leg` shift down by one).
Element contract_leg(const Element& a, int leg,
                     const std::function<Coefficient(const Word&)>& functional,
                     const AlgebraContext::Ptr& result_ctx);

/// Rebuilds an element over a parameter-substituted context.
Element substitute_element(const Element& a, const AlgebraContext::Ptr& new_ctx,
                           const ParamSubstitution& sub);

}  // namespace thetakit
