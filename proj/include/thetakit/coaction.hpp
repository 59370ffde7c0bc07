#pragma once

#include "thetakit/catalog.hpp"
#include "thetakit/constraints.hpp"

namespace thetakit {

/// A candidate coaction rho: A -> H (x) A, given by generator images over
/// the flattened tensor context (H at leg 0, A at leg 1). Starred images are
/// the stars of the unstarred ones. Construction checks weight consistency:
/// there must exist a lattice map tau with, for every image term h (x) a of
/// rho(x),  wt_H(h) = (tau(wt x), tau(wt a)).
struct CoactionSpec {
  std::string name;
  MatrixQuantumGroup hopf;
  Presentation target;
  AlgebraContext::Ptr tensor_ctx;
  std::vector<Element> images;  // indexed by target letter id

  CoactionSpec substituted(const ParamSubstitution& sub) const;
};

CoactionSpec make_coaction(std::string name, MatrixQuantumGroup hopf, Presentation target,
                           const std::map<int, Element>& unstarred_images);

/// Built-in specs: "su3-on-s5", "su3-on-su4", "su2-on-su3",
/// "identity:<sphere:n|torus:n|su:n>".
CoactionSpec builtin_spec(const std::string& name);
CoactionSpec identity_coaction(Presentation target);

/// The extension criterion as a parameter-constraint solver: for every
/// ordered pair of target generators (stars included) the phases of the
/// deformed product of images must match the image of the deformed product
/// on every pair of isotypic components; mismatches become affine
/// constraints on the deformation parameters. Structural relations of the
/// target are then checked modulo the tensor ideal under the solved
/// substitution; reductions that exceed the bound are reported Undecided.
ConstraintReport check_extension(const CoactionSpec& spec, int degree_bound);

/// Coaction axioms (Delta (x) id) rho = (id (x) rho) rho and
/// (eps (x) id) rho = id on all generators, exactly. The spec must extend
/// (run it substituted when check_extension returned constraints).
CheckReport check_coaction_axioms(const CoactionSpec& spec);

/// E = (mu (x) id) rho, the conditional expectation onto invariants.
/// Throws UnsupportedDegree when a left leg falls outside the supported
/// Haar domain.
Element conditional_expectation(const CoactionSpec& spec, const Element& a);

struct FixedPointResult {
  std::vector<Element> generators;  // minimal generating set, stars implied
  bool non_closed = false;          // new generators appeared at the bound
  std::vector<std::string> notes;
};

/// Solves the exact linear system rho(x) = 1 (x) x over candidate words of
/// degree <= bound within each weight class and extracts a minimal
/// generating set of the solution algebra.
FixedPointResult fixed_points(const CoactionSpec& spec, int degree_bound);

struct GeneratorExchange {
  int left, right;      // indices into the generator list
  PhaseExponent phase;  // g_l g_r = e^{2 pi i phase} g_r g_l
};

struct MatchReport {
  bool matched = false;
  std::string family_instance;          // e.g. "sphere:4"
  DeformationMatrix induced;            // exchange matrix of the generators
  std::vector<GeneratorExchange> exchanges;
  CheckItem radius;
  std::string detail;
};

/// Computes all exchange phases among the given generators inside the
/// ambient algebra, assembles the induced deformation matrix, and checks the
/// family's structural relation modulo the ambient ideal at the bound. Only
/// the "sphere" family is matched.
MatchReport match_presentation(const std::vector<Element>& generators,
                               const Presentation& ambient, const std::string& family,
                               int degree_bound);

}  // namespace thetakit
