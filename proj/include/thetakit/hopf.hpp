#pragma once

#include <optional>

#include "thetakit/constraints.hpp"
#include "thetakit/presentation.hpp"
#include "thetakit/reports.hpp"

namespace thetakit {

/// A presented deformed matrix quantum group: an n x n generator grid whose
/// context is deformed by K (+) (-K) along the two-sided translation action
/// of the rank-(n-1) maximal torus, together with exchange + unitarity +
/// determinant relations and the matrix coalgebra maps.
class MatrixQuantumGroup {
 public:
  int n = 0;
  std::string grid_name = "u";
  bool diagonal = false;  // diagonal grid (torus groups): only u[j][j] exist
  DeformationMatrix K;           // (n-1) x (n-1) antisymmetric
  DeformationMatrix theta;       // K (+) (-K)
  AlgebraContext::Ptr ctx;
  AlgebraContext::Ptr ctx2;      // tensor square, coproduct target
  Presentation presentation;
  std::vector<std::string> warnings;

  int grid_letter(int i, int j, bool starred = false) const;  // 1-based indices
  Element gen(int i, int j) const { return Element::generator(ctx, grid_letter(i, j)); }

  /// (row, col, starred) of a grid letter; nullopt for non-grid letters.
  std::optional<std::tuple<int, int, bool>> grid_position(int letter) const;

  MatrixQuantumGroup substituted(const ParamSubstitution& sub) const;
};

/// Delta(u_ij) = sum_k u_ik (x) u_kj, extended multiplicatively with the
/// theta (+) theta twisted product; linear in a.
Element coproduct(const MatrixQuantumGroup& Q, const Element& a);
/// Per-letter coproduct images into Q.ctx2 (starred letters included).
std::vector<Element> coproduct_images(const MatrixQuantumGroup& Q);

/// eps(u_ij) = delta_ij, extended multiplicatively.
Coefficient counit(const MatrixQuantumGroup& Q, const Element& a);

/// S(u_ij) = u_ji*, extended antimultiplicatively.
Element antipode(const MatrixQuantumGroup& Q, const Element& a);

/// (Delta (x) id) Delta = (id (x) Delta) Delta on all generators and all
/// degree-2 words, checked exactly on the free basis. `images` overrides the
/// coproduct generator images (for negative controls).
CheckReport check_coassociativity(const MatrixQuantumGroup& Q,
                                  const std::vector<Element>* images = nullptr);

/// (eps (x) id) Delta = id = (id (x) eps) Delta on generators and degree-2
/// words, exactly.
CheckReport check_counit_laws(const MatrixQuantumGroup& Q);

/// m (id (x) S) Delta (u) - eps(u) 1 and the (S (x) id) variant reduce to 0
/// modulo the presentation ideal at the bound.
CheckReport check_antipode_axiom(const MatrixQuantumGroup& Q, int degree_bound);

/// U U* = U* U = I entrywise modulo the ideal, and (id (x) Delta) U = U12 U13.
CheckReport check_corep_unitarity(const MatrixQuantumGroup& Q, int degree_bound,
                                  const std::vector<Element>* coproduct_override = nullptr);

/// Checks Delta(a x b) = Delta(a) x Delta(b) on all pairs of n x n grid
/// generators for an arbitrary antisymmetric twist on the grid weights
/// (dimension 2(n-1)), comparing phases on every pair of isotypic
/// components. Mismatches become affine constraints on the twist's
/// parameters; for a twist of the block form K (+) (-K) the check passes
/// unconditionally.
ConstraintReport check_coproduct_homomorphism(int n, const DeformationMatrix& theta_full);

/// Braiding exponent of the graded flip equivalence: (1/2) theta(p, q).
PhaseExponent braiding(const DeformationMatrix& theta, const Weight& p, const Weight& q);

/// Restricted Haar state. Words of nonzero weight map to 0; the constant
/// term maps to itself; weight-zero bidegree-(1,1) words u_ij u_kl* map to
/// delta_ik delta_jl / n. Any other weight-zero word raises
/// UnsupportedDegree: higher-degree moments are outside the supported
/// domain and are never silently approximated.
Coefficient haar_state(const MatrixQuantumGroup& Q, const Element& a);

/// Haar value of a single word given in ctx letter ids.
Coefficient haar_state_word(const MatrixQuantumGroup& Q, const Word& w);

/// Unimodularity (id (x) mu) Delta = mu(.) 1 = (mu (x) id) Delta and
/// mu o S = mu on the supported domain (generators, stars, and
/// bidegree-(1,1) products), with ideal reduction where needed.
CheckReport check_haar_identities(const MatrixQuantumGroup& Q, int degree_bound = 2);

}  // namespace thetakit
