#pragma once

#include "thetakit/hopf.hpp"

namespace thetakit {

/// Maximal-torus weight of row/column i (1-based) of the coordinate grid of
/// a rank-(n-1) special unitary group: e_i for i < n and -(e_1+...+e_{n-1})
/// for i = n, in Z^{n-1}.
Weight special_unitary_weight(int n, int i);

/// Deformed SU(n): grid u[i][j] with concatenated (left, right) torus
/// weights, theta = K (+) (-K), and exchange + twisted unitarity (row and
/// column forms) + twisted determinant relations. K must be antisymmetric of
/// size n-1. For n < 3 a nonzero K is replaced by zero with a
/// NoNontrivialDeformation warning: rank-1 groups admit no nontrivial
/// deformation of this kind.
MatrixQuantumGroup build_su_theta(int n, DeformationMatrix K, std::string grid_name = "");

/// Deformed odd sphere: n normal generators z_j of weight e_j in Z^n with
/// phase exchange relations and the radius relation sum_k z_k z_k* = 1.
Presentation build_sphere(const DeformationMatrix& lambda, int n);

/// Deformed torus (as a space): unitary generators U_j of weight e_j.
Presentation build_nc_torus(const DeformationMatrix& lambda);

/// The rank-n torus as a diagonal matrix quantum group deformed along its
/// two-sided translation action; the twist vanishes on the diagonal weights,
/// so all Hopf checks pass for any K.
MatrixQuantumGroup build_torus_group(int n, const DeformationMatrix& K);

/// Row-ordered twisted determinant sum_sigma sgn(sigma) u_{1 sigma(1)} x ...
/// x u_{n sigma(n)}.
Element twisted_determinant(const MatrixQuantumGroup& Q);

// Parameter matrix presets.
DeformationMatrix generic_antisymmetric(int dim, const std::string& prefix);
/// K for su:n — a single symbol "theta" for n = 3, lambda_jk entries otherwise.
DeformationMatrix su_parameter_matrix(int n);
DeformationMatrix sphere_parameter_matrix(int n);  // generic lambda_jk
/// 3x3 matrix with lambda12 = theta, lambda13 = -theta, lambda23 = theta.
DeformationMatrix s5_twist_matrix();
/// The 4x4 twist of the 7-sphere arising as an invariant subalgebra:
/// [[0,-t,t,0],[t,0,-t,0],[-t,t,0,0],[0,0,0,0]] in the symbol "theta".
DeformationMatrix s7_twist_matrix();

}  // namespace thetakit
