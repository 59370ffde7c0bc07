#include "thetakit/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "thetakit/errors.hpp"

namespace thetakit {

Weight special_unitary_weight(int n, int i) {
  Weight w(static_cast<size_t>(n - 1), 0);
  if (i < n) {
    w[static_cast<size_t>(i - 1)] = 1;
  } else {
    for (int k = 0; k < n - 1; ++k) w[static_cast<size_t>(k)] = -1;
  }
  return w;
}

MatrixQuantumGroup build_su_theta(int n, DeformationMatrix K, std::string grid_name) {
  if (n < 2) throw UsageError("special unitary rank requires n >= 2");
  if (K.dim() != n - 1) {
    throw DimensionError("K must be antisymmetric of size n-1 for su:n");
  }
  MatrixQuantumGroup Q;
  if (n < 3 && !K.is_zero()) {
    Q.warnings.push_back(
        "NoNontrivialDeformation: rank-1 groups admit no nontrivial deformation; K set to 0");
    K = DeformationMatrix::zero(n - 1);
  }
  if (grid_name.empty()) {
    grid_name = n == 2 ? "a" : (n == 4 ? "v" : "u");
  }
  Q.n = n;
  Q.grid_name = grid_name;
  Q.K = K;
  Q.theta = make_quantum_group_matrix(K);

  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= n; ++i) {
    Weight left = special_unitary_weight(n, i);
    for (int j = 1; j <= n; ++j) {
      Weight right = special_unitary_weight(n, j);
      Weight w = left;
      w.insert(w.end(), right.begin(), right.end());
      gens.push_back({grid_name, i, j, std::move(w)});
    }
  }
  Q.ctx = AlgebraContext::make(Q.theta, gens);
  Q.ctx2 = AlgebraContext::tensor({Q.ctx, Q.ctx});

  Q.presentation.name = "su:" + std::to_string(n);
  Q.presentation.ctx = Q.ctx;
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= n; ++l) {
      Element row(Q.ctx), col(Q.ctx);
      for (int k = 1; k <= n; ++k) {
        row += twisted_product(Q.gen(j, k),
                               Element::generator(Q.ctx, Q.grid_letter(l, k, true)));
        col += twisted_product(Element::generator(Q.ctx, Q.grid_letter(k, j, true)),
                               Q.gen(k, l));
      }
      if (j == l) {
        row -= Element::unit(Q.ctx);
        col -= Element::unit(Q.ctx);
      }
      Q.presentation.add_relation(
          "row_unitarity[" + std::to_string(j) + "," + std::to_string(l) + "]", row);
      Q.presentation.add_relation(
          "col_unitarity[" + std::to_string(j) + "," + std::to_string(l) + "]", col);
    }
  }
  Element det = twisted_determinant(Q) - Element::unit(Q.ctx);
  Q.presentation.add_relation("determinant", det);
  Q.presentation.add_relation("determinant_star", star(det));
  return Q;
}

Presentation build_sphere(const DeformationMatrix& lambda, int n) {
  if (lambda.dim() != n) throw DimensionError("sphere twist matrix must be n x n");
  std::vector<GeneratorSpec> gens;
  for (int j = 1; j <= n; ++j) {
    Weight w(static_cast<size_t>(n), 0);
    w[static_cast<size_t>(j - 1)] = 1;
    gens.push_back({"z", j, -1, std::move(w)});
  }
  Presentation p;
  p.name = "sphere:" + std::to_string(n);
  p.ctx = AlgebraContext::make(lambda, gens);
  Element radius(p.ctx);
  for (int j = 1; j <= n; ++j) {
    int z = p.ctx->find_letter(0, "z", j, -1, false);
    radius += twisted_product(Element::generator(p.ctx, z),
                              Element::generator(p.ctx, p.ctx->star_of(z)));
  }
  radius -= Element::unit(p.ctx);
  p.add_relation("radius", radius);
  return p;
}

Presentation build_nc_torus(const DeformationMatrix& lambda) {
  int n = lambda.dim();
  std::vector<GeneratorSpec> gens;
  for (int j = 1; j <= n; ++j) {
    Weight w(static_cast<size_t>(n), 0);
    w[static_cast<size_t>(j - 1)] = 1;
    gens.push_back({"U", j, -1, std::move(w)});
  }
  Presentation p;
  p.name = "torus:" + std::to_string(n);
  p.ctx = AlgebraContext::make(lambda, gens);
  for (int j = 1; j <= n; ++j) {
    int u = p.ctx->find_letter(0, "U", j, -1, false);
    Element rel = twisted_product(Element::generator(p.ctx, u),
                                  Element::generator(p.ctx, p.ctx->star_of(u))) -
                  Element::unit(p.ctx);
    p.add_relation("unitarity[" + std::to_string(j) + "]", rel);
  }
  return p;
}

MatrixQuantumGroup build_torus_group(int n, const DeformationMatrix& K) {
  if (K.dim() != n) throw DimensionError("torus group twist must be n x n");
  MatrixQuantumGroup Q;
  Q.n = n;
  Q.grid_name = "t";
  Q.diagonal = true;
  Q.K = K;
  Q.theta = make_quantum_group_matrix(K);
  std::vector<GeneratorSpec> gens;
  for (int j = 1; j <= n; ++j) {
    Weight w(static_cast<size_t>(2 * n), 0);
    w[static_cast<size_t>(j - 1)] = 1;
    w[static_cast<size_t>(n + j - 1)] = 1;
    gens.push_back({"t", j, j, std::move(w)});
  }
  Q.ctx = AlgebraContext::make(Q.theta, gens);
  Q.ctx2 = AlgebraContext::tensor({Q.ctx, Q.ctx});
  Q.presentation.name = "torus-group:" + std::to_string(n);
  Q.presentation.ctx = Q.ctx;
  for (int j = 1; j <= n; ++j) {
    int t = Q.grid_letter(j, j);
    Element rel = twisted_product(Element::generator(Q.ctx, t),
                                  Element::generator(Q.ctx, Q.ctx->star_of(t))) -
                  Element::unit(Q.ctx);
    Q.presentation.add_relation("unitarity[" + std::to_string(j) + "]", rel);
  }
  return Q;
}

Element twisted_determinant(const MatrixQuantumGroup& Q) {
  if (Q.diagonal) {
    Element det = Element::unit(Q.ctx);
    for (int j = 1; j <= Q.n; ++j) det = twisted_product(det, Q.gen(j, j));
    return det;
  }
  std::vector<int> perm(static_cast<size_t>(Q.n));
  std::iota(perm.begin(), perm.end(), 1);
  Element det(Q.ctx);
  do {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
      for (size_t j = i + 1; j < perm.size(); ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Element term = Element::unit(Q.ctx);
    for (int i = 1; i <= Q.n; ++i) {
      term = twisted_product(term, Q.gen(i, perm[static_cast<size_t>(i - 1)]));
    }
    det += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

DeformationMatrix generic_antisymmetric(int dim, const std::string& prefix) {
  std::vector<AffineForm> e(static_cast<size_t>(dim) * dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      AffineForm s = AffineForm::symbol(prefix + std::to_string(j + 1) + std::to_string(k + 1));
      e[static_cast<size_t>(j) * dim + k] = s;
      e[static_cast<size_t>(k) * dim + j] = -s;
    }
  }
  return DeformationMatrix(dim, std::move(e));
}

DeformationMatrix su_parameter_matrix(int n) {
  if (n == 3) {
    AffineForm t = AffineForm::symbol("theta");
    return DeformationMatrix(2, {AffineForm(), t, -t, AffineForm()});
  }
  return generic_antisymmetric(n - 1, "lambda");
}

DeformationMatrix sphere_parameter_matrix(int n) { return generic_antisymmetric(n, "lambda"); }

DeformationMatrix s5_twist_matrix() {
  AffineForm t = AffineForm::symbol("theta");
  AffineForm z;
  return DeformationMatrix(3, {z, t, -t,
                               -t, z, t,
                               t, -t, z});
}

DeformationMatrix s7_twist_matrix() {
  AffineForm t = AffineForm::symbol("theta");
  AffineForm z;
  return DeformationMatrix(4, {z, -t, t, z,
                               t, z, -t, z,
                               -t, t, z, z,
                               z, z, z, z});
}

}  // namespace thetakit
