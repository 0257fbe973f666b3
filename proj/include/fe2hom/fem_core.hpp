// Isoparametric bilinear quad elements: quadrature, element stiffness,
// global assembly, and Dirichlet elimination for plane-strain elasticity.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <map>
#include <vector>

#include "fe2hom/mesh.hpp"
#include "fe2hom/tensors.hpp"

namespace fe2hom {

// Plane-strain isotropic material.
struct Material {
  double E = 1.0;
  double nu = 0.3;
};

struct Lame {
  double lambda;
  double mu;
};

// lambda = E nu / ((1+nu)(1-2nu)), mu = E / (2(1+nu))
Lame lame_constants(const Material& mat);
void check_material(const Material& mat);

struct QuadPoint {
  Vec xi;    // parent coordinates on [-1,1]^2
  double w;  // weight
};

// Gauss-Legendre tensor-product rule; order 1 or 2. Weights sum to 4.
std::vector<QuadPoint> quadrature(int order);

// Shape functions and reference-configuration gradients at one parent point.
struct ShapeEval {
  std::array<double, 4> N;
  std::array<Vec, 4> dN;  // gradients w.r.t. reference coordinates
  double detJ;            // parent-to-reference Jacobian determinant
};

ShapeEval eval_shape(const std::array<Vec, 4>& coords, const Vec& xi);

// 8x8 plane-strain stiffness; DOF order (n0x, n0y, n1x, ..., n3y).
Eigen::Matrix<double, 8, 8> element_stiffness(const std::array<Vec, 4>& coords,
                                              const Material& mat, int quad_order = 2);

// (node, component) -> global DOF index. Nodes incident to no non-void
// element are inactive and carry no DOFs.
struct DofMap {
  std::vector<int> node_base;  // base index per node, -1 if inactive
  int ndof = 0;

  bool active(int node) const { return node_base[static_cast<std::size_t>(node)] >= 0; }
  int dof(int node, int comp) const {
    const int b = node_base[static_cast<std::size_t>(node)];
    return b < 0 ? -1 : b + comp;
  }
};

struct SparseOperator {
  Eigen::SparseMatrix<double> K;
  DofMap dofs;
  bool degenerate = false;  // no active elements

  double max_asymmetry() const;
};

// Global symmetric operator; void-tagged elements skipped. Throws
// ConfigError on a phase tag with no mapped material.
SparseOperator assemble(const Mesh& mesh, const std::map<int, Material>& materials,
                        int quad_order = 2);

// Free-DOF system after eliminating prescribed values:
//   Kff u_f = f_f - K_fp u_p.
// The caller keeps the full operator for reaction recovery (K u at the
// prescribed rows).
struct ReducedSystem {
  Eigen::SparseMatrix<double> Kff;
  Eigen::VectorXd rhs;
  std::vector<int> free_dofs;        // global indices, ascending
  std::vector<int> prescribed_dofs;  // global indices, ascending
  Eigen::VectorXd prescribed_values;

  // Scatter a free-DOF solution back to a full-length vector.
  Eigen::VectorXd expand(const Eigen::VectorXd& u_f, int ndof_total) const;
};

// bcs is a list of (global DOF, value); duplicate entries must agree.
ReducedSystem apply_dirichlet(const SparseOperator& op, const Eigen::VectorXd& f,
                              const std::vector<std::pair<int, double>>& bcs);

}  // namespace fe2hom
