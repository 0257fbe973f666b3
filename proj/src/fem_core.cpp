#include "fe2hom/fem_core.hpp"

#include <algorithm>
#include <cmath>

#include "fe2hom/errors.hpp"

namespace fe2hom {

Lame lame_constants(const Material& mat) {
  check_material(mat);
  const double lambda = mat.E * mat.nu / ((1.0 + mat.nu) * (1.0 - 2.0 * mat.nu));
  const double mu = mat.E / (2.0 * (1.0 + mat.nu));
  return {lambda, mu};
}

void check_material(const Material& mat) {
  if (!(mat.E > 0.0)) throw ConfigError("material: E must be > 0");
  if (!(mat.nu > -1.0) || !(mat.nu < 0.5)) throw ConfigError("material: nu must lie in (-1, 0.5)");
}

std::vector<QuadPoint> quadrature(int order) {
  if (order == 1) return {{Vec(0.0, 0.0), 4.0}};
  if (order == 2) {
    const double g = 1.0 / std::sqrt(3.0);
    return {{Vec(-g, -g), 1.0}, {Vec(g, -g), 1.0}, {Vec(-g, g), 1.0}, {Vec(g, g), 1.0}};
  }
  throw ConfigError("quadrature: unsupported order (use 1 or 2)");
}

ShapeEval eval_shape(const std::array<Vec, 4>& coords, const Vec& xi) {
  static constexpr double sx[4] = {-1.0, 1.0, 1.0, -1.0};
  static constexpr double sy[4] = {-1.0, -1.0, 1.0, 1.0};

  ShapeEval s{};
  std::array<Vec, 4> dN_xi{Vec(2), Vec(2), Vec(2), Vec(2)};
  for (int i = 0; i < 4; ++i) {
    s.N[static_cast<std::size_t>(i)] = 0.25 * (1.0 + sx[i] * xi[0]) * (1.0 + sy[i] * xi[1]);
    dN_xi[static_cast<std::size_t>(i)][0] = 0.25 * sx[i] * (1.0 + sy[i] * xi[1]);
    dN_xi[static_cast<std::size_t>(i)][1] = 0.25 * sy[i] * (1.0 + sx[i] * xi[0]);
  }

  // J_ab = dX_a/dxi_b
  Tensor2 J(2);
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) J(a, b) += coords[static_cast<std::size_t>(i)][a] * dN_xi[static_cast<std::size_t>(i)][b];

  DetInv di;
  try {
    di = det_inv(J);
  } catch (const GeometryError&) {
    throw GeometryError("inverted element: non-positive Jacobian");
  }
  s.detJ = di.J;

  s.dN = {Vec(2), Vec(2), Vec(2), Vec(2)};
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        s.dN[static_cast<std::size_t>(i)][a] += dN_xi[static_cast<std::size_t>(i)][b] * di.Finv(b, a);
  return s;
}

Eigen::Matrix<double, 8, 8> element_stiffness(const std::array<Vec, 4>& coords,
                                              const Material& mat, int quad_order) {
  const Lame lm = lame_constants(mat);
  Eigen::Matrix3d D;
  D << lm.lambda + 2.0 * lm.mu, lm.lambda, 0.0,  //
      lm.lambda, lm.lambda + 2.0 * lm.mu, 0.0,   //
      0.0, 0.0, lm.mu;

  Eigen::Matrix<double, 8, 8> k = Eigen::Matrix<double, 8, 8>::Zero();
  for (const QuadPoint& q : quadrature(quad_order)) {
    const ShapeEval s = eval_shape(coords, q.xi);
    Eigen::Matrix<double, 3, 8> B = Eigen::Matrix<double, 3, 8>::Zero();
    for (int i = 0; i < 4; ++i) {
      B(0, 2 * i) = s.dN[static_cast<std::size_t>(i)][0];
      B(1, 2 * i + 1) = s.dN[static_cast<std::size_t>(i)][1];
      B(2, 2 * i) = s.dN[static_cast<std::size_t>(i)][1];
      B(2, 2 * i + 1) = s.dN[static_cast<std::size_t>(i)][0];
    }
    k += q.w * s.detJ * B.transpose() * D * B;
  }
  k = (0.5 * (k + k.transpose())).eval();
  return k;
}

double SparseOperator::max_asymmetry() const {
  double m = 0.0;
  Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(K.transpose()) - K;
  for (int c = 0; c < diff.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, c); it; ++it)
      m = std::max(m, std::abs(it.value()));
  return m;
}

SparseOperator assemble(const Mesh& mesh, const std::map<int, Material>& materials,
                        int quad_order) {
  SparseOperator op;
  op.dofs.node_base.assign(static_cast<std::size_t>(mesh.num_nodes()), -1);

  std::vector<int> active_elems;
  for (int e = 0; e < mesh.num_elems(); ++e) {
    const int ph = mesh.phase[static_cast<std::size_t>(e)];
    if (ph == kVoidPhase) continue;
    if (!materials.contains(ph))
      throw ConfigError("assemble: no material mapped for phase tag " + std::to_string(ph));
    active_elems.push_back(e);
    for (int n : mesh.elems[static_cast<std::size_t>(e)]) op.dofs.node_base[static_cast<std::size_t>(n)] = 0;
  }

  int next = 0;
  for (auto& base : op.dofs.node_base)
    if (base == 0) {
      base = next;
      next += 2;
    }
  op.dofs.ndof = next;

  if (active_elems.empty()) {
    op.degenerate = true;
    op.K.resize(0, 0);
    return op;
  }

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(active_elems.size() * 64);
  for (int e : active_elems) {
    const auto& conn = mesh.elems[static_cast<std::size_t>(e)];
    std::array<Vec, 4> coords{Vec(2), Vec(2), Vec(2), Vec(2)};
    for (int i = 0; i < 4; ++i) coords[static_cast<std::size_t>(i)] = mesh.nodes[static_cast<std::size_t>(conn[static_cast<std::size_t>(i)])];
    const auto k = element_stiffness(coords, materials.at(mesh.phase[static_cast<std::size_t>(e)]), quad_order);
    for (int i = 0; i < 4; ++i)
      for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 4; ++j)
          for (int b = 0; b < 2; ++b)
            trips.emplace_back(op.dofs.dof(conn[static_cast<std::size_t>(i)], a),
                               op.dofs.dof(conn[static_cast<std::size_t>(j)], b), k(2 * i + a, 2 * j + b));
  }
  op.K.resize(op.dofs.ndof, op.dofs.ndof);
  op.K.setFromTriplets(trips.begin(), trips.end());
  return op;
}

Eigen::VectorXd ReducedSystem::expand(const Eigen::VectorXd& u_f, int ndof_total) const {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(ndof_total);
  for (std::size_t k = 0; k < free_dofs.size(); ++k) u[free_dofs[k]] = u_f[static_cast<Eigen::Index>(k)];
  for (std::size_t k = 0; k < prescribed_dofs.size(); ++k)
    u[prescribed_dofs[k]] = prescribed_values[static_cast<Eigen::Index>(k)];
  return u;
}

ReducedSystem apply_dirichlet(const SparseOperator& op, const Eigen::VectorXd& f,
                              const std::vector<std::pair<int, double>>& bcs) {
  const int n = op.dofs.ndof;
  std::vector<double> value(static_cast<std::size_t>(n), 0.0);
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  for (const auto& [dof, v] : bcs) {
    if (dof < 0 || dof >= n) throw ConfigError("apply_dirichlet: DOF index out of range");
    if (fixed[static_cast<std::size_t>(dof)] && value[static_cast<std::size_t>(dof)] != v)
      throw ConfigError("apply_dirichlet: conflicting duplicate constraint on DOF " + std::to_string(dof));
    fixed[static_cast<std::size_t>(dof)] = 1;
    value[static_cast<std::size_t>(dof)] = v;
  }

  ReducedSystem rs;
  std::vector<int> where(static_cast<std::size_t>(n), -1);  // global -> free index
  for (int d = 0; d < n; ++d) {
    if (fixed[static_cast<std::size_t>(d)]) {
      rs.prescribed_dofs.push_back(d);
    } else {
      where[static_cast<std::size_t>(d)] = static_cast<int>(rs.free_dofs.size());
      rs.free_dofs.push_back(d);
    }
  }
  rs.prescribed_values.resize(static_cast<Eigen::Index>(rs.prescribed_dofs.size()));
  for (std::size_t k = 0; k < rs.prescribed_dofs.size(); ++k)
    rs.prescribed_values[static_cast<Eigen::Index>(k)] = value[static_cast<std::size_t>(rs.prescribed_dofs[k])];

  const int nf = static_cast<int>(rs.free_dofs.size());
  rs.rhs.resize(nf);
  for (int k = 0; k < nf; ++k) rs.rhs[k] = f[rs.free_dofs[static_cast<std::size_t>(k)]];

  std::vector<Eigen::Triplet<double>> trips;
  for (int c = 0; c < op.K.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(op.K, c); it; ++it) {
      const int r = static_cast<int>(it.row());
      const int cc = static_cast<int>(it.col());
      const bool rfree = !fixed[static_cast<std::size_t>(r)];
      const bool cfree = !fixed[static_cast<std::size_t>(cc)];
      if (rfree && cfree)
        trips.emplace_back(where[static_cast<std::size_t>(r)], where[static_cast<std::size_t>(cc)], it.value());
      else if (rfree && !cfree)
        rs.rhs[where[static_cast<std::size_t>(r)]] -= it.value() * value[static_cast<std::size_t>(cc)];
    }
  rs.Kff.resize(nf, nf);
  rs.Kff.setFromTriplets(trips.begin(), trips.end());
  return rs;
}

}  // namespace fe2hom
