#include "fe2hom/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <ostream>

#include "fe2hom/errors.hpp"

namespace fe2hom {

Vec Mesh::centroid(int e) const {
  const auto& c = elems[static_cast<std::size_t>(e)];
  Vec r(2);
  for (int k = 0; k < 4; ++k) {
    r[0] += nodes[static_cast<std::size_t>(c[static_cast<std::size_t>(k)])][0] * 0.25;
    r[1] += nodes[static_cast<std::size_t>(c[static_cast<std::size_t>(k)])][1] * 0.25;
  }
  return r;
}

double Mesh::element_area(int e) const {
  // Shoelace formula over the quad vertices.
  const auto& c = elems[static_cast<std::size_t>(e)];
  double a = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Vec& p = nodes[static_cast<std::size_t>(c[static_cast<std::size_t>(k)])];
    const Vec& q = nodes[static_cast<std::size_t>(c[static_cast<std::size_t>((k + 1) % 4)])];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * a;
}

double Mesh::total_area() const {
  double a = 0.0;
  for (int e = 0; e < num_elems(); ++e) a += element_area(e);
  return a;
}

bool Mesh::is_boundary_node(int n) const {
  const auto& b = boundary;
  auto in = [n](const std::vector<int>& v) {
    return std::find(v.begin(), v.end(), n) != v.end();
  };
  return in(b.left) || in(b.right) || in(b.bottom) || in(b.top);
}

MicrostructureSpec MicrostructureSpec::homogeneous() { return {}; }

MicrostructureSpec MicrostructureSpec::laminate(int axis, double volume_fraction) {
  MicrostructureSpec s;
  s.variant = Variant::Laminate;
  s.axis = axis;
  s.volume_fraction = volume_fraction;
  return s;
}

MicrostructureSpec MicrostructureSpec::circular_inclusion(Vec center, double radius) {
  MicrostructureSpec s;
  s.variant = Variant::CircularInclusion;
  s.center = center;
  s.radius = radius;
  return s;
}

MicrostructureSpec MicrostructureSpec::circular_void(Vec center, double radius) {
  MicrostructureSpec s;
  s.variant = Variant::CircularVoid;
  s.center = center;
  s.radius = radius;
  return s;
}

Mesh gen_grid(int nx, int ny, double Lx, double Ly) {
  if (nx < 1 || ny < 1) throw ConfigError("gen_grid: element counts must be >= 1");
  if (!(Lx > 0.0) || !(Ly > 0.0)) throw ConfigError("gen_grid: domain extents must be > 0");

  Mesh m;
  m.Lx = Lx;
  m.Ly = Ly;
  const double hx = Lx / nx;
  const double hy = Ly / ny;
  auto nid = [nx](int i, int j) { return j * (nx + 1) + i; };

  m.nodes.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) m.nodes.emplace_back(i * hx, j * hy);

  m.elems.reserve(static_cast<std::size_t>(nx * ny));
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      m.elems.push_back({nid(i, j), nid(i + 1, j), nid(i + 1, j + 1), nid(i, j + 1)});
  m.phase.assign(m.elems.size(), 0);

  BoundarySets& b = m.boundary;
  for (int j = 0; j <= ny; ++j) {
    b.left.push_back(nid(0, j));
    b.right.push_back(nid(nx, j));
    b.pairs_lr.emplace_back(nid(0, j), nid(nx, j));
  }
  for (int i = 0; i <= nx; ++i) {
    b.bottom.push_back(nid(i, 0));
    b.top.push_back(nid(i, ny));
    b.pairs_bt.emplace_back(nid(i, 0), nid(i, ny));
  }
  b.corners = {nid(0, 0), nid(nx, 0), nid(nx, ny), nid(0, ny)};
  return m;
}

Mesh tag_phases(Mesh mesh, const MicrostructureSpec& spec) {
  using V = MicrostructureSpec::Variant;
  if (spec.variant == V::Laminate) {
    if (!(spec.volume_fraction > 0.0) || !(spec.volume_fraction < 1.0))
      throw GeometryError("laminate volume fraction must lie in (0,1)");
    if (spec.axis != 0 && spec.axis != 1) throw GeometryError("laminate axis must be 0 or 1");
  }
  if (spec.variant == V::CircularInclusion || spec.variant == V::CircularVoid) {
    if (!(spec.radius > 0.0)) throw GeometryError("circle radius must be > 0");
    if (spec.center[0] - spec.radius < 0.0 || spec.center[0] + spec.radius > mesh.Lx ||
        spec.center[1] - spec.radius < 0.0 || spec.center[1] + spec.radius > mesh.Ly)
      throw GeometryError("circle region lies outside the domain");
  }

  for (int e = 0; e < mesh.num_elems(); ++e) {
    const Vec c = mesh.centroid(e);
    int tag = 0;
    switch (spec.variant) {
      case V::Homogeneous:
        tag = 0;
        break;
      case V::Laminate: {
        const double L = spec.axis == 0 ? mesh.Lx : mesh.Ly;
        tag = c[spec.axis] < spec.volume_fraction * L ? 0 : 1;
        break;
      }
      case V::CircularInclusion:
        tag = (c - spec.center).norm() < spec.radius ? 1 : 0;
        break;
      case V::CircularVoid:
        tag = (c - spec.center).norm() < spec.radius ? kVoidPhase : 0;
        break;
    }
    mesh.phase[static_cast<std::size_t>(e)] = tag;
  }
  return mesh;
}

namespace {

// Phase sequence of the elements lining one boundary edge, sorted along it.
// An element is in the lining if it owns an element edge on the boundary.
std::vector<int> edge_phase_sequence(const Mesh& m, int axis, double coord, double tol) {
  std::vector<std::pair<double, int>> found;
  for (int e = 0; e < m.num_elems(); ++e) {
    const auto& c = m.elems[static_cast<std::size_t>(e)];
    int on = 0;
    for (int k = 0; k < 4; ++k)
      if (std::abs(m.nodes[static_cast<std::size_t>(c[static_cast<std::size_t>(k)])][axis] - coord) <= tol) ++on;
    if (on >= 2) found.emplace_back(m.centroid(e)[1 - axis], m.phase[static_cast<std::size_t>(e)]);
  }
  std::sort(found.begin(), found.end());
  std::vector<int> seq;
  seq.reserve(found.size());
  for (const auto& [pos, ph] : found) seq.push_back(ph);
  return seq;
}

bool uniform(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

bool compatible(const std::vector<int>& a, const std::vector<int>& b) {
  return a == b || (uniform(a) && uniform(b));
}

}  // namespace

bool mirror_check(const Mesh& mesh) {
  const double tol = 1e-12 * std::max(mesh.Lx, mesh.Ly);
  for (const auto& [l, r] : mesh.boundary.pairs_lr)
    if (std::abs(mesh.nodes[static_cast<std::size_t>(l)][1] - mesh.nodes[static_cast<std::size_t>(r)][1]) > tol)
      return false;
  for (const auto& [b, t] : mesh.boundary.pairs_bt)
    if (std::abs(mesh.nodes[static_cast<std::size_t>(b)][0] - mesh.nodes[static_cast<std::size_t>(t)][0]) > tol)
      return false;

  if (!compatible(edge_phase_sequence(mesh, 0, 0.0, tol), edge_phase_sequence(mesh, 0, mesh.Lx, tol)))
    return false;
  if (!compatible(edge_phase_sequence(mesh, 1, 0.0, tol), edge_phase_sequence(mesh, 1, mesh.Ly, tol)))
    return false;
  return true;
}

void write_mesh(const Mesh& mesh, std::ostream& out) {
  out << mesh.num_nodes() << ' ' << mesh.num_elems() << '\n';
  char buf[80];
  for (int n = 0; n < mesh.num_nodes(); ++n) {
    std::snprintf(buf, sizeof(buf), "%d %.17g %.17g\n", n, mesh.nodes[static_cast<std::size_t>(n)][0],
                  mesh.nodes[static_cast<std::size_t>(n)][1]);
    out << buf;
  }
  for (int e = 0; e < mesh.num_elems(); ++e) {
    const auto& c = mesh.elems[static_cast<std::size_t>(e)];
    out << e << ' ' << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << ' '
        << mesh.phase[static_cast<std::size_t>(e)] << '\n';
  }
}

Mesh read_mesh(std::istream& in) {
  int nn = 0, ne = 0;
  if (!(in >> nn >> ne) || nn <= 0 || ne <= 0) throw ConfigError("mesh file: bad header");
  Mesh m;
  m.nodes.reserve(static_cast<std::size_t>(nn));
  for (int k = 0; k < nn; ++k) {
    int id;
    double x, y;
    if (!(in >> id >> x >> y) || id != k) throw ConfigError("mesh file: bad node line");
    m.nodes.emplace_back(x, y);
    m.Lx = std::max(m.Lx, x);
    m.Ly = std::max(m.Ly, y);
  }
  m.elems.reserve(static_cast<std::size_t>(ne));
  m.phase.reserve(static_cast<std::size_t>(ne));
  for (int k = 0; k < ne; ++k) {
    int id, ph;
    std::array<int, 4> c{};
    if (!(in >> id >> c[0] >> c[1] >> c[2] >> c[3] >> ph) || id != k)
      throw ConfigError("mesh file: bad element line");
    for (int v : c)
      if (v < 0 || v >= nn) throw ConfigError("mesh file: node index out of range");
    m.elems.push_back(c);
    m.phase.push_back(ph);
  }

  // Rebuild boundary sets from coordinates; grids are generated from 0.
  const double tol = 1e-12 * std::max(m.Lx, m.Ly);
  BoundarySets& b = m.boundary;
  for (int n = 0; n < nn; ++n) {
    const Vec& p = m.nodes[static_cast<std::size_t>(n)];
    if (std::abs(p[0]) <= tol) b.left.push_back(n);
    if (std::abs(p[0] - m.Lx) <= tol) b.right.push_back(n);
    if (std::abs(p[1]) <= tol) b.bottom.push_back(n);
    if (std::abs(p[1] - m.Ly) <= tol) b.top.push_back(n);
  }
  auto by_coord = [&m](int axis) {
    return [&m, axis](int a, int c) {
      return m.nodes[static_cast<std::size_t>(a)][axis] < m.nodes[static_cast<std::size_t>(c)][axis];
    };
  };
  std::sort(b.left.begin(), b.left.end(), by_coord(1));
  std::sort(b.right.begin(), b.right.end(), by_coord(1));
  std::sort(b.bottom.begin(), b.bottom.end(), by_coord(0));
  std::sort(b.top.begin(), b.top.end(), by_coord(0));
  if (b.left.size() != b.right.size() || b.bottom.size() != b.top.size())
    throw ConfigError("mesh file: boundary sets are not mirror images");
  for (std::size_t k = 0; k < b.left.size(); ++k) b.pairs_lr.emplace_back(b.left[k], b.right[k]);
  for (std::size_t k = 0; k < b.bottom.size(); ++k) b.pairs_bt.emplace_back(b.bottom[k], b.top[k]);
  b.corners = {b.bottom.front(), b.bottom.back(), b.top.back(), b.top.front()};
  return m;
}

}  // namespace fe2hom
