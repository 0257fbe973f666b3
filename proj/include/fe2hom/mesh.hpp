// Structured quadrilateral mesh generation, microstructure phase tagging,
// and boundary node bookkeeping with mirror pairing.
#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "fe2hom/tensors.hpp"

namespace fe2hom {

// Elements carrying this phase tag are excluded from assembly (pores).
constexpr int kVoidPhase = -1;

struct BoundarySets {
  // Edge node lists, sorted by arc coordinate. Corner nodes appear in
  // exactly two of the four lists.
  std::vector<int> left, right, bottom, top;
  std::vector<int> corners;
  // Matched mirror pairs, corners included.
  std::vector<std::pair<int, int>> pairs_lr;  // (left node, right node)
  std::vector<std::pair<int, int>> pairs_bt;  // (bottom node, top node)
};

struct Mesh {
  std::vector<Vec> nodes;                 // reference coordinates
  std::vector<std::array<int, 4>> elems;  // counterclockwise node indices
  std::vector<int> phase;                 // per-element tag, kVoidPhase = excluded
  double Lx = 0.0, Ly = 0.0;
  BoundarySets boundary;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_elems() const { return static_cast<int>(elems.size()); }
  Vec centroid(int e) const;
  double element_area(int e) const;
  double total_area() const;  // all elements, voids included
  bool is_boundary_node(int n) const;
};

struct MicrostructureSpec {
  enum class Variant { Homogeneous, Laminate, CircularInclusion, CircularVoid };

  Variant variant = Variant::Homogeneous;
  int axis = 0;                  // laminate normal axis: 0 = x, 1 = y
  double volume_fraction = 0.5;  // laminate: phase-0 fraction along the axis
  Vec center{0.5, 0.5};          // circle center (domain coordinates)
  double radius = 0.25;

  static MicrostructureSpec homogeneous();
  static MicrostructureSpec laminate(int axis, double volume_fraction);
  static MicrostructureSpec circular_inclusion(Vec center, double radius);
  static MicrostructureSpec circular_void(Vec center, double radius);
};

// Tensor-product grid of nx-by-ny quads on [0,Lx] x [0,Ly] with boundary
// sets and exact mirror pairs. Throws ConfigError on non-positive inputs.
Mesh gen_grid(int nx, int ny, double Lx, double Ly);

// Tags each element by its centroid against the spec's region predicate.
// Idempotent. Throws GeometryError if the spec region lies outside the
// domain (laminate fraction outside (0,1), circle not inside the cell).
Mesh tag_phases(Mesh mesh, const MicrostructureSpec& spec);

// True iff every boundary pair matches tangentially within
// 1e-12 * max(Lx, Ly) and the element phase patterns along opposite
// boundary columns/rows are periodic-compatible: equal sequences, or each
// side single-phase along its own column.
bool mirror_check(const Mesh& mesh);

// Plain-text columnar format: header "<nnodes> <nelems>", one node per
// line "id x y", one element per line "id n0 n1 n2 n3 phase".
void write_mesh(const Mesh& mesh, std::ostream& out);
Mesh read_mesh(std::istream& in);

}  // namespace fe2hom
