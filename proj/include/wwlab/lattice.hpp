#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace wwlab {

/// Cubic cell complex on a product lattice, dimension 2 or 3, with per-axis
/// boundary conditions. The T2 x I variant is periodic in x and z and open in
/// y (smooth truncation: no edge extends past the y = 0 or y = L_y vertex
/// layers). Cell ids are row-major within each kind, x fastest, then y, then
/// z, axis/plane blocks in order, so enumeration is reproducible.
///
/// Axis order: 0 = x, 1 = y, 2 = z. Face planes are labeled by their spanned
/// axes: XY spans (x,y), YZ spans (y,z), ZX spans (z,x).
class CellComplex {
 public:
  enum Plane : int { XY = 0, YZ = 1, ZX = 2 };

  struct EdgeRef { int axis, x, y, z; };
  struct FaceRef { int plane, x, y, z; };

  static CellComplex t2xi(int lx, int ly, int lz);
  static CellComplex torus3d(int lx, int ly, int lz);
  static CellComplex torus2d(int lx, int ly);

  int dim() const { return dim_; }
  const std::array<int, 3>& dims() const { return dims_; }
  bool periodic(int axis) const { return periodic_[axis]; }
  bool open_y() const { return !periodic_[1]; }

  int n_vertices() const { return n_vertices_; }
  int n_edges() const { return n_edges_; }
  int n_faces() const { return n_faces_; }
  int n_cubes() const { return n_cubes_; }

  // --- id maps -------------------------------------------------------------
  int vertex_id(int x, int y, int z) const;           // -1 if out of range
  std::array<int, 3> vertex_coords(int v) const;
  int edge_id(int axis, int x, int y, int z) const;   // -1 if out of range
  EdgeRef edge_ref(int e) const;
  int face_id(int plane, int x, int y, int z) const;  // -1 if out of range
  FaceRef face_ref(int f) const;
  int cube_id(int x, int y, int z) const;
  std::array<int, 3> cube_coords(int q) const;

  // --- incidence (boundary and coboundary) ----------------------------------
  std::array<int, 2> edge_vertices(int e) const;
  std::array<int, 4> face_edges(int f) const;
  std::array<int, 6> cube_faces(int q) const;
  std::vector<int> vertex_edges(int v) const;
  std::vector<int> edge_faces(int e) const;
  std::vector<int> face_cubes(int f) const;

  // --- boundary queries (open y) --------------------------------------------
  bool is_right_boundary_vertex(int v) const;  // y == 0
  bool is_left_boundary_vertex(int v) const;   // y == L_y
  bool is_right_boundary_edge(int e) const;    // in-plane x/z edge at y == 0
  bool is_left_boundary_edge(int e) const;
  bool is_boundary_face(int f) const;          // ZX face at y == 0 or y == L_y

  /// y-layer span of a cell's qubit support, for enforcement-width tests.
  int edge_min_layer(int e) const;
  int edge_max_layer(int e) const;
  int face_min_layer(int f) const;
  int face_max_layer(int f) const;

  // --- over/under legs -------------------------------------------------------
  /// The two normal legs that cross over and under a face in the fixed
  /// projection (offset direction +x -y -z). A leg that would leave the open
  /// y-range is reported as -1; right-boundary ZX faces lose their over leg,
  /// left-boundary ones their under leg.
  struct OuLegs { int over = -1, under = -1; };
  OuLegs ou_legs(int f) const;

  /// Per-unit string decorations relative to the offset copy of the curve.
  /// Legs outside the lattice are dropped (boundary truncation).
  struct Decoration { std::vector<int> over, under; };
  Decoration offset_decorations(const std::vector<int>& curve_edges) const;

  std::string describe_json(std::size_t n_qubits = 0) const;

  /// Chebyshev distance between vertices, wrap-aware per axis.
  int vertex_distance(int v1, int v2) const;

 private:
  CellComplex(int dim, std::array<int, 3> dims, std::array<bool, 3> periodic);

  int norm_cell(int axis, int c) const;    // cell coordinate; -1 if out of range
  int norm_vert(int axis, int c) const;    // vertex coordinate; -1 if out of range
  int extent_cell(int axis) const { return dims_[axis]; }
  int extent_vert(int axis) const { return periodic_[axis] ? dims_[axis] : dims_[axis] + 1; }

  int dim_;
  std::array<int, 3> dims_;
  std::array<bool, 3> periodic_;
  int n_vertices_, n_edges_, n_faces_, n_cubes_;
  std::array<int, 3> edge_count_;   // per axis
  std::array<int, 3> edge_off_;
  std::array<int, 3> face_count_;   // per plane
  std::array<int, 3> face_off_;
};

/// Edge set with mod-2 semantics; insertion order is irrelevant and repeated
/// edges cancel.
struct Curve {
  std::vector<int> edges;  // kept sorted and deduplicated

  void toggle(int edge);
  void toggle_face(const CellComplex& cx, int face);  // xor the face boundary
  bool contains(int edge) const;

  bool is_closed(const CellComplex& cx) const;
  std::vector<int> endpoints(const CellComplex& cx) const;  // odd-incidence vertices

  static Curve straight(const CellComplex& cx, int axis, std::array<int, 3> base, int len);
};

}  // namespace wwlab
