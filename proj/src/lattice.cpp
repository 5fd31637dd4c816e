#include "wwlab/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wwlab {

namespace {
// spanned axes per plane, in (a, b) order; the missing one is the normal
constexpr int kSpan[3][2] = {{0, 1}, {1, 2}, {2, 0}};
}  // namespace

CellComplex::CellComplex(int dim, std::array<int, 3> dims, std::array<bool, 3> periodic)
    : dim_(dim), dims_(dims), periodic_(periodic) {
  for (int a = 0; a < dim_; ++a)
    if (dims_[a] < 2) throw std::invalid_argument("lattice dims must be >= 2");

  n_vertices_ = extent_vert(0) * extent_vert(1) * extent_vert(2);

  int off = 0;
  for (int a = 0; a < 3; ++a) {
    if (a >= dim_) { edge_count_[a] = 0; edge_off_[a] = off; continue; }
    int c = 1;
    for (int ax = 0; ax < 3; ++ax) c *= (ax == a) ? extent_cell(ax) : extent_vert(ax);
    edge_count_[a] = c;
    edge_off_[a] = off;
    off += c;
  }
  n_edges_ = off;

  off = 0;
  for (int p = 0; p < 3; ++p) {
    bool present = (dim_ == 3) || (p == XY);
    if (!present) { face_count_[p] = 0; face_off_[p] = off; continue; }
    int c = 1;
    for (int ax = 0; ax < 3; ++ax) {
      bool spanned = (ax == kSpan[p][0] || ax == kSpan[p][1]);
      c *= spanned ? extent_cell(ax) : extent_vert(ax);
    }
    face_count_[p] = c;
    face_off_[p] = off;
    off += c;
  }
  n_faces_ = off;

  n_cubes_ = (dim_ == 3) ? dims_[0] * dims_[1] * dims_[2] : 0;
}

CellComplex CellComplex::t2xi(int lx, int ly, int lz) {
  return CellComplex(3, {lx, ly, lz}, {true, false, true});
}
CellComplex CellComplex::torus3d(int lx, int ly, int lz) {
  return CellComplex(3, {lx, ly, lz}, {true, true, true});
}
CellComplex CellComplex::torus2d(int lx, int ly) {
  return CellComplex(2, {lx, ly, 1}, {true, true, true});
}

int CellComplex::norm_cell(int axis, int c) const {
  if (axis >= dim_) return (c == 0) ? 0 : -1;
  int l = dims_[axis];
  if (periodic_[axis]) return ((c % l) + l) % l;
  return (c >= 0 && c < l) ? c : -1;
}

int CellComplex::norm_vert(int axis, int c) const {
  if (axis >= dim_) return (c == 0) ? 0 : -1;
  int l = dims_[axis];
  if (periodic_[axis]) return ((c % l) + l) % l;
  return (c >= 0 && c <= l) ? c : -1;
}

int CellComplex::vertex_id(int x, int y, int z) const {
  x = norm_vert(0, x); y = norm_vert(1, y); z = norm_vert(2, z);
  if (x < 0 || y < 0 || z < 0) return -1;
  return x + extent_vert(0) * (y + extent_vert(1) * z);
}

std::array<int, 3> CellComplex::vertex_coords(int v) const {
  int ex = extent_vert(0), ey = extent_vert(1);
  return {v % ex, (v / ex) % ey, v / (ex * ey)};
}

int CellComplex::edge_id(int axis, int x, int y, int z) const {
  if (axis >= dim_) return -1;
  int c[3] = {x, y, z};
  int ext[3];
  for (int ax = 0; ax < 3; ++ax) {
    c[ax] = (ax == axis) ? norm_cell(ax, c[ax]) : norm_vert(ax, c[ax]);
    if (c[ax] < 0) return -1;
    ext[ax] = (ax == axis) ? extent_cell(ax) : extent_vert(ax);
  }
  return edge_off_[axis] + c[0] + ext[0] * (c[1] + ext[1] * c[2]);
}

CellComplex::EdgeRef CellComplex::edge_ref(int e) const {
  int axis = 2;
  while (axis > 0 && e < edge_off_[axis]) --axis;
  int r = e - edge_off_[axis];
  int ext[3];
  for (int ax = 0; ax < 3; ++ax) ext[ax] = (ax == axis) ? extent_cell(ax) : extent_vert(ax);
  return {axis, r % ext[0], (r / ext[0]) % ext[1], r / (ext[0] * ext[1])};
}

int CellComplex::face_id(int plane, int x, int y, int z) const {
  if (face_count_[plane] == 0) return -1;
  int c[3] = {x, y, z};
  int ext[3];
  for (int ax = 0; ax < 3; ++ax) {
    bool spanned = (ax == kSpan[plane][0] || ax == kSpan[plane][1]);
    c[ax] = spanned ? norm_cell(ax, c[ax]) : norm_vert(ax, c[ax]);
    if (c[ax] < 0) return -1;
    ext[ax] = spanned ? extent_cell(ax) : extent_vert(ax);
  }
  return face_off_[plane] + c[0] + ext[0] * (c[1] + ext[1] * c[2]);
}

CellComplex::FaceRef CellComplex::face_ref(int f) const {
  int plane = 2;
  while (plane > 0 && f < face_off_[plane]) --plane;
  int r = f - face_off_[plane];
  int ext[3];
  for (int ax = 0; ax < 3; ++ax) {
    bool spanned = (ax == kSpan[plane][0] || ax == kSpan[plane][1]);
    ext[ax] = spanned ? extent_cell(ax) : extent_vert(ax);
  }
  return {plane, r % ext[0], (r / ext[0]) % ext[1], r / (ext[0] * ext[1])};
}

int CellComplex::cube_id(int x, int y, int z) const {
  if (dim_ != 3) return -1;
  x = norm_cell(0, x); y = norm_cell(1, y); z = norm_cell(2, z);
  if (x < 0 || y < 0 || z < 0) return -1;
  return x + dims_[0] * (y + dims_[1] * z);
}

std::array<int, 3> CellComplex::cube_coords(int q) const {
  return {q % dims_[0], (q / dims_[0]) % dims_[1], q / (dims_[0] * dims_[1])};
}

std::array<int, 2> CellComplex::edge_vertices(int e) const {
  EdgeRef r = edge_ref(e);
  int d[3] = {0, 0, 0};
  d[r.axis] = 1;
  return {vertex_id(r.x, r.y, r.z), vertex_id(r.x + d[0], r.y + d[1], r.z + d[2])};
}

std::array<int, 4> CellComplex::face_edges(int f) const {
  FaceRef r = face_ref(f);
  int x = r.x, y = r.y, z = r.z;
  switch (r.plane) {
    case XY: return {edge_id(0, x, y, z), edge_id(0, x, y + 1, z),
                     edge_id(1, x, y, z), edge_id(1, x + 1, y, z)};
    case YZ: return {edge_id(1, x, y, z), edge_id(1, x, y, z + 1),
                     edge_id(2, x, y, z), edge_id(2, x, y + 1, z)};
    default: return {edge_id(2, x, y, z), edge_id(2, x + 1, y, z),
                     edge_id(0, x, y, z), edge_id(0, x, y, z + 1)};
  }
}

std::array<int, 6> CellComplex::cube_faces(int q) const {
  auto c = cube_coords(q);
  int x = c[0], y = c[1], z = c[2];
  return {face_id(XY, x, y, z), face_id(XY, x, y, z + 1),
          face_id(YZ, x, y, z), face_id(YZ, x + 1, y, z),
          face_id(ZX, x, y, z), face_id(ZX, x, y + 1, z)};
}

std::vector<int> CellComplex::vertex_edges(int v) const {
  auto c = vertex_coords(v);
  int x = c[0], y = c[1], z = c[2];
  std::vector<int> out;
  const int cand[6][4] = {{0, x, y, z},     {0, x - 1, y, z}, {1, x, y, z},
                          {1, x, y - 1, z}, {2, x, y, z},     {2, x, y, z - 1}};
  for (auto& e : cand) {
    int id = edge_id(e[0], e[1], e[2], e[3]);
    if (id >= 0) out.push_back(id);
  }
  return out;
}

std::vector<int> CellComplex::edge_faces(int e) const {
  EdgeRef r = edge_ref(e);
  int x = r.x, y = r.y, z = r.z;
  std::vector<int> out;
  int cand[4][4];
  switch (r.axis) {
    case 0:
      cand[0][0] = XY; cand[0][1] = x; cand[0][2] = y; cand[0][3] = z;
      cand[1][0] = XY; cand[1][1] = x; cand[1][2] = y - 1; cand[1][3] = z;
      cand[2][0] = ZX; cand[2][1] = x; cand[2][2] = y; cand[2][3] = z;
      cand[3][0] = ZX; cand[3][1] = x; cand[3][2] = y; cand[3][3] = z - 1;
      break;
    case 1:
      cand[0][0] = XY; cand[0][1] = x; cand[0][2] = y; cand[0][3] = z;
      cand[1][0] = XY; cand[1][1] = x - 1; cand[1][2] = y; cand[1][3] = z;
      cand[2][0] = YZ; cand[2][1] = x; cand[2][2] = y; cand[2][3] = z;
      cand[3][0] = YZ; cand[3][1] = x; cand[3][2] = y; cand[3][3] = z - 1;
      break;
    default:
      cand[0][0] = YZ; cand[0][1] = x; cand[0][2] = y; cand[0][3] = z;
      cand[1][0] = YZ; cand[1][1] = x; cand[1][2] = y - 1; cand[1][3] = z;
      cand[2][0] = ZX; cand[2][1] = x; cand[2][2] = y; cand[2][3] = z;
      cand[3][0] = ZX; cand[3][1] = x - 1; cand[3][2] = y; cand[3][3] = z;
      break;
  }
  for (auto& f : cand) {
    int id = face_id(f[0], f[1], f[2], f[3]);
    if (id >= 0) out.push_back(id);
  }
  return out;
}

std::vector<int> CellComplex::face_cubes(int f) const {
  FaceRef r = face_ref(f);
  int x = r.x, y = r.y, z = r.z;
  std::vector<int> out;
  int cand[2][3];
  switch (r.plane) {
    case XY: cand[0][0] = x; cand[0][1] = y; cand[0][2] = z;
             cand[1][0] = x; cand[1][1] = y; cand[1][2] = z - 1; break;
    case YZ: cand[0][0] = x; cand[0][1] = y; cand[0][2] = z;
             cand[1][0] = x - 1; cand[1][1] = y; cand[1][2] = z; break;
    default: cand[0][0] = x; cand[0][1] = y; cand[0][2] = z;
             cand[1][0] = x; cand[1][1] = y - 1; cand[1][2] = z; break;
  }
  for (auto& q : cand) {
    int id = cube_id(q[0], q[1], q[2]);
    if (id >= 0) out.push_back(id);
  }
  return out;
}

bool CellComplex::is_right_boundary_vertex(int v) const {
  return open_y() && vertex_coords(v)[1] == 0;
}
bool CellComplex::is_left_boundary_vertex(int v) const {
  return open_y() && vertex_coords(v)[1] == dims_[1];
}
bool CellComplex::is_right_boundary_edge(int e) const {
  EdgeRef r = edge_ref(e);
  return open_y() && r.axis != 1 && r.y == 0;
}
bool CellComplex::is_left_boundary_edge(int e) const {
  EdgeRef r = edge_ref(e);
  return open_y() && r.axis != 1 && r.y == dims_[1];
}
bool CellComplex::is_boundary_face(int f) const {
  FaceRef r = face_ref(f);
  return open_y() && r.plane == ZX && (r.y == 0 || r.y == dims_[1]);
}

int CellComplex::edge_min_layer(int e) const { return edge_ref(e).y; }
int CellComplex::edge_max_layer(int e) const {
  EdgeRef r = edge_ref(e);
  return r.axis == 1 ? r.y + 1 : r.y;
}
int CellComplex::face_min_layer(int f) const { return face_ref(f).y; }
int CellComplex::face_max_layer(int f) const {
  FaceRef r = face_ref(f);
  return r.plane == ZX ? r.y : r.y + 1;
}

CellComplex::OuLegs CellComplex::ou_legs(int f) const {
  FaceRef r = face_ref(f);
  int x = r.x, y = r.y, z = r.z;
  OuLegs legs;
  switch (r.plane) {
    case XY:
      legs.over = edge_id(2, x + 1, y, z - 1);
      legs.under = edge_id(2, x, y + 1, z);
      break;
    case YZ:
      legs.over = edge_id(0, x, y, z);
      legs.under = edge_id(0, x - 1, y + 1, z + 1);
      break;
    default:  // ZX
      legs.over = edge_id(1, x + 1, y - 1, z);
      legs.under = edge_id(1, x, y, z + 1);
      break;
  }
  return legs;
}

CellComplex::Decoration CellComplex::offset_decorations(const std::vector<int>& curve_edges) const {
  if (dim_ != 3) throw std::invalid_argument("string decorations need a 3d complex");
  std::vector<int> over, under;
  auto toggle = [](std::vector<int>& v, int id) {
    if (id < 0) return;
    auto it = std::find(v.begin(), v.end(), id);
    if (it == v.end()) v.push_back(id); else v.erase(it);
  };
  for (int e : curve_edges) {
    EdgeRef r = edge_ref(e);
    int x = r.x, y = r.y, z = r.z;
    switch (r.axis) {
      case 2:  // z unit
        toggle(under, edge_id(0, x - 1, y, z + 1));
        toggle(over, edge_id(1, x, y - 1, z));
        break;
      case 0:  // x unit
        toggle(under, edge_id(2, x, y, z));
        toggle(over, edge_id(1, x + 1, y - 1, z));
        break;
      default:  // y unit
        toggle(under, edge_id(2, x, y + 1, z));
        toggle(over, edge_id(0, x, y, z));
        break;
    }
  }
  std::sort(over.begin(), over.end());
  std::sort(under.begin(), under.end());
  return {std::move(over), std::move(under)};
}

int CellComplex::vertex_distance(int v1, int v2) const {
  auto a = vertex_coords(v1), b = vertex_coords(v2);
  int d = 0;
  for (int ax = 0; ax < 3; ++ax) {
    int diff = std::abs(a[ax] - b[ax]);
    if (periodic_[ax] && ax < dim_) diff = std::min(diff, dims_[ax] - diff);
    d = std::max(d, diff);
  }
  return d;
}

std::string CellComplex::describe_json(std::size_t n_qubits) const {
  std::ostringstream os;
  os << "{\"dim\":" << dim_ << ",\"dims\":[" << dims_[0] << "," << dims_[1] << ","
     << dims_[2] << "],\"boundary\":[";
  for (int a = 0; a < 3; ++a)
    os << (a ? "," : "") << (periodic_[a] ? "\"periodic\"" : "\"open\"");
  os << "],\"projection\":\"ou-offset(+x,-y,-z)/v1\""
     << ",\"vertices\":" << n_vertices_ << ",\"edges\":" << n_edges_
     << ",\"faces\":" << n_faces_ << ",\"cubes\":" << n_cubes_;
  if (n_qubits) os << ",\"n_qubits\":" << n_qubits;
  os << "}";
  return os.str();
}

void Curve::toggle(int edge) {
  auto it = std::lower_bound(edges.begin(), edges.end(), edge);
  if (it != edges.end() && *it == edge) edges.erase(it);
  else edges.insert(it, edge);
}

void Curve::toggle_face(const CellComplex& cx, int face) {
  for (int e : cx.face_edges(face)) toggle(e);
}

bool Curve::contains(int edge) const {
  return std::binary_search(edges.begin(), edges.end(), edge);
}

bool Curve::is_closed(const CellComplex& cx) const {
  return endpoints(cx).empty();
}

std::vector<int> Curve::endpoints(const CellComplex& cx) const {
  std::vector<int> verts;
  for (int e : edges) {
    auto vv = cx.edge_vertices(e);
    verts.push_back(vv[0]);
    verts.push_back(vv[1]);
  }
  std::sort(verts.begin(), verts.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < verts.size();) {
    std::size_t j = i;
    while (j < verts.size() && verts[j] == verts[i]) ++j;
    if ((j - i) & 1) out.push_back(verts[i]);
    i = j;
  }
  return out;
}

Curve Curve::straight(const CellComplex& cx, int axis, std::array<int, 3> base, int len) {
  Curve c;
  for (int k = 0; k < len; ++k) {
    int p[3] = {base[0], base[1], base[2]};
    p[axis] += k;
    int id = cx.edge_id(axis, p[0], p[1], p[2]);
    if (id < 0) throw std::invalid_argument("straight curve leaves the lattice");
    c.toggle(id);
  }
  return c;
}

}  // namespace wwlab
