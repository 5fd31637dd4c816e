#include "wwlab/codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace wwlab {

std::string model_name(ModelId m) {
  switch (m) {
    case ModelId::Toric2d: return "toric2d";
    case ModelId::Toric3d: return "toric3d";
    case ModelId::Toric3dDoubled: return "toric3d-doubled";
    case ModelId::ThreeFermion: return "3d3f";
    case ModelId::ParamagnetBulk: return "parabulk";
  }
  return "?";
}

int StabilizerCode::qubit_of_edge(int edge, Species s) const {
  if (edge < 0) return -1;
  if (doubled()) return 2 * edge + int(s);
  return edge;  // toric and paramagnet layouts put edges first, one species
}

int StabilizerCode::qubit_of_face(int face) const {
  if (face < 0 || face_qubit.empty()) return -1;
  return face_qubit[face];
}

StabilizerCode::QubitInfo StabilizerCode::qubit_info(int q) const {
  if (doubled()) return {false, q / 2, Species(q & 1)};
  if (q >= cx.n_edges()) {
    for (int f = 0; f < cx.n_faces(); ++f)
      if (face_qubit[f] == q) return {true, f, Species::Single};
    throw std::out_of_range("qubit id out of range");
  }
  return {false, q, Species::Single};
}

std::uint64_t StabilizerCode::fixture_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) { h ^= c; h *= 1099511628211ull; }
  };
  mix(model_name(model));
  auto d = cx.dims();
  mix(std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]));
  for (const auto& g : gens) mix(g.op.serialize());
  for (const auto& g : sym_gens) mix(g.op.serialize());
  return h;
}

namespace {

void add_x(PauliOperator& op, int q) { if (q >= 0) op.x.flip(q); }
void add_z(PauliOperator& op, int q) { if (q >= 0) op.z.flip(q); }

void build_toric_generators(StabilizerCode& code, bool doubled) {
  const CellComplex& cx = code.cx;
  int species = doubled ? 2 : 1;
  for (int s = 0; s < species; ++s) {
    for (int v = 0; v < cx.n_vertices(); ++v) {
      PauliOperator op(code.n_qubits);
      for (int e : cx.vertex_edges(v)) add_x(op, code.qubit_of_edge(e, Species(s)));
      code.vertex_gen_index.push_back(code.gens.size());
      code.gens.push_back({std::move(op), s == 0 ? GenKind::VertexSigma : GenKind::VertexTau, v});
    }
  }
  for (int s = 0; s < species; ++s) {
    for (int f = 0; f < cx.n_faces(); ++f) {
      PauliOperator op(code.n_qubits);
      for (int e : cx.face_edges(f)) add_z(op, code.qubit_of_edge(e, Species(s)));
      code.gens.push_back({std::move(op), s == 0 ? GenKind::FaceSigma : GenKind::FaceTau, f});
    }
  }
}

PauliOperator loop_op(const StabilizerCode& code, int edge_axis, int fixed_axis,
                      int fixed_val, int other_fixed_axis, int other_val, bool x_type,
                      Species s) {
  // all edges of edge_axis whose fixed_axis coordinate == fixed_val and
  // other_fixed_axis coordinate == other_val (iterate the remaining axis)
  const CellComplex& cx = code.cx;
  PauliOperator op(code.n_qubits);
  int run_axis = 0;
  for (int a = 0; a < 3; ++a) {
    if (a == fixed_axis || a == other_fixed_axis) continue;
    run_axis = a;
  }
  int len = cx.dims()[run_axis];
  for (int k = 0; k < len; ++k) {
    int c[3] = {0, 0, 0};
    c[fixed_axis] = fixed_val;
    c[other_fixed_axis] = other_val;
    c[run_axis] = k;
    int q = code.qubit_of_edge(cx.edge_id(edge_axis, c[0], c[1], c[2]), s);
    if (x_type) add_x(op, q); else add_z(op, q);
  }
  return op;
}

}  // namespace

StabilizerCode build_toric(int dimension, const CellComplex& cx) {
  if (cx.dim() != dimension) throw std::invalid_argument("complex dimension mismatch");
  StabilizerCode code(dimension == 2 ? ModelId::Toric2d : ModelId::Toric3d, cx);
  code.n_qubits = std::size_t(cx.n_edges());
  build_toric_generators(code, false);

  if (dimension == 2) {
    // Z1: z-type loop of y-edges at x=0; X1: x-type on y-edges at y=0, etc.
    code.logicals.push_back({"Z1", loop_op(code, 1, 0, 0, 2, 0, false, Species::Single)});
    code.logicals.push_back({"X1", loop_op(code, 1, 1, 0, 2, 0, true, Species::Single)});
    code.logicals.push_back({"Z2", loop_op(code, 0, 1, 0, 2, 0, false, Species::Single)});
    code.logicals.push_back({"X2", loop_op(code, 0, 0, 0, 2, 0, true, Species::Single)});
  } else {
    const char* zl[3] = {"Z1", "Z2", "Z3"};
    const char* xl[3] = {"X1", "X2", "X3"};
    for (int axis = 0; axis < 3; ++axis) {
      int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
      // Z loop along `axis`; X sheet of axis-edges with axis-coordinate 0
      PauliOperator zop(code.n_qubits), xop(code.n_qubits);
      for (int k = 0; k < cx.dims()[axis]; ++k) {
        int c[3] = {0, 0, 0};
        c[axis] = k;
        add_z(zop, code.qubit_of_edge(cx.edge_id(axis, c[0], c[1], c[2])));
      }
      for (int i = 0; i < cx.dims()[o1]; ++i)
        for (int j = 0; j < cx.dims()[o2]; ++j) {
          int c[3] = {0, 0, 0};
          c[o1] = i; c[o2] = j;
          add_x(xop, code.qubit_of_edge(cx.edge_id(axis, c[0], c[1], c[2])));
        }
      code.logicals.push_back({zl[axis], std::move(zop)});
      code.logicals.push_back({xl[axis], std::move(xop)});
    }
  }
  return code;
}

StabilizerCode build_toric3d_doubled(const CellComplex& cx) {
  if (cx.dim() != 3) throw std::invalid_argument("doubled toric code needs a 3d complex");
  StabilizerCode code(ModelId::Toric3dDoubled, cx);
  code.n_qubits = 2 * std::size_t(cx.n_edges());
  build_toric_generators(code, true);
  return code;
}

namespace {

// S^e / S^m style string with decorations; shared with the 3d3f logical
// construction. Over legs that fell off the lattice are simply absent.
PauliOperator decorated_string_op(const StabilizerCode& code, const Curve& c, bool e_species) {
  const CellComplex& cx = code.cx;
  PauliOperator op(code.n_qubits);
  auto deco = cx.offset_decorations(c.edges);
  if (e_species) {
    for (int e : c.edges) add_z(op, code.qubit_of_edge(e, Species::Sigma));
    for (int e : deco.under) {
      add_x(op, code.qubit_of_edge(e, Species::Tau));
      add_x(op, code.qubit_of_edge(e, Species::Sigma));
    }
    for (int e : deco.over) add_x(op, code.qubit_of_edge(e, Species::Sigma));
  } else {
    for (int e : c.edges) add_z(op, code.qubit_of_edge(e, Species::Tau));
    for (int e : deco.under) add_x(op, code.qubit_of_edge(e, Species::Tau));
    for (int e : deco.over) {
      add_x(op, code.qubit_of_edge(e, Species::Tau));
      add_x(op, code.qubit_of_edge(e, Species::Sigma));
    }
  }
  return op;
}

PauliOperator dual_membrane_op(const StabilizerCode& code, int edge_axis, int level,
                               Species s) {
  // x^s on every `edge_axis` edge whose coordinate along that axis == level
  const CellComplex& cx = code.cx;
  PauliOperator op(code.n_qubits);
  int o1 = (edge_axis + 1) % 3, o2 = (edge_axis + 2) % 3;
  int n1 = cx.periodic(o1) ? cx.dims()[o1] : cx.dims()[o1] + 1;
  int n2 = cx.periodic(o2) ? cx.dims()[o2] : cx.dims()[o2] + 1;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      int c[3] = {0, 0, 0};
      c[edge_axis] = level; c[o1] = i; c[o2] = j;
      add_x(op, code.qubit_of_edge(cx.edge_id(edge_axis, c[0], c[1], c[2]), s));
    }
  return op;
}

}  // namespace

StabilizerCode build_3d3f(const CellComplex& cx, bool decorations) {
  if (cx.dim() != 3 || !cx.open_y() || !cx.periodic(0) || !cx.periodic(2))
    throw std::invalid_argument("3d3f requires the T2 x I topology (periodic x,z; open y)");
  StabilizerCode code(ModelId::ThreeFermion, cx);
  code.n_qubits = 2 * std::size_t(cx.n_edges());

  for (int s = 0; s < 2; ++s) {
    for (int v = 0; v < cx.n_vertices(); ++v) {
      PauliOperator op(code.n_qubits);
      for (int e : cx.vertex_edges(v)) add_x(op, code.qubit_of_edge(e, Species(s)));
      code.vertex_gen_index.push_back(code.gens.size());
      code.gens.push_back({std::move(op), s == 0 ? GenKind::VertexSigma : GenKind::VertexTau, v});
    }
  }
  for (int s = 0; s < 2; ++s) {
    for (int f = 0; f < cx.n_faces(); ++f) {
      PauliOperator op(code.n_qubits);
      for (int e : cx.face_edges(f)) add_z(op, code.qubit_of_edge(e, Species(s)));
      if (decorations) {
        auto legs = cx.ou_legs(f);
        if (s == 0) {  // B^sigma: sigma_O sigma_U tau_U
          add_x(op, code.qubit_of_edge(legs.over, Species::Sigma));
          add_x(op, code.qubit_of_edge(legs.under, Species::Sigma));
          add_x(op, code.qubit_of_edge(legs.under, Species::Tau));
        } else {  // B^tau: sigma_O tau_O tau_U
          add_x(op, code.qubit_of_edge(legs.over, Species::Sigma));
          add_x(op, code.qubit_of_edge(legs.over, Species::Tau));
          add_x(op, code.qubit_of_edge(legs.under, Species::Tau));
        }
      }
      code.gens.push_back({std::move(op), s == 0 ? GenKind::FaceSigma : GenKind::FaceTau, f});
    }
  }

  if (decorations) {
    auto zvert = Curve::straight(cx, 2, {0, 0, 0}, cx.dims()[2]);
    auto xhoriz = Curve::straight(cx, 0, {0, 0, 0}, cx.dims()[0]);
    PauliOperator z1 = decorated_string_op(code, zvert, true);    // S^e_vert
    PauliOperator x1 = decorated_string_op(code, xhoriz, false);  // S^m_horiz
    PauliOperator z2 = decorated_string_op(code, zvert, false);   // S^m_vert
    PauliOperator x2 = decorated_string_op(code, xhoriz, true);   // S^e_horiz
    // left-boundary partners via the full-lattice membranes of Eq.-style pairing
    PauliOperator rs_horiz = dual_membrane_op(code, 2, 0, Species::Sigma);
    PauliOperator rt_horiz = dual_membrane_op(code, 2, 0, Species::Tau);
    PauliOperator rs_vert = dual_membrane_op(code, 0, 0, Species::Sigma);
    PauliOperator rt_vert = dual_membrane_op(code, 0, 0, Species::Tau);
    code.logicals.push_back({"Z1", z1});
    code.logicals.push_back({"X1", x1});
    code.logicals.push_back({"Z2", z2});
    code.logicals.push_back({"X2", x2});
    code.logicals.push_back({"Z3", multiply(z1, rt_vert)});
    code.logicals.push_back({"X3", multiply(x1, rs_horiz)});
    code.logicals.push_back({"Z4", multiply(z2, rs_vert)});
    code.logicals.push_back({"X4", multiply(x2, rt_horiz)});
  }
  return code;
}

StabilizerCode build_paramagnet_bulk(const CellComplex& cx) {
  if (cx.dim() != 3 || !cx.open_y() || !cx.periodic(0) || !cx.periodic(2))
    throw std::invalid_argument("paramagnet bulk requires the T2 x I topology");
  if (cx.dims()[1] < 2)
    throw std::invalid_argument("paramagnet bulk needs L_y >= 2");
  StabilizerCode code(ModelId::ParamagnetBulk, cx);

  // qubits: every edge, then bulk faces (boundary faces carry no qubit)
  code.face_qubit.assign(cx.n_faces(), -1);
  int next = cx.n_edges();
  for (int f = 0; f < cx.n_faces(); ++f)
    if (!cx.is_boundary_face(f)) code.face_qubit[f] = next++;
  code.n_qubits = std::size_t(next);

  auto is_bulk_edge = [&](int e) {
    return !cx.is_right_boundary_edge(e) && !cx.is_left_boundary_edge(e);
  };

  for (int e = 0; e < cx.n_edges(); ++e) {
    if (!is_bulk_edge(e)) continue;
    PauliOperator op(code.n_qubits);
    add_x(op, e);
    code.gens.push_back({std::move(op), GenKind::ParaEdge, e});
  }
  for (int f = 0; f < cx.n_faces(); ++f) {
    if (code.face_qubit[f] < 0) continue;
    PauliOperator op(code.n_qubits);
    add_x(op, code.face_qubit[f]);
    code.gens.push_back({std::move(op), GenKind::ParaFace, f});
  }
  for (int v = 0; v < cx.n_vertices(); ++v) {
    if (!cx.is_right_boundary_vertex(v) && !cx.is_left_boundary_vertex(v)) continue;
    PauliOperator op(code.n_qubits);
    for (int e : cx.vertex_edges(v))
      if (!is_bulk_edge(e)) add_x(op, e);  // the four in-plane edges
    code.gens.push_back({std::move(op), GenKind::BoundaryToricA, v});
  }
  for (int f = 0; f < cx.n_faces(); ++f) {
    if (!cx.is_boundary_face(f)) continue;
    PauliOperator op(code.n_qubits);
    for (int e : cx.face_edges(f)) add_z(op, e);
    code.gens.push_back({std::move(op), GenKind::BoundaryToricB, f});
  }

  // 1-form symmetry generators (not energy terms)
  int ly = cx.dims()[1];
  for (int v = 0; v < cx.n_vertices(); ++v) {
    int y = cx.vertex_coords(v)[1];
    if (y == 0 || y == ly) continue;
    PauliOperator op(code.n_qubits);
    for (int e : cx.vertex_edges(v)) add_x(op, e);
    code.sym_gens.push_back({std::move(op), GenKind::SymAv, v});
  }
  for (int q = 0; q < cx.n_cubes(); ++q) {
    int y = cx.cube_coords(q)[1];
    if (y == 0 || y == ly - 1) continue;
    PauliOperator op(code.n_qubits);
    for (int f : cx.cube_faces(q)) add_x(op, code.face_qubit[f]);
    code.sym_gens.push_back({std::move(op), GenKind::SymAc, q});
  }
  for (int v = 0; v < cx.n_vertices(); ++v) {
    if (!cx.is_right_boundary_vertex(v) && !cx.is_left_boundary_vertex(v)) continue;
    PauliOperator op(code.n_qubits);
    for (int e : cx.vertex_edges(v)) add_x(op, e);  // five-body
    code.sym_gens.push_back({std::move(op), GenKind::SymAvPrime, v});
  }
  for (int q = 0; q < cx.n_cubes(); ++q) {
    int y = cx.cube_coords(q)[1];
    if (y != 0 && y != ly - 1) continue;
    PauliOperator op(code.n_qubits);
    int f0 = -1;
    for (int f : cx.cube_faces(q)) {
      if (cx.is_boundary_face(f)) f0 = f;
      else add_x(op, code.face_qubit[f]);
    }
    for (int e : cx.face_edges(f0)) add_z(op, e);
    code.sym_gens.push_back({std::move(op), GenKind::SymAqPrime, q});
  }

  // boundary toric logicals, right boundary then left
  int y_of[2] = {0, ly};
  const char* zl[2] = {"Z1", "Z3"};
  const char* xl[2] = {"X1", "X3"};
  const char* zl2[2] = {"Z2", "Z4"};
  const char* xl2[2] = {"X2", "X4"};
  for (int b = 0; b < 2; ++b) {
    int y = y_of[b];
    PauliOperator z1(code.n_qubits), x1(code.n_qubits), z2(code.n_qubits), x2(code.n_qubits);
    for (int k = 0; k < cx.dims()[2]; ++k) add_z(z1, cx.edge_id(2, 0, y, k));
    for (int i = 0; i < cx.dims()[0]; ++i) add_x(x1, cx.edge_id(2, i, y, 0));
    for (int i = 0; i < cx.dims()[0]; ++i) add_z(z2, cx.edge_id(0, i, y, 0));
    for (int k = 0; k < cx.dims()[2]; ++k) add_x(x2, cx.edge_id(0, 0, y, k));
    code.logicals.push_back({zl[b], std::move(z1)});
    code.logicals.push_back({xl[b], std::move(x1)});
    code.logicals.push_back({zl2[b], std::move(z2)});
    code.logicals.push_back({xl2[b], std::move(x2)});
  }
  return code;
}

StabilizerCode build_model(ModelId m, const std::array<int, 3>& dims) {
  switch (m) {
    case ModelId::Toric2d: return build_toric(2, CellComplex::torus2d(dims[0], dims[1]));
    case ModelId::Toric3d: return build_toric(3, CellComplex::torus3d(dims[0], dims[1], dims[2]));
    case ModelId::Toric3dDoubled:
      return build_toric3d_doubled(CellComplex::torus3d(dims[0], dims[1], dims[2]));
    case ModelId::ThreeFermion: return build_3d3f(CellComplex::t2xi(dims[0], dims[1], dims[2]));
    case ModelId::ParamagnetBulk:
      return build_paramagnet_bulk(CellComplex::t2xi(dims[0], dims[1], dims[2]));
  }
  throw std::invalid_argument("unknown model");
}

namespace {

bool pairs_commute(const std::vector<const Generator*>& a,
                   const std::vector<const Generator*>& b_or_empty,
                   std::size_t nq) {
  // candidate pairs share at least one qubit
  bool cross = !b_or_empty.empty();
  const auto& second = cross ? b_or_empty : a;
  std::vector<std::vector<std::uint32_t>> by_qubit_a(nq), by_qubit_b(nq);
  for (std::uint32_t i = 0; i < a.size(); ++i)
    for (auto q : a[i]->op.support()) by_qubit_a[q].push_back(i);
  for (std::uint32_t j = 0; j < second.size(); ++j)
    for (auto q : second[j]->op.support()) by_qubit_b[q].push_back(j);
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t q = 0; q < nq; ++q) {
    for (auto i : by_qubit_a[q])
      for (auto j : by_qubit_b[q]) {
        if (!cross && j <= i) continue;
        std::uint64_t key = (std::uint64_t(i) << 32) | j;
        if (!seen.insert(key).second) continue;
        if (!commutes(a[i]->op, second[j]->op)) return false;
      }
  }
  return true;
}

}  // namespace

bool check_all_commute(const StabilizerCode& code) {
  std::vector<const Generator*> h;
  h.reserve(code.gens.size());
  for (const auto& g : code.gens) h.push_back(&g);
  if (!pairs_commute(h, {}, code.n_qubits)) return false;
  if (!code.sym_gens.empty()) {
    std::vector<const Generator*> s;
    for (const auto& g : code.sym_gens) s.push_back(&g);
    if (!pairs_commute(s, h, code.n_qubits)) return false;
    if (!pairs_commute(s, {}, code.n_qubits)) return false;
  }
  return true;
}

BitVec symplectic_row(const PauliOperator& p) {
  std::size_t n = p.num_qubits();
  BitVec row(2 * n);
  for (auto i : p.x.ones()) row.set(i);
  for (auto i : p.z.ones()) row.set(n + i);
  return row;
}

PauliOperator from_symplectic(const BitVec& row) {
  std::size_t n = row.size() / 2;
  PauliOperator p(n);
  for (auto i : row.ones()) {
    if (i < n) p.x.set(i);
    else p.z.set(i - n);
  }
  return p;
}

std::vector<BitVec> symplectic_rows(const std::vector<Generator>& gens) {
  std::vector<BitVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(symplectic_row(g.op));
  return rows;
}

std::size_t stabilizer_rank(const StabilizerCode& code) {
  return gf2_rank(symplectic_rows(code.gens));
}

int count_logical_qubits(const StabilizerCode& code) {
  if (!check_all_commute(code))
    throw std::invalid_argument("generators do not commute: not a stabilizer code");
  return int(code.n_qubits) - int(stabilizer_rank(code));
}

std::vector<LogicalPair> extract_logicals(const StabilizerCode& code) {
  std::size_t n = code.n_qubits;
  // commute-with-everything subspace: null space of the Lambda-swapped rows
  std::vector<BitVec> lam;
  lam.reserve(code.gens.size());
  for (const auto& g : code.gens) {
    BitVec row(2 * n);
    for (auto i : g.op.z.ones()) row.set(i);
    for (auto i : g.op.x.ones()) row.set(n + i);
    lam.push_back(std::move(row));
  }
  auto centralizer = gf2_nullspace(lam, 2 * n);

  // quotient by the stabilizer row space
  Rref stab = gf2_rref(symplectic_rows(code.gens));
  std::vector<BitVec> basis_rows = stab.rows;
  std::vector<std::size_t> basis_piv = stab.pivots;
  std::vector<BitVec> log_rows;
  for (auto& v : centralizer) {
    BitVec w = v;
    for (std::size_t k = 0; k < basis_rows.size(); ++k)
      if (w.get(basis_piv[k])) w.xor_with(basis_rows[k]);
    auto p = w.first_one();
    if (p < 0) continue;
    log_rows.push_back(w);
    basis_piv.push_back(std::size_t(p));
    basis_rows.push_back(std::move(w));
  }

  // symplectic pairing
  auto sympl = [](const BitVec& a, const BitVec& b) {
    return !commutes(from_symplectic(a), from_symplectic(b));
  };
  std::vector<LogicalPair> out;
  std::vector<BitVec> pool = std::move(log_rows);
  while (!pool.empty()) {
    BitVec a = pool.front();
    pool.erase(pool.begin());
    std::ptrdiff_t partner = -1;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (sympl(a, pool[i])) { partner = std::ptrdiff_t(i); break; }
    if (partner < 0)
      throw std::runtime_error("logical extraction: unpaired centralizer element");
    BitVec b = pool[std::size_t(partner)];
    pool.erase(pool.begin() + partner);
    for (auto& c : pool) {
      if (sympl(c, b)) c.xor_with(a);
      if (sympl(c, a)) c.xor_with(b);
    }
    out.push_back({from_symplectic(a), from_symplectic(b)});
  }
  return out;
}

StabilizerBasis::StabilizerBasis(const StabilizerCode& code)
    : rref_(gf2_rref(symplectic_rows(code.gens))), n_(code.n_qubits) {}

bool StabilizerBasis::contains(const PauliOperator& p) const {
  BitVec v = symplectic_row(p);
  return gf2_reduce(rref_, v);
}

PauliOperator StabilizerBasis::reduce(const PauliOperator& p) const {
  BitVec v = symplectic_row(p);
  gf2_reduce(rref_, v);
  return from_symplectic(v);
}

VerifyReport verify_code(const StabilizerCode& code) {
  VerifyReport r;
  r.model = model_name(code.model);
  r.dims = code.cx.dims();
  r.n_qubits = code.n_qubits;
  r.n_generators = code.gens.size();
  r.n_symmetry_generators = code.sym_gens.size();
  r.all_commute = check_all_commute(code);
  r.rank = stabilizer_rank(code);
  r.k = int(code.n_qubits) - int(r.rank);
  bool two_boundaries = code.model == ModelId::ThreeFermion || code.model == ModelId::ParamagnetBulk;
  r.k_per_boundary = two_boundaries ? r.k / 2 : -1;
  r.logicals_commute_with_stabilizers = true;
  for (const auto& l : code.logicals)
    for (const auto& g : code.gens)
      if (!commutes(l.op, g.op)) { r.logicals_commute_with_stabilizers = false; break; }
  r.fixture_hash = code.fixture_hash();
  return r;
}

}  // namespace wwlab
