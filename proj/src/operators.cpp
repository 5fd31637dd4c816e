#include "wwlab/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wwlab {

std::size_t SyndromeReport::flux_components(Species s) const {
  std::size_t c = 0;
  for (const auto& l : flux) c += (l.species == s);
  return c;
}

std::size_t SyndromeReport::flux_faces(Species s) const {
  std::size_t c = 0;
  for (const auto& l : flux) if (l.species == s) c += l.faces.size();
  return c;
}

namespace {

bool is_vertex_kind(GenKind k) {
  return k == GenKind::VertexSigma || k == GenKind::VertexTau ||
         k == GenKind::BoundaryToricA;
}
bool is_para_kind(GenKind k) {
  return k == GenKind::ParaEdge || k == GenKind::ParaFace;
}

void group_flux(const StabilizerCode& code, Species s, const std::vector<int>& faces,
                SyndromeReport& rep) {
  if (faces.empty()) return;
  // union components over shared cubes (dual-lattice adjacency)
  std::unordered_map<int, std::vector<int>> by_cube;
  for (int f : faces)
    for (int q : code.cx.face_cubes(f)) by_cube[q].push_back(f);
  std::unordered_map<int, int> comp;
  std::vector<int> stack;
  int next = 0;
  for (int f0 : faces) {
    if (comp.count(f0)) continue;
    int id = next++;
    rep.flux.push_back({s, {}});
    stack.push_back(f0);
    comp[f0] = id;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      rep.flux.back().faces.push_back(f);
      for (int q : code.cx.face_cubes(f))
        for (int g : by_cube[q])
          if (!comp.count(g)) { comp[g] = id; stack.push_back(g); }
    }
    std::sort(rep.flux.back().faces.begin(), rep.flux.back().faces.end());
  }
}

}  // namespace

SyndromeReport syndrome(const StabilizerCode& code, const PauliOperator& p) {
  if (p.num_qubits() != code.n_qubits)
    throw std::invalid_argument("operator qubit space does not match the code");
  SyndromeReport rep;
  std::vector<int> sigma_faces, tau_faces, single_faces;
  for (std::size_t i = 0; i < code.gens.size(); ++i) {
    const auto& g = code.gens[i];
    if (commutes(g.op, p)) continue;
    rep.violated.push_back(int(i));
    if (is_vertex_kind(g.kind)) rep.point_excitations.push_back(int(i));
    else if (is_para_kind(g.kind)) rep.para_excitations.push_back(int(i));
    else if (g.kind == GenKind::FaceSigma) sigma_faces.push_back(g.cell);
    else if (g.kind == GenKind::FaceTau) tau_faces.push_back(g.cell);
    else single_faces.push_back(g.cell);  // BoundaryToricB
  }
  rep.energy = rep.violated.size();
  if (code.doubled()) {
    group_flux(code, Species::Sigma, sigma_faces, rep);
    group_flux(code, Species::Tau, tau_faces, rep);
  } else {
    std::vector<int> all = sigma_faces;
    all.insert(all.end(), single_faces.begin(), single_faces.end());
    group_flux(code, Species::Single, all, rep);
  }
  return rep;
}

PauliOperator bare_string(const StabilizerCode& code, const Curve& c, StringSpecies s) {
  if (s == StringSpecies::Eps)
    return multiply(bare_string(code, c, StringSpecies::E),
                    bare_string(code, c, StringSpecies::M));
  PauliOperator op(code.n_qubits);
  if (code.doubled()) {
    Species sp = (s == StringSpecies::E) ? Species::Sigma : Species::Tau;
    for (int e : c.edges) op.z.flip(std::size_t(code.qubit_of_edge(e, sp)));
  } else {
    for (int e : c.edges) {
      int q = code.qubit_of_edge(e);
      if (s == StringSpecies::E) op.z.flip(std::size_t(q));
      else op.x.flip(std::size_t(q));
    }
  }
  return op;
}

PauliOperator decorated_string(const StabilizerCode& code, const Curve& c, StringSpecies s) {
  if (!code.doubled())
    throw std::invalid_argument("decorated strings are defined for the two-species codes");
  if (s == StringSpecies::Eps)
    return multiply(decorated_string(code, c, StringSpecies::E),
                    decorated_string(code, c, StringSpecies::M));
  PauliOperator op = bare_string(code, c, s);
  auto deco = code.cx.offset_decorations(c.edges);
  auto flip_x = [&op, &code](int e, Species sp) {
    int q = code.qubit_of_edge(e, sp);
    if (q >= 0) op.x.flip(std::size_t(q));
  };
  if (s == StringSpecies::E) {
    for (int e : deco.under) { flip_x(e, Species::Tau); flip_x(e, Species::Sigma); }
    for (int e : deco.over) flip_x(e, Species::Sigma);
  } else {
    for (int e : deco.under) flip_x(e, Species::Tau);
    for (int e : deco.over) { flip_x(e, Species::Tau); flip_x(e, Species::Sigma); }
  }
  return op;
}

PauliOperator boundary_string(const StabilizerCode& code, const Curve& c, StringSpecies s) {
  for (int e : c.edges)
    if (!code.cx.is_right_boundary_edge(e))
      throw std::invalid_argument("boundary string curve must lie in the y=0 boundary");
  // truncation of the bulk operator: the over legs end up below y=0 and drop out
  return decorated_string(code, c, s);
}

DualMembrane DualMembrane::sheet(const CellComplex& cx, int axis, int level) {
  DualMembrane m;
  int o1 = (axis + 1) % 3, o2 = (axis + 2) % 3;
  int n1 = cx.periodic(o1) ? cx.dims()[o1] : cx.dims()[o1] + 1;
  int n2 = cx.periodic(o2) ? cx.dims()[o2] : cx.dims()[o2] + 1;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      int c[3] = {0, 0, 0};
      c[axis] = level; c[o1] = i; c[o2] = j;
      int e = cx.edge_id(axis, c[0], c[1], c[2]);
      if (e >= 0) m.edges.push_back(e);
    }
  return m;
}

PauliOperator membrane(const StabilizerCode& code, const DualMembrane& m, Species s) {
  PauliOperator op(code.n_qubits);
  for (int e : m.edges) {
    int q = code.qubit_of_edge(e, s);
    if (q >= 0) op.x.flip(std::size_t(q));
  }
  return op;
}

DirectMembrane DirectMembrane::sheet(const CellComplex& cx, int plane, int level) {
  if (plane != CellComplex::YZ && plane != CellComplex::XY)
    throw std::invalid_argument("direct sheet spans the open y direction");
  DirectMembrane m;
  int ly = cx.dims()[1];
  if (plane == CellComplex::YZ) {
    for (int y = 0; y < ly; ++y)
      for (int z = 0; z < cx.dims()[2]; ++z)
        m.faces.push_back(cx.face_id(CellComplex::YZ, level, y, z));
    for (int z = 0; z < cx.dims()[2]; ++z) {
      m.rim_edges.push_back(cx.edge_id(2, level, 0, z));
      m.rim_edges.push_back(cx.edge_id(2, level, ly, z));
    }
  } else {
    for (int y = 0; y < ly; ++y)
      for (int x = 0; x < cx.dims()[0]; ++x)
        m.faces.push_back(cx.face_id(CellComplex::XY, x, y, level));
    for (int x = 0; x < cx.dims()[0]; ++x) {
      m.rim_edges.push_back(cx.edge_id(0, x, 0, level));
      m.rim_edges.push_back(cx.edge_id(0, x, ly, level));
    }
  }
  return m;
}

PauliOperator membrane(const StabilizerCode& code, const DirectMembrane& m) {
  if (code.model != ModelId::ParamagnetBulk)
    throw std::invalid_argument("direct membranes act on the paramagnet-bulk layout");
  PauliOperator op(code.n_qubits);
  for (int f : m.faces) {
    int q = code.qubit_of_face(f);
    if (q >= 0) op.x.flip(std::size_t(q));
  }
  for (int e : m.rim_edges) op.z.flip(std::size_t(code.qubit_of_edge(e)));
  return op;
}

}  // namespace wwlab
