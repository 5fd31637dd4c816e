#include "wwlab/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wwlab {

namespace {

// y-layer span of a qubit's carrying cell
void qubit_layer_span(const StabilizerCode& code, int q, int& lo, int& hi) {
  auto info = code.qubit_info(q);
  if (info.on_face) {
    lo = code.cx.face_min_layer(info.cell);
    hi = code.cx.face_max_layer(info.cell);
  } else {
    lo = code.cx.edge_min_layer(info.cell);
    hi = code.cx.edge_max_layer(info.cell);
  }
}

// Support lies in the width-W slab iff every carrying cell sits inside the
// closed region between vertex layers 0 and W. With W = 0 every vertex-term
// generator falls outside (each owns a y-edge reaching layer 1).
bool support_within_width(const StabilizerCode& code, const PauliOperator& op, int width) {
  for (auto q : op.support()) {
    int lo, hi;
    qubit_layer_span(code, int(q), lo, hi);
    if (hi > width) return false;
  }
  return true;
}

}  // namespace

SymmetrySpec::SymmetrySpec(const StabilizerCode& code, Family family, int width)
    : code_(&code), family_(family), width_(width) {
  if (width < 0 && width != kFullWidth)
    throw std::invalid_argument("negative enforcement width");
  if (!full() && width > 0 && !code.cx.open_y())
    throw std::invalid_argument("finite enforcement width needs an open y boundary");
  auto consider = [&](const PauliOperator& op) {
    if (full() || (width_ > 0 && support_within_width(code, op, width_)))
      enforced_.push_back(&op);
  };
  switch (family) {
    case Family::VertexOneForm:
      if (code.vertex_gen_index.empty())
        throw std::invalid_argument("code has no vertex-term 1-form family");
      for (auto i : code.vertex_gen_index) consider(code.gens[i].op);
      break;
    case Family::ParamagnetAll:
      if (code.sym_gens.empty())
        throw std::invalid_argument("code has no separate symmetry generators");
      for (const auto& g : code.sym_gens) consider(g.op);
      break;
    case Family::AllStabilizers:
      for (const auto& g : code.gens) consider(g.op);
      break;
  }
}

bool SymmetrySpec::respects(const PauliOperator& p) const {
  for (const auto* g : enforced_)
    if (!commutes(*g, p)) return false;
  return true;
}

std::vector<int> ball_qubits(const StabilizerCode& code, int center_vertex, int radius) {
  const CellComplex& cx = code.cx;
  std::vector<int> out;
  auto vertex_ok = [&](int v) { return cx.vertex_distance(v, center_vertex) <= radius; };
  auto edge_ok = [&](int e) {
    auto vv = cx.edge_vertices(e);
    return vertex_ok(vv[0]) && vertex_ok(vv[1]);
  };
  for (int e = 0; e < cx.n_edges(); ++e) {
    if (!edge_ok(e)) continue;
    if (code.doubled()) {
      out.push_back(code.qubit_of_edge(e, Species::Sigma));
      out.push_back(code.qubit_of_edge(e, Species::Tau));
    } else {
      int q = code.qubit_of_edge(e);
      if (q >= 0) out.push_back(q);
    }
  }
  if (!code.face_qubit.empty()) {
    for (int f = 0; f < cx.n_faces(); ++f) {
      if (code.face_qubit[f] < 0) continue;
      bool ok = true;
      for (int e : cx.face_edges(f))
        if (!edge_ok(e)) { ok = false; break; }
      if (ok) out.push_back(code.face_qubit[f]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LocalMoves allowed_local_moves(const SymmetrySpec& spec, int center_vertex, int radius) {
  if (radius < 1) throw std::invalid_argument("move radius must be >= 1");
  const StabilizerCode& code = spec.code();
  LocalMoves lm;
  lm.center = center_vertex;
  lm.ball = ball_qubits(code, center_vertex, radius);
  std::size_t m = lm.ball.size();

  std::unordered_map<int, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[lm.ball[i]] = i;

  // variables: x components of ball qubits, then z components.
  // constraint per enforced generator overlapping the ball:
  //   sum_q ( move.x[q] g.z[q] + move.z[q] g.x[q] ) = 0
  std::vector<BitVec> rows;
  for (const auto* g : spec.enforced()) {
    BitVec row(2 * m);
    bool touches = false;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t q = std::size_t(lm.ball[i]);
      if (g->z.get(q)) { row.set(i); touches = true; }
      if (g->x.get(q)) { row.set(m + i); touches = true; }
    }
    if (touches) rows.push_back(std::move(row));
  }

  for (const auto& v : gf2_nullspace(rows, 2 * m)) {
    PauliOperator op(code.n_qubits);
    for (auto b : v.ones()) {
      if (b < m) op.x.set(std::size_t(lm.ball[b]));
      else op.z.set(std::size_t(lm.ball[b - m]));
    }
    lm.basis.push_back(std::move(op));
  }
  return lm;
}

MoveSet MoveSet::build(const SymmetrySpec& spec, int radius) {
  const StabilizerCode& code = spec.code();
  const CellComplex& cx = code.cx;

  // generators touching each qubit, for fast touched-list assembly
  std::vector<std::vector<std::uint32_t>> gens_at(code.n_qubits);
  for (std::uint32_t gi = 0; gi < code.gens.size(); ++gi)
    for (auto q : code.gens[gi].op.support()) gens_at[q].push_back(gi);

  MoveSet ms;
  for (int v = 0; v < cx.n_vertices(); ++v) {
    LocalMoves lm = allowed_local_moves(spec, v, radius);
    for (const auto& op : lm.basis) {
      Move mv;
      for (auto q : op.x.ones()) mv.x_qubits.push_back(std::uint32_t(q));
      for (auto q : op.z.ones()) mv.z_qubits.push_back(std::uint32_t(q));
      std::vector<std::uint32_t> cand;
      for (auto q : op.support()) {
        cand.insert(cand.end(), gens_at[q].begin(), gens_at[q].end());
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (auto gi : cand)
        if (!commutes(code.gens[gi].op, op)) mv.touched.push_back(gi);
      ms.moves.push_back(std::move(mv));
    }
  }
  if (ms.moves.empty()) throw std::invalid_argument("empty symmetric move set");
  return ms;
}

}  // namespace wwlab
