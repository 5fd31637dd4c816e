#include "wwlab/barrier.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace wwlab {

bool DecompositionPath::all_symmetric() const {
  for (bool s : symmetric)
    if (!s) return false;
  return true;
}

std::size_t DecompositionPath::peak_energy() const {
  std::size_t peak = 0;
  for (auto e : energies) peak = std::max(peak, e);
  return peak;
}

namespace {

std::vector<int> support_vertices(const StabilizerCode& code, const PauliOperator& op) {
  std::vector<int> verts;
  for (auto q : op.support()) {
    auto info = code.qubit_info(int(q));
    if (info.on_face) {
      for (int e : code.cx.face_edges(info.cell))
        for (int v : code.cx.edge_vertices(e)) verts.push_back(v);
    } else {
      for (int v : code.cx.edge_vertices(info.cell)) verts.push_back(v);
    }
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

}  // namespace

bool support_fits_ball(const StabilizerCode& code, const PauliOperator& op, int radius) {
  auto verts = support_vertices(code, op);
  if (verts.empty()) return true;
  // try every vertex near the first support vertex as a candidate center
  for (int c = 0; c < code.cx.n_vertices(); ++c) {
    if (code.cx.vertex_distance(c, verts[0]) > radius) continue;
    bool ok = true;
    for (int v : verts)
      if (code.cx.vertex_distance(c, v) > radius) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

std::size_t path_energy(const StabilizerCode& code, const DecompositionPath& path) {
  if (path.steps.empty() || !path.steps.front().is_identity())
    throw std::invalid_argument("decomposition must start at the identity");
  if (path.energies.size() != path.steps.size())
    throw std::invalid_argument("path energies out of sync with steps");
  std::size_t peak = 0;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    if (k) {
      PauliOperator delta = multiply(path.steps[k], path.steps[k - 1]);
      if (!support_fits_ball(code, delta, path.radius))
        throw std::invalid_argument("consecutive steps differ by a non-local operator (step " +
                                    std::to_string(k) + ")");
    }
    std::size_t e = syndrome(code, path.steps[k]).energy;
    if (e != path.energies[k])
      throw std::invalid_argument("stored step energy disagrees with the syndrome");
    peak = std::max(peak, e);
  }
  return peak;
}

namespace {

struct CurveGeometry {
  // run axis 2 (vert): curve wraps z at fixed x = t0, plaquettes YZ(t0, y, k)
  // run axis 0 (horiz): curve wraps x at fixed z = t0, plaquettes XY(k, y, t0)
  const CellComplex* cx;
  int run_axis;
  int t0;

  int length() const { return cx->dims()[run_axis]; }
  int plaq(int y, int k) const {
    return run_axis == 2 ? cx->face_id(CellComplex::YZ, t0, y, k)
                         : cx->face_id(CellComplex::XY, k, y, t0);
  }
  int run_edge(int y, int k) const {
    return run_axis == 2 ? cx->edge_id(2, t0, y, k) : cx->edge_id(0, k, y, t0);
  }
};

class PathRecorder {
 public:
  PathRecorder(const StabilizerCode& code, const SymmetrySpec& spec, int radius)
      : code_(code), spec_(spec) {
    path_.radius = radius;
  }

  void record(const PauliOperator& op) {
    path_.steps.push_back(op);
    path_.energies.push_back(syndrome(code_, op).energy);
    path_.symmetric.push_back(spec_.respects(op));
  }

  DecompositionPath take() { return std::move(path_); }

 private:
  const StabilizerCode& code_;
  const SymmetrySpec& spec_;
  DecompositionPath path_;
};

StringSpecies species_of(BoundaryLogical which) {
  return (which == BoundaryLogical::SeVert || which == BoundaryLogical::SeHoriz)
             ? StringSpecies::E
             : StringSpecies::M;
}

int run_axis_of(BoundaryLogical which) {
  return (which == BoundaryLogical::SeVert || which == BoundaryLogical::SmVert) ? 2 : 0;
}

}  // namespace

DecompositionPath canonical_decomposition(const StabilizerCode& code, const SymmetrySpec& spec,
                                          BoundaryLogical which, PathVariant variant,
                                          int radius) {
  bool para = code.model == ModelId::ParamagnetBulk;
  if (!para && code.model != ModelId::ThreeFermion)
    throw std::invalid_argument("canonical decompositions cover the T2 x I models");
  if (para && species_of(which) == StringSpecies::M)
    throw std::invalid_argument("paramagnet canonical paths cover the Z-type boundary logicals");
  int ly = code.cx.dims()[1];
  if (spec.full() || spec.width() >= ly)
    throw std::invalid_argument(
        "cannot open a loop: no unenforced layer inside the lattice; use a paired logical");

  CurveGeometry geo{&code.cx, run_axis_of(which), 0};
  int w = spec.width();
  int len = geo.length();
  StringSpecies sp = species_of(which);

  auto op_of = [&](const Curve& c) {
    if (para) return bare_string(code, c, StringSpecies::E);
    return decorated_string(code, c, sp);
  };

  PathRecorder rec(code, spec, radius);
  Curve cur;
  rec.record(code.identity());

  // endpoints live one layer past the enforced slab (y = W + 1); the margin
  // keeps the sweep transient identical for every width, so the peak stays
  // exactly affine in W. Width zero opens on the boundary itself.
  int open_layer = (w == 0) ? 0 : w + 1;

  if (variant == PathVariant::OpenInBulk) {
    // (i) grow a narrow loop away from the boundary
    for (int y = 0; y < open_layer; ++y) {
      cur.toggle_face(code.cx, geo.plaq(y, 0));
      rec.record(op_of(cur));
    }
    // (ii) open it outside the protected region; at W = 0 this creates the
    // boundary anyon pair directly
    cur.toggle(geo.run_edge(open_layer, 0));
    rec.record(op_of(cur));
    // (iii) sweep one leg around the periodic direction
    for (int t = 1; t <= len - 2; ++t) {
      cur.toggle(geo.run_edge(open_layer, t));
      rec.record(op_of(cur));
      for (int y = open_layer - 1; y >= 0; --y) {
        cur.toggle_face(code.cx, geo.plaq(y, t));
        rec.record(op_of(cur));
      }
    }
    // (iv) close the loop and unzip the meeting legs
    cur.toggle(geo.run_edge(open_layer, len - 1));
    rec.record(op_of(cur));
    for (int y = open_layer - 1; y >= 0; --y) {
      cur.toggle_face(code.cx, geo.plaq(y, len - 1));
      rec.record(op_of(cur));
    }
  } else {
    // stretch the loop across the whole periodic direction at depth one,
    // splitting it into a boundary loop plus a bulk loop
    for (int t = 0; t < len; ++t) {
      cur.toggle_face(code.cx, geo.plaq(0, t));
      rec.record(op_of(cur));
    }
    // carry the bulk loop past the enforced slab
    int yb = std::max(open_layer, 1);
    for (int d = 1; d < yb; ++d)
      for (int t = 0; t < len; ++t) {
        cur.toggle_face(code.cx, geo.plaq(d, t));
        rec.record(op_of(cur));
      }
    // break it there and remove it edge by edge
    for (int t = 0; t < len; ++t) {
      cur.toggle(geo.run_edge(yb, t));
      rec.record(op_of(cur));
    }
  }

  DecompositionPath path = rec.take();
  if (!path.steps.back().is_identity() && syndrome(code, path.steps.back()).energy != 0)
    throw std::runtime_error("canonical path did not terminate on a logical");
  return path;
}

DecompositionPath paired_decomposition(const StabilizerCode& code, const SymmetrySpec& spec,
                                       PairedLogical which) {
  if (code.model != ModelId::ThreeFermion)
    throw std::invalid_argument("paired membrane decompositions cover the 3d3f model");
  int sheet_axis;   // direction of the membrane's edges
  Species species;
  switch (which) {
    case PairedLogical::X1X3: sheet_axis = 2; species = Species::Sigma; break;  // R^sigma_horiz
    case PairedLogical::Z1Z3: sheet_axis = 0; species = Species::Tau; break;    // R^tau_vert
    case PairedLogical::X2X4: sheet_axis = 2; species = Species::Tau; break;    // R^tau_horiz
    case PairedLogical::Z2Z4: sheet_axis = 0; species = Species::Sigma; break;  // R^sigma_vert
    default: throw std::invalid_argument("operator admits no symmetric decomposition");
  }
  const CellComplex& cx = code.cx;
  int periodic_axis = (sheet_axis == 2) ? 0 : 2;

  PathRecorder rec(code, spec, 1);
  PauliOperator op = code.identity();
  rec.record(op);
  // row-by-row along the periodic direction so the live frontier stays one row
  for (int y = 0; y <= cx.dims()[1]; ++y) {
    for (int k = 0; k < cx.dims()[periodic_axis]; ++k) {
      int c[3] = {0, 0, 0};
      c[1] = y;
      c[periodic_axis] = k;
      int e = cx.edge_id(sheet_axis, c[0], c[1], c[2]);
      op.x.flip(std::size_t(code.qubit_of_edge(e, species)));
      rec.record(op);
    }
  }
  DecompositionPath path = rec.take();
  if (path.energies.back() != 0)
    throw std::runtime_error("membrane sweep did not terminate on a logical");
  return path;
}

namespace {

struct FrameKey {
  std::vector<std::uint64_t> w;
  bool operator==(const FrameKey& o) const { return w == o.w; }
};

struct FrameKeyHash {
  std::size_t operator()(const FrameKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : k.w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

FrameKey key_of(const PauliOperator& p) {
  FrameKey k;
  k.w = p.x.words();
  k.w.insert(k.w.end(), p.z.words().begin(), p.z.words().end());
  return k;
}

}  // namespace

OracleResult minimal_barrier_oracle(const StabilizerCode& code, const SymmetrySpec& spec,
                                    const PauliOperator& logical, int energy_cap,
                                    std::size_t state_cap, int radius) {
  StabilizerBasis basis(code);
  MoveSet ms = MoveSet::build(spec, radius);

  PauliOperator target = basis.reduce(logical);
  FrameKey goal = key_of(target);

  auto energy_of = [&code](const PauliOperator& p) { return syndrome(code, p).energy; };

  std::unordered_map<FrameKey, std::size_t, FrameKeyHash> best;  // minimax cost so far
  // bucket queue over bottleneck values
  std::vector<std::vector<PauliOperator>> buckets(2);
  PauliOperator start = code.identity();
  best[key_of(start)] = 0;
  buckets[0].push_back(start);

  OracleResult res;
  res.status = OracleResult::Status::NoRepresentative;

  for (std::size_t level = 0; level < buckets.size(); ++level) {
    while (!buckets[level].empty()) {
      PauliOperator cur = std::move(buckets[level].back());
      buckets[level].pop_back();
      FrameKey ck = key_of(cur);
      auto it = best.find(ck);
      if (it == best.end() || it->second != level) continue;  // stale entry
      if (ck == goal) {
        res.status = OracleResult::Status::Found;
        res.barrier = level;
        res.states_explored = best.size();
        return res;
      }
      if (state_cap && best.size() > state_cap) {
        res.cap_was_hit = true;
        res.status = OracleResult::Status::CapHit;
        res.states_explored = best.size();
        return res;
      }
      for (const auto& mv : ms.moves) {
        PauliOperator next = cur;
        for (auto q : mv.x_qubits) next.x.flip(q);
        for (auto q : mv.z_qubits) next.z.flip(q);
        next = basis.reduce(next);
        std::size_t e = energy_of(next);
        if (energy_cap >= 0 && e > std::size_t(energy_cap)) {
          res.cap_was_hit = true;
          continue;
        }
        std::size_t cost = std::max(level, e);
        FrameKey nk = key_of(next);
        auto bit = best.find(nk);
        if (bit != best.end() && bit->second <= cost) continue;
        best[nk] = cost;
        if (buckets.size() <= cost) buckets.resize(cost + 1);
        buckets[cost].push_back(std::move(next));
      }
    }
  }
  res.states_explored = best.size();
  if (res.cap_was_hit) res.status = OracleResult::Status::CapHit;
  return res;
}

bool symmetric_reachable(const StabilizerCode& code, const SymmetrySpec& spec,
                         const PauliOperator& logical, int radius) {
  MoveSet ms = MoveSet::build(spec, radius);
  std::vector<BitVec> rows;
  for (const auto& mv : ms.moves) {
    PauliOperator op(code.n_qubits);
    for (auto q : mv.x_qubits) op.x.set(q);
    for (auto q : mv.z_qubits) op.z.set(q);
    rows.push_back(symplectic_row(op));
  }
  for (const auto& g : code.gens) rows.push_back(symplectic_row(g.op));
  auto r = gf2_rank(rows);
  rows.push_back(symplectic_row(logical));
  return gf2_rank(rows) == r;
}

std::vector<ScalingRow> verify_scaling(const StabilizerCode& code, const std::vector<int>& widths,
                                       BoundaryLogical which, int radius) {
  std::vector<ScalingRow> out;
  for (int w : widths) {
    SymmetrySpec spec(code, SymmetrySpec::Family::VertexOneForm, w);
    auto open = canonical_decomposition(code, spec, which, PathVariant::OpenInBulk, radius);
    auto vert = canonical_decomposition(code, spec, which, PathVariant::GrowVertical, radius);
    ScalingRow row;
    row.width = w;
    row.open_in_bulk = open.peak_energy();
    row.grow_vertical = vert.peak_energy();
    row.best = std::min(row.open_in_bulk, row.grow_vertical);
    out.push_back(row);
  }
  return out;
}

AffineFit fit_affine(const std::vector<int>& xs, const std::vector<std::size_t>& ys) {
  AffineFit fit;
  if (xs.size() != ys.size() || xs.size() < 2) return fit;
  long dx = xs[1] - xs[0];
  long dy = long(ys[1]) - long(ys[0]);
  if (dx == 0 || dy % dx != 0) return fit;
  fit.slope = dy / dx;
  fit.intercept = long(ys[0]) - fit.slope * xs[0];
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (long(ys[i]) != fit.intercept + fit.slope * xs[i]) return fit;
  fit.exact = true;
  return fit;
}

}  // namespace wwlab
