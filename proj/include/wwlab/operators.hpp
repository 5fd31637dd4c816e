#pragma once

#include <vector>

#include "wwlab/codes.hpp"
#include "wwlab/lattice.hpp"
#include "wwlab/pauli.hpp"

namespace wwlab {

enum class StringSpecies { E, M, Eps };

/// Violated generators of an applied Pauli, with the physical grouping:
/// vertex-type violations are point excitations, face-type violations group
/// into flux lines (connected components in dual-lattice adjacency, faces
/// sharing a cube), paramagnet single-X violations are listed separately.
struct SyndromeReport {
  std::vector<int> violated;  // generator indices
  std::size_t energy = 0;

  std::vector<int> point_excitations;  // generator indices, vertex kinds

  struct FluxLine {
    Species species;
    std::vector<int> faces;  // face cell ids, one dual-connected component
  };
  std::vector<FluxLine> flux;

  std::vector<int> para_excitations;  // generator indices, ParaEdge/ParaFace

  std::size_t flux_components(Species s) const;
  std::size_t flux_faces(Species s) const;
};

SyndromeReport syndrome(const StabilizerCode& code, const PauliOperator& p);

/// Plain sigma^z (E) or tau^z (M) along the curve; on single-species codes,
/// Z-string for E and X-string for M.
PauliOperator bare_string(const StabilizerCode& code, const Curve& c, StringSpecies s);

/// Bulk string with the over/under decorations that cancel the removable
/// flux lines. Eps is the composite product of the E and M versions.
PauliOperator decorated_string(const StabilizerCode& code, const Curve& c, StringSpecies s);

/// Deconfined string truncated to the right boundary; throws unless every
/// curve edge lies in the y = 0 boundary plane.
PauliOperator boundary_string(const StabilizerCode& code, const Curve& c, StringSpecies s);

/// sigma^x or tau^x on a set of edges forming a dual membrane.
struct DualMembrane {
  std::vector<int> edges;
  /// Full sheet of `axis`-direction edges at the given coordinate along axis.
  static DualMembrane sheet(const CellComplex& cx, int axis, int level);
};
PauliOperator membrane(const StabilizerCode& code, const DualMembrane& m, Species s);

/// Paramagnet-model direct membrane: X on face qubits, Z on the rim edges
/// where the membrane terminates on the lattice boundary.
struct DirectMembrane {
  std::vector<int> faces;
  std::vector<int> rim_edges;
  /// Sheet spanning the open y direction and one periodic direction,
  /// terminating on both lattice boundaries with Z rims. plane YZ: faces at
  /// fixed x (rims wrap z); plane XY: faces at fixed z (rims wrap x).
  static DirectMembrane sheet(const CellComplex& cx, int plane, int level);
};
PauliOperator membrane(const StabilizerCode& code, const DirectMembrane& m);

}  // namespace wwlab
