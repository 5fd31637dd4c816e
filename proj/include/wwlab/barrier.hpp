#pragma once

#include <cstdint>
#include <vector>

#include "wwlab/operators.hpp"
#include "wwlab/symmetry.hpp"

namespace wwlab {

/// A local decomposition: a sequence of Pauli operators from the identity to
/// a logical representative, consecutive operators differing by a Pauli
/// supported in a radius-r ball.
struct DecompositionPath {
  std::vector<PauliOperator> steps;
  std::vector<std::size_t> energies;
  std::vector<bool> symmetric;
  int radius = 2;

  bool all_symmetric() const;
  std::size_t peak_energy() const;
};

/// Validates the path (identity start, per-step locality, stored energies
/// match recomputed syndromes) and returns the peak energy. Throws
/// std::invalid_argument on a malformed path.
std::size_t path_energy(const StabilizerCode& code, const DecompositionPath& path);

bool support_fits_ball(const StabilizerCode& code, const PauliOperator& op, int radius);

enum class BoundaryLogical { SeVert, SeHoriz, SmVert, SmHoriz };
enum class PathVariant { OpenInBulk, GrowVertical };

/// The staged decomposition of a right-boundary string logical under a
/// width-W spec: grow a closed loop from the boundary, open it in the first
/// unenforced layer, sweep the confined legs around the periodic direction,
/// and annihilate them. The GrowVertical variant instead wraps the loop at
/// depth one, carries the bulk loop to the unenforced layer, and unzips it.
/// Throws when the spec is full-bulk or the width leaves no unenforced layer.
DecompositionPath canonical_decomposition(const StabilizerCode& code, const SymmetrySpec& spec,
                                          BoundaryLogical which, PathVariant variant,
                                          int radius = 2);

enum class PairedLogical { X1X3, Z1Z3, X2X4, Z2Z4 };

/// Full-bulk mode: sweep the dual-membrane logical one edge at a time. Every
/// step commutes with the whole vertex 1-form group.
DecompositionPath paired_decomposition(const StabilizerCode& code, const SymmetrySpec& spec,
                                       PairedLogical which);

struct OracleResult {
  enum class Status { Found, NoRepresentative, CapHit };
  Status status;
  std::size_t barrier = 0;  // minimax energy when status == Found
  std::size_t states_explored = 0;
  bool cap_was_hit = false;
};

/// Exact minimax (shortest-bottleneck) search over Pauli frames modulo the
/// stabilizer group, moves drawn from the symmetric local move basis.
/// energy_cap < 0 means unbounded. NoRepresentative is definitive only when
/// no cap pruned the frontier; otherwise CapHit is reported.
OracleResult minimal_barrier_oracle(const StabilizerCode& code, const SymmetrySpec& spec,
                                    const PauliOperator& logical, int energy_cap,
                                    std::size_t state_cap, int radius = 1);

/// Pure reachability: is some representative of the logical class inside the
/// group generated by the symmetric local moves? GF(2) span membership.
bool symmetric_reachable(const StabilizerCode& code, const SymmetrySpec& spec,
                         const PauliOperator& logical, int radius);

struct ScalingRow {
  int width;
  std::size_t open_in_bulk;
  std::size_t grow_vertical;
  std::size_t best;
};

std::vector<ScalingRow> verify_scaling(const StabilizerCode& code, const std::vector<int>& widths,
                                       BoundaryLogical which, int radius = 2);

struct AffineFit {
  bool exact = false;
  long intercept = 0;
  long slope = 0;
};

/// Exact integer affine fit y = intercept + slope * x; exact only if every
/// residual vanishes and the spacing admits an integer slope.
AffineFit fit_affine(const std::vector<int>& xs, const std::vector<std::size_t>& ys);

}  // namespace wwlab
