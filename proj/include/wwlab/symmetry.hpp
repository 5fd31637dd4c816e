#pragma once

#include <cstdint>
#include <vector>

#include "wwlab/codes.hpp"

namespace wwlab {

/// Which 1-form generator family is enforced, and on what sub-volume.
/// Width semantics: a generator is enforced iff its entire qubit support lies
/// in cell layers [0, W) from the right (y = 0) boundary, so W = 0 enforces
/// nothing and widths are monotone. kFullWidth enforces everywhere.
class SymmetrySpec {
 public:
  enum class Family {
    VertexOneForm,   // 3d3f / toric: the group generated by the vertex terms
    ParamagnetAll,   // A_v, A_c, A_v', A_q'
    AllStabilizers,  // every Hamiltonian generator (2d toric oracle setting)
  };
  static constexpr int kFullWidth = -1;

  SymmetrySpec(const StabilizerCode& code, Family family, int width);

  const StabilizerCode& code() const { return *code_; }
  Family family() const { return family_; }
  int width() const { return width_; }
  bool full() const { return width_ == kFullWidth; }

  /// Enforced generators (owned by the code object).
  const std::vector<const PauliOperator*>& enforced() const { return enforced_; }

  bool respects(const PauliOperator& p) const;

 private:
  const StabilizerCode* code_;
  Family family_;
  int width_;
  std::vector<const PauliOperator*> enforced_;
};

/// GF(2) basis of the Pauli operators supported on qubits within Chebyshev
/// radius r of the center vertex that commute with every enforced generator.
/// With nothing enforced this is exactly the single-qubit X and Z flips of
/// the ball, in qubit order.
struct LocalMoves {
  int center;
  std::vector<int> ball;  // qubit ids, ascending
  std::vector<PauliOperator> basis;
};
LocalMoves allowed_local_moves(const SymmetrySpec& spec, int center_vertex, int radius);

std::vector<int> ball_qubits(const StabilizerCode& code, int center_vertex, int radius);

/// Flattened move set over all ball centers, with per-move lists of the
/// Hamiltonian generators each move anticommutes with (for incremental
/// energy updates during dynamics).
struct MoveSet {
  struct Move {
    std::vector<std::uint32_t> x_qubits, z_qubits;
    std::vector<std::uint32_t> touched;  // Hamiltonian generator indices
  };
  std::vector<Move> moves;

  static MoveSet build(const SymmetrySpec& spec, int radius);
};

}  // namespace wwlab
