#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wwlab/gf2.hpp"

namespace wwlab {

/// Phase-free multi-qubit Pauli operator: a pair of bit masks over a fixed
/// qubit space. Mask bit i set in x means an X component on qubit i, in z a
/// Z component; both set is a Y-type component. Phases are discarded, so the
/// group product is componentwise XOR and every element is its own inverse.
struct PauliOperator {
  BitVec x, z;

  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x(n), z(n) {}

  std::size_t num_qubits() const { return x.size(); }
  bool is_identity() const { return x.is_zero() && z.is_zero(); }

  std::size_t weight() const;
  std::vector<std::size_t> support() const;

  void mul_inplace(const PauliOperator& o);

  /// "<n>:<x hex>:<z hex>" with the owning lattice's canonical qubit order.
  std::string serialize() const;

  bool operator==(const PauliOperator& o) const { return x == o.x && z == o.z; }
  bool operator!=(const PauliOperator& o) const { return !(*this == o); }
  bool operator<(const PauliOperator& o) const { return x < o.x || (x == o.x && z < o.z); }
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

/// Symplectic form: true iff (a.x . b.z + a.z . b.x) mod 2 == 0.
bool commutes(const PauliOperator& a, const PauliOperator& b);

}  // namespace wwlab
