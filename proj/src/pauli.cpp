#include "wwlab/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace wwlab {

std::size_t PauliOperator::weight() const {
  std::size_t c = 0;
  const auto& xw = x.words();
  const auto& zw = z.words();
  for (std::size_t i = 0; i < xw.size(); ++i) c += std::popcount(xw[i] | zw[i]);
  return c;
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> out;
  const auto& xw = x.words();
  const auto& zw = z.words();
  for (std::size_t i = 0; i < xw.size(); ++i) {
    std::uint64_t w = xw[i] | zw[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

void PauliOperator::mul_inplace(const PauliOperator& o) {
  if (o.num_qubits() != num_qubits())
    throw std::invalid_argument("Pauli qubit-space size mismatch");
  x.xor_with(o.x);
  z.xor_with(o.z);
}

std::string PauliOperator::serialize() const {
  return std::to_string(num_qubits()) + ":" + x.hex() + ":" + z.hex();
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  PauliOperator r = a;
  r.mul_inplace(b);
  return r;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("Pauli qubit-space size mismatch");
  return !(a.x.parity_and(b.z) ^ a.z.parity_and(b.x));
}

}  // namespace wwlab
