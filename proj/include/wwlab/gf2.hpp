#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wwlab {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void xor_with(const BitVec& o);
  /// Parity of popcount(a & b).
  bool parity_and(const BitVec& o) const;
  std::size_t count() const;
  bool is_zero() const;
  std::ptrdiff_t first_one() const;
  std::vector<std::size_t> ones() const;

  /// Lowercase hex, two digits per byte, byte 0 (qubits 0..7) first.
  std::string hex() const;

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  bool operator<(const BitVec& o) const;  // lexicographic on words, for canonical tie-breaks

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Row-reduced echelon form with recorded pivot columns.
struct Rref {
  std::vector<BitVec> rows;       // nonzero rows, in pivot order
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return rows.size(); }
};

Rref gf2_rref(std::vector<BitVec> rows);
std::size_t gf2_rank(std::vector<BitVec> rows);

/// Reduce v against an RREF basis in place; returns true if v reduced to zero
/// (i.e. v was in the row span).
bool gf2_reduce(const Rref& basis, BitVec& v);

/// Basis of { x : for every row r, parity(r & x) = 0 }, with deterministic
/// free-variable ordering (lowest column index first). `cols` is the variable
/// count; rows may be empty, in which case the unit vectors come back.
std::vector<BitVec> gf2_nullspace(const std::vector<BitVec>& rows, std::size_t cols);

}  // namespace wwlab
