#include "wwlab/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace wwlab {

void BitVec::xor_with(const BitVec& o) {
  if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch in xor");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool BitVec::parity_and(const BitVec& o) const {
  if (o.n_ != n_) throw std::invalid_argument("BitVec size mismatch in parity_and");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool BitVec::is_zero() const {
  for (auto w : w_) if (w) return false;
  return true;
}

std::ptrdiff_t BitVec::first_one() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return std::ptrdiff_t(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVec::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  std::size_t nbytes = (n_ + 7) / 8;
  out.reserve(nbytes * 2);
  for (std::size_t b = 0; b < nbytes; ++b) {
    std::uint8_t byte = std::uint8_t(w_[b >> 3] >> ((b & 7) * 8));
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 15]);
  }
  return out;
}

bool BitVec::operator<(const BitVec& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

Rref gf2_rref(std::vector<BitVec> rows) {
  Rref out;
  for (auto& r : rows) {
    for (std::size_t k = 0; k < out.rows.size(); ++k)
      if (r.get(out.pivots[k])) r.xor_with(out.rows[k]);
    auto p = r.first_one();
    if (p < 0) continue;
    // keep earlier rows reduced against the new pivot
    for (std::size_t k = 0; k < out.rows.size(); ++k)
      if (out.rows[k].get(std::size_t(p))) out.rows[k].xor_with(r);
    // insert keeping pivots sorted
    std::size_t pos = 0;
    while (pos < out.pivots.size() && out.pivots[pos] < std::size_t(p)) ++pos;
    out.rows.insert(out.rows.begin() + pos, std::move(r));
    out.pivots.insert(out.pivots.begin() + pos, std::size_t(p));
  }
  return out;
}

std::size_t gf2_rank(std::vector<BitVec> rows) {
  std::vector<BitVec> basis;
  std::vector<std::size_t> pivots;
  for (auto& r : rows) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (r.get(pivots[k])) r.xor_with(basis[k]);
    auto p = r.first_one();
    if (p < 0) continue;
    pivots.push_back(std::size_t(p));
    basis.push_back(std::move(r));
  }
  return basis.size();
}

bool gf2_reduce(const Rref& basis, BitVec& v) {
  for (std::size_t k = 0; k < basis.rows.size(); ++k)
    if (v.get(basis.pivots[k])) v.xor_with(basis.rows[k]);
  return v.is_zero();
}

std::vector<BitVec> gf2_nullspace(const std::vector<BitVec>& rows, std::size_t cols) {
  Rref r = gf2_rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<BitVec> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(cols);
    v.set(c);
    for (std::size_t k = 0; k < r.rows.size(); ++k)
      if (r.rows[k].get(c)) v.set(r.pivots[k]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace wwlab
