#include "dynmwm/omv/matrix.hpp"

#include <bit>
#include <istream>
#include <ostream>

#include "dynmwm/graph/types.hpp"
#include "dynmwm/kernels/bitops.hpp"

namespace dynmwm {

BitVector BitVector::parse(std::string_view bits) {
  BitVector v(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(static_cast<int>(i));
    } else if (bits[i] != '0') {
      throw ContractViolation("bit vector must consist of 0 and 1");
    }
  }
  return v;
}

void BitVector::set(int i, bool b) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (b) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::string BitVector::str() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t hamming(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw ContractViolation("hamming distance of vectors of different length");
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.words().size(); ++k) c += std::popcount(a.words()[k] ^ b.words()[k]);
  return c;
}

void BooleanMatrix::set(int i, int j, bool b) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ContractViolation("matrix index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (j & 63);
  if (b) {
    row_mut(i)[j >> 6] |= bit;
  } else {
    row_mut(i)[j >> 6] &= ~bit;
  }
}

std::size_t BooleanMatrix::nnz() const {
  std::size_t c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

BitVector BooleanMatrix::multiply(const BitVector& v) const {
  if (v.size() != n_) throw ContractViolation("vector length does not match the matrix");
  BitVector out(n_);
  kernels::bool_matvec(bits_.data(), n_, words_, v.words().data(), out.words().data());
  return out;
}

std::size_t BooleanMatrix::row_degree(int i, const BitVector& mask) const {
  return kernels::masked_popcount(row(i), mask.words().data(), words_);
}

std::size_t BooleanMatrix::column_degree(int j, const BitVector& rows) const {
  std::size_t c = 0;
  for (int i = 0; i < n_; ++i) c += rows.get(i) && get(i, j);
  return c;
}

BooleanMatrix read_matrix(std::istream& is) {
  int n = 0;
  if (!(is >> n) || n < 0) throw ContractViolation("matrix file must start with n");
  BooleanMatrix m(n);
  for (int i = 0; i < n; ++i) {
    std::string row;
    if (!(is >> row) || static_cast<int>(row.size()) != n) throw ContractViolation("matrix row has wrong length");
    for (int j = 0; j < n; ++j) {
      if (row[j] != '0' && row[j] != '1') throw ContractViolation("matrix entries must be 0 or 1");
      m.set(i, j, row[j] == '1');
    }
  }
  return m;
}

void write_matrix(std::ostream& os, const BooleanMatrix& m) {
  os << m.size() << '\n';
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) os << (m.get(i, j) ? '1' : '0');
    os << '\n';
  }
}

}  // namespace dynmwm
