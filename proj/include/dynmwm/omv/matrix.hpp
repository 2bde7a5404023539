#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dynmwm {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int n) : n_(n), words_((n + 63) / 64, 0) {}
  static BitVector parse(std::string_view bits);  // '0'/'1' characters

  int size() const { return n_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool b = true);
  std::size_t count() const;
  std::string str() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t hamming(const BitVector& a, const BitVector& b);

// Square bit matrix, rows packed into 64-bit words.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  explicit BooleanMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  std::size_t words_per_row() const { return words_; }
  bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
  void set(int i, int j, bool b);
  std::size_t nnz() const;

  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }

  // Boolean product through the dispatched kernel.
  BitVector multiply(const BitVector& v) const;
  // popcount(row i AND mask)
  std::size_t row_degree(int i, const BitVector& mask) const;
  std::size_t column_degree(int j, const BitVector& rows) const;

  friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

 private:
  std::uint64_t* row_mut(int i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// "n" then n rows of n characters in {0,1}.
BooleanMatrix read_matrix(std::istream& is);
void write_matrix(std::ostream& os, const BooleanMatrix& m);

}  // namespace dynmwm
