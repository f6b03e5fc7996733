#ifndef QWALK_MATRIX_H_
#define QWALK_MATRIX_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace qwalk {

// Dense square matrix, row-major. The storage type is the only thing the
// concrete matrix kinds below vary.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(size_t dim) : dim_(dim), data_(dim * dim) {}
  SquareMatrix(size_t dim, std::vector<T> data) : dim_(dim), data_(std::move(data)) {}

  size_t dim() const { return dim_; }
  const T& operator()(size_t r, size_t c) const { return data_[r * dim_ + c]; }
  T& operator()(size_t r, size_t c) { return data_[r * dim_ + c]; }
  std::span<const T> row(size_t r) const { return {data_.data() + r * dim_, dim_}; }
  std::span<const T> data() const { return data_; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 protected:
  size_t dim_ = 0;
  std::vector<T> data_;
};

// Exact rational matrix; entries are canonicalised GMP rationals.
class RationalMatrix : public SquareMatrix<mpq_class> {
 public:
  using SquareMatrix::SquareMatrix;

  static RationalMatrix Identity(size_t dim);
  RationalMatrix Transposed() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
};

// Matrix with entries in {0, 1}.
class BinaryMatrix : public SquareMatrix<uint8_t> {
 public:
  using SquareMatrix::SquareMatrix;

  size_t count_ones() const;
  // Row-major dense 0/1 rows, one line per row, no separators.
  void WriteDense(std::ostream& os) const;
};

// Integer matrix input for characteristic polynomials.
class IntegerMatrix : public SquareMatrix<int64_t> {
 public:
  using SquareMatrix::SquareMatrix;

  static IntegerMatrix FromBinary(const BinaryMatrix& b);
  int64_t trace() const;
  // Q M Q^T for the permutation matrix Q sending basis vector i to perm[i].
  IntegerMatrix PermutedBy(std::span<const size_t> perm) const;
};

class RealMatrix : public SquareMatrix<double> {
 public:
  using SquareMatrix::SquareMatrix;

  static RealMatrix FromRational(const RationalMatrix& m);
  static RealMatrix FromBinary(const BinaryMatrix& b);
  static RealMatrix FromInteger(const IntegerMatrix& m);
};

// Plain-text dump: one "row col num/den" triplet per non-zero entry.
void WriteTriplets(std::ostream& os, const RationalMatrix& m);

}  // namespace qwalk

#endif  // QWALK_MATRIX_H_
