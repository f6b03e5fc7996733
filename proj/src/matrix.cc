#include "qwalk/matrix.h"

#include <stdexcept>

namespace qwalk {

RationalMatrix RationalMatrix::Identity(size_t dim) {
  RationalMatrix m(dim);
  for (size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::Transposed() const {
  RationalMatrix t(dim_);
  for (size_t r = 0; r < dim_; ++r)
    for (size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

// Skips zero entries of the left factor; walk matrices have few non-zeros
// per row.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const size_t n = a.dim();
  RationalMatrix out(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const mpq_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (size_t j = 0; j < n; ++j) {
        const mpq_class& bkj = b(k, j);
        if (sgn(bkj) != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

size_t BinaryMatrix::count_ones() const {
  size_t ones = 0;
  for (uint8_t v : data_) ones += v;
  return ones;
}

void BinaryMatrix::WriteDense(std::ostream& os) const {
  for (size_t r = 0; r < dim_; ++r) {
    for (size_t c = 0; c < dim_; ++c) os << static_cast<int>((*this)(r, c));
    os << '\n';
  }
}

IntegerMatrix IntegerMatrix::FromBinary(const BinaryMatrix& b) {
  IntegerMatrix m(b.dim());
  for (size_t r = 0; r < b.dim(); ++r)
    for (size_t c = 0; c < b.dim(); ++c) m(r, c) = b(r, c);
  return m;
}

int64_t IntegerMatrix::trace() const {
  int64_t t = 0;
  for (size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

IntegerMatrix IntegerMatrix::PermutedBy(std::span<const size_t> perm) const {
  if (perm.size() != dim_) throw std::invalid_argument("permutation length mismatch");
  IntegerMatrix out(dim_);
  for (size_t r = 0; r < dim_; ++r)
    for (size_t c = 0; c < dim_; ++c) out(perm[r], perm[c]) = (*this)(r, c);
  return out;
}

RealMatrix RealMatrix::FromRational(const RationalMatrix& m) {
  RealMatrix out(m.dim());
  for (size_t r = 0; r < m.dim(); ++r)
    for (size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

RealMatrix RealMatrix::FromBinary(const BinaryMatrix& b) {
  RealMatrix out(b.dim());
  for (size_t r = 0; r < b.dim(); ++r)
    for (size_t c = 0; c < b.dim(); ++c) out(r, c) = b(r, c);
  return out;
}

RealMatrix RealMatrix::FromInteger(const IntegerMatrix& m) {
  RealMatrix out(m.dim());
  for (size_t r = 0; r < m.dim(); ++r)
    for (size_t c = 0; c < m.dim(); ++c) out(r, c) = static_cast<double>(m(r, c));
  return out;
}

void WriteTriplets(std::ostream& os, const RationalMatrix& m) {
  for (size_t r = 0; r < m.dim(); ++r) {
    for (size_t c = 0; c < m.dim(); ++c) {
      const mpq_class& v = m(r, c);
      if (sgn(v) == 0) continue;
      os << r << ' ' << c << ' ' << v.get_num() << '/' << v.get_den() << '\n';
    }
  }
}

}  // namespace qwalk
