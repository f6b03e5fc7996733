#ifndef QWALK_CHARPOLY_H_
#define QWALK_CHARPOLY_H_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qwalk/matrix.h"

namespace qwalk {

// Coefficient lists are stored leading coefficient first: c[0] x^n + c[1]
// x^(n-1) + ... + c[n].
using IntPoly = std::vector<mpz_class>;
using ModPoly = std::vector<uint64_t>;

inline constexpr size_t kDefaultExactCutoff = 600;

class DimensionOverCutoff : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// det(xI - M) over the integers by Berkowitz's division-free algorithm.
// O(n^4) big-integer operations. Throws DimensionOverCutoff when
// M.dim() > cutoff.
IntPoly CharPolyExact(const IntegerMatrix& m, size_t cutoff = kDefaultExactCutoff);

// det(xI - M) over GF(prime) by similarity reduction to upper Hessenberg form
// followed by the Hessenberg determinant recurrence; O(n^3) field operations.
// Primality of `prime` is not checked. Throws std::invalid_argument for
// prime <= 1.
ModPoly CharPolyModP(const IntegerMatrix& m, uint64_t prime);

ModPoly ReduceMod(const IntPoly& poly, uint64_t prime);

IntPoly Multiply(const IntPoly& a, const IntPoly& b);
// x^k as a monic polynomial of degree k.
IntPoly Monomial(size_t k);
IntPoly PowerOf(const IntPoly& p, size_t e);

}  // namespace qwalk

#endif  // QWALK_CHARPOLY_H_
