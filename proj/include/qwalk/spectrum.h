#ifndef QWALK_SPECTRUM_H_
#define QWALK_SPECTRUM_H_

#include <complex>
#include <stdexcept>
#include <vector>

#include "qwalk/matrix.h"

namespace qwalk {

using Complex = std::complex<double>;

// Multiset of eigenvalues; each value appears once per unit of multiplicity.
struct ComplexSpectrum {
  std::vector<Complex> values;

  size_t size() const { return values.size(); }
  // Values sorted by (real, imag).
  ComplexSpectrum Sorted() const;
  ComplexSpectrum Conjugated() const;
  // Number of values within `tol` of `z`.
  size_t CountNear(Complex z, double tol) const;
};

class EigenNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All eigenvalues of a real square matrix: balancing, reduction to upper
// Hessenberg form, then Francis double-shift QR, all carried out in extended
// precision. Complex eigenvalues come out as exact conjugate pairs. Throws
// EigenNonConvergence when an eigenvalue fails to deflate within the
// iteration budget, and std::invalid_argument above dimension 2000.
ComplexSpectrum EigFloat(const RealMatrix& m);

// True iff a and b match one-to-one within `tol`. Matching rule: both
// multisets are sorted by (real, imag); walking `a` in that order, each value
// is paired with the nearest still-unpaired value of `b` (lowest index on
// ties) and the pair must be no further apart than `tol`.
bool MultisetEq(const ComplexSpectrum& a, const ComplexSpectrum& b, double tol);

// Largest pairing distance under the MultisetEq rule, or +inf on a size
// mismatch. Handy for reporting how close a match was.
double MultisetDistance(const ComplexSpectrum& a, const ComplexSpectrum& b);

// Spectrum of U(G) from the spectrum of T(G): each eigenvalue t of T gives
// t +- i sqrt(1 - t^2); then m - n copies each of +1 and -1.
// Throws std::invalid_argument if m < n, the spectrum does not have n values,
// or some |t| exceeds 1 by more than `tol`.
ComplexSpectrum SpectrumFromT(const ComplexSpectrum& t_spectrum, int n, int m,
                              double tol = 1e-8);

// Spectrum of S+(U(G)) for a k-regular graph from its adjacency spectrum:
// each eigenvalue a gives a/2 +- i sqrt(k - 1 - a^2/4) (a real pair when the
// radicand is negative), then n(k-2) values in {+1, -1}.
//
// The formula does not fix how the n(k-2) unit values split between +1 and
// -1. `plus_ones` sets how many are +1; UnitSplitFromReference reads the
// split off a numerically computed spectrum. Throws std::invalid_argument for
// k < 3, a spectrum without n values, or plus_ones outside [0, n(k-2)].
ComplexSpectrum SPlusUSpectrumClosed(const ComplexSpectrum& adjacency_spectrum,
                                     int n, int k, int plus_ones);

// Number of +1 values among the n(k-2) unit eigenvalues, inferred from a
// numerically computed spectrum of S+(U): values near +1 in `reference`
// minus the formula values near +1.
int UnitSplitFromReference(const ComplexSpectrum& adjacency_spectrum, int n, int k,
                           const ComplexSpectrum& reference, double tol);

// Spectrum of S+(U(G)^2) for a k-regular graph: each adjacency eigenvalue a
// gives a^2/2 + 2 - k +- i a sqrt(k - 1 - a^2/4), then n(k-2) copies of 2.
ComplexSpectrum SPlusU2SpectrumClosed(const ComplexSpectrum& adjacency_spectrum,
                                      int n, int k);

}  // namespace qwalk

#endif  // QWALK_SPECTRUM_H_
