#ifndef QWALK_SRG_H_
#define QWALK_SRG_H_

#include <gmpxx.h>

#include <optional>
#include <string>

#include "qwalk/arc_space.h"
#include "qwalk/charpoly.h"
#include "qwalk/graph.h"
#include "qwalk/matrix.h"

namespace qwalk {

// srg(n, d, r, s): d-regular on n vertices, adjacent pairs have r common
// neighbours, non-adjacent pairs have s.
struct SrgParams {
  int n = 0;
  int d = 0;
  int r = 0;
  int s = 0;

  // (s - r)^2 + 4(d - s)
  long delta() const;
  // d(d - r - 1) == (n - d - 1) s
  bool feasible() const;
  // "(n,d,r,s)"
  std::string ToString() const;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Adjacency spectrum {d^1, e+^{m+}, e-^{m-}} of an srg.
struct SrgSpectrum {
  double d = 0;
  double e_plus = 0;
  double e_minus = 0;
  int m_plus = 0;
  int m_minus = 0;
  long delta = 0;
  // Delta is not a perfect square: e+- irrational, m+ = m- = (n - 1)/2.
  bool conference = false;
};

// Parameters of `g` if it is strongly regular, decided by counting common
// neighbours over every vertex pair. Complete and edgeless graphs are
// rejected since one of r, s has no witness.
std::optional<SrgParams> DetectSrg(const Graph& g);

// e+- = (r - s +- sqrt(Delta))/2, multiplicities fixed by m+ + m- = n - 1 and
// d + m+ e+ + m- e- = 0. Throws std::invalid_argument for infeasible
// parameters or non-integral multiplicities.
SrgSpectrum SrgAdjacencySpectrum(const SrgParams& p);

// Characteristic polynomial of the adjacency matrix of any srg with
// parameters `p`, built from SrgAdjacencySpectrum.
IntPoly SrgCharPoly(const SrgParams& p);

// The seven ways the endpoints of two arcs (i,j), (l,m) can coincide.
enum class U3Case : char {
  kA = 'A',  // i = m, j != l
  kB = 'B',  // i = m, j = l
  kC = 'C',  // i = l, j != m
  kD = 'D',  // i = l, j = m
  kE = 'E',  // i != m, i != l, j = m
  kF = 'F',  // i != m, i != l, j = l
  kG = 'G',  // everything else
};

U3Case ClassifyArcPair(const Arc& a, const Arc& b);

struct CaseValue {
  U3Case label;
  mpq_class amplitude;
};

// Entry ((i,j),(l,m)) of U(G)^3 from the closed-form expression of its case.
// Throws std::out_of_range when either arc is not an arc of `g`.
CaseValue CaseAmplitude(const Graph& g, const SrgParams& p, const Arc& a, const Arc& b);

// S+(U(G)^3) for an srg straight from the adjacency relation, over the
// ArcSpace(g) ordering. Entry ((i,j),(l,m)) is 1 iff one of
//   1. i = m, j != l, 4(s + (r - s) A_jl) - 4k + k^2 > 0
//   2. i = l, m != j, k A_jm < 2r
//   3. i = l, m = j, r > 0 (the r > 0 guard is dropped when strict_paper)
//   4. i != l, m = j, k A_il < 2r
//   5. i != l, i != m, j != l, j != m, 2(s + (r - s) A_jl) > k (A_il + A_jm)
// holds. Throws std::invalid_argument if `p` is not the parameter set of `g`
// or k < 3, and std::logic_error if two conditions ever hold at once.
BinaryMatrix SPlusU3Direct(const Graph& g, const SrgParams& p, bool strict_paper = false);

}  // namespace qwalk

#endif  // QWALK_SRG_H_
