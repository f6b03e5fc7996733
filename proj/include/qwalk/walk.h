#ifndef QWALK_WALK_H_
#define QWALK_WALK_H_

#include <stdexcept>
#include <string>

#include "qwalk/arc_space.h"
#include "qwalk/graph.h"
#include "qwalk/matrix.h"

namespace qwalk {

// A graph violates the structural precondition of a walk-matrix constructor
// (isolated vertex, degree below the required minimum, no edges).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grover-coin walk operator on the arc space of `g`:
//   U((i,j),(k,l)) = 2/d(j) - [i == l]   if j == k, else 0.
// Rows and columns follow ArcSpace(g). Throws PreconditionError if `g` has an
// isolated vertex.
RationalMatrix BuildU(const Graph& g);

// n x n matrix with T(i,j) = 1/d(j) when i ~ j. Isolated vertices give zero
// rows and columns.
RationalMatrix BuildT(const Graph& g);

// Exact p-th power, p >= 1.
RationalMatrix Power(const RationalMatrix& m, int p);

// Entrywise non-zero indicator.
BinaryMatrix Support(const RationalMatrix& m);

// Entrywise strict-positivity indicator.
BinaryMatrix PositiveSupport(const RationalMatrix& m);

// S+(U(g)^p). Requires minimum degree >= 3. Computed through the integer
// matrix L*U with L the lcm of the degrees, which has the same sign pattern
// in every power.
BinaryMatrix SPlusPower(const Graph& g, int p);

// Adjacency matrix M(g).
BinaryMatrix AdjacencyMatrix(const Graph& g);

// Support of M(g)^p, in exact integer arithmetic.
BinaryMatrix AdjacencyPowerSupport(const Graph& g, int p);

// Adjacency matrix of the line digraph of the symmetric digraph of `g`,
// built straight from its definition: (i,j) -> (k,l) iff j == k.
BinaryMatrix LineDigraphMatrix(const Graph& g);

}  // namespace qwalk

#endif  // QWALK_WALK_H_
