#ifndef QWALK_ISO_H_
#define QWALK_ISO_H_

#include <cstdint>
#include <vector>

#include "qwalk/graph.h"

namespace qwalk {

// Ordered list of disjoint vertex cells covering 0..n-1.
struct Partition {
  std::vector<std::vector<int>> cells;

  static Partition Unit(int n);
  // True iff the cells are non-empty, disjoint and cover 0..n-1.
  bool IsValidFor(int n) const;
  bool IsDiscrete() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Coarsest equitable refinement of `initial`: every cell is repeatedly split
// by the number of neighbours each vertex has in every current cell. Split
// pieces keep the position of their parent cell and are ordered by that count
// vector, so the output depends only on the isomorphism type of
// (g, initial); vertices inside a cell are listed in increasing order.
// Throws std::invalid_argument if `initial` is not a partition of V(g).
Partition Refine(const Graph& g, const Partition& initial);

inline constexpr uint64_t kDefaultNodeBudget = 10'000'000;

enum class IsoVerdict { kIsomorphic, kNonIsomorphic, kInconclusive };

const char* VerdictName(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::kInconclusive;
  // For kIsomorphic: vertex v of g maps to witness[v] of h, and
  // g.adjacent(u, v) == h.adjacent(witness[u], witness[v]) for all u, v.
  std::vector<int> witness;
  uint64_t nodes = 0;
};

// Individualization-refinement search on the disjoint union of g and h.
// Each search node refines the joint partition; a node whose cells hold
// unequal numbers of g and h vertices is pruned. Leaves give a candidate
// bijection that is checked edge by edge before it is accepted. Exceeding
// `node_budget` search nodes yields kInconclusive.
IsoResult IsIsomorphic(const Graph& g, const Graph& h,
                       uint64_t node_budget = kDefaultNodeBudget);

// True iff `witness` is a bijection carrying g's adjacency onto h's.
bool VerifyWitness(const Graph& g, const Graph& h, const std::vector<int>& witness);

}  // namespace qwalk

#endif  // QWALK_ISO_H_
