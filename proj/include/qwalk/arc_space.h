#ifndef QWALK_ARC_SPACE_H_
#define QWALK_ARC_SPACE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/graph.h"

namespace qwalk {

struct Arc {
  int tail;
  int head;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// The 2m arcs of the symmetric digraph of a graph, ordered lexicographically
// by (tail, head), with constant-time lookup of an arc's position.
class ArcSpace {
 public:
  // Throws std::invalid_argument for an edgeless graph.
  explicit ArcSpace(const Graph& g);

  size_t size() const { return arcs_.size(); }
  const Arc& operator[](size_t index) const { return arcs_[index]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::optional<size_t> find(int tail, int head) const;
  // Like find() but throws std::out_of_range for a non-arc.
  size_t index(int tail, int head) const;
  // Position of the reversed arc.
  size_t reverse(size_t index) const { return reverse_[index]; }
  // Arcs leaving `v` occupy [first_out(v), first_out(v + 1)).
  size_t first_out(int v) const { return offsets_[v]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<size_t> offsets_;
  std::vector<size_t> reverse_;
};

}  // namespace qwalk

#endif  // QWALK_ARC_SPACE_H_
