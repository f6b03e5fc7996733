#include "qwalk/arc_space.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qwalk {

ArcSpace::ArcSpace(const Graph& g) {
  if (g.num_edges() == 0) {
    throw std::invalid_argument("arc space of an edgeless graph is empty");
  }
  const int n = g.num_vertices();
  offsets_.resize(n + 1);
  arcs_.reserve(2 * static_cast<size_t>(g.num_edges()));
  for (int v = 0; v < n; ++v) {
    offsets_[v] = arcs_.size();
    for (int w : g.neighbors(v)) arcs_.push_back({v, w});
  }
  offsets_[n] = arcs_.size();
  reverse_.resize(arcs_.size());
  for (size_t a = 0; a < arcs_.size(); ++a) {
    reverse_[a] = index(arcs_[a].head, arcs_[a].tail);
  }
}

std::optional<size_t> ArcSpace::find(int tail, int head) const {
  if (tail < 0 || static_cast<size_t>(tail) + 1 >= offsets_.size()) {
    return std::nullopt;
  }
  auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[tail]);
  auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[tail + 1]);
  auto it = std::lower_bound(first, last, Arc{tail, head});
  if (it == last || it->head != head) return std::nullopt;
  return static_cast<size_t>(it - arcs_.begin());
}

size_t ArcSpace::index(int tail, int head) const {
  auto found = find(tail, head);
  if (!found) {
    throw std::out_of_range("(" + std::to_string(tail) + "," +
                            std::to_string(head) + ") is not an arc");
  }
  return *found;
}

}  // namespace qwalk
