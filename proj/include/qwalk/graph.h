#ifndef QWALK_GRAPH_H_
#define QWALK_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  // Builds the graph on `n` vertices from an edge list. Duplicate edges
  // collapse. Throws std::invalid_argument on n < 1, out-of-range endpoints
  // or self-loops.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Builds from a dense row-major 0/1 adjacency relation. The relation must
  // be symmetric with an empty diagonal.
  static Graph FromAdjacency(int n, std::span<const uint8_t> adjacency);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  bool adjacent(int i, int j) const { return adj_[index(i, j)] != 0; }
  int degree(int i) const { return static_cast<int>(nbrs_[i].size()); }
  // Neighbours of `i` in increasing order.
  std::span<const int> neighbors(int i) const { return nbrs_[i]; }

  int min_degree() const;
  int max_degree() const;
  bool is_regular() const { return min_degree() == max_degree(); }

  // Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

  // Graph whose vertex perm[v] is adjacent to perm[w] iff v ~ w here.
  Graph Relabeled(std::span<const int> perm) const;
  Graph Complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Graph() = default;
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + j;
  }
  void BuildNeighbourLists();

  int n_ = 0;
  int m_ = 0;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
};

// Ordered collection of graphs read from one source. Member order is the
// input order; report indices refer to it.
struct GraphFamily {
  std::vector<Graph> members;
  std::string source;
};

// Small named graphs used by fixtures, tests and the verify command.
Graph CompleteGraph(int n);
Graph CycleGraph(int n);
Graph PathGraph(int n);
Graph StarGraph(int leaves);
Graph PetersenGraph();
Graph ClebschGraph();
Graph ShrikhandeGraph();
Graph RookGraph(int size);

}  // namespace qwalk

#endif  // QWALK_GRAPH_H_
