#include "qwalk/graph.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qwalk {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw std::invalid_argument("edge (" + std::to_string(i) + "," +
                                  std::to_string(j) +
                                  ") has an endpoint out of range");
    }
    if (i == j) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    }
    adj_[index(i, j)] = adj_[index(j, i)] = 1;
  }
  BuildNeighbourLists();
}

Graph Graph::FromAdjacency(int n, std::span<const uint8_t> adjacency) {
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (adjacency.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("adjacency relation has the wrong size");
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(adjacency.begin(), adjacency.end());
  for (int i = 0; i < n; ++i) {
    if (g.adj_[g.index(i, i)]) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      uint8_t& a = g.adj_[g.index(i, j)];
      a = a ? 1 : 0;
      if ((adjacency[g.index(i, j)] != 0) != (adjacency[g.index(j, i)] != 0)) {
        throw std::invalid_argument("adjacency relation is not symmetric");
      }
    }
  }
  g.BuildNeighbourLists();
  return g;
}

void Graph::BuildNeighbourLists() {
  nbrs_.assign(n_, {});
  int twice_m = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (adj_[index(i, j)]) nbrs_[i].push_back(j);
    }
    twice_m += static_cast<int>(nbrs_[i].size());
  }
  m_ = twice_m / 2;
}

int Graph::min_degree() const {
  int d = degree(0);
  for (int i = 1; i < n_; ++i) d = std::min(d, degree(i));
  return d;
}

int Graph::max_degree() const {
  int d = degree(0);
  for (int i = 1; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int i = 0; i < n_; ++i) {
    for (int j : nbrs_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph Graph::Relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<size_t>(n_)) {
    throw std::invalid_argument("permutation has the wrong length");
  }
  std::vector<uint8_t> seen(n_, 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) {
      throw std::invalid_argument("not a permutation of the vertex set");
    }
    seen[p] = 1;
  }
  std::vector<Edge> e;
  for (const auto& [i, j] : edges()) e.emplace_back(perm[i], perm[j]);
  return Graph(n_, e);
}

Graph Graph::Complement() const {
  std::vector<Edge> e;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!adjacent(i, j)) e.emplace_back(i, j);
    }
  }
  return Graph(n_, e);
}

Graph CompleteGraph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph CycleGraph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph PathGraph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

// Centre is vertex `leaves`, matching the vertex order of the usual
// K_{1,4} adjacency matrix with the hub last.
Graph StarGraph(int leaves) {
  std::vector<Edge> e;
  for (int i = 0; i < leaves; ++i) e.emplace_back(i, leaves);
  return Graph(leaves + 1, e);
}

Graph PetersenGraph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

// Folded 5-cube: 4-bit words, adjacent when they differ in one bit or in all
// four.
Graph ClebschGraph() {
  std::vector<Edge> e;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      int diff = std::popcount(static_cast<unsigned>(a ^ b));
      if (diff == 1 || diff == 4) e.emplace_back(a, b);
    }
  }
  return Graph(16, e);
}

// Cayley graph of Z4 x Z4 with connection set {±(0,1), ±(1,0), ±(1,1)}.
Graph ShrikhandeGraph() {
  std::vector<Edge> e;
  auto is_step = [](int dx, int dy) {
    dx = (dx + 4) % 4;
    dy = (dy + 4) % 4;
    return (dx == 0 && (dy == 1 || dy == 3)) ||
           (dy == 0 && (dx == 1 || dx == 3)) || (dx == 1 && dy == 1) ||
           (dx == 3 && dy == 3);
  };
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      if (is_step(a / 4 - b / 4, a % 4 - b % 4)) e.emplace_back(a, b);
    }
  }
  return Graph(16, e);
}

// K_size x K_size: cells of a size x size board, adjacent when they share a
// row or a column.
Graph RookGraph(int size) {
  std::vector<Edge> e;
  const int n = size * size;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (a / size == b / size || a % size == b % size) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

}  // namespace qwalk
