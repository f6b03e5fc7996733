#include "qwalk/iso.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qwalk {
namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency ListsOf(const Graph& g, int offset = 0) {
  Adjacency adj(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w : g.neighbors(v)) adj[v].push_back(w + offset);
  return adj;
}

void RefineInPlace(const Adjacency& adj, Partition& p) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> cell_of(n);
  std::vector<std::vector<int>> key(n);
  while (true) {
    const size_t ncells = p.cells.size();
    for (size_t c = 0; c < ncells; ++c)
      for (int v : p.cells[c]) cell_of[v] = static_cast<int>(c);
    std::vector<std::vector<int>> next;
    next.reserve(ncells);
    for (auto& cell : p.cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      for (int v : cell) {
        key[v].assign(ncells, 0);
        for (int w : adj[v]) ++key[v][cell_of[w]];
      }
      std::stable_sort(cell.begin(), cell.end(),
                       [&](int a, int b) { return key[a] < key[b]; });
      size_t start = 0;
      for (size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || key[cell[i]] != key[cell[start]]) {
          std::vector<int> piece(cell.begin() + start, cell.begin() + i);
          std::sort(piece.begin(), piece.end());
          next.push_back(std::move(piece));
          start = i;
        }
      }
    }
    const bool stable = next.size() == ncells;
    p.cells = std::move(next);
    if (stable) return;
  }
}

struct BudgetExceeded {};

class JointSearch {
 public:
  JointSearch(const Graph& g, const Graph& h, uint64_t budget)
      : g_(g), h_(h), n_(g.num_vertices()), budget_(budget) {
    adj_ = ListsOf(g);
    Adjacency ah = ListsOf(h, n_);
    adj_.insert(adj_.end(), ah.begin(), ah.end());
  }

  bool Run(IsoResult& result) {
    Partition p = Partition::Unit(2 * n_);
    const bool found = Search(std::move(p));
    result.nodes = nodes_;
    if (found) result.witness = witness_;
    return found;
  }

  uint64_t nodes() const { return nodes_; }

 private:
  bool Balanced(const Partition& p) const {
    for (const auto& cell : p.cells) {
      const auto in_g = std::count_if(cell.begin(), cell.end(), [&](int v) { return v < n_; });
      if (2 * static_cast<size_t>(in_g) != cell.size()) return false;
    }
    return true;
  }

  bool Search(Partition p) {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    RefineInPlace(adj_, p);
    if (!Balanced(p)) return false;
    size_t target = p.cells.size();
    for (size_t c = 0; c < p.cells.size(); ++c) {
      const size_t sz = p.cells[c].size();
      if (sz > 2 && (target == p.cells.size() || sz < p.cells[target].size())) target = c;
    }
    if (target == p.cells.size()) {
      std::vector<int> map(n_);
      for (const auto& cell : p.cells) map[cell[0]] = cell[1] - n_;
      if (!VerifyWitness(g_, h_, map)) return false;
      witness_ = std::move(map);
      return true;
    }
    const std::vector<int> cell = p.cells[target];
    const int v = cell.front();  // cells are sorted, so g's vertices come first
    for (int w : cell) {
      if (w < n_) continue;
      Partition child;
      child.cells.reserve(p.cells.size() + 1);
      for (size_t c = 0; c < p.cells.size(); ++c) {
        if (c != target) {
          child.cells.push_back(p.cells[c]);
          continue;
        }
        child.cells.push_back({v, w});
        std::vector<int> rest;
        for (int x : cell)
          if (x != v && x != w) rest.push_back(x);
        child.cells.push_back(std::move(rest));
      }
      if (Search(std::move(child))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  Adjacency adj_;
  std::vector<int> witness_;
};

}  // namespace

Partition Partition::Unit(int n) {
  Partition p;
  p.cells.emplace_back(n);
  std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
  return p;
}

bool Partition::IsValidFor(int n) const {
  std::vector<uint8_t> seen(n, 0);
  size_t total = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) return false;
    for (int v : cell) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      ++total;
    }
  }
  return total == static_cast<size_t>(n);
}

bool Partition::IsDiscrete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

Partition Refine(const Graph& g, const Partition& initial) {
  if (!initial.IsValidFor(g.num_vertices())) {
    throw std::invalid_argument("initial cells do not partition the vertex set");
  }
  Partition p = initial;
  for (auto& cell : p.cells) std::sort(cell.begin(), cell.end());
  RefineInPlace(ListsOf(g), p);
  return p;
}

const char* VerdictName(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::kIsomorphic:
      return "iso";
    case IsoVerdict::kNonIsomorphic:
      return "non-iso";
    case IsoVerdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

bool VerifyWitness(const Graph& g, const Graph& h, const std::vector<int>& witness) {
  const int n = g.num_vertices();
  if (h.num_vertices() != n || static_cast<int>(witness.size()) != n) return false;
  std::vector<uint8_t> hit(n, 0);
  for (int w : witness) {
    if (w < 0 || w >= n || hit[w]) return false;
    hit[w] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(witness[u], witness[v])) return false;
  return true;
}

IsoResult IsIsomorphic(const Graph& g, const Graph& h, uint64_t node_budget) {
  IsoResult result;
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
    result.verdict = IsoVerdict::kNonIsomorphic;
    return result;
  }
  JointSearch search(g, h, node_budget);
  try {
    result.verdict = search.Run(result) ? IsoVerdict::kIsomorphic : IsoVerdict::kNonIsomorphic;
  } catch (const BudgetExceeded&) {
    result.verdict = IsoVerdict::kInconclusive;
    result.nodes = search.nodes();
  }
  return result;
}

}  // namespace qwalk
