#ifndef QWALK_TESTS_TEST_UTIL_H_
#define QWALK_TESTS_TEST_UTIL_H_

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qwalk/charpoly.h"
#include "qwalk/graph.h"
#include "qwalk/matrix.h"

namespace qwalk::testing {

#ifndef QWALK_DATA_DIR
#define QWALK_DATA_DIR "data"
#endif

inline std::string DataPath(const std::string& rel) { return std::string(QWALK_DATA_DIR) + "/" + rel; }

// G(n, p) redrawn until the minimum degree is reached.
inline Graph RandomGraphMinDegree(std::mt19937_64& rng, int n, int min_degree) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_real_distribution<double> density(0.3, 0.7);
  while (true) {
    const double p = density(rng);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (unit(rng) < p) edges.push_back({i, j});
    Graph g(n, edges);
    if (g.num_edges() > 0 && g.min_degree() >= min_degree) return g;
  }
}

// Pairing model with rejection of loops and multi-edges.
inline Graph RandomRegularGraph(std::mt19937_64& rng, int n, int k) {
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), k, v);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (size_t t = 0; ok && t < points.size(); t += 2) {
      int a = std::min(points[t], points[t + 1]), b = std::max(points[t], points[t + 1]);
      if (a == b || std::find(edges.begin(), edges.end(), Edge{a, b}) != edges.end()) ok = false;
      edges.push_back({a, b});
    }
    if (ok) return Graph(n, edges);
  }
}

inline std::vector<int> RandomPermutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Determinant by fraction-free Bareiss elimination.
inline mpz_class BareissDet(std::vector<mpz_class> a, size_t n) {
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  return n == 0 ? mpz_class(1) : sign * a[(n - 1) * n + (n - 1)];
}

// det(xI - M) by evaluating at x = 0..n and interpolating; shares no code
// with the library's characteristic polynomial routines.
inline IntPoly OracleCharPoly(const IntegerMatrix& m) {
  const size_t n = m.dim();
  std::vector<mpq_class> coeffs(n + 1, 0);  // constant term first
  for (size_t t = 0; t <= n; ++t) {
    std::vector<mpz_class> a(n * n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) a[r * n + c] = (r == c ? mpz_class(t) : 0) - m(r, c);
    const mpq_class value = BareissDet(a, n);
    // Lagrange basis polynomial for node t over nodes 0..n.
    std::vector<mpq_class> basis = {1};
    mpq_class denom = 1;
    for (size_t s = 0; s <= n; ++s) {
      if (s == t) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * static_cast<long>(s);
      }
      basis = std::move(next);
      denom *= static_cast<long>(t) - static_cast<long>(s);
    }
    for (size_t d = 0; d <= n; ++d) coeffs[d] += value * basis[d] / denom;
  }
  IntPoly out(n + 1);
  for (size_t d = 0; d <= n; ++d) {
    coeffs[d].canonicalize();
    out[n - d] = coeffs[d].get_num();
  }
  return out;
}

// U(G) entry straight from the definition, arcs given as vertex pairs.
inline mpq_class DefinitionEntry(const Graph& g, int i, int j, int k, int l) {
  if (j != k) return 0;
  mpq_class v(2, g.degree(j));
  v.canonicalize();
  return i == l ? mpq_class(v - 1) : v;
}

}  // namespace qwalk::testing

#endif  // QWALK_TESTS_TEST_UTIL_H_
