#include "qwalk/walk.h"

#include <numeric>
#include <string>
#include <vector>

namespace qwalk {
namespace {

struct Int64Overflow {};

// Non-zero column positions of each row of a dense row-major matrix.
template <typename T>
std::vector<std::vector<size_t>> RowPatterns(const std::vector<T>& m, size_t n) {
  std::vector<std::vector<size_t>> nz(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      if (m[r * n + c] != 0) nz[r].push_back(c);
  return nz;
}

void MulAdd(int64_t& acc, int64_t a, int64_t b) {
  int64_t prod;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc)) {
    throw Int64Overflow{};
  }
}

void MulAdd(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// base^p computed as ((base * base) * base) ..., exploiting the sparsity of
// the right factor.
template <typename T>
std::vector<T> IntegerPower(const std::vector<T>& base, size_t n, int p) {
  const auto pattern = RowPatterns(base, n);
  std::vector<T> acc = base;
  for (int step = 1; step < p; ++step) {
    std::vector<T> next(n * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < n; ++k) {
        const T& aik = acc[i * n + k];
        if (aik == 0) continue;
        for (size_t j : pattern[k]) MulAdd(next[i * n + j], aik, base[k * n + j]);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Integer power with an int64 fast path and an exact big-integer fallback.
std::vector<mpz_class> ExactIntegerPower(const std::vector<mpz_class>& base, size_t n,
                                         int p) {
  bool fits = true;
  for (const auto& v : base) fits = fits && v.fits_slong_p();
  if (fits) {
    std::vector<int64_t> small(base.size());
    for (size_t i = 0; i < base.size(); ++i) small[i] = base[i].get_si();
    try {
      auto r = IntegerPower(small, n, p);
      std::vector<mpz_class> out(r.size());
      for (size_t i = 0; i < r.size(); ++i) out[i] = static_cast<long>(r[i]);
      return out;
    } catch (const Int64Overflow&) {
    }
  }
  return IntegerPower(base, n, p);
}

void RequireNoIsolated(const Graph& g, const char* what) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) +
                              " is isolated");
    }
  }
}

// L * U(g) as integers, L = lcm of all degrees.
std::vector<mpz_class> ScaledU(const Graph& g, const ArcSpace& arcs) {
  mpz_class lcm = 1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(g.degree(v)));
  }
  const size_t dim = arcs.size();
  std::vector<mpz_class> out(dim * dim);
  for (size_t a = 0; a < dim; ++a) {
    const auto [i, j] = arcs[a];
    const mpz_class coin = 2 * lcm / g.degree(j);
    for (size_t b = arcs.first_out(j); b < arcs.first_out(j + 1); ++b) {
      out[a * dim + b] = arcs[b].head == i ? mpz_class(coin - lcm) : coin;
    }
  }
  return out;
}

}  // namespace

RationalMatrix BuildU(const Graph& g) {
  RequireNoIsolated(g, "U(G) is undefined");
  ArcSpace arcs(g);
  RationalMatrix u(arcs.size());
  for (size_t a = 0; a < arcs.size(); ++a) {
    const auto [i, j] = arcs[a];
    const mpq_class coin(2, g.degree(j));
    for (size_t b = arcs.first_out(j); b < arcs.first_out(j + 1); ++b) {
      mpq_class v = coin;
      if (arcs[b].head == i) v -= 1;
      v.canonicalize();
      u(a, b) = v;
    }
  }
  return u;
}

RationalMatrix BuildT(const Graph& g) {
  const int n = g.num_vertices();
  RationalMatrix t(n);
  for (int j = 0; j < n; ++j) {
    if (g.degree(j) == 0) continue;
    const mpq_class w(1, g.degree(j));
    for (int i : g.neighbors(j)) t(i, j) = w;
  }
  return t;
}

RationalMatrix Power(const RationalMatrix& m, int p) {
  if (p < 1) throw std::invalid_argument("power must be at least 1");
  const size_t n = m.dim();
  mpz_class den = 1;
  for (const auto& v : m.data()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<mpz_class> scaled(n * n);
  for (size_t i = 0; i < n * n; ++i) {
    const mpq_class& v = m.data()[i];
    scaled[i] = v.get_num() * (den / v.get_den());
  }
  const auto raised = ExactIntegerPower(scaled, n, p);
  mpz_class den_p;
  mpz_pow_ui(den_p.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p));
  RationalMatrix out(n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      mpq_class v(raised[r * n + c], den_p);
      v.canonicalize();
      out(r, c) = v;
    }
  }
  return out;
}

BinaryMatrix Support(const RationalMatrix& m) {
  BinaryMatrix s(m.dim());
  for (size_t r = 0; r < m.dim(); ++r)
    for (size_t c = 0; c < m.dim(); ++c) s(r, c) = sgn(m(r, c)) != 0;
  return s;
}

BinaryMatrix PositiveSupport(const RationalMatrix& m) {
  BinaryMatrix s(m.dim());
  for (size_t r = 0; r < m.dim(); ++r)
    for (size_t c = 0; c < m.dim(); ++c) s(r, c) = sgn(m(r, c)) > 0;
  return s;
}

BinaryMatrix SPlusPower(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("power must be at least 1");
  if (g.num_edges() == 0 || g.min_degree() < 3) {
    throw PreconditionError("S+(U^p) requires minimum degree 3 (found " +
                            std::to_string(g.min_degree()) + ")");
  }
  ArcSpace arcs(g);
  const size_t dim = arcs.size();
  const auto raised = ExactIntegerPower(ScaledU(g, arcs), dim, p);
  BinaryMatrix s(dim);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) s(r, c) = sgn(raised[r * dim + c]) > 0;
  return s;
}

BinaryMatrix AdjacencyMatrix(const Graph& g) {
  const int n = g.num_vertices();
  BinaryMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbors(i)) m(i, j) = 1;
  return m;
}

BinaryMatrix AdjacencyPowerSupport(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("power must be at least 1");
  const size_t n = g.num_vertices();
  std::vector<mpz_class> base(n * n);
  for (size_t i = 0; i < n; ++i)
    for (int j : g.neighbors(static_cast<int>(i))) base[i * n + j] = 1;
  const auto raised = ExactIntegerPower(base, n, p);
  BinaryMatrix s(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) s(r, c) = raised[r * n + c] != 0;
  return s;
}

BinaryMatrix LineDigraphMatrix(const Graph& g) {
  ArcSpace arcs(g);
  BinaryMatrix m(arcs.size());
  for (size_t a = 0; a < arcs.size(); ++a)
    for (size_t b = 0; b < arcs.size(); ++b) m(a, b) = arcs[a].head == arcs[b].tail;
  return m;
}

}  // namespace qwalk
