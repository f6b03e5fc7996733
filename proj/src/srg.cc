#include "qwalk/srg.h"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qwalk {
namespace {

long ISqrt(long v) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

long SrgParams::delta() const {
  const long sr = static_cast<long>(s) - r;
  return sr * sr + 4L * (d - s);
}

bool SrgParams::feasible() const {
  return n >= 1 && d >= 0 && r >= 0 && s >= 0 && r <= d - 1 && s <= d &&
         static_cast<long>(d) * (d - r - 1) == static_cast<long>(n - d - 1) * s;
}

std::string SrgParams::ToString() const {
  return "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(r) + "," +
         std::to_string(s) + ")";
}

std::optional<SrgParams> DetectSrg(const Graph& g) {
  const int n = g.num_vertices();
  if (!g.is_regular()) return std::nullopt;
  const int d = g.degree(0);
  if (d == 0 || d == n - 1) return std::nullopt;
  int r = -1, s = -1;
  std::vector<uint8_t> mark(n);
  for (int i = 0; i < n; ++i) {
    for (int x : g.neighbors(i)) mark[x] = 1;
    for (int j = i + 1; j < n; ++j) {
      int common = 0;
      for (int x : g.neighbors(j)) common += mark[x];
      int& slot = g.adjacent(i, j) ? r : s;
      if (slot == -1) slot = common;
      if (slot != common) return std::nullopt;
    }
    for (int x : g.neighbors(i)) mark[x] = 0;
  }
  return SrgParams{n, d, r, s};
}

SrgSpectrum SrgAdjacencySpectrum(const SrgParams& p) {
  if (!p.feasible()) {
    throw std::invalid_argument("infeasible srg parameters " + p.ToString());
  }
  SrgSpectrum sp;
  sp.d = p.d;
  sp.delta = p.delta();
  const long root = ISqrt(sp.delta);
  const long rs = static_cast<long>(p.r) - p.s;
  if (root * root == sp.delta) {
    // Delta = (r - s)^2 mod 4, so r - s +- root is even.
    const long e_plus = (rs + root) / 2;
    const long e_minus = (rs - root) / 2;
    const long num = -static_cast<long>(p.d) - static_cast<long>(p.n - 1) * e_minus;
    if (root == 0 || num % root != 0 || num < 0 || num / root > p.n - 1) {
      throw std::invalid_argument("srg parameters " + p.ToString() +
                                  " give non-integral multiplicities");
    }
    sp.e_plus = static_cast<double>(e_plus);
    sp.e_minus = static_cast<double>(e_minus);
    sp.m_plus = static_cast<int>(num / root);
    sp.m_minus = p.n - 1 - sp.m_plus;
    return sp;
  }
  if ((p.n - 1) % 2 != 0 || 2L * p.d + static_cast<long>(p.n - 1) * rs != 0) {
    throw std::invalid_argument("srg parameters " + p.ToString() +
                                " give non-integral multiplicities");
  }
  sp.conference = true;
  const double sq = std::sqrt(static_cast<double>(sp.delta));
  sp.e_plus = (rs + sq) / 2;
  sp.e_minus = (rs - sq) / 2;
  sp.m_plus = sp.m_minus = (p.n - 1) / 2;
  return sp;
}

IntPoly SrgCharPoly(const SrgParams& p) {
  const SrgSpectrum sp = SrgAdjacencySpectrum(p);
  IntPoly poly = {1, -p.d};
  if (sp.conference) {
    const IntPoly quad = {1, -(p.r - p.s), -(p.d - p.s)};
    return Multiply(poly, PowerOf(quad, sp.m_plus));
  }
  const long e_plus = std::lround(sp.e_plus), e_minus = std::lround(sp.e_minus);
  poly = Multiply(poly, PowerOf(IntPoly{1, mpz_class(-e_plus)}, sp.m_plus));
  return Multiply(poly, PowerOf(IntPoly{1, mpz_class(-e_minus)}, sp.m_minus));
}

U3Case ClassifyArcPair(const Arc& a, const Arc& b) {
  const int i = a.tail, j = a.head, l = b.tail, m = b.head;
  if (i == m) return j == l ? U3Case::kB : U3Case::kA;
  if (i == l) return j == m ? U3Case::kD : U3Case::kC;
  if (j == m) return U3Case::kE;
  if (j == l) return U3Case::kF;
  return U3Case::kG;
}

CaseValue CaseAmplitude(const Graph& g, const SrgParams& p, const Arc& a, const Arc& b) {
  for (const Arc& arc : {a, b}) {
    const int n = g.num_vertices();
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n ||
        !g.adjacent(arc.tail, arc.head)) {
      throw std::out_of_range("(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
                              ") is not an arc of the graph");
    }
  }
  const int i = a.tail, j = a.head, l = b.tail, m = b.head;
  const mpq_class k(p.d);
  const mpq_class two_k = 2 / k;
  const mpq_class four_k2 = 4 / (k * k);
  auto adj = [&](int x, int y) { return mpq_class(g.adjacent(x, y) ? 1 : 0); };
  const U3Case c = ClassifyArcPair(a, b);
  mpq_class v;
  switch (c) {
    case U3Case::kA: {
      const mpq_class x = p.s + (p.r - p.s) * adj(j, l);
      v = two_k * ((two_k - 1) * (two_k - 1) + four_k2 * (x - 1));
      break;
    }
    case U3Case::kB:
      v = two_k - 1;
      break;
    case U3Case::kC:
      v = four_k2 * (2 * p.r / k - adj(j, m));
      break;
    case U3Case::kD:
      v = 8 * p.r / (k * k * k);
      break;
    case U3Case::kE:
      v = four_k2 * (2 * p.r / k - adj(i, l));
      break;
    case U3Case::kF:
      v = 0;
      break;
    case U3Case::kG: {
      const mpq_class x = p.s + (p.r - p.s) * adj(j, l);
      v = four_k2 * (two_k * x - (adj(i, l) + adj(j, m)));
      break;
    }
  }
  v.canonicalize();
  return {c, v};
}

BinaryMatrix SPlusU3Direct(const Graph& g, const SrgParams& p, bool strict_paper) {
  const auto detected = DetectSrg(g);
  if (!detected || !(*detected == p)) {
    throw std::invalid_argument("graph is not an srg" + p.ToString() + " as claimed");
  }
  const long k = p.d, r = p.r, s = p.s;
  if (k < 3) throw std::invalid_argument("direct S+(U^3) needs degree >= 3");
  ArcSpace arcs(g);
  const size_t dim = arcs.size();
  BinaryMatrix out(dim);
  for (size_t x = 0; x < dim; ++x) {
    const int i = arcs[x].tail, j = arcs[x].head;
    for (size_t y = 0; y < dim; ++y) {
      const int l = arcs[y].tail, m = arcs[y].head;
      const long a_jl = g.adjacent(j, l), a_jm = g.adjacent(j, m), a_il = g.adjacent(i, l);
      const long common = s + (r - s) * a_jl;
      const bool c1 = i == m && j != l && 4 * common - 4 * k + k * k > 0;
      const bool c2 = i == l && m != j && k * a_jm < 2 * r;
      const bool c3 = i == l && m == j && (strict_paper || r > 0);
      const bool c4 = i != l && m == j && k * a_il < 2 * r;
      const bool c5 = i != l && i != m && j != l && j != m && 2 * common > k * (a_il + a_jm);
      const int hits = c1 + c2 + c3 + c4 + c5;
      if (hits > 1) {
        throw std::logic_error("conditions overlap at arc pair (" + std::to_string(i) + "," +
                               std::to_string(j) + "),(" + std::to_string(l) + "," +
                               std::to_string(m) + ")");
      }
      out(x, y) = hits == 1;
    }
  }
  return out;
}

}  // namespace qwalk
