#include "qwalk/verify.h"

#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "qwalk/arc_space.h"
#include "qwalk/charpoly.h"
#include "qwalk/signature.h"
#include "qwalk/spectrum.h"
#include "qwalk/srg.h"
#include "qwalk/walk.h"

namespace qwalk {
namespace {

std::string Sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

bool HasIsolated(const Graph& g) { return g.min_degree() == 0; }

// Checks return a detail string and report failure by throwing.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

class Ledger {
 public:
  explicit Ledger(std::vector<CheckResult>& out) : out_(out) {}

  void Skip(const std::string& fixture, const std::string& check, const std::string& why) {
    out_.push_back({fixture, check, CheckStatus::kSkip, why});
  }

  void Run(const std::string& fixture, const std::string& check,
           const std::function<std::string()>& body) {
    CheckResult r{fixture, check, CheckStatus::kPass, ""};
    try {
      r.detail = body();
    } catch (const std::exception& e) {
      r.status = CheckStatus::kFail;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

std::string SpectrumCheck(const ComplexSpectrum& numeric, const ComplexSpectrum& closed,
                          double tol) {
  const double dist = MultisetDistance(numeric, closed);
  Expect(dist <= tol, "max pairing distance " + Sci(dist) + " exceeds " + Sci(tol));
  return "max distance " + Sci(dist) + " <= " + Sci(tol);
}

ComplexSpectrum AdjacencySpectrum(const Graph& g) {
  return EigFloat(RealMatrix::FromBinary(AdjacencyMatrix(g)));
}

void CheckFixture(Ledger& ledger, const NamedGraph& fixture, const VerifyOptions& opt) {
  const Graph& g = fixture.graph;
  const std::string& name = fixture.name;
  const int n = g.num_vertices(), m = g.num_edges();
  const std::string isolated = "precondition: graph has an isolated vertex";

  if (HasIsolated(g)) {
    ledger.Skip(name, "orthogonality", isolated);
    ledger.Skip(name, "row-structure", isolated);
    ledger.Skip(name, "t-column-sums", isolated);
    ledger.Skip(name, "u-from-t-spectrum", isolated);
  } else {
    ledger.Run(name, "orthogonality", [&] {
      RationalMatrix u = BuildU(g);
      if (opt.fault == Fault::kFlipUSign) {
        for (size_t c = 0; c < u.dim(); ++c) {
          if (u(0, c) != 0) {
            u(0, c) = -u(0, c);
            break;
          }
        }
      }
      Expect(u * u.Transposed() == RationalMatrix::Identity(u.dim()),
             "U U^T differs from the identity");
      return std::string("U U^T = I exactly (dim " + std::to_string(u.dim()) + ")");
    });
    ledger.Run(name, "row-structure", [&] {
      const RationalMatrix u = BuildU(g);
      const ArcSpace arcs(g);
      for (size_t a = 0; a < arcs.size(); ++a) {
        const int dj = g.degree(arcs[a].head);
        size_t nonzero = 0;
        for (size_t b = 0; b < arcs.size(); ++b) nonzero += u(a, b) != 0;
        const mpq_class rev = u(a, arcs.reverse(a));
        Expect(nonzero == static_cast<size_t>(dj - (dj == 2 ? 1 : 0)),
               "row " + std::to_string(a) + " has " + std::to_string(nonzero) + " non-zeros");
        mpq_class want(2, dj);
        want.canonicalize();
        Expect(rev == want - 1, "reversal entry of row " + std::to_string(a));
      }
      return std::string("d(j) non-zeros per row, reversal entry 2/d(j) - 1");
    });
    ledger.Run(name, "t-column-sums", [&] {
      const RationalMatrix t = BuildT(g);
      for (size_t c = 0; c < t.dim(); ++c) {
        mpq_class sum = 0;
        for (size_t r = 0; r < t.dim(); ++r) sum += t(r, c);
        Expect(sum == 1, "column " + std::to_string(c) + " of T sums to " + sum.get_str());
      }
      return std::string("every column of T sums to 1 exactly");
    });
    if (m < n) {
      ledger.Skip(name, "u-from-t-spectrum", "precondition: m < n");
    } else {
      ledger.Run(name, "u-from-t-spectrum", [&] {
        const auto numeric = EigFloat(RealMatrix::FromRational(BuildU(g)));
        const auto t = EigFloat(RealMatrix::FromRational(BuildT(g)));
        const double tol = opt.tol * 2 * m;
        Expect(MultisetEq(numeric, numeric.Conjugated(), tol), "spectrum not conjugate-closed");
        return SpectrumCheck(numeric, SpectrumFromT(t, n, m, tol), tol);
      });
    }
  }

  const int k = g.max_degree();
  const bool regular3 = m > 0 && g.is_regular() && k >= 3;
  if (!regular3) {
    const std::string why = "precondition failure: needs a k-regular graph with k >= 3 (degrees " +
                            std::to_string(g.min_degree()) + ".." + std::to_string(k) + ")";
    ledger.Skip(name, "splus-u-spectrum", why);
    ledger.Skip(name, "splus-u2-spectrum", why);
  } else {
    const auto adjacency = AdjacencySpectrum(g);
    const double tol = opt.tol * 2 * m;
    ledger.Run(name, "splus-u-spectrum", [&] {
      const auto numeric = EigFloat(RealMatrix::FromBinary(SPlusPower(g, 1)));
      const int plus = UnitSplitFromReference(adjacency, n, k, numeric, tol);
      const std::string res =
          SpectrumCheck(numeric, SPlusUSpectrumClosed(adjacency, n, k, plus), tol);
      return res + "; unit values +1 x" + std::to_string(plus) + ", -1 x" +
             std::to_string(n * (k - 2) - plus);
    });
    ledger.Run(name, "splus-u2-spectrum", [&] {
      const auto numeric = EigFloat(RealMatrix::FromBinary(SPlusPower(g, 2)));
      const auto closed = SPlusU2SpectrumClosed(adjacency, n, k);
      const std::string res = SpectrumCheck(numeric, closed, tol);
      const size_t twos = numeric.CountNear({2, 0}, tol);
      Expect(twos >= static_cast<size_t>(n * (k - 2)),
             "only " + std::to_string(twos) + " eigenvalues equal 2");
      return res + "; eigenvalue 2 x" + std::to_string(twos);
    });
  }

  if (m == 0 || g.min_degree() < 3) {
    ledger.Skip(name, "line-digraph", "precondition: minimum degree below 3");
  } else {
    ledger.Run(name, "line-digraph", [&] {
      const BinaryMatrix support = Support(BuildU(g));
      Expect(support == LineDigraphMatrix(g), "support of U differs from M(line digraph)");
      const IntPoly lhs = CharPolyExact(IntegerMatrix::FromBinary(support));
      const IntPoly rhs = Multiply(Monomial(2 * m - n),
                                   CharPolyExact(IntegerMatrix::FromBinary(AdjacencyMatrix(g))));
      Expect(lhs == rhs, "P(support U) != x^(2m-n) P(M)");
      return std::string("P(support U, x) = x^" + std::to_string(2 * m - n) + " P(M, x)");
    });
  }

  const auto params = DetectSrg(g);
  if (!params) {
    ledger.Skip(name, "splus-u3-direct", "not strongly regular");
    ledger.Skip(name, "splus-u3-cases", "not strongly regular");
    ledger.Skip(name, "srg-spectrum", "not strongly regular");
    return;
  }
  ledger.Run(name, "srg-spectrum", [&] {
    const SrgSpectrum sp = SrgAdjacencySpectrum(*params);
    ComplexSpectrum closed;
    closed.values.push_back(sp.d);
    closed.values.insert(closed.values.end(), sp.m_plus, sp.e_plus);
    closed.values.insert(closed.values.end(), sp.m_minus, sp.e_minus);
    const std::string res = SpectrumCheck(AdjacencySpectrum(g), closed, opt.tol * n);
    Expect(CharPolyExact(IntegerMatrix::FromBinary(AdjacencyMatrix(g))) == SrgCharPoly(*params),
           "adjacency characteristic polynomial differs from the srg formula");
    return "srg" + params->ToString() + ": " + res;
  });
  if (params->d < 3) {
    ledger.Skip(name, "splus-u3-direct", "precondition: degree below 3");
    ledger.Skip(name, "splus-u3-cases", "precondition: degree below 3");
    return;
  }
  const RationalMatrix u3 = Power(BuildU(g), 3);
  ledger.Run(name, "splus-u3-direct", [&] {
    const BinaryMatrix direct = SPlusU3Direct(g, *params, opt.strict_paper);
    const BinaryMatrix oracle = PositiveSupport(u3);
    size_t diff = 0;
    for (size_t i = 0; i < direct.data().size(); ++i) diff += direct.data()[i] != oracle.data()[i];
    Expect(diff == 0, std::to_string(diff) + " entries differ from S+(U^3)");
    return std::string("direct construction equals S+(U^3) on ") +
           std::to_string(direct.data().size()) + " entries" +
           (opt.strict_paper ? " (strict-paper rule)" : "");
  });
  ledger.Run(name, "splus-u3-cases", [&] {
    const ArcSpace arcs(g);
    for (size_t a = 0; a < arcs.size(); ++a) {
      for (size_t b = 0; b < arcs.size(); ++b) {
        const CaseValue v = CaseAmplitude(g, *params, arcs[a], arcs[b]);
        Expect(v.amplitude == u3(a, b),
               std::string("case ") + static_cast<char>(v.label) + " amplitude " +
                   v.amplitude.get_str() + " != U^3 entry " + u3(a, b).get_str());
      }
    }
    return std::string("all case amplitudes equal the exact U^3 entries");
  });
}

}  // namespace

std::vector<NamedGraph> BuiltinFixtures() {
  return {
      {"K4", CompleteGraph(4)},
      {"Petersen", PetersenGraph()},
      {"C4+pt", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
      {"K1,4", StarGraph(4)},
      {"Clebsch", ClebschGraph()},
      {"Shrikhande", ShrikhandeGraph()},
      {"Rook4x4", RookGraph(4)},
      {"co-Shrikhande", ShrikhandeGraph().Complement()},
      {"co-Rook4x4", RookGraph(4).Complement()},
  };
}

const char* StatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkip:
      break;
  }
  return "SKIP";
}

std::vector<CheckResult> RunVerify(const std::vector<NamedGraph>& fixtures,
                                   const VerifyOptions& options) {
  std::vector<CheckResult> results;
  Ledger ledger(results);
  for (const auto& f : fixtures) CheckFixture(ledger, f, options);
  if (options.worked_example) {
    ledger.Run("C4+pt/K1,4", "worked-example", [] {
      const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
      const Graph h = StarGraph(4);
      auto poly = [](const BinaryMatrix& b) { return CharPolyExact(IntegerMatrix::FromBinary(b)); };
      Expect(poly(AdjacencyMatrix(g)) == poly(AdjacencyMatrix(h)),
             "adjacency polynomials differ");
      const IntPoly x3 = Monomial(3);
      const IntPoly want_g = Multiply(x3, PowerOf({1, -2}, 2));
      const IntPoly want_h = Multiply(x3, Multiply({1, -1}, {1, -4}));
      const IntPoly got_g = poly(AdjacencyPowerSupport(g, 2));
      const IntPoly got_h = poly(AdjacencyPowerSupport(h, 2));
      Expect(got_g == want_g, "support of M(G)^2 has polynomial " + FormatPolynomial(got_g));
      Expect(got_h == want_h, "support of M(H)^2 has polynomial " + FormatPolynomial(got_h));
      return "P(M) = " + FormatPolynomial(poly(AdjacencyMatrix(g))) + " for both; squares " +
             FormatPolynomial(got_g) + " vs " + FormatPolynomial(got_h);
    });
  }
  return results;
}

std::string FormatLedger(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << StatusName(r.status) << "  " << std::left << std::setw(14) << r.fixture << ' '
       << std::setw(16) << r.check << ' ' << r.detail << '\n';
  }
  return os.str();
}

bool AllPassed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::kFail) return false;
  return true;
}

}  // namespace qwalk
