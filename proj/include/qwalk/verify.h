#ifndef QWALK_VERIFY_H_
#define QWALK_VERIFY_H_

#include <string>
#include <vector>

#include "qwalk/graph.h"

namespace qwalk {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// K4, Petersen, C4 plus an isolated vertex, the star K_{1,4}, Clebsch,
// Shrikhande, the 4x4 rook graph and the complements of the last two.
std::vector<NamedGraph> BuiltinFixtures();

enum class Fault {
  kNone,
  kFlipUSign,  // negate one non-zero entry of U before the orthogonality check
};

struct VerifyOptions {
  // Spectral comparisons use tol * dimension.
  double tol = 1e-8;
  bool strict_paper = false;
  Fault fault = Fault::kNone;
  // Also run the C4 + point versus K_{1,4} worked example.
  bool worked_example = true;
};

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string fixture;
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

const char* StatusName(CheckStatus s);

std::vector<CheckResult> RunVerify(const std::vector<NamedGraph>& fixtures,
                                   const VerifyOptions& options);

// One line per check: "PASS|FAIL|SKIP  fixture  check  detail".
std::string FormatLedger(const std::vector<CheckResult>& results);
bool AllPassed(const std::vector<CheckResult>& results);

}  // namespace qwalk

#endif  // QWALK_VERIFY_H_
