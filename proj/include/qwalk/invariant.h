#ifndef QWALK_INVARIANT_H_
#define QWALK_INVARIANT_H_

#include <string>
#include <string_view>

#include "qwalk/graph.h"
#include "qwalk/matrix.h"
#include "qwalk/signature.h"

namespace qwalk {

enum class InvariantKind {
  kAdjacency,              // M(G)
  kSupportU,               // support of U(G)
  kSPlusU,                 // S+(U(G))
  kSPlusU2,                // S+(U(G)^2)
  kSPlusU3,                // S+(U(G)^3)
  kSPlusUPower,            // S+(U(G)^p)
  kAdjacencyPowerSupport,  // support of M(G)^p
};

// CLI spellings: adjacency, support-u, splus-u, splus-u2, splus-u3,
// splus-u-p, adjacency-power-support.
const char* KindName(InvariantKind kind);
InvariantKind ParseKind(std::string_view name);

struct InvariantSpec {
  InvariantKind kind = InvariantKind::kSPlusU3;
  int power = 1;  // only read by kSPlusUPower and kAdjacencyPowerSupport
  SignatureMode mode = SignatureMode::kModular;
  bool strict_paper = false;

  // e.g. "splus-u3/modular", "splus-u-p:4/exact"
  std::string Describe() const;
};

// The integer matrix whose spectrum is the invariant. S+(U^3) of a strongly
// regular graph is built by SPlusU3Direct; every other graph goes through
// exact powers of U. Precondition failures surface as PreconditionError.
IntegerMatrix InvariantMatrix(const Graph& g, const InvariantSpec& spec);

CharPolySignature InvariantSignature(const Graph& g, const InvariantSpec& spec,
                                     size_t exact_cutoff = kDefaultExactCutoff);

}  // namespace qwalk

#endif  // QWALK_INVARIANT_H_
