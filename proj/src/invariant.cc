#include "qwalk/invariant.h"

#include <array>
#include <stdexcept>
#include <utility>

#include "qwalk/srg.h"
#include "qwalk/walk.h"

namespace qwalk {
namespace {

constexpr std::array<std::pair<InvariantKind, const char*>, 7> kNames = {{
    {InvariantKind::kAdjacency, "adjacency"},
    {InvariantKind::kSupportU, "support-u"},
    {InvariantKind::kSPlusU, "splus-u"},
    {InvariantKind::kSPlusU2, "splus-u2"},
    {InvariantKind::kSPlusU3, "splus-u3"},
    {InvariantKind::kSPlusUPower, "splus-u-p"},
    {InvariantKind::kAdjacencyPowerSupport, "adjacency-power-support"},
}};

bool UsesPower(InvariantKind kind) {
  return kind == InvariantKind::kSPlusUPower || kind == InvariantKind::kAdjacencyPowerSupport;
}

BinaryMatrix SPlusU3(const Graph& g, bool strict_paper) {
  if (g.num_edges() > 0 && g.min_degree() >= 3) {
    if (const auto params = DetectSrg(g)) return SPlusU3Direct(g, *params, strict_paper);
  }
  return SPlusPower(g, 3);
}

}  // namespace

const char* KindName(InvariantKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

InvariantKind ParseKind(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
}

std::string InvariantSpec::Describe() const {
  std::string out = KindName(kind);
  if (UsesPower(kind)) out += ":" + std::to_string(power);
  out += "/";
  out += ModeName(mode);
  if (strict_paper && kind == InvariantKind::kSPlusU3) out += "/strict-paper";
  return out;
}

IntegerMatrix InvariantMatrix(const Graph& g, const InvariantSpec& spec) {
  if (UsesPower(spec.kind) && spec.power < 1) {
    throw std::invalid_argument("power must be at least 1");
  }
  switch (spec.kind) {
    case InvariantKind::kAdjacency:
      return IntegerMatrix::FromBinary(AdjacencyMatrix(g));
    case InvariantKind::kSupportU:
      return IntegerMatrix::FromBinary(Support(BuildU(g)));
    case InvariantKind::kSPlusU:
      return IntegerMatrix::FromBinary(SPlusPower(g, 1));
    case InvariantKind::kSPlusU2:
      return IntegerMatrix::FromBinary(SPlusPower(g, 2));
    case InvariantKind::kSPlusU3:
      return IntegerMatrix::FromBinary(SPlusU3(g, spec.strict_paper));
    case InvariantKind::kSPlusUPower:
      if (spec.power == 3) return IntegerMatrix::FromBinary(SPlusU3(g, spec.strict_paper));
      return IntegerMatrix::FromBinary(SPlusPower(g, spec.power));
    case InvariantKind::kAdjacencyPowerSupport:
      return IntegerMatrix::FromBinary(AdjacencyPowerSupport(g, spec.power));
  }
  throw std::logic_error("unhandled invariant kind");
}

CharPolySignature InvariantSignature(const Graph& g, const InvariantSpec& spec,
                                     size_t exact_cutoff) {
  return Signature(InvariantMatrix(g, spec), spec.mode, kSignaturePrimes, exact_cutoff);
}

}  // namespace qwalk
