#ifndef QWALK_SCAN_H_
#define QWALK_SCAN_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/graph.h"
#include "qwalk/invariant.h"
#include "qwalk/iso.h"

namespace qwalk {

struct ScanOptions {
  InvariantSpec spec;
  int jobs = 1;
  // Group by the first signature prime alone, then compute the full
  // signature only for members of non-singleton groups.
  bool streaming = false;
  bool timings = false;
  uint64_t node_budget = kDefaultNodeBudget;
  size_t exact_cutoff = kDefaultExactCutoff;
  // Signature cache directory; empty disables caching.
  std::string cache_dir;
};

struct ScanGroup {
  std::string signature;
  std::vector<size_t> members;
  // Set for modular groups with more than one member: the exact signature
  // shared by the members, or empty when the matrix exceeds the exact cutoff.
  std::string exact_signature;
};

struct Collision {
  size_t first = 0;
  size_t second = 0;
  IsoResult iso;
};

struct MemberError {
  size_t index = 0;
  std::string message;
};

struct ScanReport {
  std::string source;
  std::string invariant;
  size_t family_size = 0;
  std::optional<std::string> srg;  // "(n,k,r,s)" when all members share it
  std::vector<ScanGroup> groups;
  std::vector<Collision> collisions;
  std::vector<MemberError> errors;
  std::map<std::string, double> timings_ms;  // filled only on request

  // "holds" when every group is a singleton or all colliding pairs are
  // isomorphic, "fails" when some colliding pair is non-isomorphic, and
  // "undetermined" otherwise (inconclusive search or failed members).
  std::string Conjecture() const;
};

// Runs `fn(i)` for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any call is rethrown after all workers stop.
void ParallelFor(size_t count, int jobs, const std::function<void(size_t)>& fn);

struct SignatureOutcome {
  std::optional<CharPolySignature> signature;
  std::string error;
};

// Signature of every member under `spec`, optionally cached on disk.
std::vector<SignatureOutcome> FamilySignatures(const GraphFamily& family,
                                               const InvariantSpec& spec, int jobs,
                                               const std::string& cache_dir = "",
                                               size_t exact_cutoff = kDefaultExactCutoff);

ScanReport Scan(const GraphFamily& family, const ScanOptions& options);

std::string ReportJson(const ScanReport& report);
std::string ReportTsv(const ScanReport& report);

}  // namespace qwalk

#endif  // QWALK_SCAN_H_
