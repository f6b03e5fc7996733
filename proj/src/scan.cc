#include "qwalk/scan.h"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "qwalk/graph_io.h"
#include "qwalk/srg.h"

namespace qwalk {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

uint64_t Fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Hex(uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

// One file per (invariant, field set, graph); the first line repeats the key
// so hash collisions are detected rather than trusted.
class SignatureCache {
 public:
  explicit SignatureCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  std::optional<std::string> Get(const std::string& key) const {
    if (dir_.empty()) return std::nullopt;
    std::ifstream in(PathFor(key));
    std::string stored, value;
    if (!in || !std::getline(in, stored) || stored != key || !std::getline(in, value)) {
      return std::nullopt;
    }
    return value;
  }

  void Put(const std::string& key, const std::string& value) const {
    if (dir_.empty()) return;
    const std::string path = PathFor(key);
    const std::string tmp =
        path + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      out << key << '\n' << value << '\n';
      if (!out) return;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
  }

 private:
  std::string PathFor(const std::string& key) const {
    return (std::filesystem::path(dir_) / (Hex(Fnv1a(key)) + ".sig")).string();
  }

  std::string dir_;
};

std::vector<SignatureOutcome> SignaturesOver(const GraphFamily& family,
                                             const std::vector<size_t>& indices,
                                             const InvariantSpec& spec,
                                             std::span<const uint64_t> primes, int jobs,
                                             const SignatureCache& cache, size_t exact_cutoff) {
  std::vector<SignatureOutcome> out(indices.size());
  std::string fields = ModeName(spec.mode);
  if (spec.mode == SignatureMode::kModular) {
    for (uint64_t p : primes) fields += "," + std::to_string(p);
  }
  ParallelFor(indices.size(), jobs, [&](size_t t) {
    const Graph& g = family.members[indices[t]];
    const std::string key = spec.Describe() + "|" + fields + "|" + EncodeGraph6(g);
    try {
      if (auto hit = cache.Get(key)) {
        out[t].signature = CharPolySignature::Parse(*hit);
        return;
      }
      out[t].signature = Signature(InvariantMatrix(g, spec), spec.mode, primes, exact_cutoff);
      cache.Put(key, out[t].signature->Serialize());
    } catch (const std::exception& e) {
      out[t].error = e.what();
    }
  });
  return out;
}

// Splits `members` into classes of equal key, ordered by first member.
std::vector<std::vector<size_t>> GroupBy(const std::vector<size_t>& members,
                                         const std::vector<std::string>& keys) {
  std::vector<std::vector<size_t>> groups;
  std::unordered_map<std::string, size_t> slot;
  for (size_t t = 0; t < members.size(); ++t) {
    auto [it, fresh] = slot.emplace(keys[t], groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(members[t]);
  }
  return groups;
}

}  // namespace

void ParallelFor(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  const size_t workers = std::min<size_t>(count, static_cast<size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<SignatureOutcome> FamilySignatures(const GraphFamily& family,
                                               const InvariantSpec& spec, int jobs,
                                               const std::string& cache_dir,
                                               size_t exact_cutoff) {
  std::vector<size_t> all(family.members.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return SignaturesOver(family, all, spec, kSignaturePrimes, jobs, SignatureCache(cache_dir),
                        exact_cutoff);
}

std::string ScanReport::Conjecture() const {
  bool undetermined = !errors.empty();
  for (const auto& c : collisions) {
    if (c.iso.verdict == IsoVerdict::kNonIsomorphic) return "fails";
    if (c.iso.verdict == IsoVerdict::kInconclusive) undetermined = true;
  }
  return undetermined ? "undetermined" : "holds";
}

ScanReport Scan(const GraphFamily& family, const ScanOptions& options) {
  ScanReport report;
  report.source = family.source;
  report.invariant = options.spec.Describe();
  if (options.streaming) report.invariant += "/streaming";
  report.family_size = family.members.size();
  const SignatureCache cache(options.cache_dir);

  auto start = Clock::now();
  std::vector<size_t> members(family.members.size());
  for (size_t i = 0; i < members.size(); ++i) members[i] = i;

  // Stage 1: signatures (single prime first in streaming mode).
  const bool single_prime_first =
      options.streaming && options.spec.mode == SignatureMode::kModular;
  const std::span<const uint64_t> first_primes =
      single_prime_first ? std::span<const uint64_t>(kSignaturePrimes).first(1)
                         : std::span<const uint64_t>(kSignaturePrimes);
  auto outcomes = SignaturesOver(family, members, options.spec, first_primes, options.jobs,
                                 cache, options.exact_cutoff);
  std::vector<size_t> ok;
  std::vector<std::string> keys;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].signature) {
      ok.push_back(i);
      keys.push_back(outcomes[i].signature->Serialize());
    } else {
      report.errors.push_back({i, outcomes[i].error});
    }
  }
  outcomes.clear();
  std::vector<std::vector<size_t>> groups = GroupBy(ok, keys);
  std::unordered_map<size_t, std::string> signature_of;
  for (size_t t = 0; t < ok.size(); ++t) signature_of[ok[t]] = keys[t];

  if (single_prime_first) {
    std::vector<std::vector<size_t>> refined;
    for (auto& group : groups) {
      if (group.size() == 1) {
        refined.push_back(std::move(group));
        continue;
      }
      auto full = SignaturesOver(family, group, options.spec, kSignaturePrimes, options.jobs,
                                 cache, options.exact_cutoff);
      std::vector<size_t> kept;
      std::vector<std::string> full_keys;
      for (size_t t = 0; t < group.size(); ++t) {
        if (!full[t].signature) {
          report.errors.push_back({group[t], full[t].error});
          continue;
        }
        kept.push_back(group[t]);
        full_keys.push_back(full[t].signature->Serialize());
        signature_of[group[t]] = full_keys.back();
      }
      for (auto& g : GroupBy(kept, full_keys)) refined.push_back(std::move(g));
    }
    groups = std::move(refined);
  }
  if (options.timings) report.timings_ms["signatures"] = MillisSince(start);

  // Stage 2: exact escalation of modular ties.
  start = Clock::now();
  for (auto& group : groups) {
    ScanGroup out;
    out.signature = signature_of[group.front()];
    if (group.size() == 1 || options.spec.mode == SignatureMode::kExact) {
      out.members = std::move(group);
      report.groups.push_back(std::move(out));
      continue;
    }
    InvariantSpec exact_spec = options.spec;
    exact_spec.mode = SignatureMode::kExact;
    auto exact = SignaturesOver(family, group, exact_spec, kSignaturePrimes, options.jobs,
                                cache, options.exact_cutoff);
    std::vector<std::string> exact_keys;
    bool over_cutoff = false;
    for (size_t t = 0; t < group.size(); ++t) {
      if (!exact[t].signature) {
        over_cutoff = true;
        break;
      }
      exact_keys.push_back(exact[t].signature->Serialize());
    }
    if (over_cutoff) {
      out.members = std::move(group);
      report.groups.push_back(std::move(out));
      continue;
    }
    std::unordered_map<size_t, std::string> exact_of;
    for (size_t t = 0; t < group.size(); ++t) exact_of[group[t]] = exact_keys[t];
    for (auto& split : GroupBy(group, exact_keys)) {
      ScanGroup piece;
      piece.signature = out.signature;
      if (split.size() > 1) piece.exact_signature = exact_of[split.front()];
      piece.members = std::move(split);
      report.groups.push_back(std::move(piece));
    }
  }
  std::sort(report.groups.begin(), report.groups.end(),
            [](const ScanGroup& a, const ScanGroup& b) { return a.members[0] < b.members[0]; });
  if (options.timings) report.timings_ms["escalation"] = MillisSince(start);

  // Stage 3: isomorphism on every intra-group pair.
  start = Clock::now();
  for (const auto& group : report.groups) {
    for (size_t a = 0; a < group.members.size(); ++a)
      for (size_t b = a + 1; b < group.members.size(); ++b)
        report.collisions.push_back({group.members[a], group.members[b], {}});
  }
  ParallelFor(report.collisions.size(), options.jobs, [&](size_t t) {
    Collision& c = report.collisions[t];
    c.iso = IsIsomorphic(family.members[c.first], family.members[c.second],
                         options.node_budget);
  });
  if (options.timings) report.timings_ms["isomorphism"] = MillisSince(start);

  std::optional<SrgParams> common;
  bool same = !family.members.empty();
  for (size_t i = 0; same && i < family.members.size(); ++i) {
    const auto p = DetectSrg(family.members[i]);
    if (!p || (common && !(*common == *p))) same = false;
    common = p;
  }
  if (same) report.srg = common->ToString();
  std::sort(report.errors.begin(), report.errors.end(),
            [](const MemberError& a, const MemberError& b) { return a.index < b.index; });
  return report;
}

std::string ReportJson(const ScanReport& report) {
  nlohmann::ordered_json j;
  j["source"] = report.source;
  j["invariant"] = report.invariant;
  j["family_size"] = report.family_size;
  if (report.srg) j["srg"] = *report.srg;
  j["conjecture"] = report.Conjecture();
  size_t singletons = 0;
  for (const auto& g : report.groups) singletons += g.members.size() == 1;
  j["group_count"] = report.groups.size();
  j["singleton_groups"] = singletons;
  auto& groups = j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : report.groups) {
    nlohmann::ordered_json e;
    e["members"] = g.members;
    e["signature"] = g.signature;
    if (!g.exact_signature.empty()) e["exact_signature"] = g.exact_signature;
    groups.push_back(std::move(e));
  }
  auto& collisions = j["collisions"] = nlohmann::ordered_json::array();
  for (const auto& c : report.collisions) {
    nlohmann::ordered_json e;
    e["pair"] = {c.first, c.second};
    e["verdict"] = VerdictName(c.iso.verdict);
    e["search_nodes"] = c.iso.nodes;
    if (c.iso.verdict == IsoVerdict::kIsomorphic) e["witness"] = c.iso.witness;
    collisions.push_back(std::move(e));
  }
  auto& errors = j["errors"] = nlohmann::ordered_json::array();
  for (const auto& e : report.errors) errors.push_back({{"index", e.index}, {"message", e.message}});
  if (!report.timings_ms.empty()) j["timings_ms"] = report.timings_ms;
  return j.dump(2) + "\n";
}

std::string ReportTsv(const ScanReport& report) {
  std::ostringstream os;
  os << "# source\t" << report.source << "\n# invariant\t" << report.invariant
     << "\n# family_size\t" << report.family_size << "\n# conjecture\t" << report.Conjecture()
     << "\n";
  if (report.srg) os << "# srg\t" << *report.srg << "\n";
  os << "kind\tid\tsize\tmembers\tdetail\n";
  for (size_t i = 0; i < report.groups.size(); ++i) {
    const auto& g = report.groups[i];
    os << "group\t" << i << '\t' << g.members.size() << '\t';
    for (size_t t = 0; t < g.members.size(); ++t) os << (t ? "," : "") << g.members[t];
    os << "\tfnv64:" << Hex(Fnv1a(g.signature)) << '\n';
  }
  for (size_t i = 0; i < report.collisions.size(); ++i) {
    const auto& c = report.collisions[i];
    os << "collision\t" << i << "\t2\t" << c.first << ',' << c.second << '\t'
       << VerdictName(c.iso.verdict) << '\n';
  }
  for (const auto& e : report.errors) os << "error\t" << e.index << "\t1\t" << e.index << '\t'
                                         << e.message << '\n';
  for (const auto& [phase, ms] : report.timings_ms) {
    os << "timing\t" << phase << "\t0\t\t" << std::fixed << std::setprecision(1) << ms << '\n';
  }
  return os.str();
}

}  // namespace qwalk
