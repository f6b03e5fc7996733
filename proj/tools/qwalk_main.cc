// qwalk: spectral invariants of graphs from Grover-coin walk matrices.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/graph_io.h"
#include "qwalk/invariant.h"
#include "qwalk/iso.h"
#include "qwalk/scan.h"
#include "qwalk/verify.h"

namespace {

using namespace qwalk;

constexpr const char* kCacheEnv = "QWALK_CACHE_DIR";

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

GraphFamily Load(const InputOptions& in) {
  GraphFormat f;
  if (in.format == "auto") {
    f = DetectFormat(in.path);
  } else {
    f = in.format == "graph6" ? GraphFormat::kGraph6 : GraphFormat::kEdgeList;
  }
  return LoadFamilyFile(in.path, f);
}

std::string CacheDir() {
  const char* v = std::getenv(kCacheEnv);
  return v ? v : "";
}

void AddInvariantFlags(CLI::App* cmd, InvariantSpec& spec, std::string& kind,
                       std::string& mode) {
  cmd->add_option("--invariant", kind, "Matrix whose spectrum is compared")
      ->check(CLI::IsMember({"adjacency", "support-u", "splus-u", "splus-u2", "splus-u3",
                             "splus-u-p", "adjacency-power-support"}));
  cmd->add_option("--power", spec.power, "Power p for splus-u-p and adjacency-power-support")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mode", mode, "Signature mode")->check(CLI::IsMember({"exact", "modular"}));
  cmd->add_flag("--strict-paper", spec.strict_paper,
                "Direct S+(U^3): drop the r > 0 guard on the i=l, m=j condition");
}

void AddInputFormat(CLI::App* cmd, std::string& format) {
  cmd->add_option("--input-format", format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

void WriteOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Graph LoadSingle(const std::string& path, const std::string& format) {
  GraphFamily fam = Load({path, format});
  if (fam.members.size() != 1) {
    throw std::runtime_error(path + " holds " + std::to_string(fam.members.size()) +
                             " graphs; expected exactly one");
  }
  return fam.members[0];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral invariants from Grover-coin quantum walk matrices"};
  app.require_subcommand(1);

  // invariant
  InvariantSpec inv_spec;
  std::string inv_kind = "splus-u3", inv_mode = "modular";
  InputOptions inv_in;
  int inv_jobs = 1;
  auto* inv = app.add_subcommand("invariant", "Print one signature per input graph");
  inv->add_option("input", inv_in.path, "graph6 or edge-list file")->required();
  AddInvariantFlags(inv, inv_spec, inv_kind, inv_mode);
  AddInputFormat(inv, inv_in.format);
  inv->add_option("--jobs", inv_jobs, "Worker threads")->check(CLI::PositiveNumber);

  // scan
  ScanOptions scan_opt;
  std::string scan_kind = "splus-u3", scan_mode = "modular", scan_format = "json", scan_out;
  InputOptions scan_in;
  auto* scan = app.add_subcommand("scan", "Group a family by signature and test collisions");
  scan->add_option("input", scan_in.path, "graph6 or edge-list file")->required();
  AddInvariantFlags(scan, scan_opt.spec, scan_kind, scan_mode);
  AddInputFormat(scan, scan_in.format);
  scan->add_option("--jobs", scan_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--format", scan_format, "Report format")
      ->check(CLI::IsMember({"json", "tsv"}));
  scan->add_option("--node-budget", scan_opt.node_budget, "Isomorphism search node budget");
  scan->add_option("--exact-cutoff", scan_opt.exact_cutoff,
                   "Largest dimension for exact characteristic polynomials");
  scan->add_flag("--streaming", scan_opt.streaming,
                 "Group by one prime first; full signatures only for ties");
  scan->add_flag("--timings", scan_opt.timings, "Add per-phase wall times to the report");
  scan->add_option("-o,--output", scan_out, "Report file (default stdout)");

  // verify
  VerifyOptions ver_opt;
  std::vector<std::string> ver_inputs;
  std::string ver_format = "auto", ver_fault = "none";
  bool ver_no_builtin = false;
  auto* ver = app.add_subcommand("verify", "Run the property checks on fixtures");
  ver->add_option("inputs", ver_inputs, "Extra graph files to check");
  ver->add_option("--tol", ver_opt.tol, "Spectral tolerance per unit of dimension");
  ver->add_flag("--strict-paper", ver_opt.strict_paper, "Check the unamended direct rule");
  ver->add_flag("--no-builtin", ver_no_builtin, "Only check the given inputs");
  ver->add_option("--inject-fault", ver_fault, "Corrupt a computation on purpose")
      ->check(CLI::IsMember({"none", "flip-u-sign"}));
  AddInputFormat(ver, ver_format);

  // iso
  std::string iso_g, iso_h, iso_format = "auto";
  uint64_t iso_budget = kDefaultNodeBudget;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graphs");
  iso->add_option("first", iso_g, "File holding one graph")->required();
  iso->add_option("second", iso_h, "File holding one graph")->required();
  iso->add_option("--node-budget", iso_budget, "Search node budget");
  AddInputFormat(iso, iso_format);

  // convert
  InputOptions conv_in;
  std::string conv_to = "graph6", conv_out;
  bool conv_complement = false;
  auto* conv = app.add_subcommand("convert", "Re-encode a family");
  conv->add_option("input", conv_in.path, "graph6 or edge-list file")->required();
  conv->add_option("--to", conv_to, "Output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  conv->add_flag("--complement", conv_complement, "Write complements instead");
  conv->add_option("-o,--output", conv_out, "Output file (default stdout)");
  AddInputFormat(conv, conv_in.format);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      inv_spec.kind = ParseKind(inv_kind);
      inv_spec.mode = ParseMode(inv_mode);
      const GraphFamily fam = Load(inv_in);
      const auto sigs = FamilySignatures(fam, inv_spec, inv_jobs, CacheDir());
      bool failed = false;
      for (size_t i = 0; i < sigs.size(); ++i) {
        if (sigs[i].signature) {
          std::cout << i << '\t' << sigs[i].signature->Serialize() << '\n';
        } else {
          std::cerr << "graph " << i << ": " << sigs[i].error << '\n';
          failed = true;
        }
      }
      return failed ? 1 : 0;
    }
    if (*scan) {
      scan_opt.spec.kind = ParseKind(scan_kind);
      scan_opt.spec.mode = ParseMode(scan_mode);
      scan_opt.cache_dir = CacheDir();
      const ScanReport report = Scan(Load(scan_in), scan_opt);
      WriteOut(scan_out, scan_format == "json" ? ReportJson(report) : ReportTsv(report));
      for (const auto& e : report.errors) std::cerr << "graph " << e.index << ": " << e.message << '\n';
      return report.errors.empty() ? 0 : 1;
    }
    if (*ver) {
      ver_opt.fault = ver_fault == "flip-u-sign" ? Fault::kFlipUSign : Fault::kNone;
      std::vector<NamedGraph> fixtures;
      if (!ver_no_builtin) fixtures = BuiltinFixtures();
      ver_opt.worked_example = !ver_no_builtin;
      for (const auto& path : ver_inputs) {
        const GraphFamily fam = Load({path, ver_format});
        for (size_t i = 0; i < fam.members.size(); ++i) {
          fixtures.push_back({path + "#" + std::to_string(i), fam.members[i]});
        }
      }
      const auto results = RunVerify(fixtures, ver_opt);
      std::cout << FormatLedger(results);
      const bool ok = AllPassed(results);
      std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (tol " << ver_opt.tol
                << " x dimension)\n";
      return ok ? 0 : 1;
    }
    if (*iso) {
      const Graph g = LoadSingle(iso_g, iso_format);
      const Graph h = LoadSingle(iso_h, iso_format);
      const IsoResult r = IsIsomorphic(g, h, iso_budget);
      std::cout << VerdictName(r.verdict);
      if (r.verdict == IsoVerdict::kIsomorphic) {
        std::cout << '\t';
        for (size_t v = 0; v < r.witness.size(); ++v) std::cout << (v ? " " : "") << r.witness[v];
      }
      std::cout << "\t(" << r.nodes << " search nodes)\n";
      return r.verdict == IsoVerdict::kInconclusive ? 2 : 0;
    }
    if (*conv) {
      GraphFamily fam = Load(conv_in);
      std::string text;
      for (const Graph& g0 : fam.members) {
        const Graph g = conv_complement ? g0.Complement() : g0;
        text += conv_to == "graph6" ? EncodeGraph6(g) + "\n" : EncodeEdgeList(g);
      }
      WriteOut(conv_out, text);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
