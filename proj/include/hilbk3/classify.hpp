#pragma once

// Full classification pipeline for (t, n): existence criterion, witness
// matrices, stability data, wall certificates, and report rendering.

#include "hilbk3/isometry.hpp"
#include "hilbk3/lattice.hpp"
#include "hilbk3/pell.hpp"
#include "hilbk3/stability.hpp"
#include "hilbk3/walls.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbk3 {

enum class Verdict {
  NaturalCoveringInvolution,      // t = 1
  DerivedNaturalInvolution,       // negative Pell solvable
  NoInvolutionSquare,             // t(n-1) is a perfect square
  NoInvolutionNegPellUnsolvable,  // even continued-fraction period
};

enum class Biregularity {
  KnownBiregular,
  BirationalCertifiedOnPath,
  RequiresExternalCaseList,
};

std::string verdict_name(Verdict v);
std::string biregularity_name(Biregularity b);

struct AuxScanResult {
  Int bound;
  std::optional<std::pair<Int, Int>> witness;

  bool operator==(const AuxScanResult& o) const { return bound == o.bound && witness == o.witness; }
};

struct PositivityScanResult {
  Int bound;
  std::optional<MukaiVector> witness;

  bool operator==(const PositivityScanResult& o) const {
    return bound == o.bound && witness == o.witness;
  }
};

struct ClassificationReport {
  Int t, n;
  Verdict verdict;
  std::optional<PellPair> pell;           // negative fundamental
  std::optional<PellPair> pell_positive;  // positive fundamental for the same D
  std::optional<Mat2> ns_matrix;
  std::optional<Mat3> mukai_matrix;
  std::optional<StabilityParams> stability;
  std::optional<DiscriminantAction> discriminant;
  std::map<std::string, bool> checks;
  std::optional<WallScanReport> wall_report;
  std::optional<PositivityScanResult> positivity;
  std::optional<AuxScanResult> aux;
  std::vector<FloppingReport> flopping;
  std::optional<Biregularity> biregularity;  // absent for NoInvolution verdicts
  std::string biregularity_source;           // nonempty for KnownBiregular
  std::optional<std::string> known_description;
  std::vector<std::string> notes;

  bool operator==(const ClassificationReport& o) const;
};

struct ClassifyOptions {
  Int scan_bound = 100;
  Int positivity_bound = 200;
  Int aux_bound = 10000;
  Int flop_search_bound = 100;
  std::vector<std::pair<Int, Int>> flop_profiles;  // (p, k)
  int workers = 0;                                 // 0 = hardware concurrency
  std::optional<std::string> known_examples_file;  // overrides the built-in default
};

// t >= 1, n >= 2.  Verification failures of unconditional identities are
// fatal diagnostics (std::logic_error); bounded scans record their witnesses
// in the report instead.
ClassificationReport classify(const Int& t, const Int& n, const ClassifyOptions& options = {});

struct SweepCell {
  Int t, n;
  std::optional<ClassificationReport> report;
  std::string error;  // nonempty iff the cell failed

  bool operator==(const SweepCell& o) const {
    return t == o.t && n == o.n && report == o.report && error == o.error;
  }
};

struct SweepResult {
  std::vector<SweepCell> cells;  // ordered by (t, n)
  std::map<std::string, long> verdict_counts;
  long error_count = 0;

  bool operator==(const SweepResult& o) const {
    return cells == o.cells && verdict_counts == o.verdict_counts && error_count == o.error_count;
  }
};

// inclusive ranges; throws on empty ranges
SweepResult batch_sweep(const Int& t_lo, const Int& t_hi, const Int& n_lo, const Int& n_hi,
                        const ClassifyOptions& options = {});

enum class RenderFormat { Text, Json };

std::string render(const ClassificationReport& report, RenderFormat format);
std::string render(const SweepResult& result, RenderFormat format);

// inverse of render(report, Json)
ClassificationReport parse_report_json(const std::string& text);

// Known worked examples: (t, n) -> geometric name and inducing autoequivalence.
struct KnownExample {
  Int t, n;
  std::string name;
  std::string autoequivalence;
  std::string description;
};

std::vector<KnownExample> load_known_examples(const std::string& path);
std::optional<KnownExample> known_examples_lookup(const Int& t, const Int& n,
                                                  const std::vector<KnownExample>& table);

// default data file location baked at configure time; overridable per call
std::string default_known_examples_file();

// Line-oriented "p k" pairs, '#' comments, blank lines ignored.
std::vector<std::pair<Int, Int>> parse_flop_profiles(const std::string& path);

}  // namespace hilbk3
