#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normfilt/analysis.hpp"
#include "normfilt/arith.hpp"
#include "normfilt/input.hpp"

namespace normfilt {

enum class Conclusion {
  verified,
  refuted,        // refuted-with-witness
  inconclusive,   // inconclusive-horizon
  asserted,       // asserted-by-theorem: holds by proof, not certified here
  abstained,      // hypotheses not met, nothing to check
};

std::string to_string(Conclusion c);

struct Witness {
  std::optional<std::size_t> degree;
  std::vector<Exponent> element;  // exponent vector, empty when the witness is a degree only
  std::string note;
};

struct Verdict {
  std::string statement_id;
  bool hypotheses_met = false;
  Conclusion conclusion = Conclusion::abstained;
  bool equality_case = false;
  std::vector<Witness> witnesses;
  std::map<std::string, std::string> numbers;  // named quantities, exact decimal strings
  std::string detail;
};

inline constexpr int kVerdictSchemaVersion = 1;

struct RingTypeReport {
  std::size_t t = 0;
  std::string method;
  /// Every method that applies, with its value.
  std::vector<std::pair<std::string, Integer>> methods;
  bool agree = true;
};

RingTypeReport ring_type_report(const EntryAnalysis& a);

/// Runs the selected statements (all when ids is empty) in report order.
std::vector<Verdict> run_checks(const EntryAnalysis& a, const std::vector<std::string>& ids = {});
Verdict run_check(const EntryAnalysis& a, const std::string& id);

struct TheoremReport {
  std::string source;  // file path or entry name
  std::string name;
  std::optional<EntryAnalysis> analysis;
  std::vector<Verdict> verdicts;
  std::optional<RingTypeReport> type;
  std::string error;  // parse/precondition/horizon failure
  int error_code = 0;
  bool refuted() const;
};

struct CorpusEntry {
  std::string source;
  std::string text;
};

/// Analyzes and checks every entry, in parallel, preserving input order.
std::vector<TheoremReport> run_corpus(const std::vector<CorpusEntry>& entries, const AnalysisOptions& options = {},
                                      const std::vector<std::string>& ids = {});

/// *.nf files of a directory in name order, or the single file given.
std::vector<CorpusEntry> load_corpus(const std::string& path);

}  // namespace normfilt
