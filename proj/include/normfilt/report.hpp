#pragma once

#include <string>
#include <vector>

#include "normfilt/analysis.hpp"
#include "normfilt/theorems.hpp"

namespace normfilt {

enum class Format { json, csv, md };

/// Parses "json", "csv" or "md".
Format parse_format(const std::string& s);

/// Length tables: normal, adic and (when J is a reduction) G(E), indexed by n.
std::string render_table(const EntryAnalysis& a, Format f);
/// Normal and adic Hilbert coefficients with g_s.
std::string render_coeffs(const EntryAnalysis& a, Format f);
/// Sally lengths, their coefficients, reduction number and Valabrega-Valla status.
std::string render_sally(const EntryAnalysis& a, Format f);
/// Verdict lists for one or more entries; the JSON form carries the schema version.
std::string render_verdicts(const std::vector<TheoremReport>& reports, Format f);

/// Fixed CSV header of render_verdicts.
inline constexpr const char* kVerdictCsvHeader =
    "source,statement_id,hypotheses_met,conclusion,equality_case,witness_degree,witness_element,detail";

}  // namespace normfilt
