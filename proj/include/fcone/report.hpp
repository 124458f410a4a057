#pragma once

#include <string>
#include <vector>

#include "fcone/pipeline.hpp"

namespace fcone::cli {

/// Full human-readable report for `analyze`/`verify`.
std::string render_human(const AnalysisReport& rep);
/// Deterministic JSON document (byte-identical for identical spec + seed).
std::string render_machine(const AnalysisReport& rep);

/// Focused views for the single-purpose subcommands.
std::string render_hilbert(const AnalysisReport& rep, bool json);
std::string render_mixedmult(const AnalysisReport& rep, bool json);
std::string render_reductions(const AnalysisReport& rep, bool json);
std::string render_search(const std::vector<SearchHit>& hits, bool json);

}  // namespace fcone::cli
