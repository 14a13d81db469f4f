#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reality/char_table.hpp"
#include "reality/class_table.hpp"
#include "reality/group.hpp"
#include "reality/plesken.hpp"

namespace reality {

struct AnalysisOptions {
  bool with_plesken = false;
  std::size_t element_budget = kDefaultElementBudget;
};

struct CharacterSummary {
  std::uint64_t degree = 0;
  int indicator = 0;
  bool rational = false;
};

/// Everything one group analysis produces: reality counts per class,
/// indicator counts per character, group-level flags and the optional
/// group-algebra Lie dimension block.
struct AnalysisReport {
  std::string spec;
  std::string kind;
  std::uint64_t order = 0;
  std::uint64_t prime = 0;  // modulus used for the character table
  double timing_ms = 0.0;
  std::uint64_t involutions = 0;  // solutions of g^2 = e, identity included
  std::vector<std::uint64_t> class_sizes;
  RealityProfile classes;
  IndicatorProfile characters;
  std::vector<CharacterSummary> character_rows;
  std::vector<std::uint64_t> degrees;
  GroupFlags flags;
  std::optional<PleskenReport> plesken;
};

/// Element budget from the REALITY_BUDGET environment variable; falls back
/// to the default when unset or unparsable.
std::size_t env_element_budget();

/// Full pipeline on an already built group: classes, characters,
/// indicators, flags, optional Lie block. Deterministic for a fixed group
/// enumeration (timing aside).
AnalysisReport analyze_group(const std::string& name, const GroupPtr& g,
                             const AnalysisOptions& opts = {});

/// Parses and builds `spec_text`, then analyzes it.
AnalysisReport analyze(const std::string& spec_text, const AnalysisOptions& opts = {});

/// Aligned text table in the column order total, real, st-real,
/// orthogonal, symplectic, unitary, followed by degrees, flags and the
/// optional Lie block.
std::string report_text(const AnalysisReport& r);

/// JSON object with stable field names and order: spec, kind, order,
/// prime, timing_ms, counts{}, classes[], characters[], flags{},
/// plesken{} (null without --plesken).
std::string report_json_text(const AnalysisReport& r, int indent = 2);

}  // namespace reality
