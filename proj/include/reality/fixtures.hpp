#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reality/group.hpp"
#include "reality/report.hpp"

namespace reality {

/// One expected table row. Count columns use -1 for entries the row does
/// not pin down. `source` records provenance: "reference" for values
/// transcribed from the source tables, "derived" for values computed here
/// from the closed forms, "unverified" for transcribed rows outside every
/// implemented check's reach. `check` names the verification route:
/// "pipeline" (full computation), "formula" (closed forms only) or "none".
struct FixtureRow {
  std::string selector;  // an | covers | sl2 | gl
  std::string name;
  std::string spec;  // constructible spec text, or "-"
  std::int64_t total = -1;
  std::int64_t real = -1;
  std::int64_t strongly_real = -1;
  std::int64_t orthogonal = -1;
  std::int64_t symplectic = -1;
  std::int64_t unitary = -1;
  std::string source;  // reference | derived | unverified
  std::string check;   // pipeline | formula | none
};

/// The embedded expected-table rows, in file order.
const std::vector<FixtureRow>& paper_fixtures();

/// Canonical serialization of the embedded rows; the repository file
/// data/paper_fixtures.txt must match it byte for byte (the format is an
/// API, documented in the file header and the README).
std::string fixture_file_text();

/// Parses the serialization; comments and blank lines are skipped.
/// Throws ParseError on malformed rows.
std::vector<FixtureRow> parse_fixture_file(const std::string& text);

struct VerifyResult {
  std::string name;
  bool checked = false;  // false: reported only (unverified row)
  bool passed = false;
  std::string detail;
};

struct VerifySummary {
  std::string selector;
  std::vector<VerifyResult> results;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool all_passed() const { return failed == 0; }
};

/// Runs the checks one selector names: "an", "covers", "sl2", "gl"
/// (fixture rows), "plesken", "inclusions" (corpus sweeps) or "all".
/// Check failures are data in the summary, never exceptions.
VerifySummary verify_paper(const std::string& selector,
                           std::size_t element_budget = kDefaultElementBudget);

/// The standing corpus of small named groups (orders <= 720), every family
/// plus products; drives the invariant sweeps.
const std::vector<std::string>& corpus_specs();

/// Analyses of the whole corpus (with the Lie block), computed once per
/// budget and cached for the process lifetime.
const std::vector<AnalysisReport>& corpus_reports(std::size_t element_budget = kDefaultElementBudget);

/// Builds (C_2 x Q_8) x| C_2 over every involutive automorphism of
/// C_2 x Q_8 and returns the analyses of the groups that are strongly real
/// but not totally orthogonal. Deterministic enumeration order.
std::vector<AnalysisReport> search_order32(std::size_t element_budget = kDefaultElementBudget);

}  // namespace reality
