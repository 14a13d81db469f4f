#include "reality/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "reality/families.hpp"

namespace reality {

std::size_t env_element_budget() {
  const char* raw = std::getenv("REALITY_BUDGET");
  if (!raw || !*raw) return kDefaultElementBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultElementBudget;
  return static_cast<std::size_t>(v);
}

AnalysisReport analyze_group(const std::string& name, const GroupPtr& g,
                             const AnalysisOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.spec = name;
  r.kind = g->kind();
  r.order = g->order();

  const ClassTable classes = conjugacy_classes(*g);
  r.involutions = involution_solution_count(*g);
  r.class_sizes = classes.sizes;
  r.classes = reality_profile(*g, classes);

  const ModPCharacterTable table = compute_character_table(*g, classes);
  r.prime = table.prime;
  r.characters = indicator_profile(table);
  r.degrees.reserve(table.rows.size());
  r.character_rows.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    r.degrees.push_back(row.degree);
    r.character_rows.push_back({row.degree, row.indicator, row.is_rational});
  }
  r.flags = group_flags(*g, classes, r.classes, table);
  if (opts.with_plesken) r.plesken = plesken_report(*g, table);

  r.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

AnalysisReport analyze(const std::string& spec_text, const AnalysisOptions& opts) {
  return analyze_group(spec_text, build_group(spec_text, opts.element_budget), opts);
}

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

void append_aligned_pair(std::string& out, const std::vector<std::string>& heads,
                         const std::vector<std::string>& vals) {
  std::vector<std::size_t> width(heads.size());
  for (std::size_t i = 0; i < heads.size(); ++i) width[i] = std::max(heads[i].size(), vals[i].size());
  for (int line = 0; line < 2; ++line) {
    const auto& cells = line == 0 ? heads : vals;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += std::string(width[i] - cells[i].size(), ' ') + cells[i];
    }
    out += '\n';
  }
}

}  // namespace

std::string report_text(const AnalysisReport& r) {
  std::string out;
  out += "group    " + r.spec + "\n";
  out += "kind     " + r.kind + "\n";
  out += "order    " + std::to_string(r.order) + "\n";
  out += "prime    " + std::to_string(r.prime) + "\n";
  {
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << r.timing_ms;
    out += "time     " + ms.str() + " ms\n";
  }
  out += '\n';

  const std::vector<std::string> heads = {"total",      "real",       "st-real",
                                          "orthogonal", "symplectic", "unitary"};
  const std::vector<std::string> vals = {
      std::to_string(r.classes.total_classes),      std::to_string(r.classes.real_classes),
      std::to_string(r.classes.strongly_real_classes), std::to_string(r.characters.orthogonal),
      std::to_string(r.characters.symplectic),      std::to_string(r.characters.unitary)};
  append_aligned_pair(out, heads, vals);
  out += '\n';

  out += "rational classes  " + std::to_string(r.classes.rational_classes) + "\n";
  out += "square roots of identity  " + std::to_string(r.involutions) + "\n";
  out += "degrees  ";
  for (std::size_t i = 0; i < r.degrees.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(r.degrees[i]);
  }
  out += '\n';
  out += "flags    ambivalent=" + yesno(r.flags.ambivalent) +
         " strongly_real=" + yesno(r.flags.strongly_real_group) +
         " totally_orthogonal=" + yesno(r.flags.totally_orthogonal) +
         " rational=" + yesno(r.flags.rational_group) +
         " sylow2_abelian=" + yesno(r.flags.sylow2_abelian) +
         " generated_by_involutions=" + yesno(r.flags.generated_by_involutions) +
         " generated_by_2elements=" + yesno(r.flags.generated_by_2elements) + "\n";
  if (r.plesken) {
    out += "lie      dim=" + std::to_string(r.plesken->dim) +
           " semisimple=" + yesno(r.plesken->semisimple) +
           " bruteforce=" +
           (r.plesken->bruteforce_checked ? std::to_string(r.plesken->dim_bruteforce)
                                          : std::string("skipped")) +
           "\n";
  }
  return out;
}

std::string report_json_text(const AnalysisReport& r, int indent) {
  nlohmann::ordered_json j;
  j["spec"] = r.spec;
  j["kind"] = r.kind;
  j["order"] = r.order;
  j["prime"] = r.prime;
  j["timing_ms"] = r.timing_ms;
  j["involutions"] = r.involutions;
  j["counts"] = {{"total", r.classes.total_classes},
                 {"real", r.classes.real_classes},
                 {"strongly_real", r.classes.strongly_real_classes},
                 {"rational", r.classes.rational_classes},
                 {"orthogonal", r.characters.orthogonal},
                 {"symplectic", r.characters.symplectic},
                 {"unitary", r.characters.unitary}};
  j["classes"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < r.class_sizes.size(); ++k)
    j["classes"].push_back({{"size", r.class_sizes[k]},
                            {"real", bool(r.classes.real_flags[k])},
                            {"strongly_real", bool(r.classes.strongly_real_flags[k])},
                            {"rational", bool(r.classes.rational_flags[k])}});
  j["characters"] = nlohmann::ordered_json::array();
  for (const auto& row : r.character_rows)
    j["characters"].push_back(
        {{"degree", row.degree}, {"indicator", row.indicator}, {"rational", row.rational}});
  j["flags"] = {{"ambivalent", r.flags.ambivalent},
                {"strongly_real", r.flags.strongly_real_group},
                {"totally_orthogonal", r.flags.totally_orthogonal},
                {"rational", r.flags.rational_group},
                {"sylow2_abelian", r.flags.sylow2_abelian},
                {"generated_by_involutions", r.flags.generated_by_involutions},
                {"generated_by_2elements", r.flags.generated_by_2elements}};
  if (r.plesken)
    j["plesken"] = {{"dim", r.plesken->dim},
                    {"dim_bruteforce", r.plesken->dim_bruteforce},
                    {"bruteforce_checked", r.plesken->bruteforce_checked},
                    {"semisimple", r.plesken->semisimple}};
  else
    j["plesken"] = nullptr;
  return j.dump(indent);
}

}  // namespace reality
