#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "reality/char_table.hpp"
#include "reality/class_table.hpp"
#include "reality/counting.hpp"
#include "reality/errors.hpp"
#include "reality/families.hpp"
#include "reality/fixtures.hpp"
#include "reality/report.hpp"

namespace {

using namespace reality;

void print_chartable(const std::string& spec, bool raw_modp) {
  const GroupPtr g = build_group(spec, env_element_budget());
  const ClassTable t = conjugacy_classes(*g);
  const ModPCharacterTable table = compute_character_table(*g, t);

  std::cout << "group    " << spec << "\n";
  std::cout << "order    " << g->order() << "\n";
  std::cout << "classes  " << t.count() << "\n";
  std::cout << "prime    " << table.prime << "\n\n";

  std::cout << "class      ";
  for (std::size_t k = 0; k < t.count(); ++k) std::cout << (k ? " " : "") << k;
  std::cout << "\nsize       ";
  for (std::size_t k = 0; k < t.count(); ++k) std::cout << (k ? " " : "") << t.sizes[k];
  std::cout << "\nrep order  ";
  for (std::size_t k = 0; k < t.count(); ++k)
    std::cout << (k ? " " : "") << g->element_order(t.reps[k]);
  std::cout << "\n\n";

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const CharacterRow& row = table.rows[i];
    std::cout << "chi" << i << "  degree " << row.degree << "  indicator "
              << (row.indicator > 0 ? "+1" : row.indicator < 0 ? "-1" : " 0")
              << (row.is_real ? "  real" : "  non-real")
              << (row.is_rational ? "  rational" : "");
    if (raw_modp) {
      std::cout << "  [";
      for (std::size_t k = 0; k < row.values.size(); ++k)
        std::cout << (k ? " " : "") << row.values[k];
      std::cout << "]";
    }
    std::cout << "\n";
  }
  if (raw_modp)
    std::cout << "\nvalues are residues mod " << table.prime
              << "; degrees and indicators are exact integers\n";
}

int run(int argc, char** argv) {
  CLI::App app{"conjugacy class reality and character indicator analyzer"};
  app.require_subcommand(1);

  std::string spec;
  std::string selector = "all";
  bool with_plesken = false;
  bool as_json = false;
  bool raw_modp = false;
  unsigned arg_n = 0, arg_q = 0;

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "classify classes and characters");
  cmd_analyze->add_option("spec", spec, "group spec, e.g. A7, SL(2,5), C2xQ8, perm:(1 2),(1 2 3)")
      ->required();
  cmd_analyze->add_flag("--plesken", with_plesken, "include the group-algebra Lie dimension block");
  cmd_analyze->add_flag("--json", as_json, "emit a JSON object instead of text");

  CLI::App* cmd_chartable = app.add_subcommand("chartable", "print character table data");
  cmd_chartable->add_option("spec", spec, "group spec")->required();
  cmd_chartable->add_flag("--raw-modp", raw_modp, "print the residue rows as well");

  CLI::App* cmd_count = app.add_subcommand("count", "closed-form counting formulas");
  cmd_count->require_subcommand(1);
  CLI::App* cmd_count_gl = cmd_count->add_subcommand("gl", "GL_n(F_q) class counts");
  cmd_count_gl->add_option("n", arg_n, "dimension")->required();
  cmd_count_gl->add_option("q", arg_q, "field size")->required();
  CLI::App* cmd_count_an = cmd_count->add_subcommand("an", "alternating group class counts");
  cmd_count_an->add_option("n", arg_n, "degree")->required();
  CLI::App* cmd_count_sl2 = cmd_count->add_subcommand("sl2", "SL_2(F_q) reality profile");
  cmd_count_sl2->add_option("q", arg_q, "field size")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the expected-table checks");
  cmd_verify->require_subcommand(1);
  CLI::App* cmd_verify_paper = cmd_verify->add_subcommand("paper", "expected tables and sweeps");
  cmd_verify_paper->add_option("selector", selector,
                               "an | covers | sl2 | gl | plesken | inclusions | all");

  CLI::App* cmd_search = app.add_subcommand("search", "hunt for distinguished examples");
  cmd_search->require_subcommand(1);
  CLI::App* cmd_search_32 =
      cmd_search->add_subcommand("order32", "strongly real, not totally orthogonal, order 32");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_analyze->parsed()) {
    AnalysisOptions opts;
    opts.with_plesken = with_plesken;
    opts.element_budget = env_element_budget();
    const AnalysisReport r = analyze(spec, opts);
    if (as_json)
      std::cout << report_json_text(r) << "\n";
    else
      std::cout << report_text(r);
    return 0;
  }

  if (cmd_chartable->parsed()) {
    print_chartable(spec, raw_modp);
    return 0;
  }

  if (cmd_count->parsed()) {
    if (cmd_count_gl->parsed()) {
      std::cout << "classes        " << gl_class_count(arg_n, arg_q) << "\n";
      std::cout << "real classes   " << gl_real_class_count(arg_n, arg_q) << "\n";
    } else if (cmd_count_an->parsed()) {
      const AnCounts c = an_counts(arg_n);
      std::cout << "classes        " << c.total << "\n";
      std::cout << "real classes   " << c.real << "\n";
      std::cout << "ambivalent     " << (an_is_ambivalent(arg_n) ? "yes" : "no") << "\n";
    } else if (cmd_count_sl2->parsed()) {
      const Sl2Profile p = sl2_expected_profile(arg_q);
      std::cout << "classes            " << p.classes << "\n";
      std::cout << "real classes       " << p.real << "\n";
      std::cout << "strongly real      " << p.strongly_real << "\n";
      std::cout << "has symplectic     " << (p.has_symplectic ? "yes" : "no") << "\n";
      std::cout << "all orthogonal     " << (p.ortho_ambivalent ? "yes" : "no") << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed() && cmd_verify_paper->parsed()) {
    const VerifySummary s = verify_paper(selector, env_element_budget());
    for (const auto& res : s.results) {
      const char* tag = !res.checked ? "[SKIP]" : res.passed ? "[PASS]" : "[FAIL]";
      std::cout << tag << " " << res.name << ": " << res.detail << "\n";
    }
    std::cout << "summary: " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
              << " reported unverified\n";
    return s.all_passed() ? 0 : 1;
  }

  if (cmd_search->parsed() && cmd_search_32->parsed()) {
    const auto hits = search_order32(env_element_budget());
    std::cout << hits.size() << " hit(s)\n";
    for (const auto& r : hits) std::cout << "\n" << report_text(r);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const reality::BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const reality::TooLarge& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const reality::SearchExhausted& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const reality::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const reality::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
