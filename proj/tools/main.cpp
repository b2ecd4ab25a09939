// Command line surface of the Schröder pattern poset library: level-set
// generation, avoidance counting, covering analysis, Hasse export, Möbius
// values and the formula-vs-oracle verification matrix.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schroder/schroder.hpp"

namespace {

using schroder::BigCount;
using schroder::PatternFamily;
using schroder::SchroderWord;

constexpr const char* kFamilyTokens = "ud-k|uk-dk|h2-k|u-h2-d|h2-ud";

PatternFamily::Kind family_from_token(const std::string& token) {
  if (token == "ud-k") return PatternFamily::Kind::UdK;
  if (token == "uk-dk") return PatternFamily::Kind::UkDk;
  if (token == "h2-k") return PatternFamily::Kind::H2K;
  if (token == "u-h2-d") return PatternFamily::Kind::UH2D;
  return PatternFamily::Kind::H2Ud;
}

BigCount family_formula(PatternFamily::Kind kind, int n, int k) {
  using schroder::counting::count_avoid_h2k;
  using schroder::counting::count_avoid_h2ud;
  using schroder::counting::count_avoid_udk;
  using schroder::counting::count_avoid_uh2d;
  using schroder::counting::count_avoid_ukdk;
  switch (kind) {
    case PatternFamily::Kind::UdK: return count_avoid_udk(n, k);
    case PatternFamily::Kind::UkDk: return count_avoid_ukdk(n, k);
    case PatternFamily::Kind::H2K: return count_avoid_h2k(n, k);
    case PatternFamily::Kind::UH2D: return count_avoid_uh2d(n, k);
    case PatternFamily::Kind::H2Ud: return count_avoid_h2ud(n, k);
  }
  return 0;
}

int run_generate(int n, bool dyck, std::optional<int> q) {
  schroder::gen::WordStream stream =
      dyck ? schroder::gen::dyck_words(n)
           : q ? schroder::gen::WordStream(
                     schroder::gen::GenSpec::exact_horizontals(n, *q))
               : schroder::gen::schroder_words(n);
  while (auto w = stream.next()) std::cout << w->letters() << '\n';
  return 0;
}

int run_avoiders(const std::string& pattern_text, int n, bool list) {
  SchroderWord pat = SchroderWord::parse(pattern_text);
  if (!list) {
    std::cout << schroder::avoiders_brute(n, pat) << '\n';
    return 0;
  }
  auto stream = schroder::gen::schroder_words(n);
  while (auto w = stream.next()) {
    if (!schroder::contains(*w, pat)) std::cout << w->letters() << '\n';
  }
  return 0;
}

int run_count(const std::string& family_token, int k, int n_from, int n_to,
              const std::string& method) {
  const PatternFamily::Kind kind = family_from_token(family_token);
  const bool formula = method != "brute";
  const bool brute = method != "formula";
  SchroderWord pattern;
  if (brute) pattern = schroder::realize({kind, k});

  if (formula && brute) {
    std::cout << "n,formula,brute,match\n";
  } else {
    std::cout << (formula ? "n,formula\n" : "n,brute\n");
  }
  int mismatches = 0;
  for (int n = n_from; n <= n_to; ++n) {
    std::cout << n;
    BigCount f, b;
    if (formula) {
      f = family_formula(kind, n, k);
      std::cout << ',' << f;
    }
    if (brute) {
      b = schroder::avoiders_brute(n, pattern);
      std::cout << ',' << b;
    }
    if (formula && brute) {
      const bool match = f == b;
      mismatches += match ? 0 : 1;
      std::cout << ',' << (match ? 1 : 0);
    }
    std::cout << '\n';
  }
  return mismatches == 0 ? 0 : 2;
}

int run_covers(const std::string& word_text, const std::string& direction,
               const std::string& method) {
  SchroderWord w = SchroderWord::parse(word_text);
  const bool up = direction == "up";
  const bool want_formula = method != "oracle";
  const bool want_oracle = method != "formula";

  BigCount formula, oracle;
  if (want_formula) {
    schroder::PathStats st = schroder::stats(w);
    formula = up ? schroder::count_covering_formula(st)
                 : schroder::count_covered_formula(st);
  }
  if (want_oracle) {
    oracle = up ? BigCount(schroder::covering_set(w).size())
                : BigCount(schroder::covered_set(w).size());
  }
  if (want_formula && want_oracle) {
    const bool match = formula == oracle;
    std::cout << "formula=" << formula << " oracle=" << oracle
              << " match=" << (match ? "yes" : "no") << '\n';
    return match ? 0 : 2;
  }
  std::cout << (want_formula ? formula : oracle) << '\n';
  return 0;
}

int run_hasse(int max_rank, const std::string& dot_target, int rank_cap) {
  auto levels = schroder::build_hasse(max_rank, rank_cap);
  const std::string dot = schroder::hasse_to_dot(levels);
  if (dot_target == "-") {
    std::cout << dot;
    return 0;
  }
  std::ofstream out(dot_target, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << dot_target << '\n';
    return 1;
  }
  out << dot;
  for (const auto& level : levels) {
    std::size_t edges = 0;
    for (const auto& e : level.edges_down) edges += e.size();
    std::cout << "rank " << level.rank << ": nodes=" << level.nodes.size()
              << " edges_down=" << edges << '\n';
  }
  return 0;
}

int run_mobius(const std::string& from_text, const std::string& to_text,
               int rank_cap) {
  SchroderWord from = SchroderWord::parse(from_text);
  SchroderWord to = SchroderWord::parse(to_text);
  std::cout << schroder::mobius(from, to, rank_cap) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// verify: every formula/oracle pair in the library, swept up to n_max.

struct VerifyReport {
  int checks = 0;
  int failed_checks = 0;

  void line(const std::string& check, long cases, long mismatches) {
    ++checks;
    if (mismatches > 0) ++failed_checks;
    std::cout << (mismatches > 0 ? "FAIL " : "ok   ") << check
              << " cases=" << cases << " mismatches=" << mismatches << '\n';
  }
};

void witness(const std::string& check, const std::string& detail,
             const BigCount& formula, const BigCount& oracle) {
  std::cout << "MISMATCH " << check << ' ' << detail << " formula=" << formula
            << " oracle=" << oracle << '\n';
}

void verify_covered(int n_max, VerifyReport& report) {
  long cases = 0, bad = 0;
  for (int r = 0; r <= n_max; ++r) {
    auto stream = schroder::gen::schroder_words(r);
    while (auto w = stream.next()) {
      ++cases;
      BigCount formula = schroder::count_covered_formula(schroder::stats(*w));
      BigCount oracle(schroder::covered_set(*w).size());
      if (formula != oracle) {
        ++bad;
        witness("covered", "word=" + w->letters(), formula, oracle);
      }
    }
  }
  report.line("covered-formula-vs-deletion-oracle", cases, bad);
}

void verify_covering(int n_max, VerifyReport& report) {
  long cases = 0, bad = 0, filter_bad = 0;
  for (int r = 0; r <= n_max; ++r) {
    auto stream = schroder::gen::schroder_words(r);
    while (auto w = stream.next()) {
      ++cases;
      BigCount formula = schroder::count_covering_formula(schroder::stats(*w));
      schroder::WordSet ins = schroder::covering_set(*w);
      if (formula != BigCount(ins.size())) {
        ++bad;
        witness("covering", "word=" + w->letters(), formula,
                BigCount(ins.size()));
      }
      if (ins != schroder::covering_set_filtered(*w)) {
        ++filter_bad;
        witness("covering-filter", "word=" + w->letters(),
                BigCount(ins.size()), 0);
      }
    }
  }
  report.line("covering-formula-vs-insertion-oracle", cases, bad);
  report.line("covering-insertion-vs-level-filter", cases, filter_bad);
}

void verify_dyck_degeneration(int n_max, VerifyReport& report) {
  long cases = 0, bad = 0;
  for (int r = 0; r <= n_max + 1; ++r) {
    auto stream = schroder::gen::dyck_words(r);
    while (auto w = stream.next()) {
      ++cases;
      schroder::PathStats st = schroder::stats(*w);
      BigCount formula = schroder::count_covered_formula(st);
      BigCount oracle(schroder::covered_set(*w).size());
      if (st.flat_count != 0 || formula != oracle) {
        ++bad;
        witness("dyck-degeneration", "word=" + w->letters(), formula, oracle);
      }
    }
  }
  report.line("covered-formula-dyck-degeneration", cases, bad);
}

void verify_lemma_reduction(int n_max, VerifyReport& report) {
  long cases = 0, bad = 0;
  for (int sp = 0; sp <= 3; ++sp) {
    for (const SchroderWord& pat :
         schroder::gen::collect(schroder::gen::dyck_words(sp))) {
      for (int n = 0; n <= n_max; ++n) {
        ++cases;
        BigCount formula = schroder::counting::schroder_avoiders_via_dyck(n, pat);
        BigCount oracle = schroder::avoiders_brute(n, pat);
        if (formula != oracle) {
          ++bad;
          witness("dyck-reduction",
                  "pattern=" + pat.letters() + " n=" + std::to_string(n),
                  formula, oracle);
        }
      }
    }
  }
  report.line("avoiders-via-dyck-vs-brute", cases, bad);
}

void verify_families(int n_max, VerifyReport& report) {
  const std::vector<std::pair<std::string, PatternFamily::Kind>> families = {
      {"ud-k", PatternFamily::Kind::UdK},   {"uk-dk", PatternFamily::Kind::UkDk},
      {"h2-k", PatternFamily::Kind::H2K},   {"u-h2-d", PatternFamily::Kind::UH2D},
      {"h2-ud", PatternFamily::Kind::H2Ud},
  };
  for (const auto& [token, kind] : families) {
    long cases = 0, bad = 0;
    const int k_min = (kind == PatternFamily::Kind::UH2D ||
                       kind == PatternFamily::Kind::H2Ud)
                          ? 2
                          : 1;
    for (int k = k_min; k <= 4; ++k) {
      SchroderWord pat = schroder::realize({kind, k});
      for (int n = 0; n <= n_max; ++n) {
        ++cases;
        BigCount formula = family_formula(kind, n, k);
        BigCount oracle = schroder::avoiders_brute(n, pat);
        if (formula != oracle) {
          ++bad;
          witness("family",
                  "family=" + token + " k=" + std::to_string(k) +
                      " n=" + std::to_string(n),
                  formula, oracle);
        }
      }
    }
    report.line("avoid-" + token + "-formula-vs-brute", cases, bad);
  }
}

void verify_kernels(int n_max, VerifyReport& report) {
  using namespace schroder::counting;
  long cases = 0, bad = 0;

  for (int h = 0; h <= 10; ++h) {
    ++cases;
    if (catalan(h) != BigCount(schroder::gen::count(schroder::gen::dyck_words(h)))) ++bad;
  }
  report.line("catalan-vs-dyck-enumeration", cases, bad);

  cases = bad = 0;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; i + j <= 10; ++j) {
      ++cases;
      unsigned long enumerated = 0;
      if (i >= j) {
        schroder::gen::PrefixStream prefixes(i + j, i - j);
        while (prefixes.next()) ++enumerated;
      }
      if (ballot(i, j) != BigCount(enumerated)) {
        ++bad;
        witness("ballot", "i=" + std::to_string(i) + " j=" + std::to_string(j),
                ballot(i, j), BigCount(enumerated));
      }
    }
  }
  report.line("ballot-vs-prefix-enumeration", cases, bad);

  cases = bad = 0;
  for (int h = 1; h <= 10; ++h) {
    ++cases;
    BigCount row = 0;
    for (int j = 0; j <= h; ++j) row += narayana(h, j);
    if (row != catalan(h)) ++bad;
  }
  report.line("narayana-row-sums-vs-catalan", cases, bad);

  cases = bad = 0;
  for (int n = 0; n <= 30; ++n) {
    ++cases;
    BigCount via_binomials = 0;  // F(n+1) as a diagonal binomial sum
    for (int k = 0; 2 * k <= n; ++k) via_binomials += binomial(n - k, k);
    if (via_binomials != fibonacci(n + 1)) ++bad;
  }
  report.line("fibonacci-recurrence-vs-binomial-sum", cases, bad);

  cases = bad = 0;
  for (int n = 0; n <= std::min(n_max, 7); ++n) {
    for (int q = 0; q <= n; ++q) {
      ++cases;
      BigCount enumerated(schroder::gen::count(schroder::gen::WordStream(
          schroder::gen::GenSpec::exact_horizontals(n, q))));
      if (schroder_with_q_horizontals(n, q) != enumerated) {
        ++bad;
        witness("snq", "n=" + std::to_string(n) + " q=" + std::to_string(q),
                schroder_with_q_horizontals(n, q), enumerated);
      }
    }
  }
  report.line("schroder-q-horizontals-vs-enumeration", cases, bad);

  cases = bad = 0;
  for (int n = 0; n <= 12; ++n) {
    ++cases;
    if (count_avoid_udk(n, 2) != fibonacci(2 * n + 1)) ++bad;
  }
  report.line("avoid-udud-vs-odd-fibonacci", cases, bad);

  cases = bad = 0;
  for (int n = 3; n <= 12; ++n) {
    ++cases;
    BigCount poly = BigCount(n) * (n + 1) * (BigCount(n) * n + n + 10);
    mpz_divexact_ui(poly.get_mpz_t(), poly.get_mpz_t(), 24);
    if (count_avoid_ukdk(n, 2) != poly + 1) ++bad;
  }
  report.line("avoid-uudd-vs-quartic", cases, bad);

  cases = bad = 0;
  for (int n = 1; n <= 12; ++n) {
    ++cases;
    BigCount twice = catalan(n) * (n + 3);
    mpz_divexact_ui(twice.get_mpz_t(), twice.get_mpz_t(), 2);
    if (count_avoid_h2k(n, 2) != twice) ++bad;
  }
  report.line("avoid-hh-closed-form", cases, bad);

  cases = bad = 0;
  schroder::PowerSeries numerator = schroder::PowerSeries::catalan(12);
  numerator.coeff(1) -= 1;  // C(x) - x
  schroder::PowerSeries expansion = numerator.divided_by_one_minus_x(2);
  for (int n = 0; n <= 12; ++n) {
    ++cases;
    if (expansion.coeff(n) != count_avoid_uh2d(n, 2)) ++bad;
  }
  report.line("avoid-uhd-vs-series-expansion", cases, bad);
}

int run_verify(int n_max) {
  VerifyReport report;
  verify_covered(n_max, report);
  verify_covering(n_max, report);
  verify_dyck_degeneration(n_max, report);
  verify_lemma_reduction(n_max, report);
  verify_families(n_max, report);
  verify_kernels(n_max, report);
  if (report.failed_checks == 0) {
    std::cout << "verify: PASS (" << report.checks << " checks, n-max="
              << n_max << ")\n";
    return 0;
  }
  std::cout << "verify: FAIL (" << report.failed_checks << " of "
            << report.checks << " checks)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schröder pattern poset toolkit"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Enumerate one level set");
  int gen_n = 0;
  bool gen_dyck = false;
  int gen_q = 0;
  generate->add_option("--semilength", gen_n, "Semilength of the level set")
      ->required();
  auto* dyck_flag =
      generate->add_flag("--dyck", gen_dyck, "Horizontal-free words only");
  auto* q_opt = generate->add_option("--q-horizontals", gen_q,
                                     "Words with exactly Q horizontal steps");
  dyck_flag->excludes(q_opt);

  auto* avoiders = app.add_subcommand(
      "avoiders", "Count or list words avoiding a pattern, by brute force");
  std::string av_pattern;
  int av_n = 0;
  bool av_list = false;
  avoiders->add_option("--pattern", av_pattern, "Pattern word (U/D/H)")
      ->required();
  avoiders->add_option("--n", av_n, "Semilength of the scanned level set")
      ->required();
  avoiders->add_flag("--list", av_list, "List the avoiding words");

  auto* count = app.add_subcommand(
      "count", "Closed-formula and/or brute-force avoidance counts as CSV");
  std::string ct_family, ct_method = "both";
  int ct_k = 2, ct_from = 0, ct_to = 0;
  count->add_option("--family", ct_family, kFamilyTokens)
      ->required()
      ->check(CLI::IsMember(
          {"ud-k", "uk-dk", "h2-k", "u-h2-d", "h2-ud"}));
  count->add_option("--k", ct_k, "Family parameter")->required();
  count->add_option("--n-from", ct_from, "First semilength")->required();
  count->add_option("--n-to", ct_to, "Last semilength")->required();
  count->add_option("--method", ct_method, "formula|brute|both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));

  auto* covers = app.add_subcommand(
      "covers", "Covering/covered counts of one word, formula and/or oracle");
  std::string cv_word, cv_direction, cv_method = "both";
  covers->add_option("--word", cv_word, "The word (may be empty)")->required();
  covers->add_option("--direction", cv_direction, "up|down")
      ->required()
      ->check(CLI::IsMember({"up", "down"}));
  covers->add_option("--method", cv_method, "formula|oracle|both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));

  auto* hasse =
      app.add_subcommand("hasse", "Export Hasse diagram levels as DOT");
  int hs_max_rank = 0, hs_cap = schroder::kDefaultHasseRankCap;
  std::string hs_dot;
  hasse->add_option("--max-rank", hs_max_rank, "Top rank to build")->required();
  hasse->add_option("--dot", hs_dot, "Output file, or - for stdout")
      ->required();
  hasse->add_option("--rank-cap", hs_cap, "Safety bound on --max-rank");

  auto* mobius = app.add_subcommand(
      "mobius", "Möbius function value of an interval [from, to]");
  std::string mb_from, mb_to;
  int mb_cap = schroder::kDefaultIntervalRankCap;
  mobius->add_option("--from", mb_from, "Bottom word")->required();
  mobius->add_option("--to", mb_to, "Top word")->required();
  mobius->add_option("--rank-cap", mb_cap, "Safety bound on the top rank");

  auto* verify = app.add_subcommand(
      "verify", "Run the formula-vs-oracle matrix; nonzero exit on mismatch");
  int vf_n_max = 5;
  verify->add_option("--n-max", vf_n_max, "Brute-force sweep bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (generate->parsed()) {
      std::optional<int> q;
      if (q_opt->count() > 0) q = gen_q;
      return run_generate(gen_n, gen_dyck, q);
    }
    if (avoiders->parsed()) return run_avoiders(av_pattern, av_n, av_list);
    if (count->parsed())
      return run_count(ct_family, ct_k, ct_from, ct_to, ct_method);
    if (covers->parsed()) return run_covers(cv_word, cv_direction, cv_method);
    if (hasse->parsed()) return run_hasse(hs_max_rank, hs_dot, hs_cap);
    if (mobius->parsed()) return run_mobius(mb_from, mb_to, mb_cap);
    if (verify->parsed()) return run_verify(vf_n_max);
  } catch (const schroder::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
