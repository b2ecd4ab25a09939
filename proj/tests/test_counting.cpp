#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "schroder/counting.hpp"
#include "schroder/gen.hpp"
#include "schroder/pattern.hpp"
#include "schroder/series.hpp"

using namespace schroder;
using namespace schroder::counting;

namespace {

SchroderWord w(const std::string& text) { return SchroderWord::parse(text); }

void check_row(const char* label, BigCount (*fn)(int, int), int k,
               const std::vector<long>& expected) {
  for (std::size_t n = 0; n < expected.size(); ++n) {
    INFO(label << " k=" << k << " n=" << n);
    CHECK(fn(static_cast<int>(n), k) == expected[n]);
  }
}

}  // namespace

TEST_CASE("binomial conventions") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == BigCount("118264581564861424"));
}

TEST_CASE("multiset coefficient conventions") {
  CHECK(multiset(3, 2) == 6);  // {11,12,13,22,23,33}
  CHECK(multiset(0, 0) == 1);
  CHECK(multiset(5, 0) == 1);
  CHECK(multiset(0, 3) == 0);
  CHECK(multiset(-2, 1) == 0);
  CHECK(multiset(1, 7) == 1);
}

TEST_CASE("catalan numbers against the dyck generator") {
  const std::vector<long> expected = {1, 1, 2, 5, 14, 42};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(catalan(static_cast<int>(n)) == expected[n]);
  }
  CHECK(catalan(-1) == 0);
  for (int h = 0; h <= 8; ++h) {
    CHECK(catalan(h) == BigCount(gen::count(gen::dyck_words(h))));
  }
}

TEST_CASE("narayana numbers and their row sums") {
  CHECK(narayana(0, 0) == 1);
  CHECK(narayana(3, 0) == 0);
  CHECK(narayana(0, 2) == 0);
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(3, 5) == 0);
  for (int h = 1; h <= 10; ++h) {
    BigCount row = 0;
    for (int j = 0; j <= h; ++j) row += narayana(h, j);
    CHECK(row == catalan(h));
  }
}

TEST_CASE("ballot numbers count dyck prefixes") {
  CHECK(ballot(0, 0) == 1);
  CHECK(ballot(1, 1) == 1);
  CHECK(ballot(3, 2) == 5);
  CHECK(ballot(2, 3) == 0);
  for (int i = 0; i + 0 <= 8; ++i) {
    for (int j = 0; i + j <= 8; ++j) {
      std::uint64_t enumerated = 0;
      if (i >= j) {
        gen::PrefixStream prefixes(i + j, i - j);
        while (prefixes.next()) ++enumerated;
      }
      INFO("i=" << i << " j=" << j);
      CHECK(ballot(i, j) == BigCount(static_cast<unsigned long>(enumerated)));
    }
  }
}

TEST_CASE("fibonacci via recurrence matches the binomial-diagonal sum") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(7) == 13);
  CHECK(fibonacci(0) == 0);
  for (int n = 0; n <= 30; ++n) {
    BigCount diagonal = 0;
    for (int k = 0; 2 * k <= n; ++k) diagonal += binomial(n - k, k);
    CHECK(diagonal == fibonacci(n + 1));
  }
}

TEST_CASE("dyck prefix counts") {
  CHECK(dyck_prefixes_ending_at(0, 0) == 1);
  CHECK(dyck_prefixes_ending_at(2, 0) == 1);
  CHECK(dyck_prefixes_ending_at(3, 1) == 2);
  CHECK(dyck_prefixes_ending_at(3, 2) == 0);  // parity mismatch
  CHECK(dyck_prefixes_ending_at(2, 4) == 0);
  for (int len = 0; len <= 8; ++len) {
    for (int h = 0; h <= len; ++h) {
      gen::PrefixStream prefixes(len, h);
      std::uint64_t enumerated = 0;
      while (prefixes.next()) ++enumerated;
      CHECK(dyck_prefixes_ending_at(len, h) ==
            BigCount(static_cast<unsigned long>(enumerated)));
    }
  }
}

TEST_CASE("words with a fixed number of horizontals") {
  CHECK(schroder_with_q_horizontals(2, 2) == 1);
  CHECK(schroder_with_q_horizontals(3, 1) == 10);
  for (int n = 0; n <= 6; ++n) {
    CHECK(schroder_with_q_horizontals(n, 0) == catalan(n));
    for (int q = 0; q <= n; ++q) {
      CHECK(schroder_with_q_horizontals(n, q) ==
            BigCount(gen::count(
                gen::WordStream(gen::GenSpec::exact_horizontals(n, q)))));
    }
  }
  CHECK_THROWS_AS(schroder_with_q_horizontals(2, 3), Error);
  CHECK_THROWS_AS(schroder_with_q_horizontals(-1, 0), Error);
}

TEST_CASE("dyck avoiders") {
  CHECK(dyck_avoiders(0, w("UD")) == 1);
  for (int h = 1; h <= 4; ++h) CHECK(dyck_avoiders(h, w("UD")) == 0);
  CHECK(dyck_avoiders(3, w("UDUD")) == 1);
  CHECK(dyck_avoiders(4, w("UUDD")) == 0);
  CHECK_THROWS_AS(dyck_avoiders(3, w("H")), Error);
}

TEST_CASE("schroder avoiders of a dyck pattern via the reduction") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(schroder_avoiders_via_dyck(n, w("UD")) == 1);
  }
  CHECK_THROWS_AS(schroder_avoiders_via_dyck(3, w("UHD")), Error);

  // reduction equals direct brute force for small dyck patterns
  for (int sp = 0; sp <= 2; ++sp) {
    for (const auto& pat : gen::collect(gen::dyck_words(sp))) {
      for (int n = 0; n <= 5; ++n) {
        INFO("pattern=" << pat.letters() << " n=" << n);
        CHECK(schroder_avoiders_via_dyck(n, pat) == avoiders_brute(n, pat));
      }
    }
  }
  CHECK(schroder_avoiders_via_dyck(4, w("UUDUDD")) ==
        avoiders_brute(4, w("UUDUDD")));
}

TEST_CASE("avoiding (UD)^k") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(count_avoid_udk(n, 1) == 1);  // only H^n survives
  }
  check_row("udk", count_avoid_udk, 2, {1, 2, 5, 13, 34, 89, 233, 610});
  check_row("udk", count_avoid_udk, 3, {1, 2, 6, 21, 76, 272, 950, 3232});
  for (int n = 0; n <= 12; ++n) {
    CHECK(count_avoid_udk(n, 2) == fibonacci(2 * n + 1));
  }
  CHECK(count_avoid_udk(4, 3) == avoiders_brute(4, w("UDUDUD")));
  CHECK_THROWS_AS(count_avoid_udk(3, 0), Error);
}

TEST_CASE("avoiding U^k D^k") {
  check_row("ukdk", count_avoid_ukdk, 2, {1, 2, 5, 12, 26, 51, 92, 155});
  check_row("ukdk", count_avoid_ukdk, 3, {1, 2, 6, 21, 73, 234, 678, 1781});
  CHECK(count_avoid_ukdk(3, 2) == 12);
  for (long n = 3; n <= 12; ++n) {
    CHECK(count_avoid_ukdk(static_cast<int>(n), 2) ==
          1 + n * (n + 1) * (n * n + n + 10) / 24);
  }
  CHECK(count_avoid_ukdk(5, 3) == avoiders_brute(5, w("UUUDDD")));
}

TEST_CASE("avoiding H^k") {
  for (int n = 0; n <= 8; ++n) CHECK(count_avoid_h2k(n, 1) == catalan(n));
  check_row("h2k", count_avoid_h2k, 2, {1, 2, 5, 15, 49, 168, 594, 2145});
  check_row("h2k", count_avoid_h2k, 3, {1, 2, 6, 21, 79, 308, 1224, 4917});
  for (int n = 1; n <= 12; ++n) {
    CHECK(2 * count_avoid_h2k(n, 2) == (n + 3) * catalan(n));
  }
}

TEST_CASE("avoiding U H^{k-1} D") {
  check_row("uh2d", count_avoid_uh2d, 2,
            {1, 2, 5, 13, 35, 99, 295, 920, 2975, 9892, 33605, 116104,
             406615});
  check_row("uh2d", count_avoid_uh2d, 3, {1, 2, 6, 21, 75, 269, 973, 3558});
  CHECK(count_avoid_uh2d(0, 5) == 1);
  CHECK(count_avoid_uh2d(5, 3) == avoiders_brute(5, w("UHHD")));
  CHECK_THROWS_AS(count_avoid_uh2d(3, 1), Error);
}

TEST_CASE("avoiding H^{k-1} U D") {
  check_row("h2ud", count_avoid_h2ud, 2, {1, 2, 5, 14, 42, 132, 429, 1430});
  check_row("h2ud", count_avoid_h2ud, 3, {1, 2, 6, 21, 78, 297, 1144, 4433});
  CHECK(count_avoid_h2ud(1, 2) == 2);
  CHECK(count_avoid_h2ud(4, 2) == avoiders_brute(4, w("HUD")));
  CHECK(count_avoid_h2ud(4, 3) == avoiders_brute(4, w("HHUD")));
  CHECK_THROWS_AS(count_avoid_h2ud(3, 1), Error);
}

TEST_CASE("power series arithmetic") {
  PowerSeries c = PowerSeries::catalan(12);
  CHECK(c.coeff(0) == 1);
  CHECK(c.coeff(5) == 42);

  // the defining equation C(x) = 1 + x C(x)^2, truncated
  PowerSeries square = c * c;
  PowerSeries rebuilt(12);
  rebuilt.coeff(0) = 1;
  for (int i = 1; i <= 12; ++i) rebuilt.coeff(i) = square.coeff(i - 1);
  CHECK(rebuilt == c);

  // dividing by (1-x) is prefix summation
  PowerSeries ones(3);
  for (int i = 0; i <= 3; ++i) ones.coeff(i) = 1;
  PowerSeries sums = ones.divided_by_one_minus_x();
  CHECK(sums.coeff(3) == 4);

  CHECK_THROWS_AS(PowerSeries(3) + PowerSeries(4), Error);
}

TEST_CASE("series expansion matches the U H D avoidance row") {
  PowerSeries numerator = PowerSeries::catalan(12);
  numerator.coeff(1) -= 1;  // C(x) - x
  PowerSeries expansion = numerator.divided_by_one_minus_x(2);
  for (int n = 0; n <= 12; ++n) {
    CHECK(expansion.coeff(n) == count_avoid_uh2d(n, 2));
  }
}
