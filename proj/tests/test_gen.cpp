#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "schroder/gen.hpp"
#include "schroder/word.hpp"

using namespace schroder;

TEST_CASE("level sizes are the large Schröder numbers") {
  const std::vector<std::uint64_t> expected = {1, 2, 6, 22, 90, 394, 1806, 8558};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(gen::count(gen::schroder_words(static_cast<int>(n))) == expected[n]);
  }
}

TEST_CASE("level 0 is the empty word, level 2 is the known six") {
  auto level0 = gen::collect(gen::schroder_words(0));
  REQUIRE(level0.size() == 1);
  CHECK(level0[0].empty());

  std::vector<std::string> got;
  for (const auto& w : gen::collect(gen::schroder_words(2))) {
    got.push_back(w.letters());
  }
  CHECK(got == std::vector<std::string>{"HH", "HUD", "UDH", "UDUD", "UHD",
                                        "UUDD"});
}

TEST_CASE("levels match filtering the whole 3^l universe") {
  // Independent oracle: enumerate every U/D/H string up to the maximum
  // word length and keep the valid words of the wanted semilength.
  for (int n = 0; n <= 3; ++n) {
    std::vector<std::string> expected;
    std::vector<std::string> universe{""};
    for (int len = 0; len <= 2 * n; ++len) {
      for (const std::string& s : universe) {
        if (is_valid_word(s) &&
            SchroderWord::parse(s).semilength() == n) {
          expected.push_back(s);
        }
      }
      std::vector<std::string> next;
      for (const std::string& s : universe) {
        for (char c : {'D', 'H', 'U'}) next.push_back(s + c);
      }
      universe = std::move(next);
    }
    std::sort(expected.begin(), expected.end());

    std::vector<std::string> got;
    for (const auto& w : gen::collect(gen::schroder_words(n))) {
      got.push_back(w.letters());
    }
    REQUIRE(got == expected);
  }
}

TEST_CASE("streams are strictly increasing, duplicate-free and valid") {
  for (int n = 0; n <= 6; ++n) {
    auto stream = gen::schroder_words(n);
    std::optional<SchroderWord> prev;
    std::uint64_t seen = 0;
    while (auto w = stream.next()) {
      ++seen;
      if (prev) REQUIRE(*prev < *w);  // strict order implies no duplicates
      REQUIRE(is_valid_word(w->letters()));
      REQUIRE(w->semilength() == n);
      prev = std::move(w);
    }
    CHECK(seen == gen::count(gen::schroder_words(n)));
  }
}

TEST_CASE("dyck streams") {
  CHECK(gen::count(gen::dyck_words(0)) == 1);
  CHECK(gen::count(gen::dyck_words(3)) == 5);
  CHECK(gen::count(gen::dyck_words(4)) == 14);

  // Horizontal-free slice of the full level equals the Dyck level.
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t horizontal_free = 0;
    auto stream = gen::schroder_words(n);
    while (auto w = stream.next()) {
      if (w->horizontal_count() == 0) ++horizontal_free;
    }
    CHECK(horizontal_free == gen::count(gen::dyck_words(n)));
  }
}

TEST_CASE("exact-horizontal streams partition the level") {
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (int q = 0; q <= n; ++q) {
      total += gen::count(
          gen::WordStream(gen::GenSpec::exact_horizontals(n, q)));
    }
    CHECK(total == gen::count(gen::schroder_words(n)));
  }

  auto only_hh = gen::collect(
      gen::WordStream(gen::GenSpec::exact_horizontals(2, 2)));
  REQUIRE(only_hh.size() == 1);
  CHECK(only_hh[0].letters() == "HH");

  for (const auto& w :
       gen::collect(gen::WordStream(gen::GenSpec::exact_horizontals(4, 2)))) {
    CHECK(w.horizontal_count() == 2);
  }
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(gen::GenSpec::all(-1), Error);
  CHECK_THROWS_AS(gen::GenSpec::exact_horizontals(2, 3), Error);
  CHECK_THROWS_AS(gen::GenSpec::exact_horizontals(2, -1), Error);
  CHECK_THROWS_AS(gen::PrefixStream(-1, 0), Error);
  CHECK_THROWS_AS(gen::PrefixStream(3, -1), Error);
}

TEST_CASE("streams are lazy") {
  auto stream = gen::schroder_words(12);  // far too many to materialize
  CHECK(stream.next().has_value());
  CHECK(stream.next().has_value());
  CHECK(stream.next().has_value());
}

TEST_CASE("dyck prefixes") {
  auto drain = [](gen::PrefixStream s) {
    std::vector<std::string> out;
    while (auto p = s.next()) out.push_back(*p);
    return out;
  };

  CHECK(drain(gen::PrefixStream(0, 0)) == std::vector<std::string>{""});
  CHECK(drain(gen::PrefixStream(2, 0)) == std::vector<std::string>{"UD"});
  CHECK(drain(gen::PrefixStream(3, 1)) ==
        std::vector<std::string>{"UDU", "UUD"});
  CHECK(drain(gen::PrefixStream(3, 2)).empty());  // parity mismatch
  CHECK(drain(gen::PrefixStream(2, 4)).empty());  // unreachable height

  for (int len = 0; len <= 7; ++len) {
    for (int h = 0; h <= len; ++h) {
      std::set<std::string> seen;
      for (const std::string& p : drain(gen::PrefixStream(len, h))) {
        REQUIRE(p.size() == static_cast<std::size_t>(len));
        int height = 0;
        for (char c : p) {
          REQUIRE((c == 'U' || c == 'D'));
          height += c == 'U' ? 1 : -1;
          REQUIRE(height >= 0);
        }
        REQUIRE(height == h);
        REQUIRE(seen.insert(p).second);  // no duplicates
      }
    }
  }
}
