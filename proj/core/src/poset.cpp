#include "schroder/poset.hpp"

#include <algorithm>
#include <map>

#include "schroder/error.hpp"
#include "schroder/gen.hpp"
#include "schroder/pattern.hpp"

namespace schroder {
namespace {

void insert_if_valid(WordSet& out, std::string candidate) {
  if (is_valid_word(candidate)) {
    out.insert(SchroderWord::trusted(std::move(candidate)));
  }
}

}  // namespace

WordSet covered_set(const SchroderWord& q) {
  WordSet out;
  const std::string& s = q.letters();
  const std::size_t n = s.size();

  // Drop one H. Deleting a horizontal step never breaks validity; deletions
  // within one flat all give the same word, which the set absorbs.
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != 'H') continue;
    std::string t = s;
    t.erase(i, 1);
    insert_if_valid(out, std::move(t));
  }

  // Drop one U and one D, in either relative position.
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != 'U') continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (s[j] != 'D') continue;
      std::string t;
      t.reserve(n - 2);
      for (std::size_t x = 0; x < n; ++x) {
        if (x != i && x != j) t.push_back(s[x]);
      }
      insert_if_valid(out, std::move(t));
    }
  }
  return out;
}

WordSet covering_set(const SchroderWord& p) {
  WordSet out;
  const std::string& s = p.letters();
  const int n = static_cast<int>(s.size());

  // One extra H at each gap; always valid, same-flat gaps collapse in the set.
  for (int g = 0; g <= n; ++g) {
    std::string t = s;
    t.insert(t.begin() + g, 'H');
    insert_if_valid(out, std::move(t));
  }

  // One extra U and one extra D at every position pair of the extended word,
  // both orders. Any word covering p with the same horizontal count arises
  // from some such placement, so validity filtering plus dedup yields the
  // exact covering set.
  for (int a = 0; a < n + 2; ++a) {
    for (int b = a + 1; b < n + 2; ++b) {
      for (auto [x, y] : {std::pair{'U', 'D'}, std::pair{'D', 'U'}}) {
        std::string t;
        t.reserve(n + 2);
        int src = 0;
        for (int pos = 0; pos < n + 2; ++pos) {
          if (pos == a) {
            t.push_back(x);
          } else if (pos == b) {
            t.push_back(y);
          } else {
            t.push_back(s[src++]);
          }
        }
        insert_if_valid(out, std::move(t));
      }
    }
  }
  return out;
}

WordSet covering_set_filtered(const SchroderWord& p) {
  WordSet out;
  auto stream = gen::schroder_words(p.semilength() + 1);
  while (auto w = stream.next()) {
    if (contains(*w, p)) out.insert(std::move(*w));
  }
  return out;
}

BigCount count_covered_formula(const PathStats& s) {
  const int k = s.factor_count();
  // Sum over i <= j of descents_i * ascents_j via suffix sums of ascents.
  BigCount pair_sum = 0;
  long ascent_suffix = 0;
  for (int i = k - 1; i >= 0; --i) {
    ascent_suffix += s.factors[i].ascents;
    pair_sum += BigCount(s.factors[i].descents) * ascent_suffix;
  }
  BigCount result = pair_sum - s.udu_count - s.dud_count + s.flat_count;
  if (result < 0) {
    throw Error(Errc::InternalError,
                "covered-count formula went negative; stats are inconsistent");
  }
  return result;
}

BigCount count_covering_formula(const PathStats& s) {
  const int k = s.factor_count();
  BigCount pair_sum = 0;
  long phi_suffix = 0;
  for (int i = k - 1; i >= 0; --i) {
    phi_suffix += s.factors[i].semilength();
    pair_sum += BigCount(s.factors[i].semilength()) * phi_suffix;
  }
  return pair_sum + 2 + s.word_length;
}

std::vector<HasseLevel> build_hasse(int max_rank, int rank_cap) {
  if (max_rank < 0 || max_rank > rank_cap) {
    throw Error(Errc::RankBoundExceeded,
                "max_rank " + std::to_string(max_rank) + " outside [0, " +
                    std::to_string(rank_cap) + "]");
  }
  std::vector<HasseLevel> levels;
  levels.reserve(max_rank + 1);
  for (int r = 0; r <= max_rank; ++r) {
    HasseLevel level;
    level.rank = r;
    level.nodes = gen::collect(gen::schroder_words(r));  // already sorted
    level.edges_down.resize(level.nodes.size());
    if (r > 0) {
      const auto& prev = levels.back().nodes;
      for (std::size_t i = 0; i < level.nodes.size(); ++i) {
        for (const SchroderWord& p : covered_set(level.nodes[i])) {
          auto it = std::lower_bound(prev.begin(), prev.end(), p);
          if (it == prev.end() || *it != p) {
            throw Error(Errc::InternalError,
                        "covered word missing from previous level");
          }
          level.edges_down[i].push_back(
              static_cast<std::uint32_t>(it - prev.begin()));
        }
      }
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

std::string hasse_to_dot(const std::vector<HasseLevel>& levels) {
  std::string dot = "digraph schroder_pattern_poset {\n";
  dot += "  rankdir=BT;\n";
  dot += "  node [shape=box];\n";
  for (const HasseLevel& level : levels) {
    dot += "  subgraph cluster_rank_" + std::to_string(level.rank) + " {\n";
    dot += "    label=\"rank " + std::to_string(level.rank) + "\";\n";
    dot += "    rank=same;\n";
    for (const SchroderWord& w : level.nodes) {
      dot += "    \"" + w.letters() + "\"";
      if (w.empty()) dot += " [label=\"ε\"]";  // blank label would vanish
      dot += ";\n";
    }
    dot += "  }\n";
  }
  for (std::size_t r = 1; r < levels.size(); ++r) {
    const HasseLevel& level = levels[r];
    const auto& prev = levels[r - 1].nodes;
    for (std::size_t i = 0; i < level.nodes.size(); ++i) {
      for (std::uint32_t j : level.edges_down[i]) {
        dot += "  \"" + level.nodes[i].letters() + "\" -> \"" +
               prev[j].letters() + "\";\n";
      }
    }
  }
  dot += "}\n";
  return dot;
}

std::vector<SchroderWord> interval(const SchroderWord& p,
                                   const SchroderWord& q, int rank_cap) {
  if (q.semilength() > rank_cap) {
    throw Error(Errc::RankBoundExceeded,
                "interval top has semilength " +
                    std::to_string(q.semilength()) + ", cap is " +
                    std::to_string(rank_cap));
  }
  std::vector<SchroderWord> out;
  if (!contains(q, p)) return out;
  for (int r = p.semilength(); r <= q.semilength(); ++r) {
    auto stream = gen::schroder_words(r);
    while (auto z = stream.next()) {
      if (contains(*z, p) && contains(q, *z)) out.push_back(std::move(*z));
    }
  }
  return out;  // level sets come out sorted, so order is (rank, word)
}

BigInt mobius(const SchroderWord& p, const SchroderWord& q, int rank_cap) {
  if (!contains(q, p)) {
    throw Error(Errc::NotComparable,
                "\"" + p.letters() + "\" is not a pattern of \"" +
                    q.letters() + "\"");
  }
  std::vector<SchroderWord> zs = interval(p, q, rank_cap);
  // zs is sorted by rank, so every pattern of zs[i] inside the interval
  // appears before it; one bottom-up pass fills the table.
  std::vector<BigInt> mu(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (zs[i] == p) {
      mu[i] = 1;
      continue;
    }
    BigInt below = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (contains(zs[i], zs[j])) below += mu[j];
    }
    mu[i] = -below;
  }
  return mu.back();  // q is the unique maximal element, hence last
}

}  // namespace schroder
