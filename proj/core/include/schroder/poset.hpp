#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "schroder/bigint.hpp"
#include "schroder/stats.hpp"
#include "schroder/word.hpp"

namespace schroder {

using WordSet = std::set<SchroderWord>;

/// The words covered by q (rank one below, pattern of q). Ground-truth
/// enumeration: apply every single-H deletion and every (U,D) pair
/// deletion, keep the valid results, deduplicate.
WordSet covered_set(const SchroderWord& q);

/// The words covering p (rank one above, containing p). Ground-truth
/// enumeration: place one extra H, or one extra U and one extra D in either
/// order, at every position pair of the extended word; keep the valid
/// results, deduplicate. Every covering word arises this way because any
/// embedding of p into a cover leaves exactly {H} or {U, D} unmatched.
WordSet covering_set(const SchroderWord& p);

/// Same set computed the slow, independent way: filter the full level set
/// of rank(p)+1 by containment of p.
WordSet covering_set_filtered(const SchroderWord& p);

/// Closed count of words covered by the word with these stats:
/// sum over factor pairs i<=j of descents_i * ascents_j, minus the UDU and
/// DUD occurrence counts, plus the flat count. Equals |covered_set|.
/// A negative intermediate would mean broken stats: Errc::InternalError.
BigCount count_covered_formula(const PathStats& s);

/// Closed count of words covering the word with these stats:
/// 2 + word length + sum over factor pairs i<=j of the factor semilength
/// products. Equals |covering_set|.
BigCount count_covering_formula(const PathStats& s);

/// One rank of the Hasse diagram. nodes are sorted lexicographically;
/// edges_down[i] lists indices into the previous level's nodes, the covered
/// set of nodes[i].
struct HasseLevel {
  int rank = 0;
  std::vector<SchroderWord> nodes;
  std::vector<std::vector<std::uint32_t>> edges_down;
};

inline constexpr int kDefaultHasseRankCap = 6;

/// Levels 0..max_rank of the Hasse diagram. The level sets grow like the
/// large Schröder numbers, hence the cap; raise it deliberately.
/// Throws Errc::RankBoundExceeded when max_rank is negative or above the cap.
std::vector<HasseLevel> build_hasse(int max_rank,
                                    int rank_cap = kDefaultHasseRankCap);

/// Graphviz DOT rendering: node ids are the serialized words, one edge per
/// covering pair (cover -> covered), one cluster per rank. Output is
/// byte-stable for a given diagram.
std::string hasse_to_dot(const std::vector<HasseLevel>& levels);

inline constexpr int kDefaultIntervalRankCap = 7;

/// The interval [p, q] = {z : p <= z <= q}, sorted by (rank, word).
/// Empty when p is not a pattern of q. Interval computation scans every
/// level set up to rank(q), hence the cap on q's semilength.
std::vector<SchroderWord> interval(const SchroderWord& p,
                                   const SchroderWord& q,
                                   int rank_cap = kDefaultIntervalRankCap);

/// Möbius function of the interval [p, q], by the standard recursion
/// mu(p,p) = 1, mu(p,q) = -sum of mu(p,z) over p <= z < q. The paper poset
/// has no known closed Möbius formula; this is exploratory computation.
/// Throws Errc::NotComparable when p is not a pattern of q.
BigInt mobius(const SchroderWord& p, const SchroderWord& q,
              int rank_cap = kDefaultIntervalRankCap);

}  // namespace schroder
