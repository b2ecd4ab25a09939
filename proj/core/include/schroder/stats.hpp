#pragma once

#include <string>
#include <vector>

#include "schroder/word.hpp"

namespace schroder {

/// Statistics of one factor, a maximal subpath between consecutive returns
/// to the x-axis.
struct FactorStats {
  int ups = 0;          ///< number of U steps; equals the number of D steps
  int horizontals = 0;  ///< number of H steps
  int ascents = 0;      ///< maximal runs of consecutive U steps
  int descents = 0;     ///< maximal runs of consecutive D steps

  /// Semilength contributed by this factor.
  int semilength() const noexcept { return ups + horizontals; }

  friend bool operator==(const FactorStats&, const FactorStats&) = default;
};

/// The full statistics vector of a word, the inputs of the closed covering
/// and covered counts. udu/dud/flat counts are taken over the whole
/// concatenated word; a flat in particular may straddle factor boundaries.
struct PathStats {
  std::vector<FactorStats> factors;
  int udu_count = 0;   ///< occurrences of the consecutive string UDU
  int dud_count = 0;   ///< occurrences of the consecutive string DUD
  int flat_count = 0;  ///< maximal runs of consecutive H steps
  int word_length = 0;

  int factor_count() const noexcept { return static_cast<int>(factors.size()); }

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

PathStats stats(const SchroderWord& w);

/// Renders {"k":..,"factors":[{"f":..,"h":..,"a":..,"d":..},...],
/// "p":..,"v":..,"flats":..,"word_length":..} with the fields in exactly
/// this order, no whitespace.
std::string stats_json(const PathStats& s);

}  // namespace schroder
