#include "schroder/stats.hpp"

namespace schroder {

PathStats stats(const SchroderWord& w) {
  PathStats st;
  st.word_length = static_cast<int>(w.word_length());

  const std::string& s = w.letters();
  int height = 0;
  FactorStats cur;
  char factor_prev = 0;  // previous letter within the current factor
  char prev1 = 0, prev2 = 0;  // previous letters of the whole word

  for (char c : s) {
    switch (c) {
      case 'U':
        if (factor_prev != 'U') ++cur.ascents;
        ++cur.ups;
        break;
      case 'D':
        if (factor_prev != 'D') ++cur.descents;
        break;
      default:
        ++cur.horizontals;
        if (prev1 != 'H') ++st.flat_count;  // flats span factor boundaries
        break;
    }
    if (c == 'U' && prev1 == 'D' && prev2 == 'U') ++st.udu_count;
    if (c == 'D' && prev1 == 'U' && prev2 == 'D') ++st.dud_count;

    factor_prev = c;
    prev2 = prev1;
    prev1 = c;
    height += rise(c);
    if (height == 0) {  // return to the axis closes a factor
      st.factors.push_back(cur);
      cur = FactorStats{};
      factor_prev = 0;
    }
  }
  return st;
}

std::string stats_json(const PathStats& s) {
  std::string out = "{\"k\":" + std::to_string(s.factor_count());
  out += ",\"factors\":[";
  bool first = true;
  for (const FactorStats& f : s.factors) {
    if (!first) out += ',';
    first = false;
    out += "{\"f\":" + std::to_string(f.ups);
    out += ",\"h\":" + std::to_string(f.horizontals);
    out += ",\"a\":" + std::to_string(f.ascents);
    out += ",\"d\":" + std::to_string(f.descents) + "}";
  }
  out += "],\"p\":" + std::to_string(s.udu_count);
  out += ",\"v\":" + std::to_string(s.dud_count);
  out += ",\"flats\":" + std::to_string(s.flat_count);
  out += ",\"word_length\":" + std::to_string(s.word_length) + "}";
  return out;
}

}  // namespace schroder
