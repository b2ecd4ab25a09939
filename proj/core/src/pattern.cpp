#include "schroder/pattern.hpp"

#include "schroder/error.hpp"
#include "schroder/gen.hpp"

namespace schroder {

bool contains(const SchroderWord& host, const SchroderWord& pat) {
  const std::string& h = host.letters();
  const std::string& p = pat.letters();
  std::size_t i = 0;
  for (char c : h) {
    if (i < p.size() && c == p[i]) ++i;
    if (i == p.size()) break;
  }
  return i == p.size();
}

SchroderWord realize(const PatternFamily& family) {
  if (family.k < 1) {
    throw Error(Errc::ArgOutOfRange, "pattern family needs k >= 1");
  }
  const int k = family.k;
  std::string w;
  switch (family.kind) {
    case PatternFamily::Kind::UdK:
      for (int i = 0; i < k; ++i) w += "UD";
      break;
    case PatternFamily::Kind::UkDk:
      w.append(k, 'U');
      w.append(k, 'D');
      break;
    case PatternFamily::Kind::H2K:
      w.append(k, 'H');
      break;
    case PatternFamily::Kind::UH2D:
      w.push_back('U');
      w.append(k - 1, 'H');
      w.push_back('D');
      break;
    case PatternFamily::Kind::H2Ud:
      w.append(k - 1, 'H');
      w += "UD";
      break;
  }
  return SchroderWord::trusted(std::move(w));
}

BigCount avoiders_brute(int semilength, const SchroderWord& pat) {
  auto stream = gen::schroder_words(semilength);
  std::uint64_t n = 0;
  while (auto w = stream.next()) {
    if (!contains(*w, pat)) ++n;
  }
  return BigCount(static_cast<unsigned long>(n));
}

}  // namespace schroder
