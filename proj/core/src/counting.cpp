#include "schroder/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "schroder/error.hpp"
#include "schroder/gen.hpp"
#include "schroder/pattern.hpp"

namespace schroder::counting {
namespace {

// One lock for all memo tables. The kernels are called orders of magnitude
// more often than they grow, and table values are returned by copy, so a
// plain mutex keeps the concurrent-read contract without exposing callers
// to any of it.
std::mutex memo_mutex;

void require(bool ok, const char* message) {
  if (!ok) throw Error(Errc::ArgOutOfRange, message);
}

void require_dyck_pattern(const SchroderWord& pat) {
  if (pat.horizontal_count() != 0) {
    throw Error(Errc::PatternNotDyck,
                "pattern \"" + pat.letters() + "\" has horizontal steps");
  }
}

}  // namespace

BigCount binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigCount multiset(long long n, long long k) {
  if (n < 0) return 0;
  if (k == 0) return 1;  // the empty multiset, even from an empty set
  return binomial(n + k - 1, k);
}

BigCount catalan(int n) {
  if (n < 0) return 0;
  std::lock_guard lock(memo_mutex);
  static std::vector<BigCount> table{1};  // C_0
  while (static_cast<int>(table.size()) <= n) {
    // C_{m+1} = C_m * 2(2m+1) / (m+2)
    int m = static_cast<int>(table.size()) - 1;
    BigCount next = table.back() * (2 * (2 * m + 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), m + 2);
    table.push_back(std::move(next));
  }
  return table[n];
}

BigCount narayana(int i, int j) {
  if (i < 0 || j < 0) return 0;
  if (i == 0) return j == 0 ? 1 : 0;
  if (j == 0) return 0;
  BigCount num = binomial(i, j) * binomial(i, j - 1);
  if (num == 0) return 0;
  mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), i);
  return num;
}

BigCount ballot(int ups, int downs) {
  if (ups < 0 || downs < 0 || downs > ups) return 0;
  std::lock_guard lock(memo_mutex);
  static std::map<std::pair<int, int>, BigCount> table;
  auto [it, inserted] = table.try_emplace({ups, downs});
  if (inserted) {
    BigCount num = binomial(ups + downs, ups) * (ups - downs + 1);
    mpz_divexact_ui(it->second.get_mpz_t(), num.get_mpz_t(), ups + 1);
  }
  return it->second;
}

BigCount fibonacci(int n) {
  if (n <= 0) return 0;
  std::lock_guard lock(memo_mutex);
  static std::vector<BigCount> table{0, 1};  // F_0, F_1
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table[table.size() - 1] + table[table.size() - 2]);
  }
  return table[n];
}

BigCount dyck_prefixes_ending_at(int length, int height) {
  if (length < 0 || height < 0 || height > length) return 0;
  if ((length - height) % 2 != 0) return 0;
  return ballot((length + height) / 2, (length - height) / 2);
}

BigCount schroder_with_q_horizontals(int n, int q) {
  require(n >= 0 && q >= 0 && q <= n, "need 0 <= q <= n");
  return binomial(2LL * n - q, q) * catalan(n - q);
}

BigCount dyck_avoiders(int h, const SchroderWord& pat) {
  require_dyck_pattern(pat);
  auto stream = gen::dyck_words(h);
  unsigned long count = 0;
  while (auto w = stream.next()) {
    if (!contains(*w, pat)) ++count;
  }
  return BigCount(count);
}

BigCount schroder_avoiders_via_dyck(int n, const SchroderWord& pat) {
  require(n >= 0, "semilength must be >= 0");
  require_dyck_pattern(pat);
  BigCount total = 0;
  for (int h = 0; h <= n; ++h) {
    BigCount sites = binomial(static_cast<long long>(n) + h, n - h);
    if (sites == 0) continue;
    total += sites * dyck_avoiders(h, pat);
  }
  return total;
}

BigCount count_avoid_udk(int n, int k) {
  require(n >= 0, "semilength must be >= 0");
  require(k >= 1, "(UD)^k needs k >= 1");
  BigCount total = 0;
  for (int h = 0; h <= n; ++h) {
    BigCount sites = binomial(static_cast<long long>(n) + h, n - h);
    for (int j = 0; j < k; ++j) total += sites * narayana(h, j);
  }
  return total;
}

BigCount count_avoid_ukdk(int n, int k) {
  require(n >= 0, "semilength must be >= 0");
  require(k >= 1, "U^k D^k needs k >= 1");
  BigCount total = 0;
  for (int h = 0; h < k; ++h) {
    total += binomial(static_cast<long long>(n) + h, n - h) * catalan(h);
  }
  total += binomial(static_cast<long long>(n) + k, n - k) * (catalan(k) - 1);
  const int top = std::min(2 * k - 1, n);
  for (int h = k + 1; h <= top; ++h) {
    BigCount sites = binomial(static_cast<long long>(n) + h, n - h);
    for (int j = 1; j <= k; ++j) {
      BigCount b = ballot(k - j, h - k + j);
      if (b == 0) continue;
      total += sites * b * b;
    }
  }
  return total;
}

BigCount count_avoid_h2k(int n, int k) {
  require(n >= 0, "semilength must be >= 0");
  require(k >= 1, "H^k needs k >= 1");
  BigCount total = 0;
  for (int i = 0; i < k && i <= n; ++i) {
    total += binomial(2LL * n - i, i) * catalan(n - i);
  }
  return total;
}

BigCount count_avoid_uh2d(int n, int k) {
  require(n >= 0, "semilength must be >= 0");
  require(k >= 2, "U H^{k-1} D needs k >= 2");
  BigCount total = 1;  // the all-horizontal word H^n
  for (int h = 1; h <= n; ++h) {
    const BigCount core_paths = catalan(h);
    const int max_extra = std::min(k - 2, n - h);
    for (int i = 0; i <= max_extra; ++i) {
      // i horizontals inside the core, the rest split around it
      total += multiset(2LL * h - 1, i) * (n - h - i + 1) * core_paths;
    }
  }
  return total;
}

BigCount count_avoid_h2ud(int n, int k) {
  require(n >= 0, "semilength must be >= 0");
  require(k >= 2, "H^{k-1} U D needs k >= 2");
  BigCount total = 0;
  // Words with fewer than k-1 horizontal steps avoid the pattern outright.
  for (int q = 0; q <= std::min(k - 2, n); ++q) {
    total += schroder_with_q_horizontals(n, q);
  }
  // Otherwise: a prefix with exactly k-2 horizontals ending at height h,
  // then a suffix of horizontals and h down steps led by a horizontal.
  for (int p = 0; p <= 2 * n - 2 * k + 2; ++p) {
    const BigCount insertion_sites = multiset(p + 1, k - 2);
    for (int h = 0; h <= 2 * n - p - 2 * k + 2; ++h) {
      if ((p + h) % 2 != 0) continue;  // no prefix, and no whole suffix either
      const BigCount prefixes = dyck_prefixes_ending_at(p, h);
      if (prefixes == 0) continue;
      const int suffix_horizontals = (2 * n - h - p - 2 * k + 4) / 2;
      total += prefixes * insertion_sites * multiset(suffix_horizontals, h);
    }
  }
  return total;
}

}  // namespace schroder::counting
