#pragma once

#include "schroder/bigint.hpp"
#include "schroder/word.hpp"

namespace schroder::counting {

// Number kernels. All of them follow one out-of-range convention: an index
// combination that selects nothing yields 0 (never an error). That lets the
// closed formulas below be written exactly as derived, with the bounds
// handled by the kernels instead of by case analysis at every call site.

/// Binomial coefficient; 0 unless 0 <= k <= n.
BigCount binomial(long long n, long long k);

/// Multiset coefficient ((n k)) = C(n+k-1, k): k-multisets from n items.
/// ((n 0)) = 1 for n >= 0 (the empty multiset); 0 for negative n.
BigCount multiset(long long n, long long k);

/// Catalan number C_n; 0 for negative n.
BigCount catalan(int n);

/// Narayana number N(i,j) = C(i,j) * C(i,j-1) / i, extended by
/// N(0,0) = 1 and N(i,0) = N(0,j) = 0 for i,j > 0.
BigCount narayana(int i, int j);

/// Ballot number b(i,j): Dyck prefixes with i up and j down steps,
/// (i-j+1)/(i+1) * C(i+j, i); 0 when j > i or either index is negative.
BigCount ballot(int ups, int downs);

/// Fibonacci number with F(1) = F(2) = 1.
BigCount fibonacci(int n);

/// Dyck prefixes of the given length ending at the given height,
/// b((len+h)/2, (len-h)/2); 0 on parity mismatch or h > len.
BigCount dyck_prefixes_ending_at(int length, int height);

/// Schröder paths of semilength n with exactly q horizontal steps,
/// C(2n-q, q) * C_{n-q}. Requires 0 <= q <= n, else Errc::ArgOutOfRange.
BigCount schroder_with_q_horizontals(int n, int q);

/// Dyck paths of semilength h avoiding pat, by exhaustive generation.
/// pat must be horizontal-free, else Errc::PatternNotDyck.
BigCount dyck_avoiders(int h, const SchroderWord& pat);

/// Schröder avoiders of a Dyck pattern via the horizontal-insertion
/// reduction: sum over h of C(n+h, n-h) * dyck_avoiders(h, pat).
BigCount schroder_avoiders_via_dyck(int n, const SchroderWord& pat);

// Closed avoidance counts for the five pattern families. Each is verified
// against avoiders_brute by the verify command and the acceptance suite.

/// Avoiders of (UD)^k: double sum of C(n+h, n-h) * N(h,j), j < k. k >= 1.
BigCount count_avoid_udk(int n, int k);

/// Avoiders of U^k D^k: Catalan terms for short semilengths, a (C_k - 1)
/// term at semilength k, and squared-ballot terms up to 2k-1. k >= 1.
BigCount count_avoid_ukdk(int n, int k);

/// Avoiders of H^k, i.e. words with at most k-1 horizontal steps:
/// sum of C(2n-i, i) * C_{n-i} for i < k. k >= 1.
BigCount count_avoid_h2k(int n, int k);

/// Avoiders of U H^{k-1} D, by the prefix/core/suffix decomposition:
/// 1 + sum over h, i of ((2h-1 i)) * (n-h-i+1) * C_h. k >= 2.
BigCount count_avoid_uh2d(int n, int k);

/// Avoiders of H^{k-1} U D: words with under k-1 horizontals, plus
/// prefix-suffix splits counted by P(p,h) * ((p+1 k-2)) * ((m h)) where
/// m is the suffix horizontal count. Terms whose suffix length would be
/// fractional contribute 0. k >= 2.
BigCount count_avoid_h2ud(int n, int k);

}  // namespace schroder::counting
