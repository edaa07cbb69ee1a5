#pragma once

#include <string>
#include <vector>

#include "qrook/delcon.hpp"

namespace qrook {

/// Raw count of invertible n x n matrices with zero diagonal:
///   q^{C(n,2)-n} (q-1)^n sum_i (-1)^i binom(n,i) [n-i]!_q.
QPoly derangement_poly(int n);

/// Raw full-rank counts on the complements of the bidiagonal board B and the
/// menage board B' from the closed forms.
QPoly qmenage(ZigzagKind kind, int n);

struct FanoReport {
  Int count;          // brute-force M_7(F, 2)
  Int expected_z2_0;  // Stembridge's expression at x = 1, Z_2 = 0
  Int expected_z2_1;
  int z2_resolved;    // value of Z_2 matching the brute force at q = 2
  bool total_ok;      // rank counts sum to 2^21
};
FanoReport fano_check(long long budget = kDefaultBudget, int workers = 0);

struct Family123 {
  Perm v;
  QPoly formula;  // q^{2n(n-1)} sum_i (-1)^i binom(n,i) [2n-i]!_q
  QPoly engine;   // m_complement_fullrank(v)
  bool equal = false;
  bool nonnegative = false;
};
Family123 conj_123_family(int n, MemoStore* memo);

/// The S_10 witness 5 8 9 10 6 7 3 4 1 2: every M_r(comp I_w) is in N[q]
/// although w contains the rank-1 counterexample pattern 789563412.
bool pattern_nonheredity_check(MemoStore* memo);

struct Violation {
  Perm w;
  int r;
  QPoly poly;
};

struct ScanStats {
  uint64_t scanned = 0;    // permutations whose profiles were determined
  uint64_t computed = 0;   // canonical representatives actually evaluated
  uint64_t memo_hits = 0;  // lower-size table lookups
  double wall_ms = 0;
  bool partial = false;
};

struct ConjectureReport {
  std::string family;
  int n = 0;
  std::vector<int> ranks;
  std::vector<Violation> violations;  // sorted by (word, rank)
  ScanStats stats;
};

/// Scan S_n for negative coefficients in M_r(comp I_w, q), r in ranks.
/// Level-swept deletion-contraction: sizes below n are tabulated in memo
/// (reusable and persistable); size n itself is processed per inversion
/// level with a two-level window, so memory stays bounded.
///
/// n = 10 is gated behind `extended`.  A nonzero time budget aborts cleanly
/// with stats.partial = true.  The violation list is deterministic and
/// independent of the worker count.
ConjectureReport scan_negativity(int n, std::vector<int> ranks,
                                 int workers = 0, double time_budget_s = 0,
                                 MemoStore* memo = nullptr,
                                 bool extended = false);

inline std::vector<int> all_ranks(int n) {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i) r.push_back(i);
  return r;
}

}  // namespace qrook
