// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Usage: qrook_acceptance [criterion ...] [--extended]
// With no criteria given, runs 1..10.  --extended adds the S_10 scan to
// criterion 5 (multi-hour budget on small machines; minutes on many cores).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "qrook/applications.hpp"
#include "qrook/io.hpp"
#include "qrook/krawtchouk.hpp"

using namespace qrook;

namespace {

bool g_extended = false;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

QPoly P(const char* s) { return QPoly::parse(s); }

Board board_of_mask(int size, uint32_t mask) {
  Board b(size, size);
  for (int t = 0; t < size * size; ++t)
    if ((mask >> t) & 1) b.add(t / size + 1, t % size + 1);
  return b;
}

// 1. The three 2x2 boards of the worked example, exact profiles.
void criterion1() {
  Board b1 = Board::full(2, 2);
  Board b2 = b1.delete_cell({1, 2});
  Board b3 = diagonal(2);
  auto M1 = m_ne_profile(b1), M3 = m_ne_profile(b3);
  auto M2 = symbolic_reduced_profile(b2);
  expect(M1.entries == std::vector<QPoly>{P("1"), P("q^2 + 2q + 1"), P("q^2 + q")},
         "M(B1)");
  expect(M2.entries == std::vector<QPoly>{P("1"), P("2q + 1"), P("q")}, "M(B2)");
  expect(M3.entries == std::vector<QPoly>{P("1"), P("2"), P("1")}, "M(B3)");
  expect(hit_poly(M1).hits == std::vector<QPoly>{P("0"), P("0"), P("q^2 + q")},
         "H(B1)");
  expect(hit_poly(M2).hits == std::vector<QPoly>{P("0"), P("q^2"), P("q")},
         "H(B2)");
  expect(hit_poly(M3).hits == std::vector<QPoly>{P("q^2"), P("q - 1"), P("1")},
         "H(B3)");
}

// 2. Oracle equivalence over every board in [3]x[3] at q in {2,3}.
void criterion2() {
  for (long long q : {2LL, 3LL}) {
    std::vector<std::vector<Int>> prof(1u << 9);
    for (uint32_t mask = 0; mask < (1u << 9); ++mask)
      prof[mask] = brute_profile(board_of_mask(3, mask), q);
    for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
      Board b = board_of_mask(3, mask);
      uint32_t comp = ~mask & 0x1ffu;
      auto viakraw = complement_profile_at(prof[mask], 3, 3, b.size(), q);
      expect(viakraw == prof[comp], "Krawtchouk pipeline vs brute force");
      if (b.ne_property()) {
        auto ne = m_ne_profile(b);
        Int f = 1;
        for (int r = 0; r <= 3; ++r) {
          expect(ne.entries[static_cast<size_t>(r)].eval_int(q) * f ==
                     prof[mask][static_cast<size_t>(r)],
                 "NE pipeline vs brute force");
          f *= q - 1;
        }
      }
    }
  }
}

// 3. Symbolic identity suite.
void criterion3() {
  // q-binomial theorem and its inverse, k <= 6.
  for (int k = 0; k <= 6; ++k)
    for (int e = -2; e <= 3; ++e) {
      QPoly sum, inv;
      for (int i = 0; i <= k; ++i) {
        QPoly t = qbinom(k, i).times_pow_q(static_cast<long long>(i) * (i - 1) / 2 +
                                           static_cast<long long>(e) * i);
        QPoly u = qbinom(k, i).times_pow_q(static_cast<long long>(i) * (i - 1) / 2) *
                  qpoch_step(e, -1, i);
        if (i % 2) {
          t = -t;
          u = -u;
        }
        sum += t;
        inv += u;
      }
      expect(sum == qpoch(e, k), "q-binomial theorem");
      expect(inv == QPoly::monomial(1, static_cast<long long>(e) * k),
             "inverse q-binomial relation");
    }
  // Krawtchouk orthogonality, symmetry, three-term, index shift; lemma.
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= m; ++l) {
          QPoly sum;
          for (int i = 0; i <= m; ++i)
            sum += v_count(m, n, i) * kraw(m, n, k, i) * kraw(m, n, l, i);
          QPoly want = (k == l) ? v_count(m, n, k).times_pow_q(
                                      static_cast<long long>(m) * n)
                                : QPoly::zero();
          expect(sum == want, "orthogonality");
          expect(kraw(m, n, k, l) * v_count(m, n, l) ==
                     kraw(m, n, l, k) * v_count(m, n, k),
                 "symmetry");
        }
      for (int i = 0; i <= m; ++i)
        for (int k = 0; k <= m; ++k) {
          QPoly lhs = (QPoly::monomial(1, -k) - QPoly::one()).times_pow_q(m + n) *
                      kraw(m, n, i, k);
          QPoly rhs =
              (QPoly::monomial(1, i + 1) - QPoly::one()).times_pow_q(i) *
                  kraw(m, n, i + 1, k) +
              (QPoly::monomial(1, m) - QPoly::monomial(1, i - 1)) *
                  (QPoly::monomial(1, n) - QPoly::monomial(1, i - 1)) *
                  kraw(m, n, i - 1, k) -
              ((QPoly::monomial(1, m) - QPoly::monomial(1, i)) *
                   (QPoly::monomial(1, n) - QPoly::monomial(1, i)) +
               (QPoly::monomial(1, i) - QPoly::one()).times_pow_q(i - 1)) *
                  kraw(m, n, i, k);
          expect(lhs == rhs, "three-term recurrence");
        }
      if (m >= 2)
        for (int r = 0; r <= m; ++r)
          for (int j = 0; j < m; ++j)
            expect(kraw(m, n, r, j + 1) ==
                       kraw(m - 1, n - 1, r, j).times_pow_q(r) -
                           kraw(m - 1, n - 1, r - 1, j).times_pow_q(r - 1),
                   "index-shift recurrence");
      for (int i = 0; i <= m; ++i) {
        auto [lhs, rhs] = kraw_identity_sides(m, n, i);
        expect(lhs == rhs, "polynomial lemma");
      }
    }
  // Hit round trips, partition, reciprocity involution on NE boards in 3x3.
  for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
    Board b = board_of_mask(3, mask);
    if (!b.ne_property()) continue;
    auto M = m_ne_profile(b);
    auto H = hit_poly(M);
    QPoly sum;
    for (const auto& h : H.hits) sum += h;
    expect(sum * (QPoly::q() - QPoly::one()).pow(3) == v_count(3, 3, 3),
           "hit partition");
    for (int k = 0; k <= 3; ++k) {
      expect(hits_from_M(M, k) == H.hits[static_cast<size_t>(k)], "hits_from_M");
      expect(m_from_hits(H, k) == M.entries[static_cast<size_t>(k)],
             "m_from_hits round trip");
    }
    auto Hc = hit_poly(complement_profile(M.to_raw(), b.size()).to_reduced());
    auto Hr = reciprocity_map(H, b.size());
    expect(Hc.hits == Hr.hits, "reciprocity two-sided");
    expect(reciprocity_map(Hr, 9 - b.size()).hits == H.hits,
           "reciprocity involution");
  }
}

// 4. Permutation calculus.
void criterion4() {
  enumerate_perms(6, [](const Perm& w) {
    Board d = w.diagram();
    for (auto corner : d.sw_corners()) {
      expect(perm_delete(w, corner).diagram() == d.delete_cell(corner),
             "Prop delw on S_6");
      expect(perm_contract(w, corner).diagram() == d.contract_cell(corner),
             "Prop contrw on S_6");
    }
  });
  QPoly qp = QPoly::q();
  enumerate_perms(4, [&](const Perm& w) {
    Board d = w.diagram();
    auto comp_reduced = [](const Perm& u) {
      Board du = u.diagram();
      return complement_profile(m_ne_profile(du).to_raw(), du.size()).to_reduced();
    };
    for (auto corner : d.sw_corners()) {
      Perm wd = perm_delete(w, corner);
      Perm v = perm_contract(w, corner);
      for (int r = 0; r <= 4; ++r)
        expect(m_ne(d, r) ==
                   m_ne(wd.diagram(), r) +
                       m_ne(v.diagram(), r - 1)
                           .times_pow_q(4 - 2 - w.length() + v.length()),
               "eq:delconMw on S_4");
      auto cw = comp_reduced(w), cwd = comp_reduced(wd), cv = comp_reduced(v);
      auto at = [](const RankCounts& rc, int r) {
        return (r >= 0 && r < static_cast<int>(rc.entries.size()))
                   ? rc.entries[static_cast<size_t>(r)]
                   : QPoly::zero();
      };
      for (int r = 1; r <= 4; ++r)
        expect(qp * at(cw, r) ==
                   at(cwd, r) + ((qp - QPoly::one()) * at(cv, r)).times_pow_q(r) -
                       at(cv, r - 1).times_pow_q(r - 1),
               "Cor delconw on S_4");
    }
  });
  MemoStore memo;
  enumerate_perms(5, [&](const Perm& w) {
    Board d = w.diagram();
    auto expectprof =
        complement_profile(m_ne_profile(d).to_raw(), d.size()).to_reduced();
    for (int r = 0; r <= 5; ++r)
      expect(m_complement_delcon(w, r, &memo) ==
                 expectprof.entries[static_cast<size_t>(r)],
             "delcon engine vs Krawtchouk-of-NE on S_5");
  });
}

// 5. Counterexample regression: the S_9 scan (and opt-in S_10).
void criterion5() {
  MemoStore memo;
  expect(m_complement_delcon(Perm::parse("789563412"), 1, &memo) ==
             P("24q^11 - 4q^10 + 10q^9 + 9q^8 + 8q^7 + 7q^6 + 6q^5 + 5q^4 + "
               "4q^3 + 3q^2 + 2q + 1"),
         "quoted rank-1 polynomial");
  auto r9 = scan_negativity(9, all_ranks(9), 0, 0, &memo);
  expect(r9.stats.scanned == 362880, "S_9 scan covers 9!");
  expect(r9.violations.size() == 4, "exactly 4 violating permutations in S_9");
  const char* expected[] = {"789563412", "895673412", "896734512", "896745123"};
  for (size_t i = 0; i < 4; ++i) {
    expect(r9.violations[i].w.str() == expected[i], "violator identity");
    expect(r9.violations[i].r == 1, "violations only at rank 1");
  }
  if (g_extended) {
    auto r10 = scan_negativity(10, {1, 10}, 0, 0, nullptr, true);
    size_t n1 = 0, n10 = 0;
    std::set<std::string> both1, both10;
    for (const auto& v : r10.violations) {
      if (v.r == 1) {
        ++n1;
        both1.insert(v.w.str());
      } else if (v.r == 10) {
        ++n10;
        both10.insert(v.w.str());
      }
    }
    size_t nboth = 0;
    for (const auto& w : both1)
      if (both10.count(w)) ++nboth;
    std::ostringstream os;
    os << "S_10: " << n1 << " at r=1, " << n10 << " at r=10, " << nboth
       << " in both";
    expect(n1 == 303 && n10 == 37 && nboth == 11, os.str());
    auto r10mid = scan_negativity(10, {2, 3, 4, 5, 6, 7, 8, 9}, 0, 0, nullptr, true);
    expect(r10mid.violations.empty(), "S_10 ranks 2..9 clean");
  }
}

// 6. q-menage closed forms vs brute force and the classical congruence.
void criterion6() {
  for (int n = 2; n <= 4; ++n) {
    expect(qmenage(ZigzagKind::Bidiagonal, n).eval_int(2) ==
               brute_m(bidiagonal(n).complement(), 2, n),
           "bidiagonal closed form at q=2");
    expect(qmenage(ZigzagKind::Menage, n).eval_int(2) ==
               brute_m(menage(n).complement(), 2, n),
           "menage closed form at q=2");
    QPoly qm1n = (QPoly::q() - QPoly::one()).pow(static_cast<unsigned>(n));
    expect((qmenage(ZigzagKind::Bidiagonal, n).exact_div(qm1n).eval_int(3) -
            classical_hits(bidiagonal(n))[0]) %
                   2 ==
               0,
           "H_0/h_0 congruence (bidiagonal)");
    expect((qmenage(ZigzagKind::Menage, n).exact_div(qm1n).eval_int(3) -
            classical_hits(menage(n))[0]) %
                   2 ==
               0,
           "H_0/h_0 congruence (menage)");
  }
}

// 7. Probabilistic series.
void criterion7() {
  for (long long q : {2LL, 3LL}) {
    for (uint32_t mask = 0; mask < 16; ++mask) {
      Board b = board_of_mask(2, mask);
      auto series = f_infty_series(b, q, 4);
      for (int k = 0; k <= 4; ++k)
        expect(series[static_cast<size_t>(k)] == f_k(b, q, k),
               "series vs direct F_k (2x2)");
    }
    auto series = f_infty_series(bidiagonal(2), q, 4);
    for (int k = 0; k <= 4; ++k)
      expect(series[static_cast<size_t>(k)] == f_k(bidiagonal(2), q, k),
             "series vs direct F_k (bidiagonal)");
  }
}

// 8. Fano fixed-q check.
void criterion8() {
  auto report = fano_check();
  expect(report.total_ok, "rank counts partition 2^21");
  expect(report.count == (report.z2_resolved == 0 ? report.expected_z2_0
                                                  : report.expected_z2_1),
         "exactly one parity value matches");
  std::cerr << "  (Fano: M_7(F,2) = " << report.count
            << ", resolved Z_2 = " << report.z2_resolved << " for even q)\n";
}

// 9. Garsia-Remmel comparison on staircase partitions, n <= 4.
void criterion9() {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::vector<int>> shapes{{}};
    // All partitions inside the staircase (n-1, ..., 1).
    std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& cur,
                                                          int row) {
      if (row >= n) return;
      int maxlen = n - 1 - row;
      if (!cur.empty()) maxlen = std::min(maxlen, cur.back());
      for (int len = 1; len <= maxlen; ++len) {
        cur.push_back(len);
        shapes.push_back(cur);
        gen(cur, row + 1);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    gen(cur, 0);
    for (const auto& lambda : shapes) {
      Board b = lambda.empty() ? Board(n, n) : ferrers(lambda, n, n, Justify::NW);
      auto H = hit_poly(m_ne_profile(b));
      auto G = gr_qhit(lambda, n);
      for (int i = 0; i <= n; ++i) {
        expect(H.hits[static_cast<size_t>(i)] ==
                   G[static_cast<size_t>(i)].times_pow_q(
                       static_cast<long long>(n) * (n - 1) / 2),
               "H = q^C(n,2) H^GR");
        expect(G[static_cast<size_t>(i)].is_polynomial() &&
                   G[static_cast<size_t>(i)].nonnegative_coeffs(),
               "H^GR in N[q]");
      }
    }
  }
}

// 10. 123-avoiding family: formula vs engine, nonnegativity, n <= 5.
void criterion10() {
  MemoStore memo;
  for (int n = 1; n <= 5; ++n) {
    auto f = conj_123_family(n, &memo);
    expect(f.equal, "formula equals engine, n=" + std::to_string(n));
    expect(f.nonnegative, "nonnegative coefficients, n=" + std::to_string(n));
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> todo;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--extended"))
      g_extended = true;
    else
      todo.push_back(std::atoi(argv[i]));
  }
  if (todo.empty())
    for (int i = 1; i <= 10; ++i) todo.push_back(i);

  const std::pair<const char*, std::function<void()>> criteria[] = {
      {"2x2 worked examples exact", criterion1},
      {"oracle equivalence on [3]x[3], q in {2,3}", criterion2},
      {"symbolic identity suite", criterion3},
      {"permutation calculus (S_6 moves, S_4 symbolic, S_5 engines)", criterion4},
      {"counterexample regression (S_9 scan)", criterion5},
      {"q-menage vs brute force and congruence", criterion6},
      {"probabilistic series", criterion7},
      {"Fano fixed-q check", criterion8},
      {"Garsia-Remmel comparison", criterion9},
      {"123-avoiding family", criterion10},
  };

  int failures = 0;
  for (int c : todo) {
    if (c < 1 || c > 10) {
      std::cerr << "unknown criterion " << c << "\n";
      return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[c - 1].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << "criterion " << c << " [" << criteria[c - 1].first << "]: "
              << (ok ? "PASS" : "FAIL") << " (" << buf << ")";
    if (!ok) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
