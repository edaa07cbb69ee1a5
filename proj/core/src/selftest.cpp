#include "qrook/selftest.hpp"

#include <bit>
#include <functional>
#include <random>
#include <sstream>

#include "qrook/applications.hpp"
#include "qrook/io.hpp"
#include "qrook/krawtchouk.hpp"

namespace qrook {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw IdentityError(what);
}

QPoly random_qpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), c(-9, 9), val(-3, 3);
  std::vector<Int> coeffs(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : coeffs) x = c(rng);
  return QPoly::from_coeffs(val(rng), std::move(coeffs));
}

void check_qseries() {
  require(qint(3) == QPoly::parse("q^2 + q + 1"), "qint(3)");
  require(qfact(3) == QPoly::parse("q^3 + 2q^2 + 2q + 1"), "qfact(3)");
  require(qbinom(4, 2) == QPoly::parse("q^4 + q^3 + 2q^2 + q + 1"), "qbinom(4,2)");
  for (int k = 0; k <= 6; ++k)
    for (int e = -2; e <= 3; ++e) {
      QPoly sum;
      for (int i = 0; i <= k; ++i) {
        QPoly t = qbinom(k, i).times_pow_q(static_cast<long long>(i) * (i - 1) / 2 +
                                           static_cast<long long>(e) * i);
        if (i % 2) t = -t;
        sum += t;
      }
      require(sum == qpoch(e, k), "q-binomial theorem");
    }
  for (int k = 0; k <= 6; ++k)
    for (int e = -2; e <= 3; ++e) {
      QPoly sum;
      for (int i = 0; i <= k; ++i) {
        QPoly t = qbinom(k, i).times_pow_q(static_cast<long long>(i) * (i - 1) / 2) *
                  qpoch_step(e, -1, i);
        if (i % 2) t = -t;
        sum += t;
      }
      require(sum == QPoly::monomial(1, static_cast<long long>(e) * k),
              "inverse q-binomial relation");
    }
  std::mt19937 rng(20240811);
  for (int it = 0; it < 50; ++it) {
    QPoly a = random_qpoly(rng), b = random_qpoly(rng), c = random_qpoly(rng);
    require((a + b) * c == a * c + b * c, "distributivity");
    require((a * b) * c == a * (b * c), "associativity");
    for (Rat q : {Rat(2), Rat(3), Rat(1, 2)}) {
      require((a * b).eval_rat(q) == a.eval_rat(q) * b.eval_rat(q),
              "evaluation homomorphism (mul)");
      require((a + b).eval_rat(q) == a.eval_rat(q) + b.eval_rat(q),
              "evaluation homomorphism (add)");
    }
    if (!b.is_zero()) require((a * b).exact_div(b) == a, "exact_div round trip");
  }
}

void check_negpolyhit() {
  Board b1 = Board::full(2, 2);
  Board b2 = b1.delete_cell({1, 2});
  Board b3 = diagonal(2);
  auto M1 = m_ne_profile(b1), M3 = m_ne_profile(b3);
  auto M2 = symbolic_reduced_profile(b2);
  require(M1.entries[1] == QPoly::parse("q^2 + 2q + 1") &&
              M1.entries[2] == QPoly::parse("q^2 + q"),
          "negpolyhit M(B1)");
  require(M2.entries[1] == QPoly::parse("2q + 1") && M2.entries[2] == QPoly::q(),
          "negpolyhit M(B2)");
  require(M3.entries[1] == QPoly(2) && M3.entries[2] == QPoly::one(),
          "negpolyhit M(B3)");
  auto H1 = hit_poly(M1), H2 = hit_poly(M2), H3 = hit_poly(M3);
  require(H1.hits[0].is_zero() && H1.hits[1].is_zero() &&
              H1.hits[2] == QPoly::parse("q^2 + q"),
          "negpolyhit H(B1)");
  require(H2.hits[0].is_zero() && H2.hits[1] == QPoly::parse("q^2") &&
              H2.hits[2] == QPoly::q(),
          "negpolyhit H(B2)");
  require(H3.hits[0] == QPoly::parse("q^2") && H3.hits[1] == QPoly::parse("q - 1") &&
              H3.hits[2] == QPoly::one(),
          "negpolyhit H(B3)");
}

void check_krawtchouk(int mmax) {
  for (int m = 1; m <= mmax; ++m)
    for (int n = m; n <= mmax; ++n) {
      for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= m; ++l) {
          QPoly sum;
          for (int i = 0; i <= m; ++i)
            sum += v_count(m, n, i) * kraw(m, n, k, i) * kraw(m, n, l, i);
          QPoly expect = (k == l)
                             ? v_count(m, n, k).times_pow_q(static_cast<long long>(m) * n)
                             : QPoly::zero();
          require(sum == expect, "Krawtchouk orthogonality");
        }
      for (int r = 0; r <= m; ++r)
        for (int i = 0; i <= m; ++i)
          require(kraw(m, n, r, i) * v_count(m, n, i) ==
                      kraw(m, n, i, r) * v_count(m, n, r),
                  "Krawtchouk symmetry");
      // Three-term recurrence in the degree index.
      for (int i = 0; i <= m; ++i)
        for (int k = 0; k <= m; ++k) {
          QPoly lhs = (QPoly::monomial(1, -k) - QPoly::one())
                          .times_pow_q(m + n) * kraw(m, n, i, k);
          QPoly rhs = (QPoly::monomial(1, i + 1) - QPoly::one()).times_pow_q(i) *
                          kraw(m, n, i + 1, k) +
                      (QPoly::monomial(1, m) - QPoly::monomial(1, i - 1)) *
                          (QPoly::monomial(1, n) - QPoly::monomial(1, i - 1)) *
                          kraw(m, n, i - 1, k) -
                      ((QPoly::monomial(1, m) - QPoly::monomial(1, i)) *
                           (QPoly::monomial(1, n) - QPoly::monomial(1, i)) +
                       (QPoly::monomial(1, i) - QPoly::one()).times_pow_q(i - 1)) *
                          kraw(m, n, i, k);
          require(lhs == rhs, "Krawtchouk three-term recurrence");
        }
      // Index-shift recurrence.
      if (m >= 2)
        for (int r = 0; r <= m; ++r)
          for (int j = 0; j + 1 <= m; ++j)
            require(kraw(m, n, r, j + 1) ==
                        kraw(m - 1, n - 1, r, j).times_pow_q(r) -
                            kraw(m - 1, n - 1, r - 1, j).times_pow_q(r - 1),
                    "Krawtchouk index-shift recurrence");
    }
}

void check_small_oracles(int size, long long qs[2]) {
  // Every board in [size] x [size]: brute force vs Krawtchouk transform of
  // the complement's profile vs the NE route where applicable.
  int cells = size * size;
  std::vector<std::vector<Int>> prof2(static_cast<size_t>(1) << cells);
  for (long long qi = 0; qi < 2; ++qi) {
    long long q = qs[qi];
    for (uint32_t mask = 0; mask < (1u << cells); ++mask) {
      Board b(size, size);
      for (int t = 0; t < cells; ++t)
        if ((mask >> t) & 1) b.add(t / size + 1, t % size + 1);
      prof2[mask] = brute_profile(b, q);
      Int total = 0, qpow = 1;
      for (const auto& v : prof2[mask]) total += v;
      for (int i = 0; i < b.size(); ++i) qpow *= q;
      require(total == qpow, "rank counts partition q^|B|");
      if (b.ne_property()) {
        auto ne = m_ne_profile(b);
        Int f = 1;
        for (int r = 0; r <= size; ++r) {
          require(ne.entries[static_cast<size_t>(r)].eval_int(q) * f ==
                      prof2[mask][static_cast<size_t>(r)],
                  "NE route vs brute force");
          f *= q - 1;
        }
      }
      uint32_t comp = ~mask & ((1u << cells) - 1);
      if (comp < mask) {
        auto viakraw =
            complement_profile_at(prof2[mask], size, size, std::popcount(mask), q);
        require(viakraw == prof2[comp], "Krawtchouk transform vs brute force");
      }
    }
  }
}

void check_hit_suite() {
  // Round trips, partition identity, reciprocity on all NE boards in 2x2
  // and a 3x3 sample.
  for (int size : {2, 3}) {
    int cells = size * size;
    for (uint32_t mask = 0; mask < (1u << cells); ++mask) {
      if (size == 3 && (mask % 7)) continue;  // sample
      Board b(size, size);
      for (int t = 0; t < cells; ++t)
        if ((mask >> t) & 1) b.add(t / size + 1, t % size + 1);
      if (!b.ne_property()) continue;
      auto M = m_ne_profile(b);
      auto H = hit_poly(M);
      QPoly sum;
      for (const auto& h : H.hits) sum += h;
      require(sum * (QPoly::q() - QPoly::one()).pow(static_cast<unsigned>(size)) ==
                  v_count(size, size, size),
              "hit partition identity");
      for (int k = 0; k <= size; ++k) {
        require(hits_from_M(M, k) == H.hits[static_cast<size_t>(k)],
                "hits_from_M matches hit_poly");
        require(m_from_hits(H, k) == M.entries[static_cast<size_t>(k)],
                "m_from_hits round trip");
      }
      // Reciprocity against the complement computed independently.
      auto comp_raw = complement_profile(M.to_raw(), b.size());
      auto Hc = hit_poly(comp_raw.to_reduced());
      auto Hr = reciprocity_map(H, b.size());
      for (int i = 0; i <= size; ++i)
        require(Hc.hits[static_cast<size_t>(i)] == Hr.hits[static_cast<size_t>(i)],
                "hit reciprocity vs complement pipeline");
      auto back = reciprocity_map(Hr, cells - b.size());
      for (int i = 0; i <= size; ++i)
        require(back.hits[static_cast<size_t>(i)] == H.hits[static_cast<size_t>(i)],
                "reciprocity is an involution");
      require(h0(M, b.size()) == H.hits[0], "H_0 dual formulas");
    }
  }
}

void check_delcon_small() {
  for (uint32_t mask = 1; mask < (1u << 9); mask += 5) {
    Board b(3, 3);
    for (int t = 0; t < 9; ++t)
      if ((mask >> t) & 1) b.add(t / 3 + 1, t % 3 + 1);
    for (auto corner : b.sw_corners())
      for (int r = 0; r <= 3; ++r) {
        auto [lhs, rhs] = delcon_gr_sides(b, corner, r);
        require(lhs == rhs, "Dworkin deletion-contraction");
      }
    if (b.ne_property())
      for (int r = 0; r <= 3; ++r)
        require(m_delcon(b, r) == m_ne(b, r), "m_delcon vs m_ne");
  }
  MemoStore memo;
  enumerate_perms(4, [&](const Perm& w) {
    auto raw = m_ne_profile(w.diagram()).to_raw();
    auto comp = complement_profile(raw, w.diagram().size()).to_reduced();
    for (int r = 0; r <= 4; ++r) {
      QPoly via_engine = m_complement_delcon(w, r, &memo);
      QPoly no_memo = m_complement_delcon(w, r, nullptr);
      require(via_engine == no_memo, "memo soundness");
      require(via_engine == comp.entries[static_cast<size_t>(r)],
              "delcon engine vs Krawtchouk pipeline (S_4)");
    }
    Perm partner = canonicalize(w);
    for (int r = 0; r <= 4; ++r)
      require(m_complement_delcon(w, r, &memo) ==
                  m_complement_delcon(partner, r, &memo),
              "canonical partner profile equality");
  });
}

void check_perm_calculus(int nmax) {
  for (int n = 2; n <= nmax; ++n)
    enumerate_perms(n, [&](const Perm& w) {
      Board d = w.diagram();
      require(d.ne_property(), "permutation diagrams have the NE property");
      if (!d.empty()) require(!d.sw_corners().empty(), "nonempty board has a SW corner");
      for (auto corner : d.sw_corners()) {
        require(perm_delete(w, corner).diagram() == d.delete_cell(corner),
                "deletion: I_{w(i,j)} = I_w minus corner");
        require(perm_contract(w, corner).diagram() == d.contract_cell(corner),
                "contraction: I_v = I_w / corner");
      }
    });
}

void check_lemma_identity(int mmax) {
  for (int m = 1; m <= mmax; ++m)
    for (int n = m; n <= mmax; ++n)
      for (int i = 0; i <= m; ++i) {
        auto [lhs, rhs] = kraw_identity_sides(m, n, i);
        require(lhs == rhs, "polynomial lemma (Krawtchouk t-identity)");
      }
}

void check_hitpoly_delcon() {
  for (uint32_t mask = 1; mask < (1u << 9); ++mask) {
    Board b(3, 3);
    for (int t = 0; t < 9; ++t)
      if ((mask >> t) & 1) b.add(t / 3 + 1, t % 3 + 1);
    if (!b.ne_property()) continue;
    for (auto corner : b.sw_corners()) {
      auto sides = hitpoly_delcon_sides(b, corner);
      require(sides.direct_lhs == sides.direct_rhs,
              "q-hit polynomial deletion-contraction");
      require(sides.comp_lhs == sides.comp_rhs,
              "q-hit polynomial complement deletion-contraction");
    }
  }
}

void check_s5_cross_engine() {
  MemoStore memo;
  enumerate_perms(5, [&](const Perm& w) {
    auto raw = m_ne_profile(w.diagram()).to_raw();
    auto comp = complement_profile(raw, w.diagram().size()).to_reduced();
    for (int r = 0; r <= 5; ++r)
      require(m_complement_delcon(w, r, &memo) == comp.entries[static_cast<size_t>(r)],
              "delcon engine vs Krawtchouk pipeline (S_5)");
    require(m_complement_fullrank(w, &memo) == comp.entries[5],
            "full-rank engine vs Krawtchouk pipeline (S_5)");
  });
}

}  // namespace

SelfTestReport selftest(bool full) {
  SelfTestReport report;
  auto run = [&](const std::string& name, const std::function<void()>& f) {
    CheckResult r;
    r.name = name;
    try {
      f();
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  };
  long long qs[2] = {2, 3};
  run("q-series identities", check_qseries);
  run("2x2 q-hit worked examples", check_negpolyhit);
  run("Krawtchouk identity suite (m,n <= 3)", [] { check_krawtchouk(3); });
  run("2x2 oracle agreement", [&] { check_small_oracles(2, qs); });
  run("hit profile suite", check_hit_suite);
  run("deletion-contraction (small boards, S_4)", check_delcon_small);
  run("permutation calculus (S_4)", [] { check_perm_calculus(4); });
  if (full) {
    run("Krawtchouk identity suite (m,n <= 4)", [] { check_krawtchouk(4); });
    run("polynomial lemma (m,n <= 4)", [] { check_lemma_identity(4); });
    run("3x3 oracle agreement (512 boards)", [&] { check_small_oracles(3, qs); });
    run("q-hit deletion-contraction (3x3)", check_hitpoly_delcon);
    run("permutation calculus (S_6)", [] { check_perm_calculus(6); });
    run("S_5 cross-engine agreement", check_s5_cross_engine);
  }
  return report;
}

}  // namespace qrook
