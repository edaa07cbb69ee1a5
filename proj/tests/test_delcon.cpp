#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qrook/delcon.hpp"
#include "qrook/krawtchouk.hpp"

using namespace qrook;

namespace {
QPoly P(const char* s) { return QPoly::parse(s); }

RankCounts complement_reduced(const Perm& w) {
  Board d = w.diagram();
  return complement_profile(m_ne_profile(d).to_raw(), d.size()).to_reduced();
}
}  // namespace

TEST_CASE("Dworkin recurrence") {
  Board b = Board::full(2, 2);
  auto [lhs, rhs] = delcon_gr_sides(b, {2, 1}, 1);
  CHECK(lhs == P("q^3 + 2q^2 + q"));
  CHECK(lhs == rhs);
  auto [l0, r0] = delcon_gr_sides(b, {2, 1}, 0);
  CHECK(l0 == QPoly::monomial(1, 4));
  CHECK(l0 == r0);
  for (uint32_t mask = 1; mask < (1u << 9); ++mask) {
    Board b3(3, 3);
    for (int t = 0; t < 9; ++t)
      if ((mask >> t) & 1) b3.add(t / 3 + 1, t % 3 + 1);
    if (!b3.ne_property()) continue;
    for (auto corner : b3.sw_corners())
      for (int r = 0; r <= 3; ++r) {
        auto [l, rr] = delcon_gr_sides(b3, corner, r);
        CHECK(l == rr);
      }
  }
}

TEST_CASE("board-level M deletion-contraction") {
  for (uint32_t mask = 0; mask < (1u << 9); mask += 2) {
    Board b(3, 3);
    for (int t = 0; t < 9; ++t)
      if ((mask >> t) & 1) b.add(t / 3 + 1, t % 3 + 1);
    if (!b.ne_property()) continue;
    for (int r = 0; r <= 3; ++r) CHECK(m_delcon(b, r) == m_ne(b, r));
  }
  CHECK(m_delcon(Board(2, 2), 0) == QPoly::one());
  CHECK(m_delcon(Board(2, 2), 1).is_zero());
  CHECK(m_delcon(Perm::parse("3412").diagram(), 1) == m_ne(Perm::parse("3412").diagram(), 1));
}

TEST_CASE("rank-1 counterexample regression") {
  MemoStore memo;
  QPoly got = m_complement_delcon(Perm::parse("789563412"), 1, &memo);
  CHECK(got ==
        P("24q^11 - 4q^10 + 10q^9 + 9q^8 + 8q^7 + 7q^6 + 6q^5 + 5q^4 + 4q^3 + "
          "3q^2 + 2q + 1"));
  CHECK(!got.nonnegative_coeffs());
}

TEST_CASE("base cases and the 3412 hit profile") {
  CHECK(m_complement_delcon(Perm::decreasing(3), 3, nullptr) ==
        v_count(3, 3, 3).exact_div(P("q - 1").pow(3)));
  CHECK(m_complement_delcon(Perm::decreasing(3), 3, nullptr) ==
        qfact(3).times_pow_q(3));

  MemoStore memo;
  Perm w = Perm::parse("3412");
  RankCounts M{4, 4, ProfileKind::ReducedM, {}};
  M.entries.resize(5);
  for (int r = 0; r <= 4; ++r)
    M.entries[static_cast<size_t>(r)] = m_complement_delcon(w, r, &memo);
  auto H = hit_poly(M);
  CHECK(H.hits[0].is_zero());
  CHECK(H.hits[1].is_zero());
  CHECK(H.hits[2] == P("q + 1").times_pow_q(11));
  CHECK(H.hits[3] == P("2q^4 + 4q^3 + 3q^2 - 1").times_pow_q(7));
  CHECK(H.hits[4] == P("q^4 + 3q^3 + 5q^2 + 4q + 1").times_pow_q(6));
}

TEST_CASE("full-rank engine") {
  MemoStore memo;
  Perm w = Perm::parse("6 8 9 10 4 5 7 1 2 3");
  QPoly M10 = m_complement_fullrank(w, &memo);
  CHECK(M10.degree() == 77);
  CHECK(M10.coeff(77) == 1);
  CHECK(M10.coeff(76) == 9);
  CHECK(M10.coeff(75) == 44);
  CHECK(M10.coeff(48) == 2);
  CHECK(M10.coeff(47) == -8);
  CHECK(M10.coeff(46) == -1);
  CHECK(M10.coeff(45) == 1);
  CHECK(M10.valuation() == 45);
  CHECK(!M10.nonnegative_coeffs());

  // Agrees with the general engine at r = n on all of S_4 and a sample of S_5.
  enumerate_perms(4, [&](const Perm& v) {
    CHECK(m_complement_fullrank(v, &memo) == m_complement_delcon(v, 4, &memo));
  });
  int count = 0;
  enumerate_perms(5, [&](const Perm& v) {
    if (++count % 7) return;
    CHECK(m_complement_fullrank(v, &memo) == m_complement_delcon(v, 5, &memo));
  });
  CHECK(m_complement_fullrank(Perm::decreasing(4), nullptr) == qfact(4).times_pow_q(6));
}

TEST_CASE("engine against the Krawtchouk pipeline on S_4") {
  MemoStore memo;
  enumerate_perms(4, [&](const Perm& w) {
    auto expect = complement_reduced(w);
    for (int r = 0; r <= 4; ++r) {
      CHECK(m_complement_delcon(w, r, &memo) == expect.entries[static_cast<size_t>(r)]);
      CHECK(m_complement_delcon(w, r, nullptr) == expect.entries[static_cast<size_t>(r)]);
    }
  });
}

TEST_CASE("engine against brute force at q = 2 on S_4") {
  MemoStore memo;
  enumerate_perms(4, [&](const Perm& w) {
    Board comp = w.diagram().complement();
    auto prof = brute_profile(comp, 2);
    for (int r = 0; r <= 4; ++r)
      CHECK(m_complement_delcon(w, r, &memo).eval_int(2) ==
            prof[static_cast<size_t>(r)]);
  });
}

TEST_CASE("permutation-level recurrences hold symbolically on S_4") {
  MemoStore memo;
  QPoly qp = QPoly::q();
  enumerate_perms(4, [&](const Perm& w) {
    Board d = w.diagram();
    if (d.empty()) return;
    for (auto corner : d.sw_corners()) {
      Perm wd = perm_delete(w, corner);
      Perm v = perm_contract(w, corner);
      // eq for the diagrams themselves:
      // M_r(I_w) = M_r(I_w') + q^{n-2-l(w)+l(v)} M_{r-1}(I_v).
      for (int r = 0; r <= 4; ++r) {
        QPoly lhs = m_ne(d, r);
        QPoly rhs = m_ne(wd.diagram(), r) +
                    m_ne(v.diagram(), r - 1)
                        .times_pow_q(4 - 2 - w.length() + v.length());
        CHECK(lhs == rhs);
      }
      // Complement version via independently computed profiles.
      auto cw = complement_reduced(w);
      auto cwd = complement_reduced(wd);
      auto cv = complement_reduced(v);
      auto at = [](const RankCounts& rc, int r) {
        return (r >= 0 && r < static_cast<int>(rc.entries.size()))
                   ? rc.entries[static_cast<size_t>(r)]
                   : QPoly::zero();
      };
      for (int r = 1; r <= 4; ++r) {
        QPoly lhs = qp * at(cw, r);
        QPoly rhs = at(cwd, r) +
                    ((qp - QPoly::one()) * at(cv, r)).times_pow_q(r) -
                    at(cv, r - 1).times_pow_q(r - 1);
        CHECK(lhs == rhs);
      }
    }
  });
}

TEST_CASE("q-hit polynomial deletion-contraction") {
  // Board level on NE boards in 3x3 (sampled; selftest full covers all).
  for (uint32_t mask = 1; mask < (1u << 9); mask += 3) {
    Board b(3, 3);
    for (int t = 0; t < 9; ++t)
      if ((mask >> t) & 1) b.add(t / 3 + 1, t % 3 + 1);
    if (!b.ne_property()) continue;
    for (auto corner : b.sw_corners()) {
      auto sides = hitpoly_delcon_sides(b, corner);
      CHECK(sides.direct_lhs == sides.direct_rhs);
      CHECK(sides.comp_lhs == sides.comp_rhs);
    }
  }
  // Permutation level on S_4 diagrams, including the 1x1 contraction edge.
  enumerate_perms(4, [&](const Perm& w) {
    Board d = w.diagram();
    for (auto corner : d.sw_corners()) {
      auto sides = hitpoly_delcon_sides(d, corner);
      CHECK(sides.direct_lhs == sides.direct_rhs);
      CHECK(sides.comp_lhs == sides.comp_rhs);
    }
  });
  Board tiny(1, 1);
  tiny.add(1, 1);
  auto sides = hitpoly_delcon_sides(tiny, {1, 1});
  CHECK(sides.direct_lhs == sides.direct_rhs);
  CHECK(sides.comp_lhs == sides.comp_rhs);
}

TEST_CASE("canonicalization") {
  CHECK(canonicalize(Perm::identity(4)) == Perm::identity(4));
  enumerate_perms(5, [](const Perm& w) {
    Perm c = canonicalize(w);
    CHECK(canonicalize(c) == c);
    CHECK(canonicalize(w.inverse().reverse_complement()) == c);
  });
  // Partner profiles agree (gates the memo key optimization).
  MemoStore memo;
  enumerate_perms(5, [&](const Perm& w) {
    Perm partner = w.inverse().reverse_complement();
    for (int r = 0; r <= 5; r += 2)
      CHECK(m_complement_delcon(w, r, &memo) ==
            m_complement_delcon(partner, r, &memo));
  });
}

TEST_CASE("memo persistence") {
  MemoStore memo;
  enumerate_perms(4, [&](const Perm& w) {
    for (int r = 0; r <= 4; ++r) m_complement_delcon(w, r, &memo);
  });
  m_complement_fullrank(Perm::parse("789563412"), &memo);  // big coefficients
  std::string path = "memo_cache_test.qrk";
  std::remove(path.c_str());
  memo.save(path);

  MemoStore loaded;
  loaded.load(path);
  CHECK(loaded.size() == memo.size());
  enumerate_perms(4, [&](const Perm& w) {
    for (int r = 0; r <= 4; ++r) {
      auto a = memo.get(canonicalize(w), r);
      auto b = loaded.get(canonicalize(w), r);
      if (a.has_value()) {
        REQUIRE(b.has_value());
        CHECK(*a == *b);
      }
    }
  });

  // Appending after more work keeps the file loadable.
  enumerate_perms(5, [&](const Perm& w) { m_complement_delcon(w, 2, &memo); });
  memo.save(path);
  MemoStore reloaded;
  reloaded.load(path);
  CHECK(reloaded.size() == memo.size());

  // Corruption must be a hard error.
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekg(-3, std::ios::end);
    char c = static_cast<char>(f.get());
    char replacement = (c >= '0' && c < '9') ? static_cast<char>(c + 1) : '0';
    f.seekp(-3, std::ios::end);
    f.put(replacement);
  }
  MemoStore corrupt;
  CHECK_THROWS_AS(corrupt.load(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("corner policy is deterministic") {
  Perm w = Perm::parse("139547628");
  auto mv1 = pick_corner_moves(w);
  auto mv2 = pick_corner_moves(w);
  CHECK(mv1.corner == mv2.corner);
  CHECK(mv1.deleted == mv2.deleted);
  CHECK(mv1.contracted == mv2.contracted);
  CHECK(w.diagram().is_sw_corner(mv1.corner));
  CHECK(mv1.deleted.diagram() == w.diagram().delete_cell(mv1.corner));
  CHECK(mv1.contracted.diagram() == w.diagram().contract_cell(mv1.corner));
}
