#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "qrook/io.hpp"
#include "qrook/perm.hpp"

using namespace qrook;

TEST_CASE("diagram basics") {
  CHECK(Perm::decreasing(5).diagram().empty());
  Board staircase = Perm::identity(4).diagram();
  CHECK(staircase.size() == 6);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      CHECK(staircase.contains(i, j) == (j > i));
  // |I_w| = binom(n,2) - length(w)
  enumerate_perms(5, [](const Perm& w) {
    CHECK(w.diagram().size() == w.coinversions());
    CHECK(w.diagram().ne_property());
    if (!w.diagram().empty()) CHECK(!w.diagram().sw_corners().empty());
  });
}

TEST_CASE("the paper's contraction example") {
  Perm w = Perm::parse("139547628");
  Board d = w.diagram();
  CHECK(d.is_sw_corner({5, 6}));
  auto corners = d.sw_corners();
  CHECK(std::find(corners.begin(), corners.end(), Cell{5, 6}) != corners.end());
  CHECK(perm_delete(w, {5, 6}) == Perm::parse("139567428"));
  CHECK(perm_contract(w, {5, 6}) == Perm::parse("13856427"));
  CHECK(d.contract_cell({5, 6}) == Perm::parse("13856427").diagram());
  CHECK_THROWS(perm_delete(w, {1, 1}));
}

TEST_CASE("NE property") {
  CHECK(Board(3, 3).ne_property());
  CHECK(Board::full(4, 4).ne_property());
  for (int n : {3, 4, 5, 6}) CHECK(!menage(n).ne_property());
  CHECK(diagonal(4).ne_property());  // vacuously
  Board bad(2, 2);
  bad.add(1, 1);
  bad.add(2, 1);
  bad.add(2, 2);
  CHECK(!bad.ne_property());
}

TEST_CASE("SW corners") {
  CHECK(Board(2, 2).sw_corners().empty());
  auto c = Board::full(2, 2).sw_corners();
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Cell{2, 1});
}

TEST_CASE("delete and contract cells") {
  Board single(3, 4);
  single.add(1, 1);
  CHECK(single.delete_cell({1, 1}) == Board(3, 4));
  CHECK(single.contract_cell({1, 1}) == Board(2, 3));
  CHECK(Board::full(2, 2).contract_cell({2, 1}) == Board::full(1, 1));
  CHECK_THROWS(single.delete_cell({2, 2}));
}

TEST_CASE("permutation deletion and contraction match board moves") {
  for (int n : {2, 3, 4, 5})
    enumerate_perms(n, [&](const Perm& w) {
      Board d = w.diagram();
      for (auto corner : d.sw_corners()) {
        Perm wd = perm_delete(w, corner);
        CHECK(wd.diagram() == d.delete_cell(corner));
        CHECK(wd.coinversions() == w.coinversions() - 1);
        CHECK(perm_contract(w, corner).diagram() == d.contract_cell(corner));
      }
    });
  // Repeated deletion terminates at the decreasing permutation.
  Perm w = Perm::parse("3412");
  while (!w.diagram().empty()) w = perm_delete(w, w.diagram().sw_corners().front());
  CHECK(w.is_decreasing());
}

TEST_CASE("builders") {
  Board b6 = bidiagonal(6), m6 = menage(6);
  CHECK(b6.size() == 11);
  CHECK(m6.size() == 12);
  for (int i = 1; i <= 6; ++i) CHECK(b6.contains(i, i));
  for (int i = 1; i < 6; ++i) CHECK(b6.contains(i, i + 1));
  CHECK(m6.contains(6, 1));
  CHECK(!b6.contains(6, 1));

  Board f = fano();
  CHECK(f.size() == 21);
  for (int i = 1; i <= 7; ++i) {
    CHECK(f.row_count(i) == 3);
    CHECK(f.col_count(i) == 3);
  }
  // Any two lines of the Fano plane meet in exactly one point.
  for (int j1 = 1; j1 <= 7; ++j1)
    for (int j2 = j1 + 1; j2 <= 7; ++j2) {
      int common = 0;
      for (int i = 1; i <= 7; ++i)
        if (f.contains(i, j1) && f.contains(i, j2)) ++common;
      CHECK(common == 1);
    }

  CHECK(Perm::parse("3412").length() == 4);
  CHECK(Perm::parse("3412").diagram().complement().size() == 14);

  Board fe = ferrers({3, 1}, 2, 3, Justify::NW);
  CHECK(fe.grid() == "XXX\nX..\n");
  CHECK(ferrers({3, 1}, 2, 3, Justify::NE).grid() == "XXX\n..X\n");
  CHECK(ferrers({3, 1}, 2, 3, Justify::SW).grid() == "X..\nXXX\n");
  CHECK(ferrers({3, 1}, 2, 3, Justify::SE).grid() == "..X\nXXX\n");
  CHECK(skew({3, 2}, {1}, 2, 3).grid() == ".XX\nXX.\n");
  CHECK_THROWS(ferrers({1, 3}, 2, 3));
  CHECK_THROWS(ferrers({3, 1}, 1, 3));
}

TEST_CASE("complement and transpose") {
  std::mt19937 rng(3);
  for (int it = 0; it < 50; ++it) {
    Board b(4, 5);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 5; ++j)
        if (rng() & 1) b.add(i, j);
    CHECK(b.complement().complement() == b);
    CHECK(b.size() + b.complement().size() == 20);
    CHECK(b.transposed().transposed() == b);
  }
}

TEST_CASE("diagram transpose partner") {
  // The diagram of w^{-1} reverse-complemented is the 180-degree rotation of
  // the transposed diagram of w.
  for (int n : {2, 3, 4, 5})
    enumerate_perms(n, [](const Perm& w) {
      Perm partner = w.inverse().reverse_complement();
      CHECK(partner.diagram() == w.diagram().transposed().rotated180());
      CHECK(partner.inverse().reverse_complement() == w);  // involution
    });
}

TEST_CASE("pattern containment") {
  Perm w = Perm::parse("5 8 9 10 6 7 3 4 1 2");
  CHECK(w.contains_pattern(Perm::parse("789563412")));
  CHECK(Perm::parse("3412").contains_pattern(Perm::parse("3412")));
  CHECK(!Perm::parse("123").contains_pattern(Perm::parse("21")));

  // 312-avoidance iff the diagram is an upper-right-justified Ferrers board.
  auto is_ne_ferrers = [](const Board& b) {
    int prev = b.n() + 1;
    int lastlen = b.n() + 1;
    for (int i = 1; i <= b.m(); ++i) {
      uint64_t mask = b.row_mask(i);
      int len = std::popcount(mask);
      if (len == 0) continue;
      // contiguous run ending at column n
      uint64_t expect = ((uint64_t(1) << len) - 1) << (b.n() - len);
      if (mask != expect) return false;
      if (len > lastlen) return false;
      // rows with cells must be the top rows
      if (i > 1 && b.row_mask(i - 1) == 0) return false;
      lastlen = len;
      (void)prev;
    }
    return true;
  };
  Perm p312 = Perm::parse("312");
  for (int n : {3, 4, 5, 6})
    enumerate_perms(n, [&](const Perm& w) {
      CHECK(!w.contains_pattern(p312) == is_ne_ferrers(w.diagram()));
    });
}

TEST_CASE("grid and JSON round trips") {
  Board b = menage(4);
  CHECK(Board::from_grid(b.grid()) == b);
  CHECK(board_from_json(board_json(b)) == b);
  CHECK(board_from_text(b.grid()) == b);
  CHECK(board_from_text(board_json(b)) == b);
  CHECK(Board::from_grid("X.\n.X\n") == diagonal(2));
  CHECK_THROWS(Board::from_grid("X.\n.XX\n"));
  CHECK_THROWS(Board::from_grid("ab\n"));
}

TEST_CASE("permutation parsing and printing") {
  CHECK(Perm::parse("3412").word() == std::vector<int>{3, 4, 1, 2});
  CHECK(Perm::parse("6 8 9 10 4 5 7 1 2 3").size() == 10);
  CHECK(Perm::parse("6,8,9,10,4,5,7,1,2,3").str() == "6 8 9 10 4 5 7 1 2 3");
  CHECK(Perm::parse("789563412").str() == "789563412");
  CHECK_THROWS(Perm::parse("122"));
  CHECK_THROWS(Perm::parse("1 2 4"));
}
