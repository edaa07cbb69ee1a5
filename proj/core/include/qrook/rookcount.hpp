#pragma once

#include <optional>
#include <vector>

#include "qrook/board.hpp"
#include "qrook/qpoly.hpp"

namespace qrook {

/// Symbolic rank profile of a board: entries[r] for r = 0..m.
/// RawM holds the matrix counts m_r(B, q); ReducedM holds
/// M_r(B, q) = m_r(B, q) / (q-1)^r.
enum class ProfileKind { RawM, ReducedM };

struct RankCounts {
  int m = 0, n = 0;
  ProfileKind kind = ProfileKind::RawM;
  std::vector<QPoly> entries;  // size m+1

  RankCounts to_raw() const;
  RankCounts to_reduced() const;  // exact divisions by (q-1)^r
};

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Internal identity violated: either an implementation bug or a genuine
/// mathematical discovery; never ignored.
class IdentityError : public std::runtime_error {
public:
  explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultBudget = 1LL << 28;

// Classical rook numbers r_0..r_m by backtracking.
std::vector<Int> classical_rooks(const Board& b);

// Classical hit numbers h_0..h_m (m <= n), computed both by direct
// enumeration of maximal placements and through the rook-number identity;
// throws IdentityError if the two routes disagree.
std::vector<Int> classical_hits(const Board& b);

// Number of m x n matrices over F_q (q prime) of rank r with support in b,
// by exhaustive enumeration.  Throws BudgetExceeded if q^|B| > budget.
Int brute_m(const Board& b, long long q, int r,
            long long budget = kDefaultBudget, int workers = 1);
std::vector<Int> brute_profile(const Board& b, long long q,
                               long long budget = kDefaultBudget,
                               int workers = 1);

// Garsia-Remmel q-rook number R^NE_r(B, q): sum of q^{#NE inversions} over
// r-rook placements.  A rook cancels its own cell, the board cells strictly
// north of it in its column, and strictly east of it in its row; inversions
// are the cells cancelled by no rook.
QPoly gr_qrook(const Board& b, int r);

// Reduced matrix count M_r(B, q) = q^{|B|-r} R^NE_r(B, q^{-1}) for boards
// with the NE property.
QPoly m_ne(const Board& b, int r);
RankCounts m_ne_profile(const Board& b);

// Number of m x n matrices of rank k over F_q (symbolic).
QPoly v_count(int m, int n, int k);
// Reduced count of rank-r matrices on the full m x n rectangle.
QPoly m_full_rect(int m, int n, int r);

enum class ZigzagKind { Bidiagonal, Menage };

// Raw count m_i for the bidiagonal board B and the menage board B' from the
// closed forms (menage includes the correction term G_{i,n}).
QPoly menage_m(ZigzagKind kind, int n, int i);

}  // namespace qrook
