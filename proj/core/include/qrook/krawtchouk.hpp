#pragma once

#include <utility>

#include "qrook/rookcount.hpp"
#include "qrook/tpoly.hpp"

namespace qrook {

/// q-Krawtchouk polynomial K^{m,n}_r(i), computed from the summation
/// definition
///   K_r(i) = sum_s (-1)^{r-s} q^{ns + C(r-s,2)} [m-s choose r-s]_q
///                                               [m-i choose s]_q.
QPoly kraw(int m, int n, int r, int i);

/// Delsarte complement identity: raw profile of the complement from the raw
/// profile of B,
///   m_r(comp B, q) = q^{-|B|} sum_i K_r(i) m_i(B, q).
/// The shift by q^{-|B|} must land back in Z[q]; NotDivisible otherwise.
RankCounts complement_profile(const RankCounts& raw, int sizeB);

/// Same transform at a fixed integer q (uses the symbolic K values).
std::vector<Int> complement_profile_at(const std::vector<Int>& raw_at_q, int m,
                                       int n, int sizeB, long long q);

/// Full-rank specialization:
///   m_m(comp B, q) = (-1)^m q^{C(m,2)-|B|} sum_i m_i(B,q) (q^{n-m+1}; q)_{m-i}.
QPoly fullrank_complement(const RankCounts& raw, int sizeB);

/// Both sides of the polynomial lemma
///   sum_r K_r(i) (q^{n-m+1}; q)_{m-r} (t; q^{-1})_r
///     = t^{m-i} (q^{n-m+1}; q)_{m-i} prod_{k=0}^{i-1} (t - q^{n-k}),
/// as t-polynomials, for use as an executable identity check.
std::pair<TPoly, TPoly> kraw_identity_sides(int m, int n, int i);

/// Symbolic reduced profile of a board, when a symbolic route exists:
/// the NE formula on B itself or on a row/column rearrangement (profiles
/// are rearrangement-invariant), else the complement transform of an NE
/// (rearrangement of the) complement.  Throws std::domain_error when no
/// route is found; fixed-q questions then fall back to brute force.
RankCounts symbolic_reduced_profile(const Board& b);

}  // namespace qrook
