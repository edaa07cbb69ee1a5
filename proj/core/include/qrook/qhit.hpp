#pragma once

#include <vector>

#include "qrook/board.hpp"
#include "qrook/rookcount.hpp"
#include "qrook/tpoly.hpp"

namespace qrook {

/// q-hit numbers H_0..H_m of a board together with the assembled q-hit
/// polynomial P(B, q, t) = sum_i H_i t^i.
struct HitProfile {
  int m = 0, n = 0;
  std::vector<QPoly> hits;
  TPoly P;
};

/// Assemble P(B,q,t) from the reduced profile:
///   P = q^{C(m,2)} sum_i M_i [n-i]!_q/[n-m]!_q (-1)^i (t; q^{-1})_i.
/// The factorial ratio is expanded as a product of q-integers, never as a
/// division.
HitProfile hit_poly(const RankCounts& reduced);

/// Closed-form conversions between the two profiles.
QPoly hits_from_M(const RankCounts& reduced, int k);
QPoly m_from_hits(const HitProfile& h, int k);

/// Reciprocity: H_{m-i}(comp B, q) = q^{i n - |B|} H_i(B, q).
HitProfile reciprocity_map(const HitProfile& h, int sizeB);

/// H_0 both as q^{|B|} M_m(comp B, q) and as the alternating sum
/// q^{C(m,2)} sum_i (-1)^i [n-i]!_q/[n-m]!_q M_i; the two must agree.
QPoly h0(const RankCounts& reduced, int sizeB);

/// Garsia-Remmel q-hit numbers of the NW-justified Ferrers board of lambda
/// inside [n] x [n], from
///   sum_i H^GR_i t^i = sum_i R^NE_i(S_lambda, q) [n-i]!_q
///                       prod_{k=n-i+1}^n (t - q^k).
/// Every entry must land in N[q]; IdentityError otherwise.
std::vector<QPoly> gr_qhit(const std::vector<int>& lambda, int n);

/// Probability that a random matrix supported on B extended by k full rows
/// has rank m, by brute force: F_k(B, q) = m_m(B_k, q) / q^{nk + |B|}.
Rat f_k(const Board& b, long long q, int k, long long budget = kDefaultBudget);

/// First K+1 t-series coefficients of
///   q^{-|B|-mn} t^m (q-1)^m / (t q^{-n}; q)_{m+1} * P(B, q, q^n/t)
/// at the fixed prime q, in exact rational arithmetic.
std::vector<Rat> f_infty_series(const Board& b, long long q, int K,
                                long long budget = kDefaultBudget);

/// q-hit values at a fixed q from the reduced profile evaluated at q.
/// Returns exact rationals; the entries are integers for prime powers
/// (verified by callers, not assumed).
std::vector<Rat> hit_values_at(const std::vector<Int>& reduced_at_q, int m,
                               int n, long long q);

}  // namespace qrook
