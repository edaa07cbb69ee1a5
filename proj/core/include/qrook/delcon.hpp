#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrook/perm.hpp"
#include "qrook/qhit.hpp"
#include "qrook/rookcount.hpp"

namespace qrook {

/// Compact polynomial storage for memo entries: int64 coefficients with a
/// big-integer escape hatch.  All arithmetic stays in QPoly; this only
/// shrinks what sits in the cache.
struct PackedPoly {
  long long valuation = 0;
  std::vector<int64_t> small;
  std::vector<Int> big;  // used iff some coefficient overflows int64
  static PackedPoly pack(const QPoly& p);
  QPoly unpack() const;
};

/// Thread-safe cache of M_r(comp I_w, q) keyed by (canonical word, rank).
/// Values never change once written; concurrent duplicate computation is
/// harmless.  Supports an append-only disk format with a checksum header.
class MemoStore {
public:
  std::optional<QPoly> get(const Perm& w, int r) const;
  void put(const Perm& w, int r, const QPoly& value);
  size_t size() const;
  uint64_t hit_count() const { return hits_.load(); }
  uint64_t miss_count() const { return misses_.load(); }
  void clear();

  // Appends records not yet persisted and updates the checksum header in
  // place.  Creates the file if needed.
  void save(const std::string& path);
  // Loads a cache file; throws std::runtime_error on checksum mismatch or a
  // malformed record.
  void load(const std::string& path);

private:
  static std::string key(const Perm& w, int r);
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, PackedPoly> map_;
  std::vector<std::string> unsaved_;
  mutable std::atomic<uint64_t> hits_{0}, misses_{0};
};

/// The deletion partner w*(i,j), contraction v, and the corner itself for
/// the engine's deterministic corner policy: maximize the number of diagram
/// cells removed by contraction (ties: smallest row, then column).
struct CornerMoves {
  Cell corner;
  Perm deleted;     // same size, one more inversion
  Perm contracted;  // size n-1
};
CornerMoves pick_corner_moves(const Perm& w);

/// Lexicographically smaller of w and its diagram-transpose partner
/// (w^{-1} reverse-complemented); the two have equal M-profiles of both
/// I_w and its complement.
Perm canonicalize(const Perm& w);

/// Dworkin deletion-contraction for the Garsia-Remmel q-rook numbers:
///   R_r(B) = q R_r(B minus corner) + R_{r-1}(B contract corner).
/// Returns both sides for any board and SW corner.
std::pair<QPoly, QPoly> delcon_gr_sides(const Board& b, Cell corner, int r);

/// M_r(B, q) for NE boards by the deletion-contraction recurrence
///   M_r(B) = M_r(B minus corner) + q^{|B|-|B/corner|-1} M_{r-1}(B/corner).
QPoly m_delcon(const Board& b, int r);

/// M_r(comp I_w, q) via the complement recurrence
///   q M_r(comp I_w) = M_r(comp I_{w(i,j)}) + q^r (q-1) M_r(comp I_v)
///                      - q^{r-1} M_{r-1}(comp I_v),
/// with the full rectangle as base case.  The final division by q must be
/// exact in Z[q]; NotDivisible signals a genuine polynomiality failure.
/// memo may be null.
QPoly m_complement_delcon(const Perm& w, int r, MemoStore* memo);

/// Full-rank specialization (closed two-term recursion):
///   q M_n(comp I_w) = M_n(comp I_{w(i,j)}) - q^{n-1} M_{n-1}(comp I_v).
QPoly m_complement_fullrank(const Perm& w, MemoStore* memo);

/// Both sides of the two q-hit-polynomial deletion-contraction relations
/// for an NE board B and SW corner: first
///   P(B,q,t) = P(B-,q,t) + q^{m+|B|-|B/c|-2} (t-1) P(B/c, q, q^{-1} t),
/// then the complement version
///   q P(comp B,q,t) = P(comp(B-),q,t) - q^{m-1} (t-q^n) P(comp(B/c),q,t).
struct HitDelconSides {
  TPoly direct_lhs, direct_rhs;
  TPoly comp_lhs, comp_rhs;
};
HitDelconSides hitpoly_delcon_sides(const Board& b, Cell corner);

}  // namespace qrook
