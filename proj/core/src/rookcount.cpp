#include "qrook/rookcount.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <thread>

namespace qrook {

RankCounts RankCounts::to_raw() const {
  if (kind == ProfileKind::RawM) return *this;
  RankCounts out{m, n, ProfileKind::RawM, entries};
  QPoly qm1 = QPoly::q() - QPoly::one();
  QPoly f = QPoly::one();
  for (int r = 0; r <= m; ++r) {
    out.entries[static_cast<size_t>(r)] = entries[static_cast<size_t>(r)] * f;
    f *= qm1;
  }
  return out;
}

RankCounts RankCounts::to_reduced() const {
  if (kind == ProfileKind::ReducedM) return *this;
  RankCounts out{m, n, ProfileKind::ReducedM, entries};
  QPoly qm1 = QPoly::q() - QPoly::one();
  QPoly f = QPoly::one();
  for (int r = 0; r <= m; ++r) {
    out.entries[static_cast<size_t>(r)] = entries[static_cast<size_t>(r)].exact_div(f);
    f *= qm1;
  }
  return out;
}

namespace {

// Rook placements on b with callback at exactly r rooks.  The callback
// receives the chosen cells.
void enumerate_placements(const Board& b, int r,
                          const std::function<void(const std::vector<Cell>&)>& f) {
  std::vector<Cell> chosen;
  std::function<void(int)> go = [&](int row) {
    if (static_cast<int>(chosen.size()) == r) {
      f(chosen);
      return;
    }
    if (row > b.m()) return;
    if (b.m() - row + 1 < r - static_cast<int>(chosen.size())) return;
    go(row + 1);  // leave this row empty
    uint64_t mask = b.row_mask(row);
    while (mask) {
      int j = std::countr_zero(mask) + 1;
      mask &= mask - 1;
      bool free = true;
      for (auto c : chosen)
        if (c.col == j) {
          free = false;
          break;
        }
      if (!free) continue;
      chosen.push_back({row, j});
      go(row + 1);
      chosen.pop_back();
    }
  };
  go(1);
}

}  // namespace

std::vector<Int> classical_rooks(const Board& b) {
  std::vector<Int> out(static_cast<size_t>(b.m()) + 1, Int(0));
  // Backtracking with rooks placed in increasing row order counts every
  // partial placement exactly once.
  std::function<void(int, uint64_t, int)> go = [&](int row, uint64_t used, int placed) {
    out[static_cast<size_t>(placed)] += 1;
    if (row > b.m()) return;
    // Place the next rook in some row >= row.
    for (int i = row; i <= b.m(); ++i) {
      uint64_t mask = b.row_mask(i) & ~used;
      while (mask) {
        int j = std::countr_zero(mask);
        mask &= mask - 1;
        go(i + 1, used | (uint64_t(1) << j), placed + 1);
      }
    }
  };
  go(1, 0, 0);
  return out;
}

std::vector<Int> classical_hits(const Board& b) {
  int m = b.m(), n = b.n();
  if (m > n) throw std::invalid_argument("classical_hits: requires m <= n");
  // Route 1: direct enumeration over maximal placements on [m] x [n].
  double total = 1;
  for (int i = 0; i < m; ++i) total *= n - i;
  if (total > 4e7)
    throw BudgetExceeded("classical_hits: too many maximal placements");
  std::vector<Int> direct(static_cast<size_t>(m) + 1, Int(0));
  std::vector<int> col(static_cast<size_t>(m), 0);
  uint64_t used = 0;
  std::function<void(int, int)> go = [&](int row, int hits) {
    if (row > m) {
      direct[static_cast<size_t>(hits)] += 1;
      return;
    }
    for (int j = 1; j <= n; ++j) {
      if ((used >> (j - 1)) & 1) continue;
      used |= uint64_t(1) << (j - 1);
      go(row + 1, hits + (b.contains(row, j) ? 1 : 0));
      used &= ~(uint64_t(1) << (j - 1));
    }
  };
  go(1, 0);

  // Route 2: sum_i h_i t^i = sum_i r_i (n-i)!/(n-m)! (t-1)^i.
  std::vector<Int> rooks = classical_rooks(b);
  std::vector<Int> viaid(static_cast<size_t>(m) + 1, Int(0));
  for (int i = 0; i <= m; ++i) {
    Int falling = 1;
    for (int j = n - m + 1; j <= n - i; ++j) falling *= j;
    Int c = rooks[static_cast<size_t>(i)] * falling;
    // (t-1)^i expansion
    for (int k = 0; k <= i; ++k) {
      Int term = c * binom(i, k);
      if ((i - k) % 2) term = -term;
      viaid[static_cast<size_t>(k)] += term;
    }
  }
  if (direct != viaid)
    throw IdentityError("classical_hits: direct enumeration disagrees with the rook-number identity");
  return direct;
}

namespace {

int rank_gf2(const uint64_t* rows, int m) {
  uint64_t basis[64] = {0};
  int rank = 0;
  for (int i = 0; i < m; ++i) {
    uint64_t v = rows[i];
    while (v) {
      int h = 63 - std::countl_zero(v);
      if (!basis[h]) {
        basis[h] = v;
        ++rank;
        break;
      }
      v ^= basis[h];
    }
  }
  return rank;
}

int rank_modp(int* a, int m, int n, long long q) {
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (a[i * n + col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = col; j < n; ++j) std::swap(a[rank * n + j], a[piv * n + j]);
    // No normalization needed; eliminate with cross-multiplication.
    long long lead = a[rank * n + col];
    for (int i = rank + 1; i < m; ++i) {
      long long f = a[i * n + col];
      if (!f) continue;
      for (int j = col; j < n; ++j) {
        long long v = (static_cast<long long>(a[i * n + j]) * lead -
                       static_cast<long long>(a[rank * n + j]) * f) % q;
        a[i * n + j] = static_cast<int>((v + q) % q);
      }
    }
    ++rank;
  }
  return rank;
}

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::vector<Int> brute_profile_range(const Board& b, long long q, uint64_t lo,
                                     uint64_t hi) {
  const auto cells = b.cells();
  const int k = static_cast<int>(cells.size());
  const int m = b.m(), n = b.n();
  std::vector<Int> profile(static_cast<size_t>(m) + 1, Int(0));
  std::vector<long long> counts(static_cast<size_t>(m) + 1, 0);
  auto flush = [&] {
    for (size_t r = 0; r < counts.size(); ++r) {
      profile[r] += counts[r];
      counts[r] = 0;
    }
  };
  if (q == 2) {
    std::vector<uint64_t> rows(static_cast<size_t>(m));
    for (uint64_t code = lo; code < hi; ++code) {
      std::fill(rows.begin(), rows.end(), 0);
      uint64_t c = code;
      for (int t = 0; t < k; ++t) {
        if (c & 1)
          rows[static_cast<size_t>(cells[static_cast<size_t>(t)].row - 1)] |=
              uint64_t(1) << (cells[static_cast<size_t>(t)].col - 1);
        c >>= 1;
      }
      ++counts[static_cast<size_t>(rank_gf2(rows.data(), m))];
      if ((code & 0xfffff) == 0xfffff) flush();
    }
  } else {
    std::vector<int> digits(static_cast<size_t>(k), 0);
    uint64_t code = lo;
    for (int t = 0; t < k; ++t) {
      digits[static_cast<size_t>(t)] = static_cast<int>(code % static_cast<uint64_t>(q));
      code /= static_cast<uint64_t>(q);
    }
    std::vector<int> a(static_cast<size_t>(m * n));
    for (uint64_t it = lo; it < hi; ++it) {
      std::fill(a.begin(), a.end(), 0);
      for (int t = 0; t < k; ++t)
        a[static_cast<size_t>((cells[static_cast<size_t>(t)].row - 1) * n +
                              (cells[static_cast<size_t>(t)].col - 1))] =
            digits[static_cast<size_t>(t)];
      ++counts[static_cast<size_t>(rank_modp(a.data(), m, n, q))];
      if ((it & 0xfffff) == 0xfffff) flush();
      // odometer step
      for (int t = 0; t < k; ++t) {
        if (++digits[static_cast<size_t>(t)] < q) break;
        digits[static_cast<size_t>(t)] = 0;
      }
    }
  }
  flush();
  return profile;
}

}  // namespace

std::vector<Int> brute_profile(const Board& b, long long q, long long budget,
                               int workers) {
  if (!is_prime(q)) throw std::invalid_argument("brute_profile: q must be prime");
  const int k = b.size();
  Int total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  if (total > budget)
    throw BudgetExceeded("brute_profile: q^|B| = " + total.str() +
                         " exceeds budget " + std::to_string(budget));
  uint64_t count = total.convert_to<uint64_t>();
  if (workers <= 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, 64));
  if (workers == 1 || count < (1u << 16)) return brute_profile_range(b, q, 0, count);

  std::vector<std::vector<Int>> parts(static_cast<size_t>(workers));
  std::vector<std::thread> threads;
  uint64_t chunk = (count + static_cast<uint64_t>(workers) - 1) / static_cast<uint64_t>(workers);
  for (int w = 0; w < workers; ++w) {
    uint64_t lo = static_cast<uint64_t>(w) * chunk;
    uint64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, w, lo, hi] {
      parts[static_cast<size_t>(w)] = brute_profile_range(b, q, lo, hi);
    });
  }
  for (auto& t : threads) t.join();
  std::vector<Int> profile(static_cast<size_t>(b.m()) + 1, Int(0));
  for (const auto& p : parts)
    for (size_t r = 0; r < p.size(); ++r) profile[r] += p[r];
  return profile;
}

Int brute_m(const Board& b, long long q, int r, long long budget, int workers) {
  if (r < 0 || r > b.m()) return 0;
  return brute_profile(b, q, budget, workers)[static_cast<size_t>(r)];
}

QPoly gr_qrook(const Board& b, int r) {
  if (r < 0) return QPoly::zero();
  const int m = b.m(), n = b.n();
  QPoly out;
  std::vector<Int> by_inv(static_cast<size_t>(b.size()) + 1, Int(0));
  enumerate_placements(b, r, [&](const std::vector<Cell>& rooks) {
    // Cancelled cells: own cell, strictly north in the rook's column,
    // strictly east in the rook's row.
    std::vector<uint64_t> cancelled(static_cast<size_t>(m), 0);
    for (auto c : rooks) {
      uint64_t colbit = uint64_t(1) << (c.col - 1);
      for (int i = 0; i < c.row; ++i) cancelled[static_cast<size_t>(i)] |= colbit;
      uint64_t east = ~((uint64_t(2) << (c.col - 1)) - 1);
      if (n < 64) east &= (uint64_t(1) << n) - 1;
      cancelled[static_cast<size_t>(c.row - 1)] |= east;
    }
    int inv = 0;
    for (int i = 1; i <= m; ++i)
      inv += std::popcount(b.row_mask(i) & ~cancelled[static_cast<size_t>(i - 1)]);
    by_inv[static_cast<size_t>(inv)] += 1;
  });
  for (size_t e = 0; e < by_inv.size(); ++e)
    if (by_inv[e] != 0)
      out += QPoly::monomial(by_inv[e], static_cast<long long>(e));
  return out;
}

QPoly m_ne(const Board& b, int r) {
  if (!b.ne_property())
    throw std::invalid_argument("m_ne: board lacks the NE property");
  if (r < 0 || r > std::min(b.m(), b.n())) return QPoly::zero();
  QPoly R = gr_qrook(b, r);
  QPoly Rinv = R.subst_q_inverse();
  QPoly M = Rinv.times_pow_q(b.size() - r);
  if (!M.is_polynomial() || !M.nonnegative_coeffs())
    throw IdentityError("m_ne: substitution left a non-polynomial result");
  return M;
}

RankCounts m_ne_profile(const Board& b) {
  RankCounts rc{b.m(), b.n(), ProfileKind::ReducedM, {}};
  rc.entries.reserve(static_cast<size_t>(b.m()) + 1);
  for (int r = 0; r <= b.m(); ++r) rc.entries.push_back(m_ne(b, r));
  return rc;
}

QPoly v_count(int m, int n, int k) {
  if (k < 0 || k > std::min(m, n)) return QPoly::zero();
  QPoly out = qbinom(m, k);
  for (int i = 0; i < k; ++i)
    out *= QPoly::monomial(1, n) - QPoly::monomial(1, i);
  return out;
}

QPoly m_full_rect(int m, int n, int r) {
  if (r < 0 || r > std::min(m, n)) return QPoly::zero();
  QPoly out = qbinom(m, r).times_pow_q(static_cast<long long>(r) * (r - 1) / 2);
  for (int i = 0; i < r; ++i) out *= qint(n - i);
  return out;
}

QPoly menage_m(ZigzagKind kind, int n, int i) {
  if (n < 1 || (kind == ZigzagKind::Menage && n < 2))
    throw std::invalid_argument("menage_m: n too small");
  if (i < 0 || i > n) return QPoly::zero();
  QPoly qm1_i = (QPoly::q() - QPoly::one()).pow(static_cast<unsigned>(i));
  if (kind == ZigzagKind::Bidiagonal) {
    QPoly inner;
    Int c1 = binom(2 * n - 1 - i, i - 1);
    Int c2 = binom(2 * n - 1 - i, i);
    if (c1 != 0) inner += QPoly::monomial(c1, i - 1);
    if (c2 != 0) inner += QPoly::monomial(c2, i);
    return qm1_i * inner;
  }
  // Menage board: q^i * (2n/(2n-i)) * binom(2n-i, i) + G_{i,n}.
  Int cyc = 2 * Int(n) * binom(2 * n - i, i);
  Int den = 2 * n - i;
  if (cyc % den != 0)
    throw IdentityError("menage_m: cyclic binomial is not an integer");
  QPoly inner = QPoly::monomial(cyc / den, i);
  QPoly qm1 = QPoly::q() - QPoly::one();
  if (i == n)
    inner -= QPoly::q() * qm1.pow(static_cast<unsigned>(n - 1));
  else if (i == n - 1)
    inner += qm1.pow(static_cast<unsigned>(n));
  return qm1_i * inner;
}

}  // namespace qrook
