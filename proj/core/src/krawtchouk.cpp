#include "qrook/krawtchouk.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qrook {

QPoly kraw(int m, int n, int r, int i) {
  QPoly out;
  int smax = std::min(r, m - i);
  for (int s = 0; s <= smax; ++s) {
    QPoly term = qbinom(m - s, r - s) * qbinom(m - i, s);
    if (term.is_zero()) continue;
    long long rs = r - s;
    term = term.times_pow_q(static_cast<long long>(n) * s + rs * (rs - 1) / 2);
    if (rs % 2) term = -term;
    out += term;
  }
  return out;
}

RankCounts complement_profile(const RankCounts& raw, int sizeB) {
  if (raw.kind != ProfileKind::RawM)
    throw std::invalid_argument("complement_profile: expects a raw m-profile");
  const int m = raw.m, n = raw.n;
  RankCounts out{m, n, ProfileKind::RawM, {}};
  out.entries.resize(static_cast<size_t>(m) + 1);
  for (int r = 0; r <= m; ++r) {
    QPoly sum;
    for (int i = 0; i <= m; ++i)
      sum += kraw(m, n, r, i) * raw.entries[static_cast<size_t>(i)];
    out.entries[static_cast<size_t>(r)] = sum.exact_div_pow_q(sizeB);
  }
  return out;
}

std::vector<Int> complement_profile_at(const std::vector<Int>& raw_at_q, int m,
                                       int n, int sizeB, long long q) {
  std::vector<Int> out(static_cast<size_t>(m) + 1, Int(0));
  Int qB = 1;
  for (int i = 0; i < sizeB; ++i) qB *= q;
  for (int r = 0; r <= m; ++r) {
    Int sum = 0;
    for (int i = 0; i <= m; ++i)
      sum += kraw(m, n, r, i).eval_int(q) * raw_at_q[static_cast<size_t>(i)];
    if (sum % qB != 0)
      throw IdentityError("complement_profile_at: transform not divisible by q^|B|");
    out[static_cast<size_t>(r)] = sum / qB;
  }
  return out;
}

QPoly fullrank_complement(const RankCounts& raw, int sizeB) {
  if (raw.kind != ProfileKind::RawM)
    throw std::invalid_argument("fullrank_complement: expects a raw m-profile");
  const int m = raw.m, n = raw.n;
  QPoly sum;
  for (int i = 0; i <= m; ++i)
    sum += raw.entries[static_cast<size_t>(i)] * qpoch(n - m + 1, m - i);
  if (m % 2) sum = -sum;
  sum = sum.times_pow_q(static_cast<long long>(m) * (m - 1) / 2);
  return sum.exact_div_pow_q(sizeB);
}

namespace {

// Exhaustive search for an NE rearrangement on small boards.
std::optional<Board> ne_rearrangement(const Board& b) {
  if (b.ne_property()) return b;
  long long combos = 1;
  for (int i = 2; i <= b.m(); ++i) combos *= i;
  for (int i = 2; i <= b.n(); ++i) combos *= i;
  if (combos > 40320) return std::nullopt;
  std::vector<int> rows(static_cast<size_t>(b.m())), cols(static_cast<size_t>(b.n()));
  std::iota(rows.begin(), rows.end(), 1);
  do {
    std::iota(cols.begin(), cols.end(), 1);
    do {
      Board p = b.permuted(rows, cols);
      if (p.ne_property()) return p;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return std::nullopt;
}

}  // namespace

RankCounts symbolic_reduced_profile(const Board& b) {
  if (auto ne = ne_rearrangement(b)) return m_ne_profile(*ne);
  if (auto nec = ne_rearrangement(b.complement())) {
    auto raw = m_ne_profile(*nec).to_raw();
    return complement_profile(raw, b.complement().size()).to_reduced();
  }
  throw std::domain_error(
      "symbolic_reduced_profile: neither the board nor its complement has an "
      "NE rearrangement within search limits");
}

std::pair<TPoly, TPoly> kraw_identity_sides(int m, int n, int i) {
  TPoly lhs(m);
  for (int r = 0; r <= m; ++r) {
    TPoly part = prod_one_minus_qpow_t(r, 0, -1);  // (t; q^{-1})_r
    part = part.scaled(kraw(m, n, r, i) * qpoch(n - m + 1, m - r));
    lhs = lhs + part;
  }
  // t^m (q^{n-m+1}; q)_{m-i} (t^{-1} q^n; q^{-1})_i
  //   = t^{m-i} (q^{n-m+1}; q)_{m-i} prod_{k<i} (t - q^{n-k}).
  TPoly rhs = prod_t_minus_qpow(i, n, -1).scaled(qpoch(n - m + 1, m - i));
  TPoly tpow(m - i);
  tpow.set_coeff(m - i, QPoly::one());
  rhs = rhs * tpow;
  return {lhs, rhs};
}

}  // namespace qrook
