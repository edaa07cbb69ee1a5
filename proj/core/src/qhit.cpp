#include "qrook/qhit.hpp"

#include <algorithm>

#include "qrook/krawtchouk.hpp"

namespace qrook {

namespace {

// [n-i]!_q / [n-m]!_q as the product of q-integers [n-m+1]_q ... [n-i]_q.
QPoly factorial_ratio(int n, int m, int i) {
  QPoly r = QPoly::one();
  for (int j = n - m + 1; j <= n - i; ++j) r *= qint(j);
  return r;
}

Int int_pow(long long q, long long e) {
  Int r = 1;
  for (long long i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

HitProfile hit_poly(const RankCounts& reduced) {
  if (reduced.kind != ProfileKind::ReducedM)
    throw std::invalid_argument("hit_poly: expects a reduced M-profile");
  const int m = reduced.m, n = reduced.n;
  if (m > n) throw std::invalid_argument("hit_poly: requires m <= n");
  TPoly P(m);
  for (int i = 0; i <= m; ++i) {
    const QPoly& Mi = reduced.entries[static_cast<size_t>(i)];
    if (Mi.is_zero()) continue;
    QPoly c = Mi * factorial_ratio(n, m, i);
    if (i % 2) c = -c;
    P = P + prod_one_minus_qpow_t(i, 0, -1).scaled(c);
  }
  P = P.scaled(QPoly::monomial(1, static_cast<long long>(m) * (m - 1) / 2));
  HitProfile out;
  out.m = m;
  out.n = n;
  out.P = P;
  out.hits.resize(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) out.hits[static_cast<size_t>(i)] = P.coeff(i);
  return out;
}

QPoly hits_from_M(const RankCounts& reduced, int k) {
  if (reduced.kind != ProfileKind::ReducedM)
    throw std::invalid_argument("hits_from_M: expects a reduced M-profile");
  const int m = reduced.m, n = reduced.n;
  QPoly sum;
  for (int i = k; i <= m; ++i) {
    QPoly term = reduced.entries[static_cast<size_t>(i)] * factorial_ratio(n, m, i) *
                 qbinom(i, k);
    term = term.times_pow_q(-static_cast<long long>(i) * k);
    if ((i + k) % 2) term = -term;
    sum += term;
  }
  long long shift = static_cast<long long>(k) * (k + 1) / 2 +
                    static_cast<long long>(m) * (m - 1) / 2;
  return sum.times_pow_q(shift);
}

QPoly m_from_hits(const HitProfile& h, int k) {
  const int m = h.m, n = h.n;
  QPoly sum;
  for (int i = k; i <= m; ++i)
    sum += h.hits[static_cast<size_t>(i)] * qbinom(i, k);
  long long shift = static_cast<long long>(k) * (k - 1) / 2 -
                    static_cast<long long>(m) * (m - 1) / 2;
  return sum.times_pow_q(shift).exact_div(factorial_ratio(n, m, k));
}

HitProfile reciprocity_map(const HitProfile& h, int sizeB) {
  const int m = h.m, n = h.n;
  bool input_poly = std::all_of(h.hits.begin(), h.hits.end(),
                                [](const QPoly& p) { return p.is_polynomial(); });
  HitProfile out;
  out.m = m;
  out.n = n;
  out.hits.resize(static_cast<size_t>(m) + 1);
  out.P = TPoly(m);
  for (int i = 0; i <= m; ++i) {
    QPoly scaled =
        h.hits[static_cast<size_t>(i)].times_pow_q(static_cast<long long>(i) * n - sizeB);
    if (input_poly && !scaled.is_polynomial())
      throw NotDivisible("reciprocity_map: q^{in-|B|} scaling left Z[q]", scaled);
    out.hits[static_cast<size_t>(m - i)] = scaled;
    out.P.set_coeff(m - i, std::move(scaled));
  }
  return out;
}

QPoly h0(const RankCounts& reduced, int sizeB) {
  if (reduced.kind != ProfileKind::ReducedM)
    throw std::invalid_argument("h0: expects a reduced M-profile");
  const int m = reduced.m, n = reduced.n;
  QPoly alternating;
  for (int i = 0; i <= m; ++i) {
    QPoly term = reduced.entries[static_cast<size_t>(i)] * factorial_ratio(n, m, i);
    if (i % 2) term = -term;
    alternating += term;
  }
  alternating = alternating.times_pow_q(static_cast<long long>(m) * (m - 1) / 2);

  QPoly raw_top = fullrank_complement(reduced.to_raw(), sizeB);
  QPoly via_complement =
      raw_top.exact_div((QPoly::q() - QPoly::one()).pow(static_cast<unsigned>(m)))
          .times_pow_q(sizeB);
  if (alternating != via_complement)
    throw IdentityError("h0: alternating sum disagrees with q^{|B|} M_m(comp B)");
  return alternating;
}

std::vector<QPoly> gr_qhit(const std::vector<int>& lambda, int n) {
  Board b = ferrers(lambda, n, n, Justify::NW);
  TPoly P(n);
  for (int i = 0; i <= n; ++i) {
    QPoly R = gr_qrook(b, i);
    if (R.is_zero()) continue;
    P = P + prod_t_minus_qpow(i, n - i + 1, 1).scaled(R * qfact(n - i));
  }
  std::vector<QPoly> out(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    out[static_cast<size_t>(i)] = P.coeff(i);
    if (!out[static_cast<size_t>(i)].is_polynomial() ||
        !out[static_cast<size_t>(i)].nonnegative_coeffs())
      throw IdentityError("gr_qhit: entry outside N[q]");
  }
  return out;
}

Rat f_k(const Board& b, long long q, int k, long long budget) {
  const int m = b.m(), n = b.n();
  Board ext(m + k, n);
  for (auto c : b.cells()) ext.add(c.row, c.col);
  for (int i = m + 1; i <= m + k; ++i)
    for (int j = 1; j <= n; ++j) ext.add(i, j);
  Int hits = brute_m(ext, q, m, budget);
  return Rat(hits, int_pow(q, static_cast<long long>(n) * k + b.size()));
}

std::vector<Rat> hit_values_at(const std::vector<Int>& reduced_at_q, int m,
                               int n, long long q) {
  std::vector<Rat> P(static_cast<size_t>(m) + 1, Rat(0));
  Rat qr(q);
  for (int i = 0; i <= m; ++i) {
    Rat c(reduced_at_q[static_cast<size_t>(i)] *
          factorial_ratio(n, m, i).eval_int(q));
    if (i % 2) c = -c;
    // expand (t; q^{-1})_i
    std::vector<Rat> poch(static_cast<size_t>(i) + 1, Rat(0));
    poch[0] = 1;
    Rat qpow(1);
    for (int j = 0; j < i; ++j) {
      for (int d = j + 1; d >= 1; --d)
        poch[static_cast<size_t>(d)] -= poch[static_cast<size_t>(d - 1)] / qpow;
      qpow *= qr;
    }
    for (int d = 0; d <= i; ++d) P[static_cast<size_t>(d)] += c * poch[static_cast<size_t>(d)];
  }
  Int lead = int_pow(q, static_cast<long long>(m) * (m - 1) / 2);
  for (auto& x : P) x *= Rat(lead);
  return P;
}

std::vector<Rat> f_infty_series(const Board& b, long long q, int K,
                                long long budget) {
  const int m = b.m(), n = b.n();
  std::vector<Int> raw = brute_profile(b, q, budget);
  std::vector<Int> reduced(raw.size());
  Int qm1 = q - 1, f = 1;
  for (int r = 0; r <= m; ++r) {
    if (raw[static_cast<size_t>(r)] % f != 0)
      throw IdentityError("f_infty_series: raw count not divisible by (q-1)^r");
    reduced[static_cast<size_t>(r)] = raw[static_cast<size_t>(r)] / f;
    f *= qm1;
  }
  std::vector<Rat> H = hit_values_at(reduced, m, n, q);

  // Numerator q^{-|B|-mn} (q-1)^m sum_i H_i q^{ni} t^{m-i}.
  std::vector<Rat> num(static_cast<size_t>(m) + 1, Rat(0));
  Rat lead = Rat(1, int_pow(q, b.size() + static_cast<long long>(m) * n));
  for (int i = 0; i < m; ++i) lead *= Rat(qm1);
  for (int i = 0; i <= m; ++i)
    num[static_cast<size_t>(m - i)] =
        H[static_cast<size_t>(i)] * Rat(int_pow(q, static_cast<long long>(n) * i)) * lead;

  // Denominator (t q^{-n}; q)_{m+1} = prod_{i=0}^{m} (1 - q^{i-n} t).
  std::vector<Rat> den(static_cast<size_t>(m) + 2, Rat(0));
  den[0] = 1;
  for (int i = 0; i <= m; ++i) {
    Rat g = Rat(int_pow(q, i)) / Rat(int_pow(q, n));
    for (int d = i + 1; d >= 1; --d)
      den[static_cast<size_t>(d)] -= g * den[static_cast<size_t>(d - 1)];
  }

  std::vector<Rat> series(static_cast<size_t>(K) + 1, Rat(0));
  for (int k = 0; k <= K; ++k) {
    Rat acc = (k <= m) ? num[static_cast<size_t>(k)] : Rat(0);
    for (int j = 1; j <= std::min(k, m + 1); ++j)
      acc -= den[static_cast<size_t>(j)] * series[static_cast<size_t>(k - j)];
    series[static_cast<size_t>(k)] = acc;  // den[0] == 1
  }
  return series;
}

}  // namespace qrook
