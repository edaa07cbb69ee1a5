#include "qrook/applications.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace qrook {

namespace {

QPoly shift_certified(const QPoly& p, long long e, const char* what) {
  QPoly r = p.times_pow_q(e);
  if (!r.is_polynomial()) throw NotDivisible(what, r);
  return r;
}

}  // namespace

QPoly derangement_poly(int n) {
  if (n < 1) throw std::invalid_argument("derangement_poly: need n >= 1");
  QPoly sum;
  for (int i = 0; i <= n; ++i) {
    QPoly term = qfact(n - i).times_int(binom(n, i));
    if (i % 2) term = -term;
    sum += term;
  }
  sum *= (QPoly::q() - QPoly::one()).pow(static_cast<unsigned>(n));
  long long e = static_cast<long long>(n) * (n - 1) / 2 - n;
  return shift_certified(sum, e, "derangement_poly: q-power shift left Z[q]");
}

QPoly qmenage(ZigzagKind kind, int n) {
  if (n < 2) throw std::invalid_argument("qmenage: need n >= 2");
  QPoly sum;
  if (kind == ZigzagKind::Bidiagonal) {
    for (int i = 0; i <= n; ++i) {
      QPoly coeff = QPoly::monomial(binom(2 * n - 1 - i, i), 1) +
                    QPoly(binom(2 * n - 1 - i, i - 1));
      QPoly term = (coeff * qfact(n - i)).times_pow_q(i);
      if (i % 2) term = -term;
      sum += term;
    }
  } else {
    for (int i = 0; i <= n; ++i) {
      Int cyc = 2 * Int(n) * binom(2 * n - i, i);
      Int den = 2 * n - i;
      if (cyc % den != 0)
        throw IdentityError("qmenage: cyclic binomial is not an integer");
      QPoly term = qfact(n - i).times_int(cyc / den).times_pow_q(i);
      if (i % 2) term = -term;
      sum += term;
    }
    QPoly anomaly =
        (QPoly::q() - QPoly::one()).pow(static_cast<unsigned>(n - 1)) *
        (QPoly::monomial(2, 1) - QPoly::one());
    if ((n - 1) % 2) sum += anomaly;
    else sum -= anomaly;
  }
  sum *= (QPoly::q() - QPoly::one()).pow(static_cast<unsigned>(n));
  long long e = static_cast<long long>(n) * (n - 1) / 2 - 2 * n;
  return shift_certified(sum, e, "qmenage: q-power shift left Z[q]");
}

FanoReport fano_check(long long budget, int workers) {
  static const Int stembridge[] = {1,    17,   135,  650, 2043, 4236,
                                   5845, 5386, 3260, 1236, 264,  24};
  Int at1 = 0;
  for (const Int& c : stembridge) at1 += c;  // x = 1
  FanoReport out;
  std::vector<Int> profile = brute_profile(fano(), 2, budget, workers);
  out.count = profile[7];
  out.expected_z2_0 = 8 * at1;
  out.expected_z2_1 = 8 * (at1 - 1);
  Int total = 0;
  for (const Int& c : profile) total += c;
  out.total_ok = (total == Int(1) << 21);
  if (out.count == out.expected_z2_0)
    out.z2_resolved = 0;
  else if (out.count == out.expected_z2_1)
    out.z2_resolved = 1;
  else
    throw IdentityError("fano_check: brute count matches neither parity value");
  return out;
}

Family123 conj_123_family(int n, MemoStore* memo) {
  if (n < 1) throw std::invalid_argument("conj_123_family: need n >= 1");
  std::vector<int> word;
  for (int b = n; b >= 1; --b) {
    word.push_back(2 * b - 1);
    word.push_back(2 * b);
  }
  Family123 out;
  out.v = Perm(std::move(word));
  QPoly sum;
  for (int i = 0; i <= n; ++i) {
    QPoly term = qfact(2 * n - i).times_int(binom(n, i));
    if (i % 2) term = -term;
    sum += term;
  }
  out.formula = sum.times_pow_q(2LL * n * (n - 1));
  out.engine = m_complement_fullrank(out.v, memo);
  out.equal = (out.formula == out.engine);
  out.nonnegative = out.engine.nonnegative_coeffs();
  return out;
}

bool pattern_nonheredity_check(MemoStore* memo) {
  Perm w = Perm::parse("5 8 9 10 6 7 3 4 1 2");
  Perm pattern = Perm::parse("789563412");
  if (!w.contains_pattern(pattern)) return false;
  for (int r = 0; r <= 10; ++r)
    if (!m_complement_delcon(w, r, memo).nonnegative_coeffs()) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

// Words of S_n with exactly ell inversions, via bounded Lehmer codes
// L_p in [0, n-p] with sum ell.
void enumerate_level(int n, int ell, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> code(static_cast<size_t>(n), 0);
  std::vector<int> maxtail(static_cast<size_t>(n) + 2, 0);
  for (int p = n; p >= 1; --p)
    maxtail[static_cast<size_t>(p)] = maxtail[static_cast<size_t>(p + 1)] + (n - p);
  std::vector<int> word(static_cast<size_t>(n));
  std::function<void(int, int)> go = [&](int p, int rem) {
    if (p > n) {
      // Decode: w_p is the (L_p + 1)-th smallest remaining value.
      std::vector<int> avail(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) avail[static_cast<size_t>(i)] = i + 1;
      for (int t = 1; t <= n; ++t) {
        int idx = code[static_cast<size_t>(t - 1)];
        word[static_cast<size_t>(t - 1)] = avail[static_cast<size_t>(idx)];
        avail.erase(avail.begin() + idx);
      }
      f(word);
      return;
    }
    int hi = std::min(n - p, rem);
    int lo = std::max(0, rem - maxtail[static_cast<size_t>(p + 1)]);
    for (int v = lo; v <= hi; ++v) {
      code[static_cast<size_t>(p - 1)] = v;
      go(p + 1, rem - v);
    }
  };
  go(1, ell);
}

std::string word_key(const std::vector<int>& w) {
  std::string k;
  k.reserve(w.size());
  for (int v : w) k.push_back(static_cast<char>(v));
  return k;
}

struct LevelWindow {
  std::unordered_map<std::string, std::vector<PackedPoly>> profiles;
};

bool word_is_decreasing(const std::vector<int>& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

}  // namespace

ConjectureReport scan_negativity(int n, std::vector<int> ranks, int workers,
                                 double time_budget_s, MemoStore* memo,
                                 bool extended) {
  if (n < 2 || n > 10)
    throw std::invalid_argument("scan_negativity: n must be in [2, 10]");
  if (n >= 10 && !extended)
    throw std::invalid_argument(
        "scan_negativity: n = 10 requires the extended budget flag");
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  for (int r : ranks)
    if (r < 0 || r > n)
      throw std::invalid_argument("scan_negativity: rank out of range");

  MemoStore local;
  if (!memo) memo = &local;
  ConjectureReport report;
  report.family = "rothe-complement";
  report.n = n;
  report.ranks = ranks;

  auto t0 = Clock::now();
  auto out_of_time = [&] {
    if (time_budget_s <= 0) return false;
    return std::chrono::duration<double>(Clock::now() - t0).count() > time_budget_s;
  };
  if (workers <= 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, 64));

  // Needed ranks per size: rank r at size k pulls ranks {r, r-1} at k-1.
  std::vector<std::vector<int>> needed(static_cast<size_t>(n) + 1);
  needed[static_cast<size_t>(n)] = ranks;
  for (int k = n - 1; k >= 2; --k) {
    std::vector<int> s;
    for (int r : needed[static_cast<size_t>(k + 1)]) {
      for (int d = 0; d <= 1; ++d) {
        int rr = r - d;
        if (rr >= 1 && rr <= k) s.push_back(rr);
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    needed[static_cast<size_t>(k)] = s;
  }

  // Tabulate sizes 2..n-1 into the memo, decreasing inversion levels so the
  // recursion always finds its children memoized.
  for (int k = 2; k < n && !report.stats.partial; ++k) {
    const auto& ranks_k = needed[static_cast<size_t>(k)];
    if (ranks_k.empty()) continue;
    for (int ell = k * (k - 1) / 2; ell >= 0; --ell) {
      if (out_of_time()) {
        report.stats.partial = true;
        break;
      }
      std::vector<Perm> level;
      enumerate_level(k, ell, [&](const std::vector<int>& w) {
        Perm p(w);
        if (canonicalize(p) == p) level.push_back(std::move(p));
      });
      std::atomic<size_t> next{0};
      auto work = [&] {
        for (size_t i = next.fetch_add(16); i < level.size(); i = next.fetch_add(16))
          for (size_t j = i; j < std::min(level.size(), i + 16); ++j)
            for (int r : ranks_k) m_complement_delcon(level[j], r, memo);
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < workers; ++t) pool.emplace_back(work);
      work();
      for (auto& t : pool) t.join();
    }
  }

  // Top size: two-level window over inversion levels.
  const size_t nranks = ranks.size();
  LevelWindow prev, cur;
  std::vector<Violation> violations;
  uint64_t scanned = 0, computed = 0;
  for (int ell = n * (n - 1) / 2; ell >= 0 && !report.stats.partial; --ell) {
    if (out_of_time()) {
      report.stats.partial = true;
      break;
    }
    std::vector<Perm> level;
    enumerate_level(n, ell, [&](const std::vector<int>& w) {
      Perm p(w);
      if (canonicalize(p) == p) level.push_back(std::move(p));
    });
    cur.profiles.clear();
    cur.profiles.reserve(level.size());

    std::vector<std::vector<std::pair<std::string, std::vector<PackedPoly>>>>
        results(static_cast<size_t>(workers));
    std::vector<std::vector<Violation>> found(static_cast<size_t>(workers));
    std::atomic<size_t> next{0};

    auto lower_lookup = [&](const Perm& v, int r) -> QPoly {
      if (r <= 0) return r == 0 ? QPoly::one() : QPoly::zero();
      if (r > v.size()) return QPoly::zero();
      if (v.is_decreasing()) return m_full_rect(v.size(), v.size(), r);
      Perm c = canonicalize(v);
      if (auto hit = memo->get(c, r)) return *hit;
      return m_complement_delcon(c, r, memo);
    };

    auto work = [&](int tid) {
      for (size_t i = next.fetch_add(8); i < level.size(); i = next.fetch_add(8)) {
        for (size_t j = i; j < std::min(level.size(), i + 8); ++j) {
          const Perm& w = level[j];
          std::vector<PackedPoly> profile(nranks);
          if (w.is_decreasing()) {
            for (size_t ri = 0; ri < nranks; ++ri)
              profile[ri] = PackedPoly::pack(m_full_rect(n, n, ranks[ri]));
          } else {
            CornerMoves mv = pick_corner_moves(w);
            Perm delc = canonicalize(mv.deleted);
            const std::vector<PackedPoly>* delprof = nullptr;
            auto it = prev.profiles.find(word_key(delc.word()));
            if (it != prev.profiles.end()) delprof = &it->second;
            QPoly qm1 = QPoly::q() - QPoly::one();
            for (size_t ri = 0; ri < nranks; ++ri) {
              int r = ranks[ri];
              QPoly del;
              if (r == 0) {
                profile[ri] = PackedPoly::pack(QPoly::one());
                continue;
              }
              if (delprof)
                del = (*delprof)[ri].unpack();
              else if (mv.deleted.is_decreasing())
                del = m_full_rect(n, n, r);
              else
                del = m_complement_delcon(delc, r, memo);
              QPoly conr = lower_lookup(mv.contracted, r);
              QPoly conr1 = lower_lookup(mv.contracted, r - 1);
              QPoly rhs = del + (qm1 * conr).times_pow_q(r) - conr1.times_pow_q(r - 1);
              profile[ri] = PackedPoly::pack(rhs.exact_div_pow_q(1));
            }
          }
          for (size_t ri = 0; ri < nranks; ++ri) {
            QPoly p = profile[ri].unpack();
            if (!p.nonnegative_coeffs()) {
              found[static_cast<size_t>(tid)].push_back({w, ranks[ri], p});
              Perm partner = w.inverse().reverse_complement();
              if (!(partner == w))
                found[static_cast<size_t>(tid)].push_back({partner, ranks[ri], p});
            }
          }
          results[static_cast<size_t>(tid)].emplace_back(word_key(w.word()),
                                                         std::move(profile));
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();

    // Merge shards into the current window and count covered permutations.
    for (int t = 0; t < workers; ++t) {
      for (auto& [k, v] : results[static_cast<size_t>(t)]) {
        std::vector<int> wv(k.begin(), k.end());
        Perm w(wv);
        Perm partner = w.inverse().reverse_complement();
        scanned += (partner == w) ? 1 : 2;
        ++computed;
        cur.profiles.emplace(std::move(k), std::move(v));
      }
      for (auto& viol : found[static_cast<size_t>(t)])
        violations.push_back(std::move(viol));
      found[static_cast<size_t>(t)].clear();
      results[static_cast<size_t>(t)].clear();
    }
    std::swap(prev.profiles, cur.profiles);
  }

  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.w.word() != b.w.word()) return a.w.word() < b.w.word();
    return a.r < b.r;
  });
  report.violations = std::move(violations);
  report.stats.scanned = scanned;
  report.stats.computed = computed;
  report.stats.memo_hits = memo->hit_count();
  report.stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return report;
}

}  // namespace qrook
