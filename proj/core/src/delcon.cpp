#include "qrook/delcon.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>

#include "qrook/krawtchouk.hpp"

namespace qrook {

PackedPoly PackedPoly::pack(const QPoly& p) {
  PackedPoly out;
  out.valuation = p.valuation();
  bool fits = true;
  for (const auto& c : p.coeffs())
    if (c > std::numeric_limits<int64_t>::max() ||
        c < std::numeric_limits<int64_t>::min()) {
      fits = false;
      break;
    }
  if (fits) {
    out.small.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.small.push_back(c.convert_to<int64_t>());
  } else {
    out.big = p.coeffs();
  }
  return out;
}

QPoly PackedPoly::unpack() const {
  std::vector<Int> coeffs;
  if (!big.empty()) {
    coeffs = big;
  } else {
    coeffs.reserve(small.size());
    for (int64_t c : small) coeffs.emplace_back(c);
  }
  return QPoly::from_coeffs(valuation, std::move(coeffs));
}

std::string MemoStore::key(const Perm& w, int r) {
  std::string k;
  k.reserve(w.word().size() + 1);
  k.push_back(static_cast<char>(r));
  for (int v : w.word()) k.push_back(static_cast<char>(v));
  return k;
}

std::optional<QPoly> MemoStore::get(const Perm& w, int r) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(key(w, r));
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second.unpack();
}

void MemoStore::put(const Perm& w, int r, const QPoly& value) {
  std::string k = key(w, r);
  std::unique_lock lock(mu_);
  auto [it, inserted] = map_.emplace(k, PackedPoly::pack(value));
  if (inserted) unsaved_.push_back(std::move(k));
}

size_t MemoStore::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

void MemoStore::clear() {
  std::unique_lock lock(mu_);
  map_.clear();
  unsaved_.clear();
}

namespace {

constexpr uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;
constexpr char kMemoMagic[] = "qrookmemo 1 ";
constexpr size_t kChecksumOffset = sizeof(kMemoMagic) - 1;  // 12

uint64_t fnv1a(uint64_t state, const char* data, size_t len) {
  for (size_t i = 0; i < len; ++i) {
    state ^= static_cast<unsigned char>(data[i]);
    state *= kFnvPrime;
  }
  return state;
}

std::string checksum_hex(uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf, 16);
}

std::string record_line(const std::string& key, const PackedPoly& p) {
  std::ostringstream os;
  int r = static_cast<unsigned char>(key[0]);
  os << key.size() - 1 << ' ' << r << ' ';
  for (size_t i = 1; i < key.size(); ++i) {
    if (i > 1) os << ',';
    os << static_cast<int>(static_cast<unsigned char>(key[i]));
  }
  os << ' ' << p.valuation;
  if (!p.big.empty())
    for (const auto& c : p.big) os << ' ' << c.str();
  else
    for (int64_t c : p.small) os << ' ' << c;
  os << '\n';
  return os.str();
}

}  // namespace

void MemoStore::save(const std::string& path) {
  std::unique_lock lock(mu_);
  uint64_t state = kFnvOffset;
  bool exists = false;
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::string header;
      std::getline(in, header);
      if (header.size() != kChecksumOffset + 16 ||
          header.compare(0, kChecksumOffset, kMemoMagic) != 0)
        throw std::runtime_error("MemoStore::save: unrecognized cache header in " + path);
      state = std::stoull(header.substr(kChecksumOffset, 16), nullptr, 16);
      exists = true;
    }
  }
  std::fstream out;
  if (exists) {
    out.open(path, std::ios::in | std::ios::out | std::ios::binary);
    out.seekp(0, std::ios::end);
  } else {
    out.open(path, std::ios::out | std::ios::binary);
    out << kMemoMagic << checksum_hex(state) << '\n';
  }
  for (const auto& k : unsaved_) {
    std::string line = record_line(k, map_.at(k));
    state = fnv1a(state, line.data(), line.size());
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  unsaved_.clear();
  out.seekp(static_cast<std::streamoff>(kChecksumOffset), std::ios::beg);
  std::string hex = checksum_hex(state);
  out.write(hex.data(), 16);
  if (!out) throw std::runtime_error("MemoStore::save: write failed for " + path);
}

void MemoStore::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("MemoStore::load: cannot open " + path);
  std::string header;
  std::getline(in, header);
  if (header.size() != kChecksumOffset + 16 ||
      header.compare(0, kChecksumOffset, kMemoMagic) != 0)
    throw std::runtime_error("MemoStore::load: unrecognized cache header in " + path);
  uint64_t expect = std::stoull(header.substr(kChecksumOffset, 16), nullptr, 16);
  uint64_t state = kFnvOffset;
  std::string line;
  std::unique_lock lock(mu_);
  while (std::getline(in, line)) {
    line.push_back('\n');
    state = fnv1a(state, line.data(), line.size());
    line.pop_back();
    std::istringstream is(line);
    int n, r;
    std::string word;
    long long val;
    if (!(is >> n >> r >> word >> val))
      throw std::runtime_error("MemoStore::load: malformed record in " + path);
    std::string k;
    k.push_back(static_cast<char>(r));
    std::istringstream ws(word);
    std::string tok;
    while (std::getline(ws, tok, ','))
      k.push_back(static_cast<char>(std::stoi(tok)));
    if (static_cast<int>(k.size()) != n + 1)
      throw std::runtime_error("MemoStore::load: word length mismatch in " + path);
    PackedPoly p;
    p.valuation = val;
    std::string coeff;
    bool fits = true;
    std::vector<Int> bigs;
    while (is >> coeff) {
      bigs.emplace_back(coeff);
      if (fits && (bigs.back() > std::numeric_limits<int64_t>::max() ||
                   bigs.back() < std::numeric_limits<int64_t>::min()))
        fits = false;
    }
    if (fits) {
      p.small.reserve(bigs.size());
      for (const auto& c : bigs) p.small.push_back(c.convert_to<int64_t>());
    } else {
      p.big = std::move(bigs);
    }
    map_.insert_or_assign(std::move(k), std::move(p));
  }
  if (state != expect)
    throw std::runtime_error("MemoStore::load: checksum mismatch, cache corrupt: " + path);
}

namespace {

// Diagram row masks of w without Board overhead.
void diagram_masks(const Perm& w, std::vector<uint64_t>& rows) {
  int n = w.size();
  rows.assign(static_cast<size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    uint64_t mask = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w.at(i) < w.at(j)) mask |= uint64_t(1) << (w.at(j) - 1);
    rows[static_cast<size_t>(i - 1)] = mask;
  }
}

}  // namespace

CornerMoves pick_corner_moves(const Perm& w) {
  int n = w.size();
  std::vector<uint64_t> rows;
  diagram_masks(w, rows);
  // SW corners: leftmost cell of a row, strictly left of every cell in all
  // lower rows.
  int best_removed = -1;
  Cell best{0, 0};
  int min_below = n + 1;
  std::vector<int> colcount(static_cast<size_t>(n) + 1, 0);
  for (int i = n; i >= 1; --i) {
    uint64_t mask = rows[static_cast<size_t>(i - 1)];
    if (!mask) continue;
    int j = std::countr_zero(mask) + 1;
    if (j < min_below) {
      int removed = std::popcount(mask);
      for (int i2 = 1; i2 <= n; ++i2)
        removed += (rows[static_cast<size_t>(i2 - 1)] >> (j - 1)) & 1;
      --removed;  // the corner itself was counted twice
      if (removed > best_removed ||
          (removed == best_removed && (Cell{i, j} < best))) {
        best_removed = removed;
        best = {i, j};
      }
      min_below = j;
    } else {
      min_below = std::min<int>(min_below, j);
    }
  }
  if (best_removed < 0)
    throw std::invalid_argument("pick_corner_moves: empty diagram has no SW corner");

  int i = best.row;
  int j = 0;
  for (int p = 1; p <= n; ++p)
    if (w.at(p) == best.col) {
      j = p;
      break;
    }
  std::vector<int> del = w.word();
  std::swap(del[static_cast<size_t>(i - 1)], del[static_cast<size_t>(j - 1)]);
  std::vector<int> con;
  con.reserve(static_cast<size_t>(n - 1));
  for (int p = 1; p <= n; ++p) {
    if (p == i) continue;
    con.push_back(p == j ? w.at(i) : w.at(p));
  }
  for (int& v : con)
    if (v > best.col) --v;
  return CornerMoves{best, Perm(std::move(del)), Perm(std::move(con))};
}

Perm canonicalize(const Perm& w) {
  Perm partner = w.inverse().reverse_complement();
  return partner < w ? partner : w;
}

std::pair<QPoly, QPoly> delcon_gr_sides(const Board& b, Cell corner, int r) {
  if (!b.is_sw_corner(corner))
    throw std::invalid_argument("delcon_gr_sides: not a SW corner");
  QPoly lhs = gr_qrook(b, r);
  QPoly rhs = QPoly::q() * gr_qrook(b.delete_cell(corner), r) +
              gr_qrook(b.contract_cell(corner), r - 1);
  return {lhs, rhs};
}

QPoly m_delcon(const Board& b, int r) {
  if (!b.ne_property())
    throw std::invalid_argument("m_delcon: board lacks the NE property");
  if (r < 0) return QPoly::zero();
  if (r == 0) return QPoly::one();
  if (b.empty()) return QPoly::zero();
  // Same corner policy as the permutation engine: maximize removed cells.
  auto corners = b.sw_corners();
  Cell best = corners.front();
  int best_removed = -1;
  for (auto c : corners) {
    int removed = b.row_count(c.row) + b.col_count(c.col) - 1;
    if (removed > best_removed || (removed == best_removed && c < best)) {
      best_removed = removed;
      best = c;
    }
  }
  Board contracted = b.contract_cell(best);
  long long shift = b.size() - contracted.size() - 1;
  return m_delcon(b.delete_cell(best), r) +
         m_delcon(contracted, r - 1).times_pow_q(shift);
}

QPoly m_complement_delcon(const Perm& w, int r, MemoStore* memo) {
  int n = w.size();
  if (r < 0 || r > n) return QPoly::zero();
  if (r == 0) return QPoly::one();
  if (w.is_decreasing()) return m_full_rect(n, n, r);
  Perm c = canonicalize(w);
  if (memo)
    if (auto cached = memo->get(c, r)) return *cached;
  CornerMoves mv = pick_corner_moves(c);
  QPoly del = m_complement_delcon(mv.deleted, r, memo);
  QPoly conr = m_complement_delcon(mv.contracted, r, memo);
  QPoly conr1 = m_complement_delcon(mv.contracted, r - 1, memo);
  QPoly qm1 = QPoly::q() - QPoly::one();
  QPoly rhs = del + (qm1 * conr).times_pow_q(r) - conr1.times_pow_q(r - 1);
  QPoly out = rhs.exact_div_pow_q(1);
  if (memo) memo->put(c, r, out);
  return out;
}

QPoly m_complement_fullrank(const Perm& w, MemoStore* memo) {
  int n = w.size();
  if (w.is_decreasing())
    return qfact(n).times_pow_q(static_cast<long long>(n) * (n - 1) / 2);
  Perm c = canonicalize(w);
  if (memo)
    if (auto cached = memo->get(c, n)) return *cached;
  CornerMoves mv = pick_corner_moves(c);
  // M_{n-1}(comp I_v) is itself a full-rank count for v in S_{n-1}.
  QPoly del = m_complement_fullrank(mv.deleted, memo);
  QPoly con = m_complement_fullrank(mv.contracted, memo);
  QPoly out = (del - con.times_pow_q(n - 1)).exact_div_pow_q(1);
  if (memo) memo->put(c, n, out);
  return out;
}

HitDelconSides hitpoly_delcon_sides(const Board& b, Cell corner) {
  if (!b.ne_property())
    throw std::invalid_argument("hitpoly_delcon_sides: board lacks the NE property");
  if (!b.is_sw_corner(corner))
    throw std::invalid_argument("hitpoly_delcon_sides: not a SW corner");
  const int m = b.m(), n = b.n();
  Board bd = b.delete_cell(corner);
  Board bc = b.contract_cell(corner);

  HitDelconSides out;
  TPoly Pb = hit_poly(m_ne_profile(b)).P;
  TPoly Pbd = hit_poly(m_ne_profile(bd)).P;
  TPoly Pbc = hit_poly(m_ne_profile(bc)).P;
  long long e = m + b.size() - bc.size() - 2;
  TPoly tm1 = prod_t_minus_qpow(1, 0, 1);  // t - 1
  out.direct_lhs = Pb;
  out.direct_rhs =
      Pbd + (tm1 * Pbc.subst_t_scale(-1)).scaled(QPoly::monomial(1, e));

  auto comp_hit = [](const Board& base) {
    RankCounts raw = m_ne_profile(base).to_raw();
    RankCounts comp_raw = complement_profile(raw, base.size());
    return hit_poly(comp_raw.to_reduced()).P;
  };
  TPoly Pc = comp_hit(b);
  TPoly Pcd = comp_hit(bd);
  TPoly Pcc = comp_hit(bc);
  TPoly tqn = prod_t_minus_qpow(1, n, 1);  // t - q^n
  out.comp_lhs = Pc.scaled(QPoly::q());
  out.comp_rhs = Pcd - (tqn * Pcc).scaled(QPoly::monomial(1, m - 1));
  return out;
}

}  // namespace qrook
