#include "qrook/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qrook {

Perm::Perm(std::vector<int> word) : w_(std::move(word)) {
  std::vector<bool> seen(w_.size(), false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("Perm: word is not a permutation of 1..n");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::decreasing(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Perm(std::move(w));
}

Perm Perm::parse(const std::string& text) {
  bool separated = text.find_first_of(" ,\t") != std::string::npos;
  std::vector<int> w;
  if (separated) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    int v;
    while (in >> v) w.push_back(v);
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("Perm::parse: unexpected character");
      w.push_back(ch - '0');
    }
  }
  return Perm(std::move(w));
}

Perm Perm::inverse() const {
  std::vector<int> v(w_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<size_t>(at(i) - 1)] = i;
  return Perm(std::move(v));
}

Perm Perm::reverse_complement() const {
  int n = size();
  std::vector<int> v(w_.size());
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i - 1)] = n + 1 - at(n + 1 - i);
  return Perm(std::move(v));
}

int Perm::length() const {
  int inv = 0;
  for (int i = 1; i < size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if (at(i) > at(j)) ++inv;
  return inv;
}

long long Perm::coinversions() const {
  long long n = size();
  return n * (n - 1) / 2 - length();
}

bool Perm::is_decreasing() const {
  for (int i = 1; i < size(); ++i)
    if (at(i) < at(i + 1)) return false;
  return true;
}

Board Perm::diagram() const {
  int n = size();
  Board b(n, n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (at(i) < at(j)) b.add(i, at(j));
  return b;
}

bool Perm::contains_pattern(const Perm& p) const {
  int n = size(), k = p.size();
  if (k > n) return false;
  if (k == 0) return true;
  // Backtracking over increasing position choices; prunes on relative order.
  std::vector<int> pos;
  pos.reserve(static_cast<size_t>(k));
  std::function<bool(int)> go = [&](int start) -> bool {
    int d = static_cast<int>(pos.size());
    if (d == k) return true;
    for (int i = start; i <= n - (k - d - 1); ++i) {
      bool ok = true;
      for (int a = 0; a < d && ok; ++a) {
        bool want = p.at(a + 1) < p.at(d + 1);
        bool have = at(pos[static_cast<size_t>(a)]) < at(i);
        ok = (want == have);
      }
      if (!ok) continue;
      pos.push_back(i);
      if (go(i + 1)) return true;
      pos.pop_back();
    }
    return false;
  };
  return go(1);
}

std::string Perm::str() const {
  std::ostringstream os;
  if (size() <= 9) {
    for (int v : w_) os << v;
  } else {
    for (size_t i = 0; i < w_.size(); ++i) {
      if (i) os << ' ';
      os << w_[i];
    }
  }
  return os.str();
}

namespace {

// corner = (i, w_j); returns the positions {i, j}.
std::pair<int, int> corner_positions(const Perm& w, Cell corner) {
  if (!w.diagram().is_sw_corner(corner))
    throw std::invalid_argument("corner is not a SW corner of the diagram");
  int i = corner.row;
  int j = w.inverse().at(corner.col);
  return {i, j};
}

}  // namespace

Perm perm_delete(const Perm& w, Cell corner) {
  auto [i, j] = corner_positions(w, corner);
  std::vector<int> v = w.word();
  std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(j - 1)]);
  return Perm(std::move(v));
}

Perm perm_contract(const Perm& w, Cell corner) {
  auto [i, j] = corner_positions(w, corner);
  int n = w.size();
  std::vector<int> word;
  word.reserve(static_cast<size_t>(n - 1));
  for (int p = 1; p <= n; ++p) {
    if (p == i) continue;
    word.push_back(p == j ? w.at(i) : w.at(p));
  }
  // Order-isomorphic relabeling: the value w_j vanished.
  int gone = w.at(j);
  for (int& v : word)
    if (v > gone) --v;
  return Perm(std::move(word));
}

void enumerate_perms(int n, const std::function<void(const Perm&)>& f) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(Perm(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace qrook
