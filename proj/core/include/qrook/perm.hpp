#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qrook/board.hpp"

namespace qrook {

/// Permutation of [n] in one-line notation (1-based values).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> word);
  static Perm identity(int n);
  static Perm decreasing(int n);
  // Accepts compact digit strings ("3412") and separated words
  // ("6 8 9 10 4 5 7 1 2 3", commas allowed).
  static Perm parse(const std::string& text);

  int size() const { return static_cast<int>(w_.size()); }
  int at(int i) const { return w_[static_cast<size_t>(i - 1)]; }  // 1-based
  const std::vector<int>& word() const { return w_; }

  Perm inverse() const;
  Perm reverse_complement() const;  // i -> n+1 - w(n+1-i)
  int length() const;               // inversion count
  long long coinversions() const;   // binom(n,2) - length
  bool is_decreasing() const;

  /// Coinversion diagram I_w = {(i, w_j) : i < j, w_i < w_j}.
  Board diagram() const;

  bool contains_pattern(const Perm& p) const;

  std::string str() const;  // compact digits when n <= 9, else spaced

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return w_ < o.w_; }

private:
  std::vector<int> w_;
};

/// w * (i, j) for the SW corner (i, w_j) of I_w: swap positions i and j.
/// The result has exactly one fewer coinversion (Board-level deletion).
Perm perm_delete(const Perm& w, Cell corner);

/// The permutation in S_{n-1} order-isomorphic to
/// w_1 .. w_{i-1} w_{i+1} .. w_{j-1} w_i w_{j+1} .. w_n
/// (Board-level contraction of the SW corner (i, w_j)).
Perm perm_contract(const Perm& w, Cell corner);

void enumerate_perms(int n, const std::function<void(const Perm&)>& f);

}  // namespace qrook
