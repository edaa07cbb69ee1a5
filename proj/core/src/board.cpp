#include "qrook/board.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qrook {

Board::Board(int m, int n) : m_(m), n_(n), rows_(static_cast<size_t>(m), 0) {
  if (m < 0 || n < 0 || m > 64 || n > 64)
    throw std::invalid_argument("Board: dimensions must be in [0, 64]");
}

Board Board::full(int m, int n) {
  Board b(m, n);
  uint64_t mask = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  for (auto& r : b.rows_) r = mask;
  return b;
}

Board Board::of_cells(int m, int n, const std::vector<Cell>& cells) {
  Board b(m, n);
  for (auto c : cells) b.add(c.row, c.col);
  return b;
}

int Board::size() const {
  int s = 0;
  for (uint64_t r : rows_) s += std::popcount(r);
  return s;
}

bool Board::contains(int row, int col) const {
  if (row < 1 || row > m_ || col < 1 || col > n_) return false;
  return (rows_[static_cast<size_t>(row - 1)] >> (col - 1)) & 1;
}

void Board::add(int row, int col) {
  if (row < 1 || row > m_ || col < 1 || col > n_)
    throw std::out_of_range("Board::add: cell outside rectangle");
  rows_[static_cast<size_t>(row - 1)] |= uint64_t(1) << (col - 1);
}

void Board::remove(int row, int col) {
  if (row < 1 || row > m_ || col < 1 || col > n_)
    throw std::out_of_range("Board::remove: cell outside rectangle");
  rows_[static_cast<size_t>(row - 1)] &= ~(uint64_t(1) << (col - 1));
}

int Board::row_count(int row) const {
  return std::popcount(rows_[static_cast<size_t>(row - 1)]);
}

int Board::col_count(int col) const {
  int s = 0;
  for (uint64_t r : rows_) s += (r >> (col - 1)) & 1;
  return s;
}

std::vector<Cell> Board::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= m_; ++i) {
    uint64_t r = row_mask(i);
    while (r) {
      int j = std::countr_zero(r);
      out.push_back({i, j + 1});
      r &= r - 1;
    }
  }
  return out;
}

Board Board::complement() const {
  Board b = full(m_, n_);
  for (int i = 0; i < m_; ++i) b.rows_[static_cast<size_t>(i)] &= ~rows_[static_cast<size_t>(i)];
  return b;
}

Board Board::transposed() const {
  Board b(n_, m_);
  for (auto c : cells()) b.add(c.col, c.row);
  return b;
}

Board Board::permuted(const std::vector<int>& row_perm,
                      const std::vector<int>& col_perm) const {
  if (static_cast<int>(row_perm.size()) != m_ ||
      static_cast<int>(col_perm.size()) != n_)
    throw std::invalid_argument("Board::permuted: permutation size mismatch");
  Board b(m_, n_);
  for (auto c : cells())
    b.add(row_perm[static_cast<size_t>(c.row - 1)],
          col_perm[static_cast<size_t>(c.col - 1)]);
  return b;
}

Board Board::rotated180() const {
  Board b(m_, n_);
  for (auto c : cells()) b.add(m_ + 1 - c.row, n_ + 1 - c.col);
  return b;
}

bool Board::ne_property() const {
  // (i,j), (i',j), (i',j') in B with i<i', j<j' must force (i,j') in B.
  for (int i2 = 2; i2 <= m_; ++i2) {
    uint64_t lower = row_mask(i2);
    if (!lower) continue;
    for (int i1 = 1; i1 < i2; ++i1) {
      uint64_t upper = row_mask(i1);
      uint64_t shared = upper & lower;
      if (!shared) continue;
      int jmin = std::countr_zero(shared) + 1;
      // Everything in the lower row strictly east of jmin must appear in the
      // upper row as well.
      uint64_t east = lower & ~((uint64_t(2) << (jmin - 1)) - 1);
      if (east & ~upper) return false;
    }
  }
  return true;
}

bool Board::is_sw_corner(Cell c) const {
  if (!contains(c)) return false;
  for (auto o : cells())
    if (!(o == c) && o.row >= c.row && o.col <= c.col) return false;
  return true;
}

std::vector<Cell> Board::sw_corners() const {
  std::vector<Cell> out;
  for (auto c : cells())
    if (is_sw_corner(c)) out.push_back(c);
  return out;
}

Board Board::delete_cell(Cell c) const {
  if (!contains(c)) throw std::invalid_argument("Board::delete_cell: cell not in board");
  Board b = *this;
  b.remove(c.row, c.col);
  return b;
}

Board Board::contract_cell(Cell c) const {
  if (!contains(c))
    throw std::invalid_argument("Board::contract_cell: cell not in board");
  Board b(m_ - 1, n_ - 1);
  for (auto o : cells()) {
    if (o.row == c.row || o.col == c.col) continue;
    b.add(o.row > c.row ? o.row - 1 : o.row, o.col > c.col ? o.col - 1 : o.col);
  }
  return b;
}

Board Board::from_grid(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("Board::from_grid: empty grid");
  size_t n = lines[0].size();
  Board b(static_cast<int>(lines.size()), static_cast<int>(n));
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != n)
      throw std::invalid_argument("Board::from_grid: ragged grid");
    for (size_t j = 0; j < n; ++j) {
      char ch = lines[i][j];
      if (ch == 'X' || ch == 'x' || ch == '1')
        b.add(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      else if (ch != '.' && ch != '0')
        throw std::invalid_argument("Board::from_grid: unexpected character");
    }
  }
  return b;
}

std::string Board::grid() const {
  std::string out;
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) out.push_back(contains(i, j) ? 'X' : '.');
    out.push_back('\n');
  }
  return out;
}

Board ferrers(const std::vector<int>& parts, int m, int n, Justify orient) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("ferrers: parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw std::invalid_argument("ferrers: parts must be weakly decreasing");
  }
  int k = static_cast<int>(parts.size());
  if (k > m || (k > 0 && parts[0] > n))
    throw std::invalid_argument("ferrers: shape does not fit the rectangle");
  Board b(m, n);
  for (int i = 1; i <= k; ++i) {
    int len = parts[static_cast<size_t>(i - 1)];
    int row = (orient == Justify::NW || orient == Justify::NE) ? i : m + 1 - i;
    for (int j = 1; j <= len; ++j) {
      int col = (orient == Justify::NW || orient == Justify::SW) ? j : n + 1 - j;
      b.add(row, col);
    }
  }
  return b;
}

Board ferrers(const Partition& shape, int m, int n) {
  return ferrers(shape.parts, m, n, shape.orient);
}

Board skew(const std::vector<int>& lambda, const std::vector<int>& mu, int m,
           int n) {
  Board lam = ferrers(lambda, m, n, Justify::NW);
  Board inner = ferrers(mu, m, n, Justify::NW);
  for (auto c : inner.cells()) {
    if (!lam.contains(c))
      throw std::invalid_argument("skew: mu is not contained in lambda");
    lam.remove(c.row, c.col);
  }
  return lam;
}

Board bidiagonal(int n) {
  Board b(n, n);
  for (int i = 1; i <= n; ++i) b.add(i, i);
  for (int i = 1; i < n; ++i) b.add(i, i + 1);
  return b;
}

Board menage(int n) {
  if (n < 2) throw std::invalid_argument("menage: need n >= 2");
  Board b = bidiagonal(n);
  b.add(n, 1);
  return b;
}

Board diagonal(int n) {
  Board b(n, n);
  for (int i = 1; i <= n; ++i) b.add(i, i);
  return b;
}

Board fano() {
  // Lines of the Fano plane on points 1..7; cell (i, j) iff point i is on
  // line j.
  static const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                  {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  Board b(7, 7);
  for (int j = 0; j < 7; ++j)
    for (int p : lines[j]) b.add(p, j + 1);
  return b;
}

}  // namespace qrook
