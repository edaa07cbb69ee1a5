#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qrook {

/// 1-based matrix coordinates: row 1 is the top row, column 1 the leftmost
/// column.  "North" means smaller row index, "east" larger column index.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

/// A subset of the [m] x [n] rectangle, stored as one 64-bit column mask per
/// row.  m and n are capped at 64.
class Board {
public:
  Board() = default;
  Board(int m, int n);
  static Board full(int m, int n);
  static Board of_cells(int m, int n, const std::vector<Cell>& cells);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int row, int col) const;
  bool contains(Cell c) const { return contains(c.row, c.col); }
  void add(int row, int col);
  void remove(int row, int col);
  uint64_t row_mask(int row) const { return rows_[static_cast<size_t>(row - 1)]; }
  int row_count(int row) const;
  int col_count(int col) const;
  std::vector<Cell> cells() const;  // row-major order

  Board complement() const;
  Board transposed() const;
  // Relabels rows by row_perm and columns by col_perm (1-based images).
  Board permuted(const std::vector<int>& row_perm,
                 const std::vector<int>& col_perm) const;
  Board rotated180() const;

  bool ne_property() const;
  std::vector<Cell> sw_corners() const;
  bool is_sw_corner(Cell c) const;
  Board delete_cell(Cell c) const;    // stays in [m] x [n]
  Board contract_cell(Cell c) const;  // reindexed into [m-1] x [n-1]

  // Grid text: one line per row, '.' empty, 'X' occupied, row 1 first.
  static Board from_grid(const std::string& text);
  std::string grid() const;

  bool operator==(const Board&) const = default;

private:
  int m_ = 0, n_ = 0;
  std::vector<uint64_t> rows_;
};

// Named boards.
enum class Justify { NW, NE, SW, SE };

/// Integer partition with a placement orientation (which corner of the
/// rectangle the rows are justified against).
struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive
  Justify orient = Justify::NW;
};

Board ferrers(const Partition& shape, int m, int n);
Board ferrers(const std::vector<int>& parts, int m, int n,
              Justify orient = Justify::NW);
// Cells of lambda not in mu, both NW-justified, in [m] x [n].
Board skew(const std::vector<int>& lambda, const std::vector<int>& mu, int m,
           int n);
Board bidiagonal(int n);  // main diagonal plus superdiagonal
Board menage(int n);      // bidiagonal plus the cell (n, 1)
Board diagonal(int n);
Board fano();  // 7x7 Fano plane incidence board, 21 cells

}  // namespace qrook
