#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mclat/graphs.hpp"
#include "mclat/poly.hpp"

namespace mclat {

// Dense bit matrix over the two-element field; rows are packed into
// 64-bit words.
class F2Matrix {
 public:
  F2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void xor_row(int dst, int src);
  int row_weight(int r) const;
  // inner product of row r1 of *this with row r2 of other (equal widths)
  int row_dot(int r1, const F2Matrix& other, int r2) const;

  // reduced row echelon form with zero rows dropped; canonical for the
  // row space
  F2Matrix rref() const;
  int rank() const;

  bool operator==(const F2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

  // one row per line as 0/1 characters; '#' lines are comments
  static F2Matrix parse(const std::string& text);
  std::string to_text() const;

 private:
  int rows_, cols_;
  std::vector<std::vector<std::uint64_t>> bits_;
};

F2Matrix load_matrix_file(const std::string& path);

// A matroid presented through its rank oracle, backed either by a graph
// (independent = acyclic edge sets) or by an F2 matrix (independent =
// linearly independent column sets). Ground set elements are numbered by
// edge / column order.
class Matroid {
 public:
  static Matroid graphic(Multigraph g);
  static Matroid vector_f2(F2Matrix a);  // at most 64 rows

  bool is_graphic() const { return graphic_; }
  const Multigraph& graph() const;
  const F2Matrix& matrix() const;

  int ground_size() const { return size_; }
  int full_rank() const;
  // rank of the subset selected by the bitmask (ground size <= 32)
  int rank(std::uint32_t subset) const;

  // number of subsets per (rank, size) class, by a single DFS sweep over
  // all 2^|E| subsets; throws CapExceeded above `cap` elements
  std::map<std::pair<int, int>, Int> corank_nullity_counts(int cap = 24) const;

 private:
  Matroid() = default;
  bool graphic_ = false;
  int size_ = 0;
  Multigraph g_;
  F2Matrix a_{0, 0};
  std::vector<std::uint64_t> cols_;  // column bitmasks over rows (vector backing)
};

// Vector matroid of the vertex-edge incidence matrix over F2 (loops give
// zero columns); rank-equivalent to graphic(g) on the same edge order.
Matroid incidence_matroid(const Multigraph& g);

// T(M; x, y) by the corank-nullity subset sum (2^|E| terms, cap 24).
ExactPoly tutte_subset_expansion(const Matroid& m, int cap = 24);

// T(M; x, y) by the loop/coloop deletion-contraction recurrence.
ExactPoly tutte_deletion_contraction(const Matroid& m);

}  // namespace mclat
