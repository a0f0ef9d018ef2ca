#include "mclat/matroids.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mclat/errors.hpp"

namespace mclat {

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("F2Matrix: negative size");
  bits_.assign(rows, std::vector<std::uint64_t>((cols + 63) / 64, 0));
}

bool F2Matrix::get(int r, int c) const { return (bits_[r][c / 64] >> (c % 64)) & 1u; }

void F2Matrix::set(int r, int c, bool v) {
  std::uint64_t mask = std::uint64_t(1) << (c % 64);
  if (v)
    bits_[r][c / 64] |= mask;
  else
    bits_[r][c / 64] &= ~mask;
}

void F2Matrix::xor_row(int dst, int src) {
  for (std::size_t w = 0; w < bits_[dst].size(); ++w) bits_[dst][w] ^= bits_[src][w];
}

int F2Matrix::row_weight(int r) const {
  int w = 0;
  for (std::uint64_t word : bits_[r]) w += std::popcount(word);
  return w;
}

int F2Matrix::row_dot(int r1, const F2Matrix& other, int r2) const {
  if (cols_ != other.cols_) throw std::invalid_argument("row_dot: width mismatch");
  int w = 0;
  for (std::size_t i = 0; i < bits_[r1].size(); ++i)
    w += std::popcount(bits_[r1][i] & other.bits_[r2][i]);
  return w;
}

F2Matrix F2Matrix::rref() const {
  F2Matrix m = *this;
  int pivot_row = 0;
  for (int c = 0; c < cols_ && pivot_row < rows_; ++c) {
    int sel = -1;
    for (int r = pivot_row; r < rows_; ++r)
      if (m.get(r, c)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m.bits_[pivot_row], m.bits_[sel]);
    for (int r = 0; r < rows_; ++r)
      if (r != pivot_row && m.get(r, c)) m.xor_row(r, pivot_row);
    ++pivot_row;
  }
  F2Matrix out(pivot_row, cols_);
  for (int r = 0; r < pivot_row; ++r) out.bits_[r] = m.bits_[r];
  return out;
}

int F2Matrix::rank() const { return rref().rows(); }

F2Matrix F2Matrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip whitespace
    std::string s;
    for (char ch : line)
      if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s[0] == '#') continue;
    for (char ch : s)
      if (ch != '0' && ch != '1')
        throw std::invalid_argument("matrix text line " + std::to_string(lineno) +
                                    ": expected only 0/1 characters");
    if (!rows.empty() && s.size() != rows.front().size())
      throw std::invalid_argument("matrix text line " + std::to_string(lineno) +
                                  ": inconsistent row length");
    rows.push_back(s);
  }
  if (rows.empty()) throw std::invalid_argument("matrix text: no rows");
  F2Matrix m(int(rows.size()), int(rows.front().size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (rows[r][c] == '1') m.set(r, c, true);
  return m;
}

std::string F2Matrix::to_text() const {
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out << (get(r, c) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

F2Matrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return F2Matrix::parse(buf.str());
}

Matroid Matroid::graphic(Multigraph g) {
  Matroid m;
  m.graphic_ = true;
  m.size_ = g.num_edges();
  m.g_ = std::move(g);
  return m;
}

Matroid Matroid::vector_f2(F2Matrix a) {
  if (a.rows() > 64)
    throw std::invalid_argument("Matroid::vector_f2: at most 64 rows supported");
  Matroid m;
  m.graphic_ = false;
  m.size_ = a.cols();
  m.cols_.assign(a.cols(), 0);
  for (int c = 0; c < a.cols(); ++c)
    for (int r = 0; r < a.rows(); ++r)
      if (a.get(r, c)) m.cols_[c] |= std::uint64_t(1) << r;
  m.a_ = std::move(a);
  return m;
}

const Multigraph& Matroid::graph() const {
  if (!graphic_) throw std::logic_error("Matroid: no graphic backing");
  return g_;
}

const F2Matrix& Matroid::matrix() const {
  if (graphic_) throw std::logic_error("Matroid: no vector backing");
  return a_;
}

namespace {

struct RewindableUF {
  std::vector<int> parent, size;
  std::vector<int> undo;  // roots merged, in order
  explicit RewindableUF(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    undo.push_back(b);
    return true;
  }
  void rollback(std::size_t mark) {
    while (undo.size() > mark) {
      int b = undo.back();
      undo.pop_back();
      size[find(b)] -= size[b];
      parent[b] = b;
    }
  }
};

int rank_of_columns(const std::vector<std::uint64_t>& cols) {
  std::uint64_t basis[64] = {0};
  int rank = 0;
  for (std::uint64_t cur : cols) {
    while (cur) {
      int h = 63 - std::countl_zero(cur);
      if (basis[h]) {
        cur ^= basis[h];
      } else {
        basis[h] = cur;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

}  // namespace

int Matroid::rank(std::uint32_t subset) const {
  if (size_ > 32) throw CapExceeded("Matroid::rank: subset masks need ground size <= 32");
  if (graphic_) {
    RewindableUF uf(g_.num_vertices());
    int r = 0;
    const auto& es = g_.edges();
    for (int i = 0; i < size_; ++i)
      if ((subset >> i) & 1u)
        if (uf.unite(es[i].first, es[i].second)) ++r;
    return r;
  }
  std::uint64_t basis[64] = {0};
  int r = 0;
  for (int i = 0; i < size_; ++i) {
    if (!((subset >> i) & 1u)) continue;
    std::uint64_t cur = cols_[i];
    while (cur) {
      int h = 63 - std::countl_zero(cur);
      if (basis[h]) {
        cur ^= basis[h];
      } else {
        basis[h] = cur;
        ++r;
        break;
      }
    }
  }
  return r;
}

int Matroid::full_rank() const {
  if (graphic_) return g_.num_vertices() - connected_component_count(g_);
  return rank_of_columns(cols_);
}

std::map<std::pair<int, int>, Int> Matroid::corank_nullity_counts(int cap) const {
  if (size_ > cap)
    throw CapExceeded("corank_nullity_counts: " + std::to_string(size_) +
                      " elements exceed cap " + std::to_string(cap) +
                      " (use deletion-contraction)");
  std::map<std::pair<int, int>, Int> counts;
  std::vector<long> flat((size_ + 1) * (size_ + 1), 0);

  if (graphic_) {
    RewindableUF uf(g_.num_vertices());
    const auto& es = g_.edges();
    std::function<void(int, int, int)> rec = [&](int idx, int size, int rank) {
      if (idx == size_) {
        flat[rank * (size_ + 1) + size]++;
        return;
      }
      rec(idx + 1, size, rank);
      std::size_t mark = uf.undo.size();
      bool grew = uf.unite(es[idx].first, es[idx].second);
      rec(idx + 1, size + 1, rank + (grew ? 1 : 0));
      uf.rollback(mark);
    };
    rec(0, 0, 0);
  } else {
    std::uint64_t basis[64] = {0};
    std::function<void(int, int, int)> rec = [&](int idx, int size, int rank) {
      if (idx == size_) {
        flat[rank * (size_ + 1) + size]++;
        return;
      }
      rec(idx + 1, size, rank);
      std::uint64_t cur = cols_[idx];
      int slot = -1;
      while (cur) {
        int h = 63 - std::countl_zero(cur);
        if (basis[h]) {
          cur ^= basis[h];
        } else {
          basis[h] = cur;
          slot = h;
          break;
        }
      }
      rec(idx + 1, size + 1, rank + (slot >= 0 ? 1 : 0));
      if (slot >= 0) basis[slot] = 0;
    };
    rec(0, 0, 0);
  }

  for (int r = 0; r <= size_; ++r)
    for (int a = 0; a <= size_; ++a)
      if (flat[r * (size_ + 1) + a] != 0) counts[{r, a}] = flat[r * (size_ + 1) + a];
  return counts;
}

Matroid incidence_matroid(const Multigraph& g) {
  if (g.num_vertices() > 64)
    throw CapExceeded("incidence_matroid: at most 64 vertices supported");
  F2Matrix a(g.num_vertices(), g.num_edges());
  const auto& es = g.edges();
  for (int k = 0; k < g.num_edges(); ++k) {
    auto [u, v] = es[k];
    if (u != v) {
      a.set(u, k, true);
      a.set(v, k, true);
    }
    // loops give zero columns
  }
  return Matroid::vector_f2(std::move(a));
}

ExactPoly tutte_subset_expansion(const Matroid& m, int cap) {
  auto counts = m.corank_nullity_counts(cap);
  int full = m.full_rank();

  // cached expansions of (x-1)^p and (y-1)^q
  int n = m.ground_size();
  std::vector<ExactPoly> xm1(n + 1, ExactPoly(2)), ym1(n + 1, ExactPoly(2));
  xm1[0] = ExactPoly::constant(2, 1);
  ym1[0] = ExactPoly::constant(2, 1);
  ExactPoly x_minus_1 = ExactPoly::term2(1, 1, 0) - ExactPoly::constant(2, 1);
  ExactPoly y_minus_1 = ExactPoly::term2(1, 0, 1) - ExactPoly::constant(2, 1);
  for (int i = 1; i <= n; ++i) {
    xm1[i] = xm1[i - 1] * x_minus_1;
    ym1[i] = ym1[i - 1] * y_minus_1;
  }

  ExactPoly t(2);
  for (const auto& [ra, cnt] : counts) {
    auto [r, a] = ra;
    t += (xm1[full - r] * ym1[a - r]).scaled(cnt);
  }
  return t;
}

namespace {

// Loop/coloop-peeling recursion; x- and y-powers accumulate along the
// path and land in `acc` at the leaves, one monomial per leaf.
void tutte_graphic_rec(const Multigraph& g, long xp, long yp, ExactPoly& acc) {
  const auto& es = g.edges();
  if (es.empty()) {
    acc.add_term({Int(xp), Int(yp)}, 1);
    return;
  }
  auto [u, v] = es.front();
  std::vector<Multigraph::Edge> rest(es.begin() + 1, es.end());

  if (u == v) {  // loop
    tutte_graphic_rec(Multigraph(g.num_vertices(), std::move(rest)), xp, yp + 1, acc);
    return;
  }

  Multigraph deleted(g.num_vertices(), rest);
  // contract: relabel v -> u, compress vertex numbering
  std::vector<int> relabel(g.num_vertices());
  int next = 0;
  for (int w = 0; w < g.num_vertices(); ++w)
    relabel[w] = (w == v) ? -1 : next++;
  relabel[v] = relabel[u];
  std::vector<Multigraph::Edge> ces;
  ces.reserve(rest.size());
  for (auto [a, b] : rest) ces.emplace_back(relabel[a], relabel[b]);
  Multigraph contracted(g.num_vertices() - 1, std::move(ces));

  bool bridge = connected_component_count(deleted) > connected_component_count(g);
  if (bridge) {  // coloop
    tutte_graphic_rec(contracted, xp + 1, yp, acc);
    return;
  }
  tutte_graphic_rec(deleted, xp, yp, acc);
  tutte_graphic_rec(contracted, xp, yp, acc);
}

void tutte_vector_rec(const std::vector<std::uint64_t>& cols, long xp, long yp,
                      ExactPoly& acc) {
  if (cols.empty()) {
    acc.add_term({Int(xp), Int(yp)}, 1);
    return;
  }
  std::uint64_t c = cols.front();
  std::vector<std::uint64_t> rest(cols.begin() + 1, cols.end());
  if (c == 0) {  // loop
    tutte_vector_rec(rest, xp, yp + 1, acc);
    return;
  }

  // contract: pivot on the lowest set bit of c
  std::uint64_t pivot = c & (~c + 1);
  std::vector<std::uint64_t> contracted = rest;
  for (auto& col : contracted)
    if (col & pivot) col ^= c;

  bool coloop = rank_of_columns(rest) < rank_of_columns(cols);
  if (coloop) {
    tutte_vector_rec(contracted, xp + 1, yp, acc);
    return;
  }
  tutte_vector_rec(rest, xp, yp, acc);
  tutte_vector_rec(contracted, xp, yp, acc);
}

}  // namespace

ExactPoly tutte_deletion_contraction(const Matroid& m) {
  ExactPoly acc(2);
  if (m.is_graphic()) {
    tutte_graphic_rec(m.graph(), 0, 0, acc);
    return acc;
  }
  std::vector<std::uint64_t> cols;
  const F2Matrix& a = m.matrix();
  cols.assign(a.cols(), 0);
  for (int c = 0; c < a.cols(); ++c)
    for (int r = 0; r < a.rows(); ++r)
      if (a.get(r, c)) cols[c] |= std::uint64_t(1) << r;
  tutte_vector_rec(cols, 0, 0, acc);
  return acc;
}

}  // namespace mclat
