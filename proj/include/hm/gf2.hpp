#pragma once

// Dense bit-packed linear algebra over GF(2).
//
// Vectors are packed little-endian into 64-bit words (bit i of the packing is
// coordinate i).  Everything here targets the small dimensions of the chain
// complex (< ~70), so operations favour determinism and clarity over blocking:
// elimination always picks the leftmost pivot column and the first available
// row, which makes rank/kernel/solve results reproducible bit for bit.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hm {

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int dim) : dim_(check_dim(dim)), w_(word_count(dim)) {}

  static Gf2Vector unit(int dim, int i) {
    Gf2Vector v(dim);
    v.set(i, true);
    return v;
  }

  static Gf2Vector from_support(int dim, std::span<const int> coords) {
    Gf2Vector v(dim);
    for (int i : coords) v.flip(i);
    return v;
  }

  static Gf2Vector from_word(int dim, std::uint64_t bits) {
    if (dim > 64) throw std::invalid_argument("from_word: dim exceeds one word");
    Gf2Vector v(dim);
    if (dim > 0) v.w_[0] = bits & mask_last(dim);
    return v;
  }

  int dim() const { return dim_; }

  bool get(int i) const {
    check_index(i);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i, bool value) {
    check_index(i);
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }

  void flip(int i) {
    check_index(i);
    w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  Gf2Vector& operator+=(const Gf2Vector& o) {
    check_same_dim(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }

  // Parity of the coordinatewise AND; the standard bilinear form.
  bool dot(const Gf2Vector& o) const {
    check_same_dim(o);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  int weight() const {
    int n = 0;
    for (std::uint64_t w : w_) n += std::popcount(w);
    return n;
  }

  bool is_zero() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  // Index of the lowest set bit, or -1 for the zero vector.
  int lowest_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k) * 64 + std::countr_zero(w_[k]);
    return -1;
  }

  std::uint64_t to_word() const {
    if (dim_ > 64) throw std::logic_error("to_word: dim exceeds one word");
    return w_.empty() ? 0 : w_[0];
  }

  friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
    return a.dim_ == b.dim_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Gf2Vector& a, const Gf2Vector& b) { return !(a == b); }
  friend bool operator<(const Gf2Vector& a, const Gf2Vector& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (std::size_t k = a.w_.size(); k-- > 0;)
      if (a.w_[k] != b.w_[k]) return a.w_[k] < b.w_[k];
    return false;
  }

  // Fixed-width lowercase hex, ceil(dim/4) digits, most significant digit
  // first; bit 0 of the underlying integer is coordinate 0.
  std::string to_hex() const {
    int digits = (dim_ + 3) / 4;
    std::string s(static_cast<std::size_t>(digits), '0');
    for (int d = 0; d < digits; ++d) {
      int lo = 4 * d;
      unsigned nib = 0;
      for (int b = 0; b < 4 && lo + b < dim_; ++b)
        if (get(lo + b)) nib |= 1u << b;
      s[static_cast<std::size_t>(digits - 1 - d)] = "0123456789abcdef"[nib];
    }
    return s;
  }

  static Gf2Vector from_hex(int dim, const std::string& hex) {
    int digits = (dim + 3) / 4;
    if (static_cast<int>(hex.size()) != digits)
      throw std::invalid_argument("from_hex: expected " + std::to_string(digits) +
                                  " digits, got " + std::to_string(hex.size()));
    Gf2Vector v(dim);
    for (int d = 0; d < digits; ++d) {
      char c = hex[static_cast<std::size_t>(digits - 1 - d)];
      unsigned nib;
      if (c >= '0' && c <= '9')
        nib = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f')
        nib = static_cast<unsigned>(c - 'a') + 10;
      else
        throw std::invalid_argument("from_hex: bad digit");
      for (int b = 0; b < 4; ++b)
        if (nib & (1u << b)) {
          if (4 * d + b >= dim) throw std::invalid_argument("from_hex: bit beyond dim");
          v.set(4 * d + b, true);
        }
    }
    return v;
  }

 private:
  static int check_dim(int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    return dim;
  }
  static std::size_t word_count(int dim) { return static_cast<std::size_t>((dim + 63) / 64); }
  static std::uint64_t mask_last(int dim) {
    int r = dim & 63;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  }
  void check_index(int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("Gf2Vector index");
  }
  void check_same_dim(const Gf2Vector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Gf2Vector dimension mismatch");
  }

  int dim_ = 0;
  std::vector<std::uint64_t> w_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), row_(static_cast<std::size_t>(rows), Gf2Vector(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static Gf2Matrix identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static Gf2Matrix from_rows(std::vector<Gf2Vector> rows) {
    Gf2Matrix m;
    m.rows_ = static_cast<int>(rows.size());
    m.cols_ = rows.empty() ? 0 : rows.front().dim();
    for (const auto& r : rows)
      if (r.dim() != m.cols_) throw std::invalid_argument("ragged rows");
    m.row_ = std::move(rows);
    return m;
  }

  static Gf2Matrix from_columns(int rows, std::span<const Gf2Vector> cols) {
    Gf2Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
      if (cols[static_cast<std::size_t>(c)].dim() != rows)
        throw std::invalid_argument("column dimension mismatch");
      for (int r = 0; r < rows; ++r)
        if (cols[static_cast<std::size_t>(c)].get(r)) m.set(r, c, true);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return row_at(r).get(c); }
  void set(int r, int c, bool v) { row_at(r).set(c, v); }

  const Gf2Vector& row(int r) const { return row_at(r); }
  void set_row(int r, Gf2Vector v) {
    if (v.dim() != cols_) throw std::invalid_argument("row dimension mismatch");
    row_at(r) = std::move(v);
  }
  void add_to_row(int r, const Gf2Vector& v) { row_at(r) += v; }

  Gf2Vector column(int c) const {
    Gf2Vector v(rows_);
    for (int r = 0; r < rows_; ++r)
      if (get(r, c)) v.set(r, true);
    return v;
  }

  Gf2Matrix transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  // (M v)_r = <row_r, v>.
  Gf2Vector operator*(const Gf2Vector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("matvec dimension mismatch");
    Gf2Vector out(rows_);
    for (int r = 0; r < rows_; ++r)
      if (row_at(r).dot(v)) out.set(r, true);
    return out;
  }

  // Row r of A*B is the XOR of the rows of B selected by row r of A.
  Gf2Matrix operator*(const Gf2Matrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matmul dimension mismatch");
    Gf2Matrix out(rows_, b.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) out.row_at(r) += b.row_at(c);
    return out;
  }

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
  }
  friend bool operator!=(const Gf2Matrix& a, const Gf2Matrix& b) { return !(a == b); }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }

  bool is_zero() const {
    for (const auto& r : row_)
      if (!r.is_zero()) return false;
    return true;
  }

  std::vector<std::string> to_hex_rows() const {
    std::vector<std::string> out;
    out.reserve(row_.size());
    for (const auto& r : row_) out.push_back(r.to_hex());
    return out;
  }

 private:
  Gf2Vector& row_at(int r) {
    if (r < 0 || r >= rows_) throw std::out_of_range("row index");
    return row_[static_cast<std::size_t>(r)];
  }
  const Gf2Vector& row_at(int r) const {
    if (r < 0 || r >= rows_) throw std::out_of_range("row index");
    return row_[static_cast<std::size_t>(r)];
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Gf2Vector> row_;
};

namespace detail {

// Row echelon form in place.  Returns the pivot column of each pivot row, in
// order; pivots are always the leftmost available column (deterministic).
inline std::vector<int> echelonize(std::vector<Gf2Vector>& rows, int cols) {
  std::vector<int> pivots;
  int next_row = 0;
  for (int c = 0; c < cols && next_row < static_cast<int>(rows.size()); ++c) {
    int found = -1;
    for (int r = next_row; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)].get(c)) {
        found = r;
        break;
      }
    if (found < 0) continue;
    std::swap(rows[static_cast<std::size_t>(next_row)], rows[static_cast<std::size_t>(found)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != next_row && rows[static_cast<std::size_t>(r)].get(c))
        rows[static_cast<std::size_t>(r)] += rows[static_cast<std::size_t>(next_row)];
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

}  // namespace detail

inline int rank(const Gf2Matrix& m) {
  std::vector<Gf2Vector> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return static_cast<int>(detail::echelonize(rows, m.cols()).size());
}

// Basis of { x : M x = 0 }, one vector per free column, ordered by free
// column index ascending.
inline std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m) {
  std::vector<Gf2Vector> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::vector<int> pivots = detail::echelonize(rows, m.cols());

  std::vector<int> pivot_of_col(static_cast<std::size_t>(m.cols()), -1);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    pivot_of_col[static_cast<std::size_t>(pivots[i])] = static_cast<int>(i);

  std::vector<Gf2Vector> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (pivot_of_col[static_cast<std::size_t>(c)] >= 0) continue;
    Gf2Vector v(m.cols());
    v.set(c, true);
    // Each pivot coordinate is determined by the free column entries.
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i].get(c)) v.set(pivots[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of M x = b (free coordinates zero), or nullopt.
inline std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
  if (b.dim() != m.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  // Augment with b as an extra trailing column.
  std::vector<Gf2Vector> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    Gf2Vector aug(m.cols() + 1);
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) aug.set(c, true);
    if (b.get(r)) aug.set(m.cols(), true);
    rows.push_back(std::move(aug));
  }
  std::vector<int> pivots = detail::echelonize(rows, m.cols() + 1);
  Gf2Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;  // row 0...0 | 1
    if (rows[i].get(m.cols())) x.set(pivots[i], true);
  }
  return x;
}

// Coordinates on a quotient space: given a direct-sum decomposition
// ambient = span(subspace) (+) span(complement), maps v to the complement
// coordinates of its class.  Throws if the union is not a basis.
class QuotientMap {
 public:
  QuotientMap(std::vector<Gf2Vector> subspace, std::vector<Gf2Vector> complement)
      : sub_(std::move(subspace)), comp_(std::move(complement)) {
    if (sub_.empty() && comp_.empty()) throw std::invalid_argument("empty basis");
    n_ = (sub_.empty() ? comp_.front() : sub_.front()).dim();
    k_ = static_cast<int>(sub_.size());
    int m = static_cast<int>(comp_.size());
    if (k_ + m != n_)
      throw std::invalid_argument("subspace plus complement has wrong cardinality for a basis");
    std::vector<Gf2Vector> cols;
    cols.reserve(static_cast<std::size_t>(n_));
    for (const auto& v : sub_) cols.push_back(v);
    for (const auto& v : comp_) cols.push_back(v);
    for (const auto& v : cols)
      if (v.dim() != n_) throw std::invalid_argument("basis vector dimension mismatch");
    inv_ = invert(Gf2Matrix::from_columns(n_, cols));
  }

  int ambient_dim() const { return n_; }
  int quotient_dim() const { return n_ - k_; }

  // Complement coordinates of [v].
  Gf2Vector coords(const Gf2Vector& v) const {
    Gf2Vector full = inv_ * v;
    Gf2Vector out(n_ - k_);
    for (int i = k_; i < n_; ++i)
      if (full.get(i)) out.set(i - k_, true);
    return out;
  }

  // Subspace coordinates of v (the part killed in the quotient).
  Gf2Vector subspace_coords(const Gf2Vector& v) const {
    Gf2Vector full = inv_ * v;
    Gf2Vector out(k_);
    for (int i = 0; i < k_; ++i)
      if (full.get(i)) out.set(i, true);
    return out;
  }

  // Chain representative from complement coordinates.
  Gf2Vector section(const Gf2Vector& coords) const {
    if (coords.dim() != n_ - k_) throw std::invalid_argument("section: coordinate dim mismatch");
    Gf2Vector v(n_);
    for (int i = 0; i < n_ - k_; ++i)
      if (coords.get(i)) v += comp_[static_cast<std::size_t>(i)];
    return v;
  }

 private:
  static Gf2Matrix invert(const Gf2Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: not square");
    int n = m.rows();
    // Gauss-Jordan on [M | I].
    std::vector<Gf2Vector> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      Gf2Vector aug(2 * n);
      for (int c = 0; c < n; ++c)
        if (m.get(r, c)) aug.set(c, true);
      aug.set(n + r, true);
      rows.push_back(std::move(aug));
    }
    std::vector<int> pivots = detail::echelonize(rows, n);
    if (static_cast<int>(pivots.size()) != n)
      throw std::invalid_argument("not a basis (rank defect)");
    Gf2Matrix inv(n, n);
    for (int i = 0; i < n; ++i)  // pivot row i has pivot column pivots[i] == i
      for (int c = 0; c < n; ++c)
        if (rows[static_cast<std::size_t>(i)].get(n + c)) inv.set(pivots[static_cast<std::size_t>(i)], c, true);
    return inv;
  }

  std::vector<Gf2Vector> sub_, comp_;
  int n_ = 0, k_ = 0;
  Gf2Matrix inv_;
};

// One-shot convenience form of QuotientMap::coords.
inline Gf2Vector quotient_coords(std::span<const Gf2Vector> subspace,
                                 std::span<const Gf2Vector> complement,
                                 const Gf2Vector& v) {
  QuotientMap q(std::vector<Gf2Vector>(subspace.begin(), subspace.end()),
                std::vector<Gf2Vector>(complement.begin(), complement.end()));
  return q.coords(v);
}

}  // namespace hm
