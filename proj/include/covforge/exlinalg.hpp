// Exact dense linear algebra over Rat and Cyc: rank, kernels, solves, subspaces,
// fixed spaces and Jacobians of polynomial systems at exact points.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covforge/mpoly.hpp"
#include "covforge/scalar.hpp"

namespace covforge {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<std::vector<K>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<K> column(std::size_t j) const {
    std::vector<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<K> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const K& v) { return covforge::is_zero(v); });
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const K& v = x(i, k);
        if (covforge::is_zero(v)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<K> r(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!covforge::is_zero(v[j])) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Horizontal concatenation.
  Matrix hcat(const Matrix& o) const {
    if (o.rows_ != rows_) throw std::invalid_argument("hcat: row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }
  Matrix vcat(const Matrix& o) const {
    if (o.cols_ != cols_) throw std::invalid_argument("vcat: column mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
    return r;
  }

  struct Echelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  };

  /// Gauss-Jordan elimination over the field. Among the candidate pivots in a
  /// column the entry with the smallest bit size is taken.
  Echelon rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t best = rows_;
      std::size_t best_size = 0;
      for (std::size_t i = r; i < rows_; ++i) {
        if (covforge::is_zero(m(i, c))) continue;
        const std::size_t sz = covforge::bit_size(m(i, c));
        if (best == rows_ || sz < best_size) {
          best = i;
          best_size = sz;
        }
      }
      if (best == rows_) continue;
      m.swap_rows(best, r);
      const K inv = field_inv(m(r, c));
      for (std::size_t j = c; j < cols_; ++j) m(r, j) = m(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || covforge::is_zero(m(i, c))) continue;
        const K f = m(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          if (!covforge::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().pivots.size(); }

  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<K>> kernel() const {
    const Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols_, K(0));
      v[f] = K(1);
      for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Some solution of M x = b, or nullopt when inconsistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    const Echelon e = aug.rref();
    if (!e.pivots.empty() && e.pivots.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, K(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, cols_);
    return x;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix is not square");
    const Echelon e = hcat(identity(rows_)).rref();
    if (e.pivots.size() < rows_ || e.pivots[rows_ - 1] != rows_ - 1)
      throw std::domain_error("inverse: matrix is singular");
    Matrix r(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) r(i, j) = e.reduced(i, rows_ + j);
    return r;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += covforge::to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(a_[i * cols_ + k], a_[j * cols_ + k]);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> a_;
};

using QMatrix = Matrix<Rat>;
using CMatrix = Matrix<Cyc>;

/// A linear subspace of K^n, stored as a reduced row-echelon basis so that
/// equality of subspaces is equality of representations.
template <class K>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  Subspace(std::size_t ambient, const std::vector<std::vector<K>>& spanning) : n_(ambient) {
    Matrix<K> rows(spanning.size(), ambient);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
      if (spanning[i].size() != ambient) throw std::invalid_argument("Subspace: vector length mismatch");
      for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = spanning[i][j];
    }
    auto e = rows.rref();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis_.push_back(e.reduced.row(r));
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<K>>& basis() const { return basis_; }

  bool contains(const std::vector<K>& v) const {
    auto vs = basis_;
    vs.push_back(v);
    return Subspace(n_, vs).dim() == dim();
  }
  bool contains(const Subspace& o) const { return sum(o).dim() == dim(); }

  Subspace sum(const Subspace& o) const {
    check(o);
    auto vs = basis_;
    vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
    return Subspace(n_, vs);
  }

  Subspace intersection(const Subspace& o) const {
    check(o);
    if (dim() == 0 || o.dim() == 0) return Subspace(n_);
    // Solve sum a_i u_i = sum b_j w_j.
    Matrix<K> m(n_, dim() + o.dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k < n_; ++k) m(k, i) = basis_[i][k];
    for (std::size_t j = 0; j < o.dim(); ++j)
      for (std::size_t k = 0; k < n_; ++k) m(k, dim() + j) = -o.basis_[j][k];
    std::vector<std::vector<K>> vs;
    for (const auto& c : m.kernel()) {
      std::vector<K> v(n_, K(0));
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t k = 0; k < n_; ++k) v[k] += c[i] * basis_[i][k];
      vs.push_back(std::move(v));
    }
    return Subspace(n_, vs);
  }

  bool is_direct_sum_with(const Subspace& o) const { return sum(o).dim() == dim() + o.dim(); }

  bool is_invariant_under(const Matrix<K>& g) const {
    for (const auto& v : basis_)
      if (!contains(g.apply(v))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  void check(const Subspace& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }
  std::size_t n_;
  std::vector<std::vector<K>> basis_;
};

/// True if the listed subspaces are independent (their sum is direct).
template <class K>
bool is_direct_sum(const std::vector<Subspace<K>>& parts) {
  if (parts.empty()) return true;
  Subspace<K> acc(parts.front().ambient());
  std::size_t total = 0;
  for (const auto& p : parts) {
    acc = acc.sum(p);
    total += p.dim();
  }
  return acc.dim() == total;
}

/// Common fixed vectors of the given linear maps.
template <class K>
Subspace<K> fixed_subspace(const std::vector<Matrix<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("fixed_subspace: no generators");
  const std::size_t n = gens.front().cols();
  Matrix<K> stacked(0, n);
  for (const auto& g : gens) stacked = stacked.vcat(g - Matrix<K>::identity(n));
  return Subspace<K>(n, stacked.kernel());
}

/// Jacobian d f_i / d v_j as a matrix of polynomials.
Matrix<Poly> jacobian(const std::vector<Poly>& system, const std::vector<Var>& vars);

/// Jacobian evaluated at an exact point. Variables not bound by the point may
/// occur in the system only if they drop out of every entry at the point;
/// otherwise std::invalid_argument is thrown.
CMatrix jacobian_at(const std::vector<Poly>& system, const std::vector<Var>& vars,
                    const std::map<Var, Cyc>& point);

struct JacobianRank {
  std::size_t rank;
  std::vector<std::vector<Cyc>> kernel;
};
JacobianRank jacobian_rank(const std::vector<Poly>& system, const std::vector<Var>& vars,
                           const std::map<Var, Cyc>& point);

}  // namespace covforge
