#include "smoothfano/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "smoothfano/errors.hpp"

namespace sfano {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

LatticeVector IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return LatticeVector(std::vector<Integer>(s.begin(), s.end()));
}

void IntMatrix::set_row(std::size_t r, const LatticeVector& v) {
  if (v.size() != cols_) throw DimensionError("row length mismatch");
  std::copy(v.begin(), v.end(), row(r).begin());
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

LatticeVector IntMatrix::apply(const LatticeVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  LatticeVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x.coords());
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

// Row index in [from, rows) with a nonzero entry in column col, preferring
// entries of absolute value one. rows if the column is zero there.
std::size_t choose_pivot(const IntMatrix& m, std::size_t from, std::size_t col) {
  std::size_t best = m.rows();
  for (std::size_t r = from; r < m.rows(); ++r) {
    const Integer& x = m(r, col);
    if (x.is_zero()) continue;
    if (x == 1 || x == -1) return r;
    if (best == m.rows()) best = r;
  }
  return best;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// One fraction-free elimination step: row <- (pivot*row - factor*pivot_row) / prev.
void eliminate_row(IntMatrix& m, std::size_t target, std::size_t pivot_row, std::size_t pivot_col,
                   const Integer& prev, std::size_t first_col) {
  const Integer pivot = m(pivot_row, pivot_col);
  const Integer factor = m(target, pivot_col);
  auto tr = m.row(target);
  auto pr = m.row(pivot_row);
  if (factor.is_zero()) {
    if (pivot == prev) return;
    if (pivot == -prev) {
      for (std::size_t j = first_col; j < tr.size(); ++j)
        if (!tr[j].is_zero()) tr[j] = -tr[j];
      return;
    }
    for (std::size_t j = first_col; j < tr.size(); ++j) {
      if (tr[j].is_zero()) continue;
      tr[j] *= pivot;
      tr[j] /= prev;
    }
    return;
  }
  for (std::size_t j = first_col; j < tr.size(); ++j) {
    if (pr[j].is_zero()) {
      if (tr[j].is_zero()) continue;
      tr[j] *= pivot;
    } else {
      tr[j] = pivot * tr[j] - factor * pr[j];
    }
    if (prev != 1) tr[j] /= prev;
  }
}

}  // namespace

Integer determinant(const IntMatrix& input) {
  if (!input.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = choose_pivot(m, k, k);
    if (p == n) return 0;
    if (p != k) {
      swap_rows(m, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) eliminate_row(m, i, k, k, prev, k);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Adjugate adjugate(const IntMatrix& input) {
  if (!input.square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = input.rows();
  IntMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = input(r, c);
    aug(r, n + r) = 1;
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = choose_pivot(aug, k, k);
    if (p == n) return {0, {}};
    if (p != k) {
      swap_rows(aug, p, k);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) eliminate_row(aug, i, k, k, prev, 0);
    prev = aug(k, k);
  }
  // Left block is now delta * I with delta = det of the row-permuted matrix,
  // right block is delta * input^{-1}.
  const Integer delta = aug(0, 0);
  Adjugate out{sign * delta, IntMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.matrix(r, c) = sign * aug(r, n + c);
  return out;
}

IntMatrix inverse_if_unimodular(const IntMatrix& m) {
  Adjugate adj = adjugate(m);
  if (adj.determinant != 1 && adj.determinant != -1) throw NotUnimodular(adj.determinant);
  if (adj.determinant == -1) {
    for (std::size_t r = 0; r < adj.matrix.rows(); ++r)
      for (auto& x : adj.matrix.row(r)) x = -x;
  }
  return adj.matrix;
}

std::vector<Integer> coordinates_in_basis(const IntMatrix& basis, const LatticeVector& x) {
  if (!basis.square()) throw DimensionError("basis matrix must be square");
  if (x.size() != basis.cols()) throw DimensionError("vector length does not match basis");
  IntMatrix inv = inverse_if_unimodular(basis);
  // x = B^T c  =>  c = (B^{-1})^T x
  std::vector<Integer> c(basis.rows());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero()) c[i] += inv(j, i) * x[j];
  return c;
}

std::size_t rank(const IntMatrix& m) {
  OrthogonalComplement oc(m.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (oc.add(m.row(i))) ++r;
  return r;
}

OrthogonalComplement::OrthogonalComplement(std::size_t dim) : dim_(dim) {
  basis_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Integer> e(dim);
    e[i] = 1;
    basis_.push_back(std::move(e));
  }
}

bool OrthogonalComplement::add(std::span<const Integer> v) {
  if (v.size() != dim_) throw DimensionError("vector length mismatch in orthogonal complement");
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) support.push_back(j);

  auto pairing = [&](const std::vector<Integer>& b) {
    Integer s = 0;
    for (std::size_t j : support)
      if (!b[j].is_zero()) s += b[j] * v[j];
    return s;
  };

  std::vector<Integer> products(basis_.size());
  std::size_t chosen = basis_.size();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    products[i] = pairing(basis_[i]);
    if (chosen == basis_.size() && !products[i].is_zero()) chosen = i;
  }
  if (chosen == basis_.size()) return false;

  const std::vector<Integer> pivot = basis_[chosen];
  const Integer p = products[chosen];
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i == chosen || products[i].is_zero()) continue;
    auto& b = basis_[i];
    const Integer q = products[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (pivot[j].is_zero()) {
        if (!b[j].is_zero()) b[j] *= p;
      } else {
        b[j] = p * b[j] - q * pivot[j];
      }
    }
    make_primitive(b);
  }
  basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(chosen));
  return true;
}

bool parallel(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) return false;
  std::size_t k = a.size();
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!a[j].is_zero()) {
      k = j;
      break;
    }
  if (k == a.size() || b[k].is_zero()) return false;
  // b parallel to a iff a_k * b_j == b_k * a_j for all j.
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[k] * b[j] != b[k] * a[j]) return false;
  return true;
}

}  // namespace sfano
