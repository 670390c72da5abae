#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "smoothfano/lattice_vector.hpp"

namespace sfano {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const LatticeVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  LatticeVector row_vector(std::size_t r) const;
  void set_row(std::size_t r, const LatticeVector& v);

  IntMatrix transpose() const;
  /// M x
  LatticeVector apply(const LatticeVector& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

struct Adjugate {
  Integer determinant;
  /// det(m) * m^{-1}; empty when the matrix is singular.
  IntMatrix matrix;
};

/// Fraction-free Gauss-Jordan on [m | I].
Adjugate adjugate(const IntMatrix& m);

/// Integer inverse of a matrix with |det| = 1; throws NotUnimodular otherwise.
IntMatrix inverse_if_unimodular(const IntMatrix& m);

/// Integer c with x = sum_i c_i * basis.row(i).
std::vector<Integer> coordinates_in_basis(const IntMatrix& basis, const LatticeVector& x);

std::size_t rank(const IntMatrix& m);

/// Maintains an integer basis of the orthogonal complement of a growing set of
/// vectors. Vectors in the basis are kept primitive.
class OrthogonalComplement {
 public:
  explicit OrthogonalComplement(std::size_t dim);

  /// Returns false if v already lies in the span of the vectors added so far.
  bool add(std::span<const Integer> v);
  bool add(const LatticeVector& v) { return add(v.coords()); }

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<std::vector<Integer>>& basis() const noexcept { return basis_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Integer>> basis_;
};

/// True when a and b are nonzero and span a line.
bool parallel(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace sfano
