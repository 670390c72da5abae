#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sfano {

/// Exact integer used for every stored coordinate.
using Integer = boost::multiprecision::cpp_int;
/// Reduced fraction with positive denominator; only used for pivot ratios.
using Rational = boost::multiprecision::cpp_rational;

/// A point of the lattice Z^d.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords);

  static LatticeVector unit(std::size_t dim, std::size_t axis);

  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  Integer sum() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a);
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  /// "(1,-1,0)"
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
inline Integer dot(const LatticeVector& a, const LatticeVector& b) { return dot(a.coords(), b.coords()); }

/// gcd of all entries (0 for the zero vector).
Integer content(std::span<const Integer> v);

/// Divides by the content so the vector becomes primitive; no-op for zero.
void make_primitive(std::vector<Integer>& v);

/// Fits check plus conversion; throws DimensionError if the value exceeds 64 bits.
long long to_int64(const Integer& x);

}  // namespace sfano
