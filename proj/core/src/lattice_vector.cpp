#include "smoothfano/lattice_vector.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "smoothfano/errors.hpp"

namespace sfano {

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t axis) {
  LatticeVector e(dim);
  e.coords_.at(axis) = 1;
  return e;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c.is_zero(); });
}

Integer LatticeVector::sum() const {
  Integer s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.size() != size()) throw DimensionError("vector length mismatch in +");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.size() != size()) throw DimensionError("vector length mismatch in -");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

LatticeVector operator-(LatticeVector a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in dot");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i].is_zero() || a[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = content(v);
  if (g <= 1) return;
  for (auto& x : v) x /= g;
}

long long to_int64(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min()) {
    throw DimensionError("integer does not fit in 64 bits: " + x.str());
  }
  return x.convert_to<long long>();
}

}  // namespace sfano
