#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "smoothfano/lattice_vector.hpp"

namespace sfano {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square matrix, ragged rows, wrong vector length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  explicit NotUnimodular(Integer det);
  const Integer& determinant() const noexcept { return det_; }

 private:
  Integer det_;
};

class DuplicateVertex : public Error {
 public:
  DuplicateVertex(std::size_t first, std::size_t second);
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_, second_;
};

class NotFullDim : public Error {
 public:
  using Error::Error;
};

class NotAVertex : public Error {
 public:
  explicit NotAVertex(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// More than d vertices on one facet hyperplane (also raised on ratio-rule ties).
class FacetNotSimplex : public Error {
 public:
  using Error::Error;
};

class OriginNotInterior : public Error {
 public:
  using Error::Error;
};

/// A facet whose vertex matrix has |det| != 1 was reached during a walk.
class FacetNotUnimodular : public Error {
 public:
  FacetNotUnimodular(std::string facet, Integer det);
  const Integer& determinant() const noexcept { return det_; }

 private:
  Integer det_;
};

class NotSpecialFacet : public Error {
 public:
  using Error::Error;
};

/// Post-condition of the hexagon splitting bound failed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class UnclassifiableVertex : public Error {
 public:
  explicit UnclassifiableVertex(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Internal consistency failure of a decomposition.
class InconsistentSplit : public Error {
 public:
  using Error::Error;
};

/// Malformed polytope file; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sfano
