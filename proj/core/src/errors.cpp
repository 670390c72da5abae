#include "smoothfano/errors.hpp"

namespace sfano {

NotUnimodular::NotUnimodular(Integer det)
    : Error("matrix is not unimodular (det = " + det.str() + ")"), det_(std::move(det)) {}

DuplicateVertex::DuplicateVertex(std::size_t first, std::size_t second)
    : Error("rows " + std::to_string(first) + " and " + std::to_string(second) + " are identical"),
      first_(first),
      second_(second) {}

NotAVertex::NotAVertex(std::size_t index)
    : Error("row " + std::to_string(index) + " lies on no facet and is not a vertex"), index_(index) {}

FacetNotUnimodular::FacetNotUnimodular(std::string facet, Integer det)
    : Error("facet " + facet + " is not a lattice basis (det = " + det.str() + ")"), det_(std::move(det)) {}

UnclassifiableVertex::UnclassifiableVertex(std::size_t index)
    : Error("level -1 vertex " + std::to_string(index) + " fits none of the three types"), index_(index) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace sfano
