#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smoothfano/exact_linalg.hpp"
#include "smoothfano/lattice_vector.hpp"

namespace sfano {

/// How much of the facet structure a validation materializes.
///   Full  - every facet, reached by a breadth-first walk over ridges.
///   Local - one facet and its d neighbours; the rest is trusted.
enum class Mode { Full, Local };

std::string to_string(Mode mode);

/// Immutable list of lattice points that are the vertices of a polytope.
/// Copies share storage.
class Polytope {
 public:
  /// Validates distinctness and full dimension. Vertex-ness of each row is
  /// checked lazily by enumerate_facets (NotAVertex).
  static Polytope make(std::vector<LatticeVector> rows);

  std::size_t dim() const noexcept { return data_->dim; }
  std::size_t size() const noexcept { return data_->vertices.size(); }
  const LatticeVector& vertex(std::size_t i) const { return data_->vertices[i]; }
  const std::vector<LatticeVector>& vertices() const noexcept { return data_->vertices; }

  /// Coordinates of vertex i that are nonzero.
  std::span<const std::size_t> support(std::size_t i) const { return data_->supports[i]; }
  std::optional<std::size_t> find(const LatticeVector& x) const;

  /// k = 3d - n, the vertex deficit.
  std::int64_t deficit() const noexcept {
    return 3 * static_cast<std::int64_t>(dim()) - static_cast<std::int64_t>(size());
  }

  /// <row, vertex i>, touching only the vertex's support.
  Integer pair(std::span<const Integer> row, std::size_t i) const;

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<LatticeVector> vertices;
    std::vector<std::vector<std::size_t>> supports;
    std::map<LatticeVector, std::size_t> index;
  };
  explicit Polytope(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

Polytope make_polytope(std::vector<LatticeVector> rows);

/// A simplicial facet together with its dual basis.
///
/// Row i of dual_basis is denominator * u_{F,v_i}, where v_i is the vertex at
/// position i and <u_{F,v_i}, v_j> = delta_ij. outer_normal is
/// denominator * u_F. For a smooth Fano polytope the denominator is 1 and the
/// rows are the integral dual basis itself.
struct FacetFrame {
  std::vector<std::size_t> vertex_indices;
  IntMatrix dual_basis;
  LatticeVector outer_normal;
  Integer denominator{1};

  std::size_t dim() const noexcept { return vertex_indices.size(); }
  bool unimodular() const { return denominator == 1; }

  /// Scaled coordinate of vertex i of p at frame position pos.
  Integer coordinate(const Polytope& p, std::size_t pos, std::size_t i) const {
    return p.pair(dual_basis.row(pos), i);
  }
  /// Scaled level <u_F, vertex i>.
  Integer level(const Polytope& p, std::size_t i) const { return p.pair(outer_normal.coords(), i); }

  std::optional<std::size_t> position_of(std::size_t vertex_index) const;
  /// Sorted vertex indices; identifies the facet independently of frame order.
  std::vector<std::size_t> key() const;
  /// "{0,3,5}"
  std::string describe() const;
};

/// Builds the frame for the given ordered vertex indices. Throws
/// OriginNotInterior if the points are linearly dependent.
FacetFrame make_frame(const Polytope& p, std::vector<std::size_t> indices);

/// Gift-wrapping from the lexicographically largest vertex.
FacetFrame initial_facet(const Polytope& p);

struct PivotResult {
  FacetFrame frame;       ///< neigh(F, v); the new vertex takes v's position
  std::size_t opposite;   ///< opp(F, v)
};

/// Index of opp(F, v) for the vertex at position pos, chosen by the exact
/// ratio rule. Throws FacetNotSimplex on ties and OriginNotInterior when no
/// vertex has a negative coordinate.
std::size_t opposite_vertex(const Polytope& p, const FacetFrame& f, std::size_t pos);

PivotResult pivot(const Polytope& p, const FacetFrame& f, std::size_t pos);

/// Complete facet list in breadth-first order starting from initial_facet.
std::vector<FacetFrame> enumerate_facets(const Polytope& p);

enum class FailureKind {
  None,
  NotFullDim,
  OriginNotInterior,
  FacetNotSimplex,
  FacetNotUnimodular,
  DuplicateVertex,
  NotAVertex,
};

std::string to_string(FailureKind kind);

struct SmoothFanoCertificate {
  bool valid = false;
  FailureKind failure_kind = FailureKind::None;
  std::string witness;
  Mode mode = Mode::Full;
  std::size_t facets_checked = 0;
  /// Set for FacetNotUnimodular.
  std::vector<std::size_t> bad_facet;
  Integer bad_determinant{0};
};

SmoothFanoCertificate is_smooth_fano(const Polytope& p, Mode mode = Mode::Full);

/// Throws the error matching the first failure found by is_smooth_fano.
void require_smooth_fano(const Polytope& p, Mode mode);

/// Same, starting from raw rows so construction failures become certificates.
SmoothFanoCertificate is_smooth_fano(std::vector<LatticeVector> rows, Mode mode = Mode::Full);

LatticeVector vertex_sum(const Polytope& p);

/// Coordinates of s_P in a unimodular frame (the gamma vector).
std::vector<Integer> vertex_sum_coordinates(const Polytope& p, const FacetFrame& f);

/// Ascends from start (or initial_facet) by pivoting on negative gamma
/// coordinates until s_P lies in the cone over the facet.
FacetFrame special_facet(const Polytope& p);
FacetFrame special_facet(const Polytope& p, FacetFrame start);

/// |Vert P| - d, after validating p in the given mode.
std::int64_t picard_number(const Polytope& p, Mode mode = Mode::Full);

}  // namespace sfano
