#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smoothfano/polytope.hpp"

namespace sfano {

/// Number of vertices on each level <u_F, x> = j of one facet.
struct EtaVector {
  std::map<std::int64_t, std::size_t, std::greater<>> counts;
  std::size_t d = 0;
  std::size_t n = 0;
  std::int64_t k = 0;

  std::size_t at(std::int64_t level) const;
  std::size_t at_or_below(std::int64_t level) const;
  std::int64_t lowest_level() const;
  /// sum_j j * eta_j, which equals <u_F, s_P>.
  std::int64_t weighted_sum() const;
  /// "1:4 0:2 -1:4"
  std::string to_string() const;

  friend bool operator==(const EtaVector&, const EtaVector&) = default;
};

struct LevelsAndEta {
  std::vector<std::int64_t> levels;  ///< per vertex
  EtaVector eta;
};

LevelsAndEta levels_and_eta(const Polytope& p, const FacetFrame& f);

/// All vertices written in the dual basis of a unimodular frame.
struct CoordinateTable {
  std::vector<std::vector<Integer>> coords;  ///< [vertex][frame position]
  std::vector<std::int64_t> levels;          ///< [vertex]

  const Integer& at(std::size_t vertex, std::size_t pos) const { return coords[vertex][pos]; }
};

CoordinateTable coordinate_table(const Polytope& p, const FacetFrame& f);

/// opp(F, v) for each frame position, as vertex indices.
std::vector<std::size_t> opposites(const Polytope& p, const FacetFrame& f);

/// phi(v) = opp(F,v) + v when that is a frame vertex (returned as its frame
/// position), nullopt otherwise.
std::vector<std::optional<std::size_t>> phi_map(const Polytope& p, const FacetFrame& f,
                                                const std::vector<std::size_t>& opp);

enum class Goodness { A, B, C };

/// A/B/C split of the vertices of a special facet, plus the refinements used to
/// locate hexagon summands. All sets hold frame positions in ascending order.
struct GoodnessPartition {
  std::vector<std::size_t> A, B, C;
  std::vector<std::size_t> A_prime;  ///< v in A with -v a vertex
  std::vector<std::size_t> A_bar;    ///< v in A' with phi(v) in A' and gamma_v = gamma_phi(v) = 0
  std::vector<Goodness> role;
  std::vector<std::optional<std::size_t>> phi;
  std::vector<std::size_t> opp;
  std::vector<Integer> gamma;

  bool contains(const std::vector<std::size_t>& set, std::size_t pos) const;
};

/// Throws NotSpecialFacet if some gamma coordinate is negative.
GoodnessPartition goodness_partition(const Polytope& p, const FacetFrame& f);

std::string to_string(Goodness g);

}  // namespace sfano
