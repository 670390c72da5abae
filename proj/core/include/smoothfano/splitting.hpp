#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smoothfano/analysis.hpp"
#include "smoothfano/polytope.hpp"

namespace sfano {

/// conv(P x {0} u {0} x Q): p's vertices padded with zeros, then q's.
Polytope direct_sum(const Polytope& p, const Polytope& q);
Polytope direct_sum(std::span<const Polytope> parts);
/// p (+) p (+) ... (+) p, m >= 1 copies.
Polytope direct_power(const Polytope& p, std::size_t m);

enum class FactorKind { Hexagon, Residual };

std::string to_string(FactorKind kind);

struct Factor {
  FactorKind kind = FactorKind::Residual;
  std::vector<std::size_t> vertex_indices;  ///< vertices of the input polytope, ascending
  std::vector<std::size_t> block;           ///< rows of change_of_basis spanning this factor
  Polytope polytope;                        ///< vertices in block coordinates, same order
};

/// P = Q_1 (+) ... (+) Q_r after the unimodular change of basis.
struct Decomposition {
  std::vector<Factor> factors;
  IntMatrix change_of_basis;  ///< ambient coordinates -> concatenated block coordinates
  std::size_t hexagon_count = 0;
};

/// Two frame positions {v, phi(v)} of A-bar, first < second.
struct CleanPair {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const CleanPair&, const CleanPair&) = default;
};

/// Pairs of A-bar whose coordinates vanish on every vertex outside
///   W = union over v in A-bar of {v, phi(v), phi(v)-v, v-phi(v), -v, -phi(v)}.
/// Each such pair spans a hexagon summand.
std::vector<CleanPair> clean_pairs(const Polytope& p, const FacetFrame& f, const GoodnessPartition& g);

/// 15k^2 + 37k + 2
std::int64_t hexagon_threshold(std::int64_t k);
/// floor((d - 15k^2 - 37k) / 2) when d reaches the threshold.
std::optional<std::int64_t> guaranteed_hexagons(std::int64_t d, std::int64_t k);

/// Splits off every clean hexagon at a special facet. Factor 0 is the residual
/// (when nonempty), followed by the hexagons. Throws TheoremViolation if the
/// guaranteed number of hexagons is not reached.
Decomposition hexagon_split(const Polytope& p, Mode mode = Mode::Full);

/// Finest direct-sum decomposition, read off the coordinate supports of all
/// vertices in one facet basis.
Decomposition finest_split(const Polytope& p, Mode mode = Mode::Full);

/// Mode used for re-validating a factor: full up to dimension 10.
Mode factor_mode(std::size_t dim);

}  // namespace sfano
