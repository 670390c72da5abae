#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smoothfano/exact_linalg.hpp"
#include "smoothfano/polytope.hpp"

namespace sfano {

/// The smooth Fano hexagon: e1, e2, -e1+e2, e1-e2, -e1, -e2.
Polytope hexagon();
/// The hexagon without e1-e2.
Polytope pentagon();
/// conv(e1, ..., ed, -e1-...-ed).
Polytope simplex(std::size_t d);
/// e1..e4, -e1-e2+e3+e4, e1+e2-e3-e4, -e1..-e4.
Polytope example4d();
/// The non-splitting bundle in dimension 3m with 7m+1 vertices:
/// e_1..e_m, v = sum_i e_{m+2i} - sum_i e_i, then m hexagons on the
/// coordinate pairs (m+2i-1, m+2i).
Polytope bundle_b(std::size_t m);

struct RandomImage {
  Polytope image;
  IntMatrix map;                        ///< unimodular; image vertex j = map * source vertex order[j]
  std::vector<std::size_t> order;
};

/// Applies a seeded random unimodular map (elementary column operations,
/// a coordinate permutation and sign flips) and shuffles the vertices.
/// Entries of the map stay below 2^16 in absolute value. The generator is
/// std::mt19937_64 with modulo reduction, so output is identical on every
/// platform.
RandomImage random_image(const Polytope& p, std::uint64_t seed);

/// Names accepted by generate().
std::vector<std::string> generator_names();

/// Dispatch by name: hexagon, pentagon, simplex <d>, example4d, bundleB <m>,
/// random_image (requires source and seed). Throws InvalidArgument.
Polytope generate(std::string_view name, std::span<const long long> params = {},
                  std::optional<std::uint64_t> seed = std::nullopt, const Polytope* source = nullptr);

}  // namespace sfano
