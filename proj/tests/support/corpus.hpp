#pragma once

// Standing test corpus: every generator, their pairwise direct sums and
// seeded unimodular images of both.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smoothfano/polytope.hpp"

namespace corpus {

struct Instance {
  std::string name;
  sfano::Polytope polytope;
  std::optional<std::uint64_t> seed;  ///< set for random images
};

/// hexagon, pentagon, simplex1..3, example4d, bundleB1..3.
std::vector<Instance> generators();

/// X (+) Y for generators X before-or-equal Y with dim(X) + dim(Y) <= max_dim.
std::vector<Instance> pairwise_sums(std::size_t max_dim);

/// generators() of dimension <= max_dim and pairwise_sums(max_dim), each followed by `images` random images.
std::vector<Instance> standing(std::size_t max_dim = 10, std::size_t images = 20);

/// Mode for validating instances of this dimension in tests.
sfano::Mode test_mode(const sfano::Polytope& p);

}  // namespace corpus
