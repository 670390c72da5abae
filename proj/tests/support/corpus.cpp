#include "corpus.hpp"

#include "smoothfano/generators.hpp"
#include "smoothfano/splitting.hpp"

namespace corpus {

std::vector<Instance> generators() {
  using namespace sfano;
  return {
      {"hexagon", hexagon(), {}},       {"pentagon", pentagon(), {}},   {"simplex1", simplex(1), {}},
      {"simplex2", simplex(2), {}},     {"simplex3", simplex(3), {}},   {"example4d", example4d(), {}},
      {"bundleB1", bundle_b(1), {}},    {"bundleB2", bundle_b(2), {}},  {"bundleB3", bundle_b(3), {}},
  };
}

std::vector<Instance> pairwise_sums(std::size_t max_dim) {
  const std::vector<Instance> gens = generators();
  std::vector<Instance> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      if (gens[i].polytope.dim() + gens[j].polytope.dim() > max_dim) continue;
      out.push_back({gens[i].name + "+" + gens[j].name, sfano::direct_sum(gens[i].polytope, gens[j].polytope), {}});
    }
  }
  return out;
}

std::vector<Instance> standing(std::size_t max_dim, std::size_t images) {
  std::vector<Instance> bases;
  for (auto& g : generators())
    if (g.polytope.dim() <= max_dim) bases.push_back(std::move(g));
  for (auto& s : pairwise_sums(max_dim)) bases.push_back(std::move(s));
  std::vector<Instance> out;
  std::uint64_t seed = 1;
  for (const auto& base : bases) {
    out.push_back(base);
    for (std::size_t i = 0; i < images; ++i, ++seed) {
      out.push_back({base.name + "@" + std::to_string(seed), sfano::random_image(base.polytope, seed).image, seed});
    }
  }
  return out;
}

sfano::Mode test_mode(const sfano::Polytope& p) { return sfano::factor_mode(p.dim()); }

}  // namespace corpus
