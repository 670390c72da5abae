#include <doctest.h>

#include "corpus.hpp"
#include "smoothfano/equivalence.hpp"
#include "smoothfano/errors.hpp"
#include "smoothfano/generators.hpp"
#include "smoothfano/splitting.hpp"

using namespace sfano;

namespace {

Polytope transformed(const Polytope& p, const IntMatrix& m) {
  std::vector<LatticeVector> rows;
  for (const auto& v : p.vertices()) rows.push_back(m.apply(v));
  return make_polytope(std::move(rows));
}

}  // namespace

TEST_SUITE("equivalence") {
  TEST_CASE("normal form of the hexagon") {
    const NormalForm nf = normal_form(hexagon());
    CHECK(nf.canonical_matrix.rows() == 6);
    CHECK(nf.canonical_matrix.cols() == 2);
    CHECK(nf.digest == "-1 0\n-1 1\n0 -1\n0 1\n1 -1\n1 0");
    CHECK(normal_form(transformed(hexagon(), IntMatrix{{1, 1}, {0, 1}})) == nf);
  }

  TEST_CASE("different vertex counts give different forms") {
    CHECK_FALSE(normal_form(hexagon()) == normal_form(pentagon()));
    CHECK_FALSE(are_equivalent(hexagon(), pentagon()));
    CHECK_FALSE(are_equivalent(hexagon(), simplex(2)));
  }

  TEST_CASE("block swap of a sum") {
    const Polytope hh = direct_power(hexagon(), 2);
    const IntMatrix swap{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK(normal_form(hh) == normal_form(transformed(hh, swap)));
  }

  TEST_CASE("coordinate negation") {
    const Polytope b = bundle_b(1);
    const IntMatrix neg{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    CHECK(are_equivalent(b, transformed(b, neg)));
  }

  TEST_CASE("sum order does not matter") {
    CHECK(are_equivalent(direct_sum(hexagon(), bundle_b(1)), direct_sum(bundle_b(1), hexagon())));
    CHECK(are_equivalent(direct_sum(pentagon(), simplex(2)), direct_sum(simplex(2), pentagon())));
  }

  TEST_CASE("invariance under random images") {
    for (const auto& inst : corpus::generators()) {
      if (inst.polytope.dim() > 6) continue;
      const NormalForm base = normal_form(inst.polytope);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) CHECK(normal_form(random_image(inst.polytope, seed).image) == base);
    }
  }

  TEST_CASE("canonical rows are sorted and describe a unimodular image") {
    const Polytope b = bundle_b(2);
    const NormalForm nf = normal_form(b);
    std::vector<LatticeVector> rows;
    for (std::size_t r = 0; r < nf.canonical_matrix.rows(); ++r) rows.push_back(nf.canonical_matrix.row_vector(r));
    CHECK(std::is_sorted(rows.begin(), rows.end()));
    CHECK(are_equivalent(b, make_polytope(rows)));
  }

  TEST_CASE("generators are pairwise inequivalent") {
    const auto gens = corpus::generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        CHECK_FALSE(are_equivalent(gens[i].polytope, gens[j].polytope));
  }

  TEST_CASE("size limit is reported") {
    CHECK_THROWS_AS(normal_form(direct_power(hexagon(), 3), 10), SizeLimit);
  }

  TEST_CASE("invalid input is rejected") {
    CHECK_THROWS(normal_form(make_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})));
  }
}
