#include <doctest.h>

#include "corpus.hpp"
#include "smoothfano/equivalence.hpp"
#include "smoothfano/errors.hpp"
#include "smoothfano/fano_file.hpp"
#include "smoothfano/generators.hpp"
#include "smoothfano/splitting.hpp"

using namespace sfano;

TEST_SUITE("generators") {
  TEST_CASE("named polytopes") {
    const Polytope h = generate("hexagon");
    CHECK(h.dim() == 2);
    CHECK(h.size() == 6);
    CHECK(h.vertices() == std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, 1}, {1, -1}, {-1, 0}, {0, -1}});

    const Polytope x = generate("example4d");
    CHECK(x.dim() == 4);
    CHECK(x.size() == 10);
    CHECK(x.deficit() == 2);

    const long long one[] = {1};
    const Polytope b1 = generate("bundleB", one);
    CHECK(b1.dim() == 3);
    CHECK(b1.size() == 8);
    CHECK(b1.find(LatticeVector{-1, 0, 1}));

    const long long two[] = {2};
    const Polytope b2 = generate("bundleB", two);
    CHECK(b2.dim() == 6);
    CHECK(b2.size() == 15);
    CHECK(finest_split(b2).factors.size() == 1);

    CHECK(generate("pentagon").size() == 5);
    const long long four[] = {4};
    CHECK(generate("simplex", four).size() == 5);
  }

  TEST_CASE("parameter errors") {
    const long long zero[] = {0};
    CHECK_THROWS_AS(generate("bundleB", zero), InvalidArgument);
    CHECK_THROWS_AS(generate("simplex"), InvalidArgument);
    CHECK_THROWS_AS(generate("hexagon", zero), InvalidArgument);
    CHECK_THROWS_AS(generate("cube"), InvalidArgument);
    CHECK_THROWS_AS(generate("random_image"), InvalidArgument);
    const Polytope h = hexagon();
    CHECK_THROWS_AS(generate("random_image", {}, std::nullopt, &h), InvalidArgument);
    CHECK(generate("random_image", {}, 5, &h).size() == 6);
  }

  TEST_CASE("every generator is smooth Fano") {
    for (const auto& inst : corpus::generators()) {
      CAPTURE(inst.name);
      CHECK(is_smooth_fano(inst.polytope, Mode::Full).valid);
    }
    for (std::size_t m = 1; m <= 3; ++m) CHECK(bundle_b(m).size() == 7 * m + 1);
  }

  TEST_CASE("picard numbers at the conjectured maxima") {
    for (std::size_t m = 1; m <= 3; ++m) CHECK(picard_number(bundle_b(m)) == static_cast<std::int64_t>(4 * m + 1));
    for (std::size_t m = 1; m <= 3; ++m)
      CHECK(picard_number(direct_power(bundle_b(1), m)) == static_cast<std::int64_t>(5 * m));
  }

  TEST_CASE("random images") {
    const Polytope b = bundle_b(1);
    const RandomImage r = random_image(b, 42);
    CHECK(abs(determinant(r.map)) == 1);
    for (std::size_t j = 0; j < r.order.size(); ++j) CHECK(r.image.vertex(j) == r.map.apply(b.vertex(r.order[j])));
    for (std::size_t i = 0; i < r.map.rows(); ++i)
      for (std::size_t c = 0; c < r.map.cols(); ++c) CHECK(abs(r.map(i, c)) < 65536);
    CHECK(random_image(b, 42).image.vertices() == r.image.vertices());
    CHECK_FALSE(random_image(b, 43).image.vertices() == r.image.vertices());
    CHECK(are_equivalent(b, r.image));
    CHECK(is_smooth_fano(r.image).valid);
  }

  TEST_CASE("random image output is pinned") {
    const RandomImage r = random_image(hexagon(), 1);
    const RandomImage again = random_image(hexagon(), 1);
    CHECK(r.map == again.map);
    CHECK(r.order == again.order);
    CHECK(serialize_fano(r.image) == "fano 1\n2 6\n-1 -1\n0 -1\n1 0\n1 1\n-1 0\n0 1\n");
    CHECK(serialize_fano(random_image(example4d(), 7).image) ==
          "fano 1\n4 10\n-4 -7 -3 -2\n4 11 5 1\n3 7 3 1\n0 -2 -1 0\n3 5 2 2\n"
          "-3 -7 -3 -1\n4 7 3 2\n-3 -5 -2 -2\n0 2 1 0\n-4 -11 -5 -1\n");
  }
}
