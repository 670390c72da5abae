#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "oracle.hpp"
#include "smoothfano/errors.hpp"
#include "smoothfano/generators.hpp"
#include "smoothfano/polytope.hpp"
#include "smoothfano/splitting.hpp"

using namespace sfano;

namespace {

FacetFrame frame_of(const Polytope& p, std::initializer_list<LatticeVector> vertices) {
  std::vector<std::size_t> idx;
  for (const auto& v : vertices) idx.push_back(*p.find(v));
  return make_frame(p, idx);
}

std::set<std::vector<std::size_t>> facet_keys(const std::vector<FacetFrame>& facets) {
  std::set<std::vector<std::size_t>> keys;
  for (const auto& f : facets) keys.insert(f.key());
  return keys;
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("construction") {
    const Polytope h = hexagon();
    CHECK(h.dim() == 2);
    CHECK(h.size() == 6);
    CHECK(h.deficit() == 0);
    CHECK(h.find(LatticeVector{-1, 1}) == 2);
    CHECK_FALSE(h.find(LatticeVector{1, 1}));
    CHECK_THROWS_AS(make_polytope({{1, 0}, {1, 0}}), DuplicateVertex);
    CHECK_THROWS_AS(make_polytope({{1, 0}, {-1, 0}, {2, 0}}), NotFullDim);
    CHECK_THROWS_AS(make_polytope({{1, 0}, {0, 1, 1}}), DimensionError);
    CHECK_THROWS_AS(make_polytope({}), InvalidArgument);
  }

  TEST_CASE("facet counts") {
    CHECK(enumerate_facets(hexagon()).size() == 6);
    for (std::size_t d = 1; d <= 6; ++d) CHECK(enumerate_facets(simplex(d)).size() == d + 1);
    CHECK(enumerate_facets(bundle_b(1)).size() == 12);
    CHECK(enumerate_facets(bundle_b(2)).size() == 108);
  }

  TEST_CASE("frame invariants on every facet") {
    for (const auto& inst : corpus::generators()) {
      if (inst.polytope.dim() > 6) continue;
      const Polytope& p = inst.polytope;
      for (const auto& f : enumerate_facets(p)) {
        REQUIRE(f.unimodular());
        for (std::size_t i = 0; i < f.dim(); ++i)
          for (std::size_t j = 0; j < f.dim(); ++j)
            CHECK(f.coordinate(p, i, f.vertex_indices[j]) == (i == j ? 1 : 0));
        for (std::size_t x = 0; x < p.size(); ++x) {
          const Integer level = f.level(p, x);
          CHECK(level <= 1);
          CHECK((level == 1) == f.position_of(x).has_value());
        }
      }
    }
  }

  TEST_CASE("pivot examples") {
    const Polytope h = hexagon();
    const FacetFrame f = frame_of(h, {{1, 0}, {0, 1}});
    const PivotResult r = pivot(h, f, 0);
    CHECK(h.vertex(r.opposite) == LatticeVector{-1, 1});
    CHECK(r.frame.key() == frame_of(h, {{0, 1}, {-1, 1}}).key());

    const Polytope x = example4d();
    const FacetFrame g = frame_of(x, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(x.vertex(opposite_vertex(x, g, 0)) == LatticeVector{-1, -1, 1, 1});

    const Polytope s = simplex(2);
    CHECK(s.vertex(opposite_vertex(s, make_frame(s, {0, 1}), 0)) == LatticeVector{-1, -1});
  }

  TEST_CASE("pivot is an involution across each ridge") {
    for (const auto& inst : corpus::standing(6, 2)) {
      const Polytope& p = inst.polytope;
      if (p.dim() > 6) continue;
      for (const auto& f : enumerate_facets(p)) {
        for (std::size_t pos = 0; pos < f.dim(); ++pos) {
          const PivotResult there = pivot(p, f, pos);
          const PivotResult back = pivot(p, there.frame, pos);
          CHECK(back.frame.key() == f.key());
          CHECK(back.opposite == f.vertex_indices[pos]);
          CHECK(back.frame.dual_basis == f.dual_basis);
        }
      }
    }
  }

  TEST_CASE("pivot agrees with brute-force ridge matching") {
    for (const auto& inst : corpus::standing(4, 3)) {
      const Polytope& p = inst.polytope;
      const oracle::Hull hull = oracle::brute_force_hull(p);
      const auto ours = enumerate_facets(p);
      CHECK(facet_keys(ours) == std::set<std::vector<std::size_t>>(hull.facets.begin(), hull.facets.end()));
      for (std::size_t fi = 0; fi < hull.facets.size(); ++fi) {
        const FacetFrame f = make_frame(p, hull.facets[fi]);
        for (std::size_t pos = 0; pos < f.dim(); ++pos) {
          const auto expected = oracle::ridge_neighbour(hull, fi, f.vertex_indices[pos]);
          REQUIRE(expected);
          const PivotResult r = pivot(p, f, pos);
          CHECK(r.opposite == expected->opposite);
          CHECK(r.frame.key() == expected->facet);
        }
      }
    }
  }

  TEST_CASE("validation examples") {
    CHECK(is_smooth_fano(hexagon()).valid);

    const auto square = is_smooth_fano(std::vector<LatticeVector>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK_FALSE(square.valid);
    CHECK(square.failure_kind == FailureKind::FacetNotUnimodular);
    CHECK(abs(square.bad_determinant) == 2);
    CHECK_THROWS_AS(require_smooth_fano(make_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), Mode::Full),
                    FacetNotUnimodular);

    const auto positive = is_smooth_fano(std::vector<LatticeVector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(positive.failure_kind == FailureKind::OriginNotInterior);

    const auto flat = is_smooth_fano(std::vector<LatticeVector>{{1, 0}, {-1, 0}});
    CHECK(flat.failure_kind == FailureKind::NotFullDim);

    const auto dup = is_smooth_fano(std::vector<LatticeVector>{{1, 0}, {1, 0}});
    CHECK(dup.failure_kind == FailureKind::DuplicateVertex);

    const auto inner = is_smooth_fano(std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, -1}, {0, 0}});
    CHECK_FALSE(inner.valid);

    // Octahedron-like cube vertices: facets with four points.
    const auto cube = is_smooth_fano(
        std::vector<LatticeVector>{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    CHECK(cube.failure_kind == FailureKind::FacetNotSimplex);
  }

  TEST_CASE("validation agrees with brute force on small instances") {
    const std::vector<std::vector<LatticeVector>> candidates = {
        {{1, 0}, {0, 1}, {-1, -1}},
        {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
        {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}},
        {{2, 1}, {-1, 1}, {-1, -2}},
        {{1, 0}, {1, 2}, {-1, -1}, {-1, 0}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}, {0, 0, -1}, {1, 1, 1}},
    };
    for (const auto& rows : candidates) {
      const Polytope p = make_polytope(rows);
      CHECK(is_smooth_fano(p).valid == oracle::brute_force_smooth_fano(p));
    }
  }

  TEST_CASE("local mode accepts generated sums") {
    const Polytope big = direct_power(hexagon(), 20);
    const auto cert = is_smooth_fano(big, Mode::Local);
    CHECK(cert.valid);
    CHECK(cert.mode == Mode::Local);
    CHECK(cert.facets_checked == big.dim() + 1);
  }

  TEST_CASE("vertex sum") {
    CHECK(vertex_sum(hexagon()) == LatticeVector{0, 0});
    CHECK(vertex_sum(example4d()) == LatticeVector{0, 0, 0, 0});
    CHECK(vertex_sum(bundle_b(1)) == LatticeVector{0, 0, 1});
  }

  TEST_CASE("special facets") {
    for (const auto& inst : corpus::standing(8, 2)) {
      const Polytope& p = inst.polytope;
      const FacetFrame f = special_facet(p);
      LatticeVector rebuilt(p.dim());
      const auto gamma = vertex_sum_coordinates(p, f);
      for (std::size_t pos = 0; pos < f.dim(); ++pos) {
        CHECK(gamma[pos] >= 0);
        rebuilt += gamma[pos] * p.vertex(f.vertex_indices[pos]);
      }
      CHECK(rebuilt == vertex_sum(p));
    }
    const Polytope x = example4d();
    const FacetFrame e = frame_of(x, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(special_facet(x, e).key() == e.key());
  }

  TEST_CASE("picard number") {
    CHECK(picard_number(hexagon()) == 4);
    CHECK(picard_number(simplex(5)) == 1);
    CHECK(picard_number(bundle_b(1)) == 5);
    CHECK_THROWS(picard_number(make_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})));
  }

  TEST_CASE("casagrande bound on the corpus") {
    for (const auto& inst : corpus::standing(10, 1)) CHECK(inst.polytope.size() <= 3 * inst.polytope.dim());
  }
}
