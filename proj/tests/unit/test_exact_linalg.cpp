#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "smoothfano/errors.hpp"
#include "smoothfano/exact_linalg.hpp"

using namespace sfano;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int spread) {
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
  return m;
}

// Product of random elementary operations: always |det| = 1.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    const long long s = (rng() & 1) ? 1 : -1;
    for (std::size_t c = 0; c < n; ++c) m(i, c) += s * m(j, c);
  }
  if (rng() & 1)
    for (std::size_t c = 0; c < n; ++c) m(0, c) = -m(0, c);
  return m;
}

std::vector<std::vector<Integer>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

}  // namespace

TEST_SUITE("exact_linalg") {
  TEST_CASE("determinant of small matrices") {
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(IntMatrix{{0, 1}, {-1, 1}}) == 1);
    CHECK(determinant(IntMatrix{{1, 1}, {1, -1}}) == -2);
    CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionError);
  }

  TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const IntMatrix m = random_matrix(rng, n, 4);
      CHECK(determinant(m) == oracle::cofactor_determinant(rows_of(m)));
    }
  }

  TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const IntMatrix a = random_matrix(rng, n, 3), b = random_matrix(rng, n, 3);
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
  }

  TEST_CASE("determinant stays exact beyond 64 bits") {
    IntMatrix m{{1000000007, 3}, {5, 1000000009}};
    m(0, 0) *= Integer(1000000000000LL);
    const Integer expected = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    CHECK(determinant(m) == expected);
  }

  TEST_CASE("inverse of unimodular matrices") {
    CHECK(inverse_if_unimodular(IntMatrix::identity(4)) == IntMatrix::identity(4));
    CHECK(inverse_if_unimodular(IntMatrix{{1, 1}, {0, 1}}) == IntMatrix{{1, -1}, {0, 1}});
    try {
      inverse_if_unimodular(IntMatrix{{2, 0}, {0, 1}});
      FAIL("expected NotUnimodular");
    } catch (const NotUnimodular& e) {
      CHECK(e.determinant() == 2);
    }
  }

  TEST_CASE("inverse round trip on random unimodular matrices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      const IntMatrix m = random_unimodular(rng, n);
      const IntMatrix inv = inverse_if_unimodular(m);
      CHECK(m * inv == IntMatrix::identity(n));
      CHECK(inv * m == IntMatrix::identity(n));
    }
  }

  TEST_CASE("adjugate of a singular matrix is empty") {
    const Adjugate adj = adjugate(IntMatrix{{1, 2}, {2, 4}});
    CHECK(adj.determinant == 0);
    CHECK(adj.matrix.rows() == 0);
  }

  TEST_CASE("coordinates in a basis") {
    CHECK(coordinates_in_basis(IntMatrix::identity(2), LatticeVector{3, -1}) == std::vector<Integer>{3, -1});
    CHECK(coordinates_in_basis(IntMatrix{{1, 0}, {-1, 1}}, LatticeVector{0, 1}) == std::vector<Integer>{1, 1});
    CHECK(coordinates_in_basis(IntMatrix{{0, 1}, {1, 0}}, LatticeVector{2, 5}) == std::vector<Integer>{5, 2});
    CHECK_THROWS_AS(coordinates_in_basis(IntMatrix{{2, 0}, {0, 1}}, LatticeVector{1, 1}), NotUnimodular);
  }

  TEST_CASE("basis rows have unit coordinates") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      const IntMatrix b = random_unimodular(rng, n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> expected(n, 0);
        expected[i] = 1;
        CHECK(coordinates_in_basis(b, b.row_vector(i)) == expected);
      }
    }
  }

  TEST_CASE("rank and orthogonal complement") {
    CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
    CHECK(rank(IntMatrix::identity(5)) == 5);
    OrthogonalComplement oc(3);
    CHECK(oc.dimension() == 3);
    CHECK(oc.add(LatticeVector{1, 1, 0}.coords()));
    CHECK_FALSE(oc.add(LatticeVector{2, 2, 0}.coords()));
    CHECK(oc.add(LatticeVector{0, 1, 1}.coords()));
    CHECK(oc.dimension() == 1);
    for (const auto& b : oc.basis()) {
      CHECK(dot(b, LatticeVector{1, 1, 0}.coords()) == 0);
      CHECK(dot(b, LatticeVector{0, 1, 1}.coords()) == 0);
    }
  }

  TEST_CASE("lattice vector helpers") {
    const LatticeVector v{1, -1, 0};
    CHECK(v.to_string() == "(1,-1,0)");
    CHECK(-v == LatticeVector{-1, 1, 0});
    CHECK(v + LatticeVector{0, 1, 1} == LatticeVector{1, 0, 1});
    CHECK(LatticeVector{0, 5} < LatticeVector{1, -9});
    std::vector<Integer> w{4, -6, 8};
    make_primitive(w);
    CHECK(w == std::vector<Integer>{2, -3, 4});
    CHECK(parallel(LatticeVector{1, 2}.coords(), LatticeVector{-2, -4}.coords()));
    CHECK_FALSE(parallel(LatticeVector{1, 2}.coords(), LatticeVector{2, 1}.coords()));
  }
}
