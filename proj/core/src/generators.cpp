#include "smoothfano/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "smoothfano/errors.hpp"

namespace sfano {

namespace {

LatticeVector unit_combination(std::size_t dim, std::initializer_list<std::pair<std::size_t, long long>> terms) {
  LatticeVector v(dim);
  for (auto [axis, c] : terms) v[axis] += c;
  return v;
}

const Integer kEntryLimit{65536};

}  // namespace

Polytope hexagon() { return Polytope::make({{1, 0}, {0, 1}, {-1, 1}, {1, -1}, {-1, 0}, {0, -1}}); }

Polytope pentagon() { return Polytope::make({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}); }

Polytope simplex(std::size_t d) {
  if (d == 0) throw InvalidArgument("simplex needs d >= 1");
  std::vector<LatticeVector> rows;
  LatticeVector last(d);
  for (std::size_t i = 0; i < d; ++i) {
    rows.push_back(LatticeVector::unit(d, i));
    last[i] = -1;
  }
  rows.push_back(std::move(last));
  return Polytope::make(std::move(rows));
}

Polytope example4d() {
  return Polytope::make({{1, 0, 0, 0},
                         {0, 1, 0, 0},
                         {0, 0, 1, 0},
                         {0, 0, 0, 1},
                         {-1, -1, 1, 1},
                         {1, 1, -1, -1},
                         {-1, 0, 0, 0},
                         {0, -1, 0, 0},
                         {0, 0, -1, 0},
                         {0, 0, 0, -1}});
}

Polytope bundle_b(std::size_t m) {
  if (m == 0) throw InvalidArgument("bundleB needs m >= 1");
  const std::size_t d = 3 * m;
  std::vector<LatticeVector> rows;
  LatticeVector v(d);
  for (std::size_t i = 0; i < m; ++i) {
    rows.push_back(LatticeVector::unit(d, i));
    v[i] = -1;
    v[m + 2 * i + 1] = 1;
  }
  rows.push_back(std::move(v));
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t a = m + 2 * j;
    const std::size_t b = a + 1;
    rows.push_back(unit_combination(d, {{a, 1}}));
    rows.push_back(unit_combination(d, {{b, 1}}));
    rows.push_back(unit_combination(d, {{a, -1}, {b, 1}}));
    rows.push_back(unit_combination(d, {{a, 1}, {b, -1}}));
    rows.push_back(unit_combination(d, {{a, -1}}));
    rows.push_back(unit_combination(d, {{b, -1}}));
  }
  return Polytope::make(std::move(rows));
}

RandomImage random_image(const Polytope& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t d = p.dim();

  IntMatrix g = IntMatrix::identity(d);
  if (d > 1) {
    for (std::size_t step = 0; step < 4 * d; ++step) {
      const std::size_t i = below(d);
      std::size_t j = below(d - 1);
      if (j >= i) ++j;
      const long long sign = (rng() & 1) ? 1 : -1;
      // column i += sign * column j
      bool fits = true;
      for (std::size_t r = 0; r < d && fits; ++r) {
        Integer next = g(r, i) + sign * g(r, j);
        fits = abs(next) < kEntryLimit;
      }
      if (!fits) continue;
      for (std::size_t r = 0; r < d; ++r) g(r, i) += sign * g(r, j);
    }
  }

  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = d; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
  IntMatrix map(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const long long sign = (rng() & 1) ? 1 : -1;
    for (std::size_t c = 0; c < d; ++c) map(r, c) = sign * g(perm[r], c);
  }

  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(i)]);

  std::vector<LatticeVector> rows;
  rows.reserve(p.size());
  for (std::size_t j : order) rows.push_back(map.apply(p.vertex(j)));
  return {Polytope::make(std::move(rows)), std::move(map), std::move(order)};
}

std::vector<std::string> generator_names() {
  return {"hexagon", "pentagon", "simplex", "example4d", "bundleB", "random_image"};
}

Polytope generate(std::string_view name, std::span<const long long> params, std::optional<std::uint64_t> seed,
                  const Polytope* source) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidArgument(std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                            std::to_string(params.size()));
    }
  };
  auto positive = [&](long long x) {
    if (x <= 0) throw InvalidArgument(std::string(name) + " parameter must be positive, got " + std::to_string(x));
    return static_cast<std::size_t>(x);
  };
  if (name == "hexagon") {
    expect(0);
    return hexagon();
  }
  if (name == "pentagon") {
    expect(0);
    return pentagon();
  }
  if (name == "simplex") {
    expect(1);
    return simplex(positive(params[0]));
  }
  if (name == "example4d") {
    expect(0);
    return example4d();
  }
  if (name == "bundleB") {
    expect(1);
    return bundle_b(positive(params[0]));
  }
  if (name == "random_image") {
    expect(0);
    if (source == nullptr) throw InvalidArgument("random_image needs a source polytope");
    if (!seed) throw InvalidArgument("random_image needs a seed");
    return random_image(*source, *seed).image;
  }
  throw InvalidArgument("unknown generator '" + std::string(name) + "'");
}

}  // namespace sfano
