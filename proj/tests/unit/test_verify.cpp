#include <doctest.h>

#include "corpus.hpp"
#include "smoothfano/errors.hpp"
#include "smoothfano/generators.hpp"
#include "smoothfano/splitting.hpp"
#include "smoothfano/verify.hpp"

using namespace sfano;

namespace {

FacetFrame unit_facet(const Polytope& p) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < p.dim(); ++i) idx.push_back(*p.find(LatticeVector::unit(p.dim(), i)));
  return make_frame(p, idx);
}

CheckStatus status_of(const BoundsReport& r, const std::string& name) {
  const CheckRecord* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->status;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("hexagon passes with deficit checks reported") {
    const BoundsReport r = verify_bounds(hexagon());
    CHECK(r.overall);
    CHECK(r.k == 0);
    CHECK(status_of(r, "card.eta0") == CheckStatus::ReportOnly);
    CHECK(r.find("card.eta0")->witness.rfind("holds", 0) == 0);
    CHECK(status_of(r, "minus") == CheckStatus::Pass);
    CHECK(status_of(r, "casagrande") == CheckStatus::Pass);
  }

  TEST_CASE("example4d is tight on the level-0 lower bound") {
    const BoundsReport r = verify_bounds(example4d());
    CHECK(r.overall);
    CHECK(r.k == 2);
    CHECK(r.find("card.eta0")->witness == "holds eta0=2 range=[2,4]");
  }

  TEST_CASE("deficit three asserts every bound") {
    const BoundsReport r = verify_bounds(direct_power(bundle_b(1), 3));
    CHECK(r.overall);
    CHECK(r.d == 9);
    CHECK(r.n == 24);
    CHECK(r.k == 3);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK((c.status == CheckStatus::Pass || c.status == CheckStatus::NotApplicable));
    }
    CHECK(status_of(r, "hexagon_bound") == CheckStatus::NotApplicable);
  }

  TEST_CASE("hexagon bound applies above the threshold") {
    const BoundsReport r = verify_bounds(direct_power(hexagon(), 3), Mode::Full);
    CHECK(status_of(r, "hexagon_bound") == CheckStatus::Pass);
  }

  TEST_CASE("invalid input yields a failing report") {
    const BoundsReport r = verify_bounds(make_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    CHECK_FALSE(r.overall);
    CHECK(status_of(r, "smooth_fano") == CheckStatus::Fail);
  }

  TEST_CASE("text form") {
    const std::string text = verify_bounds(pentagon()).to_text();
    CHECK(text.rfind("REPORT d=2 n=5 k=1 mode=full overall=pass\n", 0) == 0);
    CHECK(text.find("CHECK casagrande pass n=5 3d=6\n") != std::string::npos);
    CHECK(text.find("CHECK hexagon_bound not-applicable d=2 < 15k^2+37k+2=54\n") != std::string::npos);
  }

  TEST_CASE("checks are sorted by name") {
    const BoundsReport r = verify_bounds(bundle_b(2));
    for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].name < r.checks[i].name);
  }

  TEST_CASE("level minus one classification") {
    const Polytope h = hexagon();
    const auto th = classify_level_minus_one(h, unit_facet(h));
    CHECK(th.type_i.empty());
    CHECK(th.type_ii.empty());
    CHECK(th.type_iii.size() == 2);

    const Polytope x = example4d();
    const auto tx = classify_level_minus_one(x, unit_facet(x));
    CHECK(tx.type_ii.size() == 4);
    CHECK(tx.type_i.empty());
    CHECK(tx.type_iii.empty());

    const Polytope s = simplex(2);
    const auto ts = classify_level_minus_one(s, unit_facet(s));
    CHECK(ts.type_i.size() + ts.type_ii.size() + ts.type_iii.size() == 0);
  }

  TEST_CASE("standing corpus passes") {
    for (const auto& inst : corpus::standing(8, 2)) {
      const BoundsReport r = verify_bounds(inst.polytope, corpus::test_mode(inst.polytope));
      CAPTURE(inst.name);
      CAPTURE(r.to_text());
      CHECK(r.overall);
    }
  }
}
