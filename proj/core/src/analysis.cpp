#include "smoothfano/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "smoothfano/errors.hpp"

namespace sfano {

std::size_t EtaVector::at(std::int64_t level) const {
  auto it = counts.find(level);
  return it == counts.end() ? 0 : it->second;
}

std::size_t EtaVector::at_or_below(std::int64_t level) const {
  std::size_t s = 0;
  for (auto it = counts.lower_bound(level); it != counts.end(); ++it) s += it->second;
  return s;
}

std::int64_t EtaVector::lowest_level() const { return counts.empty() ? 0 : counts.rbegin()->first; }

std::int64_t EtaVector::weighted_sum() const {
  std::int64_t s = 0;
  for (auto [level, count] : counts) s += level * static_cast<std::int64_t>(count);
  return s;
}

std::string EtaVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [level, count] : counts) {
    os << (first ? "" : " ") << level << ':' << count;
    first = false;
  }
  return os.str();
}

namespace {

void require_unimodular(const FacetFrame& f) {
  if (!f.unimodular()) throw FacetNotUnimodular(f.describe(), f.denominator);
}

}  // namespace

LevelsAndEta levels_and_eta(const Polytope& p, const FacetFrame& f) {
  require_unimodular(f);
  LevelsAndEta out;
  out.levels.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.levels[i] = to_int64(f.level(p, i));
    ++out.eta.counts[out.levels[i]];
  }
  out.eta.d = p.dim();
  out.eta.n = p.size();
  out.eta.k = p.deficit();
  return out;
}

CoordinateTable coordinate_table(const Polytope& p, const FacetFrame& f) {
  require_unimodular(f);
  CoordinateTable t;
  t.coords.assign(p.size(), std::vector<Integer>(f.dim()));
  t.levels.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Integer level = 0;
    for (std::size_t pos = 0; pos < f.dim(); ++pos) {
      t.coords[i][pos] = f.coordinate(p, pos, i);
      level += t.coords[i][pos];
    }
    t.levels[i] = to_int64(level);
  }
  return t;
}

std::vector<std::size_t> opposites(const Polytope& p, const FacetFrame& f) {
  std::vector<std::size_t> opp(f.dim());
  for (std::size_t pos = 0; pos < f.dim(); ++pos) opp[pos] = opposite_vertex(p, f, pos);
  return opp;
}

std::vector<std::optional<std::size_t>> phi_map(const Polytope& p, const FacetFrame& f,
                                                const std::vector<std::size_t>& opp) {
  std::vector<std::optional<std::size_t>> phi(f.dim());
  for (std::size_t pos = 0; pos < f.dim(); ++pos) {
    auto w = p.find(p.vertex(opp[pos]) + p.vertex(f.vertex_indices[pos]));
    if (w) phi[pos] = f.position_of(*w);
  }
  return phi;
}

bool GoodnessPartition::contains(const std::vector<std::size_t>& set, std::size_t pos) const {
  return std::binary_search(set.begin(), set.end(), pos);
}

GoodnessPartition goodness_partition(const Polytope& p, const FacetFrame& f) {
  require_unimodular(f);
  GoodnessPartition g;
  g.gamma = vertex_sum_coordinates(p, f);
  for (std::size_t pos = 0; pos < g.gamma.size(); ++pos) {
    if (g.gamma[pos] < 0) {
      throw NotSpecialFacet("facet " + f.describe() + " has gamma[" + std::to_string(pos) +
                            "] = " + g.gamma[pos].str());
    }
  }
  g.opp = opposites(p, f);
  g.phi = phi_map(p, f, g.opp);
  const std::size_t d = f.dim();
  g.role.resize(d);
  for (std::size_t pos = 0; pos < d; ++pos) {
    const bool good = f.level(p, g.opp[pos]).is_zero();
    if (!good) {
      g.role[pos] = Goodness::C;
      g.C.push_back(pos);
    } else if (g.phi[pos]) {
      g.role[pos] = Goodness::A;
      g.A.push_back(pos);
    } else {
      g.role[pos] = Goodness::B;
      g.B.push_back(pos);
    }
  }
  for (std::size_t pos : g.A)
    if (p.find(-p.vertex(f.vertex_indices[pos]))) g.A_prime.push_back(pos);
  for (std::size_t pos : g.A_prime) {
    const std::size_t partner = *g.phi[pos];
    if (g.contains(g.A_prime, partner) && g.gamma[pos].is_zero() && g.gamma[partner].is_zero())
      g.A_bar.push_back(pos);
  }
  return g;
}

std::string to_string(Goodness g) {
  switch (g) {
    case Goodness::A: return "A";
    case Goodness::B: return "B";
    case Goodness::C: return "C";
  }
  return "?";
}

}  // namespace sfano
