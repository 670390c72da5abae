#include "smoothfano/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "smoothfano/analysis.hpp"
#include "smoothfano/errors.hpp"

namespace sfano {

namespace {

using Column = std::vector<long long>;

// Per facet: coordinate columns, coords[pos][vertex].
struct FacetTable {
  std::vector<Column> coords;
};

FacetTable tabulate(const Polytope& p, const FacetFrame& f) {
  FacetTable t;
  t.coords.assign(p.dim(), Column(p.size()));
  for (std::size_t pos = 0; pos < p.dim(); ++pos)
    for (std::size_t x = 0; x < p.size(); ++x) t.coords[pos][x] = to_int64(f.coordinate(p, pos, x));
  return t;
}

// Replaces arbitrary comparable signatures by their rank among all signatures.
template <typename Sig>
std::vector<std::size_t> rank_signatures(const std::vector<Sig>& sigs) {
  std::map<Sig, std::size_t> ranks;
  for (const auto& s : sigs) ranks.emplace(s, 0);
  std::size_t r = 0;
  for (auto& [sig, rank] : ranks) rank = r++;
  std::vector<std::size_t> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) out[i] = ranks.at(sigs[i]);
  return out;
}

std::size_t class_count(const std::vector<std::size_t>& colours) {
  return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
}

// Colour refinement on the bipartite vertex-facet incidence graph, seeded
// with each facet's eta vector.
std::vector<std::size_t> facet_colours(const Polytope& p, const std::vector<FacetFrame>& facets) {
  std::vector<std::string> seeds;
  for (const auto& f : facets) seeds.push_back(levels_and_eta(p, f).eta.to_string());
  std::vector<std::size_t> fc = rank_signatures(seeds);
  std::vector<std::size_t> vc(p.size(), 0);

  std::vector<std::vector<std::size_t>> incident(p.size());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t x : facets[i].vertex_indices) incident[x].push_back(i);

  std::size_t classes = class_count(fc) + class_count(vc);
  while (true) {
    using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Sig> vsig(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      vsig[x].first = vc[x];
      for (std::size_t i : incident[x]) vsig[x].second.push_back(fc[i]);
      std::sort(vsig[x].second.begin(), vsig[x].second.end());
    }
    vc = rank_signatures(vsig);
    std::vector<Sig> fsig(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
      fsig[i].first = fc[i];
      for (std::size_t x : facets[i].vertex_indices) fsig[i].second.push_back(vc[x]);
      std::sort(fsig[i].second.begin(), fsig[i].second.end());
    }
    fc = rank_signatures(fsig);
    const std::size_t next = class_count(fc) + class_count(vc);
    if (next == classes) break;
    classes = next;
  }
  return fc;
}

// A partial ordering of one facet's positions. Rows are kept sorted by the
// chosen prefix; groups are maximal runs of equal prefixes.
struct Candidate {
  std::size_t facet;
  std::vector<bool> used;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> group_start;  // ascending, first is 0
};

// Extends c by position pos; writes the new column of the row-sorted matrix.
Candidate extend(const Candidate& c, const FacetTable& t, std::size_t pos, Column& column) {
  Candidate next{c.facet, c.used, c.rows, {}};
  next.used[pos] = true;
  const Column& values = t.coords[pos];
  const std::size_t n = c.rows.size();
  for (std::size_t g = 0; g < c.group_start.size(); ++g) {
    const std::size_t lo = c.group_start[g];
    const std::size_t hi = g + 1 < c.group_start.size() ? c.group_start[g + 1] : n;
    auto first = next.rows.begin() + static_cast<std::ptrdiff_t>(lo);
    auto last = next.rows.begin() + static_cast<std::ptrdiff_t>(hi);
    std::sort(first, last, [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    for (std::size_t i = lo; i < hi; ++i) {
      if (i == lo || values[next.rows[i]] != values[next.rows[i - 1]]) next.group_start.push_back(i);
    }
  }
  column.resize(n);
  for (std::size_t i = 0; i < n; ++i) column[i] = values[next.rows[i]];
  return next;
}

std::vector<std::string> sorted_etas(const Polytope& p) {
  std::vector<std::string> etas;
  for (const auto& f : enumerate_facets(p)) etas.push_back(levels_and_eta(p, f).eta.to_string());
  std::sort(etas.begin(), etas.end());
  return etas;
}

}  // namespace

NormalForm normal_form(const Polytope& p, std::size_t budget) {
  require_smooth_fano(p, Mode::Full);
  const std::vector<FacetFrame> facets = enumerate_facets(p);
  const std::vector<std::size_t> colours = facet_colours(p, facets);

  std::map<std::size_t, std::size_t> class_size;
  for (std::size_t c : colours) ++class_size[c];
  std::size_t chosen = class_size.begin()->first;
  for (const auto& [colour, size] : class_size)
    if (size < class_size[chosen]) chosen = colour;

  const std::size_t d = p.dim();
  const std::size_t n = p.size();
  std::vector<FacetTable> tables(facets.size());
  std::vector<Candidate> live;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (colours[i] != chosen) continue;
    tables[i] = tabulate(p, facets[i]);
    Candidate c{i, std::vector<bool>(d, false), std::vector<std::size_t>(n), {0}};
    std::iota(c.rows.begin(), c.rows.end(), 0);
    live.push_back(std::move(c));
  }

  NormalForm nf;
  std::vector<Column> columns;
  for (std::size_t level = 0; level < d; ++level) {
    std::vector<Candidate> next;
    Column best;
    Column column;
    for (const auto& c : live) {
      for (std::size_t pos = 0; pos < d; ++pos) {
        if (c.used[pos]) continue;
        Candidate ext = extend(c, tables[c.facet], pos, column);
        ++nf.candidates_explored;
        if (!next.empty()) {
          if (column > best) continue;
          if (column < best) next.clear();
        }
        if (next.empty()) best = column;
        next.push_back(std::move(ext));
        if (next.size() > budget) {
          throw SizeLimit("normal form search exceeded " + std::to_string(budget) + " partial orderings at level " +
                          std::to_string(level + 1) + " of " + std::to_string(d));
        }
      }
    }
    columns.push_back(std::move(best));
    live = std::move(next);
  }

  nf.canonical_matrix = IntMatrix(n, d);
  std::ostringstream digest;
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0) digest << '\n';
    for (std::size_t c = 0; c < d; ++c) {
      nf.canonical_matrix(r, c) = columns[c][r];
      if (c > 0) digest << ' ';
      digest << columns[c][r];
    }
  }
  nf.digest = digest.str();
  return nf;
}

bool are_equivalent(const Polytope& p, const Polytope& q, std::size_t budget) {
  if (p.dim() != q.dim() || p.size() != q.size()) return false;
  require_smooth_fano(p, Mode::Full);
  require_smooth_fano(q, Mode::Full);
  if (sorted_etas(p) != sorted_etas(q)) return false;
  return normal_form(p, budget) == normal_form(q, budget);
}

}  // namespace sfano
