#include "smoothfano/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "smoothfano/errors.hpp"

namespace sfano {

std::string to_string(FactorKind kind) { return kind == FactorKind::Hexagon ? "hexagon" : "residual"; }

Polytope direct_sum(const Polytope& p, const Polytope& q) {
  const Polytope parts[] = {p, q};
  return direct_sum(parts);
}

Polytope direct_sum(std::span<const Polytope> parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of nothing");
  std::size_t total = 0;
  for (const auto& part : parts) total += part.dim();
  std::vector<LatticeVector> rows;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (const auto& v : part.vertices()) {
      LatticeVector w(total);
      for (std::size_t j = 0; j < v.size(); ++j) w[offset + j] = v[j];
      rows.push_back(std::move(w));
    }
    offset += part.dim();
  }
  return Polytope::make(std::move(rows));
}

Polytope direct_power(const Polytope& p, std::size_t m) {
  if (m == 0) throw InvalidArgument("direct power needs at least one copy");
  std::vector<Polytope> parts(m, p);
  return direct_sum(parts);
}

Mode factor_mode(std::size_t dim) { return dim <= 10 ? Mode::Full : Mode::Local; }

std::int64_t hexagon_threshold(std::int64_t k) { return 15 * k * k + 37 * k + 2; }

std::optional<std::int64_t> guaranteed_hexagons(std::int64_t d, std::int64_t k) {
  if (d < hexagon_threshold(k)) return std::nullopt;
  return (d - 15 * k * k - 37 * k) / 2;
}

std::vector<CleanPair> clean_pairs(const Polytope& p, const FacetFrame& f, const GoodnessPartition& g) {
  std::vector<CleanPair> candidates;
  std::set<std::size_t> w;
  for (std::size_t pos : g.A_bar) {
    const std::size_t partner = *g.phi[pos];
    if (!g.contains(g.A_bar, partner) || g.phi[partner] != pos) {
      throw InconsistentSplit("phi is not an involution on A-bar at position " + std::to_string(pos));
    }
    const LatticeVector& v = p.vertex(f.vertex_indices[pos]);
    w.insert(f.vertex_indices[pos]);
    w.insert(g.opp[pos]);
    w.insert(*p.find(-v));
    if (pos < partner) candidates.push_back({pos, partner});
  }

  const std::int64_t k = p.deficit();
  std::vector<bool> dirty(f.dim(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    const bool outside = !w.contains(x);
    const std::int64_t level = to_int64(f.level(p, x));
    std::size_t touched = 0;
    for (std::size_t pos : g.A_bar) {
      if (f.coordinate(p, pos, x).is_zero()) continue;
      ++touched;
      if (outside) dirty[pos] = true;
    }
    if (level <= -1 && static_cast<std::int64_t>(touched) > 2 * k + 2) {
      throw TheoremViolation("vertex " + std::to_string(x) + " at level " + std::to_string(level) + " has " +
                             std::to_string(touched) + " nonzero A-bar coordinates, more than 2k+2");
    }
  }

  std::vector<CleanPair> clean;
  for (const auto& pair : candidates)
    if (!dirty[pair.first] && !dirty[pair.second]) clean.push_back(pair);

  // Members of W from other pairs are supported on their own pair only.
  for (const auto& pair : candidates) {
    for (std::size_t pos : {pair.first, pair.second}) {
      const LatticeVector& v = p.vertex(f.vertex_indices[pos]);
      for (std::size_t x : {f.vertex_indices[pos], g.opp[pos], *p.find(-v)}) {
        for (std::size_t other : g.A_bar) {
          if (other == pair.first || other == pair.second) continue;
          if (!f.coordinate(p, other, x).is_zero())
            throw InconsistentSplit("hexagon vertex " + std::to_string(x) + " leaks into another pair");
        }
      }
    }
  }
  return clean;
}

namespace {

Decomposition trivial_decomposition(const Polytope& p) {
  Decomposition d;
  Factor only{(p.dim() == 2 && p.size() == 6) ? FactorKind::Hexagon : FactorKind::Residual,
              std::vector<std::size_t>(p.size()), std::vector<std::size_t>(p.dim()), p};
  std::iota(only.vertex_indices.begin(), only.vertex_indices.end(), 0);
  std::iota(only.block.begin(), only.block.end(), 0);
  d.hexagon_count = only.kind == FactorKind::Hexagon ? 1 : 0;
  d.factors.push_back(std::move(only));
  d.change_of_basis = IntMatrix::identity(p.dim());
  return d;
}

// Assembles a decomposition from a unimodular frame and a partition of its
// positions into blocks. Each vertex is assigned to the block containing its
// support.
Decomposition assemble(const Polytope& p, const FacetFrame& f, const std::vector<std::vector<std::size_t>>& blocks,
                       const std::vector<FactorKind>& kinds) {
  const std::size_t d = p.dim();
  Decomposition out;
  out.change_of_basis = IntMatrix(d, d);
  std::vector<std::size_t> block_of(d);
  std::vector<std::size_t> row_of(d);
  std::size_t row = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t pos : blocks[b]) {
      block_of[pos] = b;
      row_of[pos] = row;
      auto src = f.dual_basis.row(pos);
      std::copy(src.begin(), src.end(), out.change_of_basis.row(row).begin());
      ++row;
    }
  }

  std::vector<std::vector<std::size_t>> members(blocks.size());
  std::vector<std::vector<LatticeVector>> rows(blocks.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<Integer> c(d);
    std::optional<std::size_t> home;
    for (std::size_t pos = 0; pos < d; ++pos) {
      c[pos] = f.coordinate(p, pos, x);
      if (c[pos].is_zero()) continue;
      if (!home) home = block_of[pos];
      if (*home != block_of[pos])
        throw InconsistentSplit("vertex " + std::to_string(x) + " is supported on two blocks");
    }
    if (!home) throw InconsistentSplit("vertex " + std::to_string(x) + " has no support");
    LatticeVector local(blocks[*home].size());
    for (std::size_t i = 0; i < blocks[*home].size(); ++i) local[i] = c[blocks[*home][i]];
    members[*home].push_back(x);
    rows[*home].push_back(std::move(local));
  }

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<std::size_t> block;
    for (std::size_t pos : blocks[b]) block.push_back(row_of[pos]);
    Factor factor{kinds[b], std::move(members[b]), std::move(block), Polytope::make(std::move(rows[b]))};
    SmoothFanoCertificate cert = is_smooth_fano(factor.polytope, factor_mode(factor.polytope.dim()));
    if (!cert.valid) {
      throw InconsistentSplit("factor " + std::to_string(b) + " is not smooth Fano: " + to_string(cert.failure_kind) +
                              " " + cert.witness);
    }
    if (factor.kind == FactorKind::Hexagon) ++out.hexagon_count;
    out.factors.push_back(std::move(factor));
  }
  return out;
}

}  // namespace

Decomposition hexagon_split(const Polytope& p, Mode mode) {
  require_smooth_fano(p, mode);
  const FacetFrame f = special_facet(p);
  const GoodnessPartition g = goodness_partition(p, f);
  const std::vector<CleanPair> pairs = clean_pairs(p, f, g);

  Decomposition out;
  if (pairs.empty()) {
    out = trivial_decomposition(p);
  } else {
    std::vector<bool> used(p.dim(), false);
    for (const auto& pr : pairs) used[pr.first] = used[pr.second] = true;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<FactorKind> kinds;
    std::vector<std::size_t> rest;
    for (std::size_t pos = 0; pos < p.dim(); ++pos)
      if (!used[pos]) rest.push_back(pos);
    if (!rest.empty()) {
      blocks.push_back(std::move(rest));
      kinds.push_back(FactorKind::Residual);
    }
    for (const auto& pr : pairs) {
      blocks.push_back({pr.first, pr.second});
      kinds.push_back(FactorKind::Hexagon);
    }
    out = assemble(p, f, blocks, kinds);
  }

  const auto dim = static_cast<std::int64_t>(p.dim());
  if (auto bound = guaranteed_hexagons(dim, p.deficit())) {
    if (static_cast<std::int64_t>(out.hexagon_count) < *bound) {
      throw TheoremViolation("found " + std::to_string(out.hexagon_count) + " hexagons but d=" + std::to_string(dim) +
                             ", k=" + std::to_string(p.deficit()) + " guarantees " + std::to_string(*bound));
    }
  }
  return out;
}

Decomposition finest_split(const Polytope& p, Mode mode) {
  require_smooth_fano(p, mode);
  const FacetFrame f = initial_facet(p);
  const std::size_t d = p.dim();

  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::optional<std::size_t> first;
    for (std::size_t pos = 0; pos < d; ++pos) {
      if (f.coordinate(p, pos, x).is_zero()) continue;
      if (!first) {
        first = pos;
      } else {
        parent[root(pos)] = root(*first);
      }
    }
  }

  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of_root(d, d);
  for (std::size_t pos = 0; pos < d; ++pos) {
    std::size_t r = root(pos);
    if (block_of_root[r] == d) {
      block_of_root[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[r]].push_back(pos);
  }
  if (blocks.size() == 1) return trivial_decomposition(p);

  std::vector<FactorKind> kinds;
  for (const auto& b : blocks) {
    std::size_t members = 0;
    if (b.size() == 2) {
      for (std::size_t x = 0; x < p.size(); ++x)
        if (!f.coordinate(p, b[0], x).is_zero() || !f.coordinate(p, b[1], x).is_zero()) ++members;
    }
    kinds.push_back(b.size() == 2 && members == 6 ? FactorKind::Hexagon : FactorKind::Residual);
  }
  return assemble(p, f, blocks, kinds);
}

}  // namespace sfano
