#include "smoothfano/polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "smoothfano/errors.hpp"

namespace sfano {

std::string to_string(Mode mode) { return mode == Mode::Full ? "full" : "local"; }

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::None: return "None";
    case FailureKind::NotFullDim: return "NotFullDim";
    case FailureKind::OriginNotInterior: return "OriginNotInterior";
    case FailureKind::FacetNotSimplex: return "FacetNotSimplex";
    case FailureKind::FacetNotUnimodular: return "FacetNotUnimodular";
    case FailureKind::DuplicateVertex: return "DuplicateVertex";
    case FailureKind::NotAVertex: return "NotAVertex";
  }
  return "?";
}

Polytope Polytope::make(std::vector<LatticeVector> rows) {
  if (rows.empty()) throw InvalidArgument("a polytope needs at least one row");
  const std::size_t d = rows.front().size();
  if (d == 0) throw DimensionError("rows must have length >= 1");
  auto data = std::make_shared<Data>();
  data->dim = d;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) {
      throw DimensionError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                           ", expected " + std::to_string(d));
    }
    auto [it, inserted] = data->index.emplace(rows[i], i);
    if (!inserted) throw DuplicateVertex(it->second, i);
  }

  OrthogonalComplement oc(d);
  std::size_t affine_rank = 0;
  for (std::size_t i = 1; i < rows.size() && affine_rank < d; ++i)
    if (oc.add(rows[i] - rows[0])) ++affine_rank;
  if (affine_rank < d) {
    throw NotFullDim("affine hull has dimension " + std::to_string(affine_rank) + " < " + std::to_string(d));
  }

  data->supports.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!rows[i][j].is_zero()) data->supports[i].push_back(j);
  data->vertices = std::move(rows);
  return Polytope(std::move(data));
}

Polytope make_polytope(std::vector<LatticeVector> rows) { return Polytope::make(std::move(rows)); }

std::optional<std::size_t> Polytope::find(const LatticeVector& x) const {
  auto it = data_->index.find(x);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Integer Polytope::pair(std::span<const Integer> row, std::size_t i) const {
  const auto& v = data_->vertices[i];
  Integer s = 0;
  for (std::size_t j : data_->supports[i])
    if (!row[j].is_zero()) s += row[j] * v[j];
  return s;
}

std::optional<std::size_t> FacetFrame::position_of(std::size_t vertex_index) const {
  auto it = std::find(vertex_indices.begin(), vertex_indices.end(), vertex_index);
  if (it == vertex_indices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertex_indices.begin());
}

std::vector<std::size_t> FacetFrame::key() const {
  std::vector<std::size_t> k = vertex_indices;
  std::sort(k.begin(), k.end());
  return k;
}

std::string FacetFrame::describe() const {
  std::ostringstream os;
  os << '{';
  auto k = key();
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << '}';
  return os.str();
}

namespace {

LatticeVector sum_rows(const IntMatrix& m) {
  LatticeVector s(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!row[c].is_zero()) s[c] += row[c];
  }
  return s;
}

}  // namespace

FacetFrame make_frame(const Polytope& p, std::vector<std::size_t> indices) {
  const std::size_t d = p.dim();
  if (indices.size() != d) throw DimensionError("a facet frame needs exactly d vertices");
  IntMatrix vm(d, d);
  for (std::size_t r = 0; r < d; ++r) vm.set_row(r, p.vertex(indices[r]));
  Adjugate adj = adjugate(vm);
  if (adj.determinant.is_zero()) {
    FacetFrame tmp;
    tmp.vertex_indices = indices;
    throw OriginNotInterior("hyperplane through " + tmp.describe() + " contains the origin");
  }
  FacetFrame f;
  f.vertex_indices = std::move(indices);
  f.denominator = abs(adj.determinant);
  const bool negative = adj.determinant < 0;
  // dual_basis = sign(det) * adj^T, so that dual_basis * V^T = |det| * I.
  f.dual_basis = IntMatrix(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) f.dual_basis(r, c) = negative ? -adj.matrix(c, r) : adj.matrix(c, r);
  f.outer_normal = sum_rows(f.dual_basis);
  return f;
}

FacetFrame initial_facet(const Polytope& p) {
  const std::size_t d = p.dim();
  const std::size_t n = p.size();

  // Supporting hyperplane <a, x> <= c, starting with the first coordinate.
  std::vector<Integer> a(d);
  a[0] = 1;
  Integer c = p.vertex(0)[0];
  for (std::size_t i = 1; i < n; ++i) c = std::max(c, Integer(p.vertex(i)[0]));

  std::vector<Integer> gap(n);  // <a, y> - c <= 0
  std::vector<std::size_t> touching;
  for (std::size_t i = 0; i < n; ++i) {
    gap[i] = p.vertex(i)[0] - c;
    if (gap[i].is_zero()) touching.push_back(i);
  }
  const std::size_t anchor = touching.front();
  OrthogonalComplement complement(d);
  for (std::size_t i : touching)
    if (i != anchor) complement.add(p.vertex(i) - p.vertex(anchor));

  std::vector<Integer> h(n);
  while (complement.dimension() > 1) {
    const std::vector<Integer>* direction = nullptr;
    for (const auto& b : complement.basis())
      if (!parallel(a, b)) {
        direction = &b;
        break;
      }
    if (direction == nullptr) throw NotFullDim("gift wrapping found no rotation direction");
    std::vector<Integer> b = *direction;
    Integer beta = p.pair(b, anchor);

    bool any_positive = false, any_negative = false;
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = p.pair(b, i) - beta;
      any_positive = any_positive || h[i] > 0;
      any_negative = any_negative || h[i] < 0;
    }
    if (!any_positive) {
      if (!any_negative) throw NotFullDim("all vertices lie in a hyperplane");
      for (auto& x : b) x = -x;
      beta = -beta;
      for (auto& x : h) x = -x;
    }

    // Rotate a -> a + lambda b until the first vertex is hit.
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < n; ++i) {
      if (h[i] <= 0) continue;
      Rational r(Integer(-gap[i]), h[i]);
      if (!lambda || r < *lambda) lambda = r;
    }
    const Integer num = numerator(*lambda);
    const Integer den = denominator(*lambda);
    for (std::size_t j = 0; j < d; ++j) a[j] = den * a[j] + num * b[j];
    c = den * c + num * beta;
    for (std::size_t i = 0; i < n; ++i) gap[i] = den * gap[i] + num * h[i];

    Integer g = content(a);
    g = boost::multiprecision::gcd(g, c);
    if (g > 1) {
      for (auto& x : a) x /= g;
      c /= g;
      for (auto& x : gap) x /= g;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!gap[i].is_zero()) continue;
      if (std::find(touching.begin(), touching.end(), i) != touching.end()) continue;
      touching.push_back(i);
      complement.add(p.vertex(i) - p.vertex(anchor));
    }
  }

  std::sort(touching.begin(), touching.end());
  if (touching.size() > d) {
    std::ostringstream os;
    os << touching.size() << " vertices on one facet hyperplane:";
    for (std::size_t i : touching) os << ' ' << i;
    throw FacetNotSimplex(os.str());
  }
  if (c <= 0) throw OriginNotInterior("a facet hyperplane has right-hand side " + c.str() + " <= 0");
  return make_frame(p, std::move(touching));
}

std::size_t opposite_vertex(const Polytope& p, const FacetFrame& f, std::size_t pos) {
  auto row = f.dual_basis.row(pos);
  std::optional<std::size_t> best;
  Rational best_ratio;
  bool tie = false;
  std::size_t tied_with = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Integer coord = p.pair(row, i);
    if (coord >= 0) continue;
    // (1 - level) / (-coord), both scaled by the denominator.
    Rational ratio(f.denominator - f.level(p, i), Integer(-coord));
    if (!best || ratio < best_ratio) {
      best = i;
      best_ratio = ratio;
      tie = false;
    } else if (ratio == best_ratio) {
      tie = true;
      tied_with = i;
    }
  }
  if (!best) {
    throw OriginNotInterior("no vertex has a negative coordinate at position " + std::to_string(pos) +
                            " of facet " + f.describe());
  }
  if (tie) {
    throw FacetNotSimplex("vertices " + std::to_string(*best) + " and " + std::to_string(tied_with) +
                          " both complete the ridge of facet " + f.describe() + " opposite position " +
                          std::to_string(pos));
  }
  return *best;
}

PivotResult pivot(const Polytope& p, const FacetFrame& f, std::size_t pos) {
  const std::size_t x = opposite_vertex(p, f, pos);
  std::vector<std::size_t> indices = f.vertex_indices;
  indices[pos] = x;

  if (f.unimodular()) {
    const std::size_t d = f.dim();
    std::vector<Integer> c(d);
    Integer level = 0;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = f.coordinate(p, i, x);
      level += c[i];
    }
    const Integer cr = c[pos];
    if (cr == 1 || cr == -1) {
      FacetFrame g;
      g.vertex_indices = std::move(indices);
      g.dual_basis = f.dual_basis;
      // u'_pos = u_pos / c_pos; u'_i = u_i - c_i u'_pos.
      auto pivot_row = g.dual_basis.row(pos);
      if (cr == -1)
        for (auto& e : pivot_row) e = -e;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == pos || c[i].is_zero()) continue;
        auto r = g.dual_basis.row(i);
        for (std::size_t j = 0; j < d; ++j)
          if (!pivot_row[j].is_zero()) r[j] -= c[i] * pivot_row[j];
      }
      // u_F' = u_F - u_pos + (1 - (level - c_pos)) u'_pos
      g.outer_normal = f.outer_normal;
      const Integer scale = 1 - (level - cr);
      auto old_row = f.dual_basis.row(pos);
      for (std::size_t j = 0; j < d; ++j) g.outer_normal[j] += scale * pivot_row[j] - old_row[j];
      return {std::move(g), x};
    }
  }
  return {make_frame(p, std::move(indices)), x};
}

std::vector<FacetFrame> enumerate_facets(const Polytope& p) {
  std::vector<FacetFrame> facets;
  std::set<std::vector<std::size_t>> seen;
  std::deque<FacetFrame> queue;

  FacetFrame start = initial_facet(p);
  seen.insert(start.key());
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    FacetFrame f = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos < f.dim(); ++pos) {
      PivotResult next = pivot(p, f, pos);
      if (seen.insert(next.frame.key()).second) queue.push_back(std::move(next.frame));
    }
    facets.push_back(std::move(f));
  }

  std::vector<bool> incident(p.size(), false);
  for (const auto& f : facets)
    for (std::size_t i : f.vertex_indices) incident[i] = true;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!incident[i]) throw NotAVertex(i);
  return facets;
}

namespace {

SmoothFanoCertificate fail(FailureKind kind, std::string witness, Mode mode) {
  SmoothFanoCertificate cert;
  cert.valid = false;
  cert.failure_kind = kind;
  cert.witness = std::move(witness);
  cert.mode = mode;
  return cert;
}

std::optional<SmoothFanoCertificate> check_unimodular(const FacetFrame& f, Mode mode) {
  if (f.unimodular()) return std::nullopt;
  auto cert = fail(FailureKind::FacetNotUnimodular, "facet " + f.describe() + " |det|=" + f.denominator.str(), mode);
  cert.bad_facet = f.key();
  cert.bad_determinant = f.denominator;
  return cert;
}

}  // namespace

SmoothFanoCertificate is_smooth_fano(const Polytope& p, Mode mode) {
  SmoothFanoCertificate cert;
  cert.mode = mode;
  try {
    if (mode == Mode::Full) {
      auto facets = enumerate_facets(p);
      for (const auto& f : facets)
        if (auto bad = check_unimodular(f, mode)) return *bad;
      cert.facets_checked = facets.size();
    } else {
      FacetFrame start = initial_facet(p);
      if (auto bad = check_unimodular(start, mode)) return *bad;
      for (std::size_t pos = 0; pos < start.dim(); ++pos) {
        PivotResult next = pivot(p, start, pos);
        if (auto bad = check_unimodular(next.frame, mode)) return *bad;
      }
      cert.facets_checked = start.dim() + 1;
    }
  } catch (const NotFullDim& e) {
    return fail(FailureKind::NotFullDim, e.what(), mode);
  } catch (const OriginNotInterior& e) {
    return fail(FailureKind::OriginNotInterior, e.what(), mode);
  } catch (const FacetNotSimplex& e) {
    return fail(FailureKind::FacetNotSimplex, e.what(), mode);
  } catch (const NotAVertex& e) {
    return fail(FailureKind::NotAVertex, e.what(), mode);
  }
  cert.valid = true;
  return cert;
}

SmoothFanoCertificate is_smooth_fano(std::vector<LatticeVector> rows, Mode mode) {
  try {
    return is_smooth_fano(Polytope::make(std::move(rows)), mode);
  } catch (const DuplicateVertex& e) {
    return fail(FailureKind::DuplicateVertex, e.what(), mode);
  } catch (const NotFullDim& e) {
    return fail(FailureKind::NotFullDim, e.what(), mode);
  }
}

LatticeVector vertex_sum(const Polytope& p) {
  LatticeVector s(p.dim());
  for (const auto& v : p.vertices()) s += v;
  return s;
}

std::vector<Integer> vertex_sum_coordinates(const Polytope& p, const FacetFrame& f) {
  if (!f.unimodular()) throw FacetNotUnimodular(f.describe(), f.denominator);
  const LatticeVector s = vertex_sum(p);
  std::vector<Integer> gamma(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) gamma[i] = dot(f.dual_basis.row(i), s.coords());
  return gamma;
}

FacetFrame special_facet(const Polytope& p) { return special_facet(p, initial_facet(p)); }

FacetFrame special_facet(const Polytope& p, FacetFrame f) {
  // <u_F, s_P> strictly increases with every step, so the walk terminates.
  for (;;) {
    std::vector<Integer> gamma = vertex_sum_coordinates(p, f);
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < gamma.size(); ++i)
      if (gamma[i] < 0 && (!worst || gamma[i] < gamma[*worst])) worst = i;
    if (!worst) return f;
    f = pivot(p, f, *worst).frame;
  }
}

std::int64_t picard_number(const Polytope& p, Mode mode) {
  require_smooth_fano(p, mode);
  return static_cast<std::int64_t>(p.size()) - static_cast<std::int64_t>(p.dim());
}

}  // namespace sfano

namespace sfano {

void require_smooth_fano(const Polytope& p, Mode mode) {
  SmoothFanoCertificate cert = is_smooth_fano(p, mode);
  switch (cert.failure_kind) {
    case FailureKind::None: return;
    case FailureKind::NotFullDim: throw NotFullDim(cert.witness);
    case FailureKind::OriginNotInterior: throw OriginNotInterior(cert.witness);
    case FailureKind::FacetNotSimplex: throw FacetNotSimplex(cert.witness);
    case FailureKind::FacetNotUnimodular: {
      FacetFrame f;
      f.vertex_indices = cert.bad_facet;
      throw FacetNotUnimodular(f.describe(), cert.bad_determinant);
    }
    case FailureKind::DuplicateVertex:
    case FailureKind::NotAVertex: throw Error(to_string(cert.failure_kind) + ": " + cert.witness);
  }
}

}  // namespace sfano
