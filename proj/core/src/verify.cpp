#include "smoothfano/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "smoothfano/errors.hpp"
#include "smoothfano/splitting.hpp"

namespace sfano {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ReportOnly: return "report-only";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

const CheckRecord* BoundsReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string BoundsReport::to_text() const {
  std::ostringstream os;
  os << "REPORT d=" << d << " n=" << n << " k=" << k << " mode=" << to_string(mode) << " overall="
     << (overall ? "pass" : "fail") << '\n';
  for (const auto& c : checks) {
    os << "CHECK " << c.name << ' ' << to_string(c.status);
    if (!c.witness.empty()) os << ' ' << c.witness;
    os << '\n';
  }
  return os.str();
}

namespace {

// The smallest deficit at which the k-dependent bounds are asserted.
constexpr std::int64_t kAssertedDeficit = 3;

std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

// All vertices in the dual basis of one unimodular facet, as machine integers.
struct Table {
  std::vector<std::vector<long long>> c;  // [vertex][position]
  std::vector<long long> level;

  Table(const Polytope& p, const FacetFrame& f) {
    CoordinateTable t = coordinate_table(p, f);
    c.resize(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
      for (const auto& v : t.coords[x]) c[x].push_back(to_int64(v));
    level.assign(t.levels.begin(), t.levels.end());
  }
};

class Recorder {
 public:
  explicit Recorder(std::int64_t k) : k_(k) {}

  // Hard check: pass or fail.
  void hard(std::string name, bool ok, std::string witness) {
    records_.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)});
  }
  // Bound depending on k: asserted for k >= 3, reported otherwise.
  void bound(std::string name, bool ok, std::string witness) {
    if (k_ >= kAssertedDeficit) {
      hard(std::move(name), ok, std::move(witness));
      return;
    }
    records_.push_back({std::move(name), CheckStatus::ReportOnly, std::string(ok ? "holds" : "violated") + (witness.empty() ? "" : " " + witness)});
  }
  void not_applicable(std::string name, std::string witness) {
    records_.push_back({std::move(name), CheckStatus::NotApplicable, std::move(witness)});
  }

  std::vector<CheckRecord> take() {
    std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return std::move(records_);
  }

 private:
  std::int64_t k_;
  std::vector<CheckRecord> records_;
};

// First violation of a per-item predicate, or empty when all items pass.
struct Violation {
  bool found = false;
  std::string what;
  void set(std::string w) {
    if (!found) {
      found = true;
      what = std::move(w);
    }
  }
};

// minus and the level-0 characterization at one facet.
void facet_opposite_checks(const Polytope& p, const FacetFrame& f, const Table& t, const std::vector<std::size_t>& opp,
                           Violation& minus, Violation& level_zero) {
  const std::size_t d = f.dim();
  for (std::size_t z = 0; z < d; ++z) {
    if (t.c[opp[z]][z] != -1) {
      minus.set("facet=" + f.describe() + " z=" + std::to_string(f.vertex_indices[z]) + " opp=" +
                std::to_string(opp[z]) + " coord=" + std::to_string(t.c[opp[z]][z]));
    }
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (t.level[x] != 0) continue;
    bool some = false;
    for (std::size_t z = 0; z < d; ++z) {
      const bool is_opp = opp[z] == x;
      some = some || is_opp;
      const long long c = t.c[x][z];
      if (is_opp != (c < 0) || (c < 0) != (c == -1)) {
        level_zero.set("facet=" + f.describe() + " x=" + std::to_string(x) + " z=" + std::to_string(f.vertex_indices[z]) +
                 " coord=" + std::to_string(c) + " opp=" + std::to_string(opp[z]));
      }
    }
    if (!some) level_zero.set("facet=" + f.describe() + " level-0 vertex " + std::to_string(x) + " is opposite to nothing");
  }
}

std::string vertex_name(const FacetFrame& f, std::size_t pos) { return std::to_string(f.vertex_indices[pos]); }

}  // namespace

LevelMinusOneTypes classify_level_minus_one(const Polytope& p, const FacetFrame& f, const GoodnessPartition& g) {
  const Table t(p, f);
  LevelMinusOneTypes out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (t.level[x] != -1) continue;
    const auto& c = t.c[x];
    bool type_i = false;
    for (std::size_t z : g.C) type_i = type_i || (g.opp[z] == x && c[z] < 0);
    if (type_i) {
      out.type_i.push_back(x);
      continue;
    }
    bool some_b = false, b_ok = true, rest_ok = true;
    for (std::size_t z : g.B) {
      some_b = some_b || c[z] == -1;
      b_ok = b_ok && c[z] >= -1;
    }
    for (std::size_t z : g.A) rest_ok = rest_ok && c[z] >= 0;
    for (std::size_t z : g.C) rest_ok = rest_ok && c[z] >= 0;
    if (some_b && b_ok && rest_ok) {
      out.type_ii.push_back(x);
      continue;
    }
    bool type_iii = false;
    for (std::size_t z : g.A) type_iii = type_iii || p.vertex(x) == -p.vertex(f.vertex_indices[z]);
    if (!type_iii) throw UnclassifiableVertex(x);
    out.type_iii.push_back(x);
  }
  return out;
}

LevelMinusOneTypes classify_level_minus_one(const Polytope& p, const FacetFrame& f) {
  return classify_level_minus_one(p, f, goodness_partition(p, f));
}

BoundsReport verify_bounds(const Polytope& p, Mode mode) {
  BoundsReport report;
  report.d = p.dim();
  report.n = p.size();
  report.k = p.deficit();
  report.mode = mode;
  Recorder rec(report.k);

  const SmoothFanoCertificate cert = is_smooth_fano(p, mode);
  if (!cert.valid) {
    rec.hard("smooth_fano", false, to_string(cert.failure_kind) + " " + cert.witness);
    report.checks = rec.take();
    report.overall = false;
    return report;
  }

  const auto d = static_cast<std::int64_t>(p.dim());
  const auto n = static_cast<std::int64_t>(p.size());
  const std::int64_t k = report.k;
  const std::size_t dd = p.dim();

  const FacetFrame f = special_facet(p);
  report.special_facet = f.key();
  const GoodnessPartition g = goodness_partition(p, f);
  const Table t(p, f);
  const LevelsAndEta le = levels_and_eta(p, f);
  const EtaVector& eta = le.eta;
  auto in = [&](const std::vector<std::size_t>& set, std::size_t pos) { return g.contains(set, pos); };
  auto good = [&](std::size_t pos) { return g.role[pos] != Goodness::C; };

  rec.hard("casagrande", n <= 3 * d, "n=" + std::to_string(n) + " 3d=" + std::to_string(3 * d));

  // Level counts.
  const auto e1 = static_cast<std::int64_t>(eta.at(1));
  const auto e0 = static_cast<std::int64_t>(eta.at(0));
  const auto em1 = static_cast<std::int64_t>(eta.at(-1));
  const auto em2 = static_cast<std::int64_t>(eta.at_or_below(-2));
  rec.hard("card.eta1", e1 == d, "eta1=" + std::to_string(e1));
  rec.bound("card.eta0", d - k <= e0 && e0 <= d,
            "eta0=" + std::to_string(e0) + " range=[" + std::to_string(d - k) + "," + std::to_string(d) + "]");
  rec.bound("card.eta-1", d - 2 * k <= em1 && em1 <= d,
            "eta-1=" + std::to_string(em1) + " range=[" + std::to_string(d - 2 * k) + "," + std::to_string(d) + "]");
  rec.bound("card.eta<=-2", em2 <= 2 * k, "eta<=-2=" + std::to_string(em2) + " max=" + std::to_string(2 * k));
  rec.bound("card.min_level", eta.lowest_level() >= -k - 1,
            "lowest=" + std::to_string(eta.lowest_level()) + " min=" + std::to_string(-k - 1));
  rec.bound("sum_level", eta.weighted_sum() <= k,
            "level(s_P)=" + std::to_string(eta.weighted_sum()) + " max=" + std::to_string(k));

  // Opposite vertices at the special facet, and at every facet in full mode.
  {
    Violation minus, level_zero;
    facet_opposite_checks(p, f, t, g.opp, minus, level_zero);
    std::size_t facets = 1;
    if (mode == Mode::Full) {
      facets = 0;
      for (const auto& other : enumerate_facets(p)) {
        ++facets;
        facet_opposite_checks(p, other, Table(p, other), opposites(p, other), minus, level_zero);
      }
    }
    const std::string scope = "facets=" + std::to_string(facets);
    rec.hard("minus", !minus.found, minus.found ? minus.what : scope);
    rec.hard("nill_5.5", !level_zero.found, level_zero.found ? level_zero.what : scope);
  }

  // A vertex is in A exactly when its opposite vertex is not shared.
  {
    Violation v;
    for (std::size_t z = 0; z < dd; ++z) {
      if (!good(z)) continue;
      bool shared = false;
      for (std::size_t w = 0; w < dd; ++w) shared = shared || (w != z && g.opp[w] == g.opp[z]);
      if (shared == g.phi[z].has_value()) {
        v.set("z=" + vertex_name(f, z) + " shared_opp=" + (shared ? "yes" : "no") + " role=" + to_string(g.role[z]));
      }
    }
    rec.hard("one_vertex_at_0", !v.found, v.what);
  }

  const auto a = static_cast<std::int64_t>(g.A.size());
  const auto b = static_cast<std::int64_t>(g.B.size());
  const auto c = static_cast<std::int64_t>(g.C.size());
  rec.bound("abc_card", a >= d - 2 * k && b + c <= 2 * k && c <= k,
            "|A|=" + std::to_string(a) + " |B|=" + std::to_string(b) + " |C|=" + std::to_string(c));

  // Shape of opp(F,z) by role of z.
  {
    Violation structure, bounds;
    for (std::size_t z = 0; z < dd; ++z) {
      const auto& y = t.c[g.opp[z]];
      const std::string who = "z=" + vertex_name(f, z) + " opp=" + std::to_string(g.opp[z]);
      if (g.role[z] == Goodness::A) {
        const LatticeVector expect =
            p.vertex(f.vertex_indices[*g.phi[z]]) - p.vertex(f.vertex_indices[z]);
        if (p.vertex(g.opp[z]) != expect) structure.set(who + " expected " + expect.to_string());
        continue;
      }
      long long others = 0, sum_a = 0, sum_b = 0;
      bool signs = y[z] == -1;
      for (std::size_t u = 0; u < dd; ++u) {
        if (u == z) continue;
        others += y[u];
        if (g.role[u] == Goodness::A) sum_a += y[u];
        if (g.role[u] == Goodness::B) sum_b += y[u];
        if (g.role[z] == Goodness::B) signs = signs && (g.role[u] == Goodness::B ? y[u] >= -1 : y[u] >= 0);
      }
      if (g.role[z] == Goodness::B) {
        if (!signs || others != 1) structure.set(who + " coefficient_sum=" + std::to_string(others));
        if (sum_a > k + 1 || sum_b < -k) {
          bounds.set(who + " sum_A=" + std::to_string(sum_a) + " sum_B=" + std::to_string(sum_b));
        }
      } else if (others > 0) {
        structure.set(who + " coefficient_sum=" + std::to_string(others));
      }
    }
    rec.hard("characterization_opp", !structure.found, structure.what);
    rec.bound("characterization_opp.bounds", !bounds.found, bounds.what);
  }

  // Normals of neighbouring facets.
  {
    Violation star, update;
    for (std::size_t z = 0; z < dd; ++z) {
      const PivotResult next = pivot(p, f, z);
      const LatticeVector& un = next.frame.outer_normal;
      const LatticeVector uz = f.dual_basis.row_vector(z);
      const Integer level_z = dot(un, p.vertex(f.vertex_indices[z]));
      if (un != f.outer_normal + (level_z - 1) * uz) update.set("z=" + vertex_name(f, z) + " normal=" + un.to_string());
      if (good(z) && un != f.outer_normal - uz) star.set("z=" + vertex_name(f, z) + " normal=" + un.to_string());
      for (std::size_t x = 0; x < p.size(); ++x) {
        const long long lhs = t.level[x] - 1;
        const bool on_neighbour = x == next.opposite || (f.position_of(x) && x != f.vertex_indices[z]);
        if (lhs > t.c[x][z] || (lhs == t.c[x][z] && !on_neighbour)) {
          update.set("z=" + vertex_name(f, z) + " x=" + std::to_string(x) + " level-1=" + std::to_string(lhs) +
                     " coord=" + std::to_string(t.c[x][z]));
        }
      }
    }
    rec.hard("cor_star", !star.found, star.what);
    rec.hard("obro_1_2", !update.found, update.what);
  }

  {
    Violation v;
    for (std::size_t z = 0; z < dd; ++z)
      for (std::size_t x = 0; x < p.size(); ++x)
        if (x != g.opp[z] && t.c[x][z] < 0 && t.level[x] >= t.level[g.opp[z]])
          v.set("z=" + vertex_name(f, z) + " x=" + std::to_string(x) + " level=" + std::to_string(t.level[x]) +
                " opp_level=" + std::to_string(t.level[g.opp[z]]));
    rec.hard("opposite_is_shortest", !v.found, v.what);
  }

  {
    Violation v;
    for (std::size_t w : g.C) {
      std::vector<std::size_t> hits;
      for (std::size_t x = 0; x < p.size(); ++x)
        if (t.level[x] == -1 && t.c[x][w] < 0) hits.push_back(x);
      if (hits.size() > 1 || (hits.size() == 1 && hits[0] != g.opp[w]))
        v.set("w=" + vertex_name(f, w) + " vertices=" + join(hits) + " opp=" + std::to_string(g.opp[w]));
    }
    rec.hard("bad_level_minus_one", !v.found, v.what);
  }

  {
    Violation v;
    for (std::size_t z = 0; z < dd; ++z) {
      if (!good(z)) continue;
      const auto& y = t.c[g.opp[z]];
      for (std::size_t zb = 0; zb < dd; ++zb) {
        std::vector<std::size_t> hits;
        for (std::size_t x = 0; x < p.size(); ++x)
          if (t.level[x] == -1 && t.c[x][z] == -1 && t.c[x][zb] < y[zb]) hits.push_back(x);
        if (hits.size() > 1)
          v.set("z=" + vertex_name(f, z) + " zbar=" + vertex_name(f, zb) + " vertices=" + join(hits));
      }
    }
    rec.hard("no_two_verts", !v.found, v.what);
  }

  {
    Violation v;
    for (std::size_t x = 0; x < p.size() && !v.found; ++x) {
      for (std::size_t xb = 0; xb < p.size(); ++xb) {
        if (t.level[x] >= t.level[xb]) continue;
        bool some = false;
        for (std::size_t z = 0; z < dd && !some; ++z) some = t.c[x][z] < t.c[xb][z];
        if (!some) v.set("x=" + std::to_string(x) + " xbar=" + std::to_string(xb));
      }
    }
    rec.hard("at_least_one", !v.found, v.what);
  }

  {
    Violation v;
    for (std::size_t z = 0; z < dd; ++z) {
      for (std::size_t w = z + 1; w < dd; ++w) {
        if (!good(z) || !good(w) || g.opp[z] == g.opp[w]) continue;
        for (std::size_t x = 0; x < p.size(); ++x)
          if (t.level[x] == -1 && t.c[x][z] == -1 && t.c[x][w] == -1)
            v.set("v=" + vertex_name(f, z) + " w=" + vertex_name(f, w) + " x=" + std::to_string(x));
      }
    }
    rec.hard("phi_no_two_negative", !v.found, v.what);
  }

  try {
    const LevelMinusOneTypes types = classify_level_minus_one(p, f, g);
    const auto ti = static_cast<std::int64_t>(types.type_i.size());
    const auto tii = static_cast<std::int64_t>(types.type_ii.size());
    const auto tiii = static_cast<std::int64_t>(types.type_iii.size());
    rec.hard("number_of_-e_i.types", true,
             "i=" + std::to_string(ti) + " ii=" + std::to_string(tii) + " iii=" + std::to_string(tiii));
    rec.bound("number_of_-e_i", ti <= c && tii <= (k + 1) * b && tiii >= em1 - c - (k + 1) * b,
              "i=" + std::to_string(ti) + "<=" + std::to_string(c) + " ii=" + std::to_string(tii) +
                  "<=" + std::to_string((k + 1) * b) + " iii=" + std::to_string(tiii) +
                  ">=" + std::to_string(em1 - c - (k + 1) * b));
  } catch (const UnclassifiableVertex& e) {
    rec.hard("number_of_-e_i.types", false, "x=" + std::to_string(e.index()));
    rec.bound("number_of_-e_i", false, "unclassified x=" + std::to_string(e.index()));
  }

  {
    Violation pp, delta;
    std::map<std::size_t, std::vector<std::size_t>> preimages;
    for (std::size_t v : g.A_prime) {
      const std::size_t w = *g.phi[v];
      preimages[w].push_back(f.vertex_indices[v]);
      if (g.phi[w] && *g.phi[w] != v) pp.set("v=" + vertex_name(f, v) + " phi(phi(v))=" + vertex_name(f, *g.phi[w]));
    }
    for (const auto& [z, vs] : preimages)
      if (vs.size() > 1) delta.set("z=" + vertex_name(f, z) + " preimages=" + join(vs));
    rec.hard("phiphi", !pp.found, pp.what);
    rec.hard("bound_on_delta", !delta.found, delta.what);
  }

  const auto abar = static_cast<std::int64_t>(g.A_bar.size());
  const auto aprime = static_cast<std::int64_t>(g.A_prime.size());
  rec.bound("chuck_norris_vertices", abar >= 2 * aprime - d - 2 * k,
            "|Abar|=" + std::to_string(abar) + " |A'|=" + std::to_string(aprime) +
                " min=" + std::to_string(2 * aprime - d - 2 * k));

  {
    std::size_t worst = 0;
    std::size_t worst_x = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (t.level[x] > -1) continue;
      std::size_t count = 0;
      for (std::size_t z : g.A_bar) count += t.c[x][z] != 0;
      if (count > worst) {
        worst = count;
        worst_x = x;
      }
    }
    rec.bound("chuck_norris_times_2", static_cast<std::int64_t>(worst) <= 2 * k + 2,
              "max=" + std::to_string(worst) + " at x=" + std::to_string(worst_x) +
                  " bound=" + std::to_string(2 * k + 2));
  }

  {
    Violation v;
    for (std::size_t z = 0; z < dd; ++z)
      if (g.gamma[z] < 0) v.set("z=" + vertex_name(f, z) + " gamma=" + g.gamma[z].str());
    rec.hard("gamma_nonneg", !v.found, v.what);
  }

  {
    Violation v;
    for (std::size_t z : g.A_bar) {
      const std::size_t w = *g.phi[z];
      if (!in(g.A_bar, w) || g.phi[w] != z) v.set("v=" + vertex_name(f, z) + " phi(v)=" + vertex_name(f, w));
    }
    rec.hard("abar_closed", !v.found, v.what);
  }

  {
    const std::int64_t threshold = hexagon_threshold(k);
    if (auto guaranteed = guaranteed_hexagons(d, k)) {
      std::string witness;
      bool ok = true;
      try {
        const Decomposition dec = hexagon_split(p, mode);
        ok = static_cast<std::int64_t>(dec.hexagon_count) >= *guaranteed;
        witness = "hexagons=" + std::to_string(dec.hexagon_count) + " guaranteed=" + std::to_string(*guaranteed);
      } catch (const Error& e) {
        ok = false;
        witness = e.what();
      }
      rec.hard("hexagon_bound", ok, witness);
    } else {
      rec.not_applicable("hexagon_bound",
                         "d=" + std::to_string(d) + " < 15k^2+37k+2=" + std::to_string(threshold));
    }
  }

  report.checks = rec.take();
  report.overall = std::none_of(report.checks.begin(), report.checks.end(),
                                [](const CheckRecord& r) { return r.status == CheckStatus::Fail; });
  return report;
}

}  // namespace sfano
