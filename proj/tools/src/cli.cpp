#include "smoothfano_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "smoothfano/smoothfano.hpp"

namespace sfano::cli {

namespace {

namespace fs = std::filesystem;

// Dimension above which the automatic mode switches to local validation.
constexpr std::size_t kAutoLocalAbove = 12;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  RunOptions options;

  std::string paint(const std::string& word, bool good) const {
    if (!options.color) return word;
    return (good ? "\x1b[32m" : "\x1b[31m") + word + "\x1b[0m";
  }
};

Polytope load(const std::string& path) {
  FanoFile file;
  try {
    file = read_fano_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.what());
  } catch (const Error&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
  if (file.rows.empty()) throw InputError(path + ": no vertices");
  return Polytope::make(std::move(file.rows));
}

void store(const std::string& path, const Polytope& p, Context& ctx) {
  if (path.empty() || path == "-") {
    ctx.out << serialize_fano(p);
    return;
  }
  try {
    write_fano_file(path, p);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

Mode resolve_mode(const std::string& requested, const Polytope& p, Context& ctx) {
  if (requested == "full") return Mode::Full;
  if (requested == "local") return Mode::Local;
  if (p.dim() > kAutoLocalAbove) {
    ctx.err << "warning: d=" << p.dim() << " > " << kAutoLocalAbove
            << ", using local validation (pass --mode full to force)\n";
    return Mode::Local;
  }
  return Mode::Full;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::vector<std::size_t> frame_vertices(const FacetFrame& f, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> out;
  for (std::size_t pos : positions) out.push_back(f.vertex_indices[pos]);
  std::sort(out.begin(), out.end());
  return out;
}

// gen ------------------------------------------------------------------------

struct GenArgs {
  std::string name;
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
  std::string from;
  std::size_t power = 1;
  std::string output;
};

int cmd_gen(const GenArgs& a, Context& ctx) {
  std::optional<Polytope> source;
  if (!a.from.empty()) source = load(a.from);
  Polytope p = generate(a.name, a.params, a.seed, source ? &*source : nullptr);
  if (a.power > 1) p = direct_power(p, a.power);
  store(a.output, p, ctx);
  return kOk;
}

// sum ------------------------------------------------------------------------

struct SumArgs {
  std::vector<std::string> files;
  std::string output;
};

int cmd_sum(const SumArgs& a, Context& ctx) {
  std::vector<Polytope> parts;
  for (const auto& f : a.files) parts.push_back(load(f));
  store(a.output, direct_sum(parts), ctx);
  return kOk;
}

// check ----------------------------------------------------------------------

struct FileArgs {
  std::string file;
  std::string mode = "auto";
};

int cmd_check(const FileArgs& a, Context& ctx) {
  FanoFile file;
  try {
    file = read_fano_file(a.file);
  } catch (const ParseError& e) {
    throw InputError(a.file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  } catch (const Error&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
  if (file.rows.empty()) throw InputError(a.file + ": no vertices");
  Mode mode = Mode::Full;
  if (a.mode == "local" || (a.mode == "auto" && file.dim > kAutoLocalAbove)) {
    if (a.mode == "auto") {
      ctx.err << "warning: d=" << file.dim << " > " << kAutoLocalAbove
              << ", using local validation (pass --mode full to force)\n";
    }
    mode = Mode::Local;
  }
  const std::size_t n = file.rows.size();
  const SmoothFanoCertificate cert = is_smooth_fano(std::move(file.rows), mode);
  ctx.out << "valid=" << ctx.paint(cert.valid ? "true" : "false", cert.valid) << '\n'
          << "mode=" << to_string(cert.mode) << '\n'
          << "d=" << file.dim << " n=" << n << '\n'
          << "facets_checked=" << cert.facets_checked << '\n';
  if (!cert.valid) {
    ctx.out << "failure=" << to_string(cert.failure_kind) << '\n' << "witness=" << cert.witness << '\n';
    return kNegative;
  }
  ctx.out << "picard_number=" << static_cast<std::int64_t>(n) - static_cast<std::int64_t>(file.dim) << '\n';
  return kOk;
}

// analyze --------------------------------------------------------------------

int cmd_analyze(const FileArgs& a, Context& ctx) {
  const Polytope p = load(a.file);
  const Mode mode = resolve_mode(a.mode, p, ctx);
  require_smooth_fano(p, mode);
  const FacetFrame f = special_facet(p);
  const GoodnessPartition g = goodness_partition(p, f);
  const LevelsAndEta le = levels_and_eta(p, f);
  std::vector<std::size_t> gamma_support;
  for (std::size_t pos = 0; pos < g.gamma.size(); ++pos)
    if (!g.gamma[pos].is_zero()) gamma_support.push_back(f.vertex_indices[pos]);
  std::sort(gamma_support.begin(), gamma_support.end());

  ctx.out << "d=" << p.dim() << '\n'
          << "n=" << p.size() << '\n'
          << "k=" << p.deficit() << '\n'
          << "picard_number=" << static_cast<std::int64_t>(p.size()) - static_cast<std::int64_t>(p.dim()) << '\n'
          << "mode=" << to_string(mode) << '\n'
          << "special_facet=" << f.describe() << '\n'
          << "eta=" << le.eta.to_string() << '\n'
          << "level(s_P)=" << le.eta.weighted_sum() << '\n'
          << "|A|=" << g.A.size() << '\n'
          << "|B|=" << g.B.size() << '\n'
          << "|C|=" << g.C.size() << '\n'
          << "|A'|=" << g.A_prime.size() << '\n'
          << "|Abar|=" << g.A_bar.size() << '\n'
          << "A=" << join(frame_vertices(f, g.A)) << '\n'
          << "B=" << join(frame_vertices(f, g.B)) << '\n'
          << "C=" << join(frame_vertices(f, g.C)) << '\n'
          << "gamma_support=" << join(gamma_support) << '\n';
  return kOk;
}

// split ----------------------------------------------------------------------

struct SplitArgs {
  std::string file;
  std::string mode = "auto";
  bool hexagons_only = false;
  std::string output_dir;
};

void write_manifest(const fs::path& dir, const std::string& prefix, const Decomposition& dec,
                    const std::string& manifest_name) {
  fs::create_directories(dir);
  std::ostringstream manifest;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const Factor& factor = dec.factors[i];
    const std::string name = prefix + std::to_string(i) + ".fano";
    write_fano_file(dir / name, factor.polytope);
    manifest << "FACTOR " << i << " dim=" << factor.polytope.dim() << " n=" << factor.polytope.size()
             << " file=" << name << " kind=" << to_string(factor.kind) << '\n';
  }
  manifest << "BASIS\n";
  for (std::size_t r = 0; r < dec.change_of_basis.rows(); ++r) {
    auto row = dec.change_of_basis.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) manifest << (c ? " " : "") << row[c];
    manifest << '\n';
  }
  std::ofstream out(dir / manifest_name, std::ios::binary | std::ios::trunc);
  out << manifest.str();
  if (!out) throw InputError("cannot write " + (dir / manifest_name).string());
}

int cmd_split(const SplitArgs& a, Context& ctx) {
  const Polytope p = load(a.file);
  const Mode mode = resolve_mode(a.mode, p, ctx);
  const Decomposition dec = hexagon_split(p, mode);
  const auto d = static_cast<std::int64_t>(p.dim());
  const std::int64_t k = p.deficit();

  ctx.out << "d=" << d << " n=" << p.size() << " k=" << k << '\n';
  ctx.out << "hexagon_count=" << dec.hexagon_count << '\n';
  if (auto guaranteed = guaranteed_hexagons(d, k)) ctx.out << "f(d,k)=" << *guaranteed << '\n';
  for (const auto& factor : dec.factors) {
    if (factor.kind == FactorKind::Residual)
      ctx.out << "residual d=" << factor.polytope.dim() << " n=" << factor.polytope.size() << '\n';
  }
  if (!a.output_dir.empty()) write_manifest(a.output_dir, "factor_", dec, "manifest.txt");

  if (!a.hexagons_only) {
    const Decomposition finest = finest_split(p, mode);
    ctx.out << "finest_factors=" << finest.factors.size() << '\n';
    for (std::size_t i = 0; i < finest.factors.size(); ++i) {
      const Factor& factor = finest.factors[i];
      ctx.out << "finest " << i << " dim=" << factor.polytope.dim() << " n=" << factor.polytope.size()
              << " kind=" << to_string(factor.kind) << '\n';
    }
    if (!a.output_dir.empty()) write_manifest(fs::path(a.output_dir) / "finest", "factor_", finest, "manifest.txt");
  }
  return kOk;
}

// nf / eq --------------------------------------------------------------------

struct NfArgs {
  std::string file;
  std::size_t budget = kDefaultNormalFormBudget;
};

int cmd_nf(const NfArgs& a, Context& ctx) {
  const NormalForm nf = normal_form(load(a.file), a.budget);
  ctx.out << nf.digest << '\n';
  return kOk;
}

struct EqArgs {
  std::string first, second;
  std::size_t budget = kDefaultNormalFormBudget;
};

int cmd_eq(const EqArgs& a, Context& ctx) {
  const bool same = are_equivalent(load(a.first), load(a.second), a.budget);
  ctx.out << (same ? "equivalent" : "not equivalent") << '\n';
  return same ? kOk : kNegative;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> files;
  std::string mode = "auto";
  bool json = false;
  std::size_t jobs = 0;
};

struct VerifyOutcome {
  std::optional<BoundsReport> report;
  std::string warning;
  std::string error;
};

VerifyOutcome verify_one(const std::string& path, const std::string& requested) {
  VerifyOutcome outcome;
  try {
    const Polytope p = load(path);
    std::ostringstream warnings;
    Context quiet{warnings, warnings, {}};
    const Mode mode = resolve_mode(requested, p, quiet);
    outcome.warning = warnings.str();
    outcome.report = verify_bounds(p, mode);
  } catch (const std::exception& e) {
    outcome.error = e.what();
  }
  return outcome;
}

int cmd_verify(const VerifyArgs& a, Context& ctx) {
  std::vector<VerifyOutcome> outcomes(a.files.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(a.files.size(), a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency())));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < a.files.size(); i = next++) outcomes[i] = verify_one(a.files[i], a.mode);
    });
  }
  for (auto& t : pool) t.join();

  bool any_fail = false, any_error = false;
  std::vector<std::pair<std::string, BoundsReport>> reports;
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    const auto& o = outcomes[i];
    ctx.err << o.warning;
    if (!o.report) {
      ctx.err << "error: " << o.error << '\n';
      any_error = true;
      continue;
    }
    any_fail = any_fail || !o.report->overall;
    if (a.json) {
      reports.emplace_back(a.files[i], *o.report);
      continue;
    }
    ctx.out << "FILE " << a.files[i] << '\n';
    std::istringstream lines(o.report->to_text());
    for (std::string line; std::getline(lines, line);) {
      if (ctx.options.color) {
        for (const char* word : {" pass", " fail"}) {
          if (auto at = line.find(word); at != std::string::npos && line.rfind("CHECK", 0) == 0) {
            const std::string w(word + 1);
            line.replace(at + 1, w.size(), ctx.paint(w, w == "pass"));
            break;
          }
        }
      }
      ctx.out << line << '\n';
    }
  }
  if (a.json) ctx.out << reports_json(reports);
  if (any_error) return kInputError;
  return any_fail ? kNegative : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options) {
  Context ctx{out, err, options};
  CLI::App app{"Smooth Fano polytopes: validation, analysis, splitting and bound checks", "fano"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fano 0.1.0");

  const std::vector<std::string> modes = {"auto", "full", "local"};
  std::function<int()> action;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a named polytope");
  gen_cmd->add_option("name", gen.name, "hexagon, pentagon, simplex, example4d, bundleB, random_image")
      ->required()
      ->check(CLI::IsMember(generator_names()));
  gen_cmd->add_option("params", gen.params, "Integer parameters (simplex <d>, bundleB <m>)");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random_image");
  gen_cmd->add_option("--from", gen.from, "Source polytope for random_image");
  gen_cmd->add_option("--power", gen.power, "Direct sum of this many copies")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->callback([&] { action = [&] { return cmd_gen(gen, ctx); }; });

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "Direct sum of polytope files");
  sum_cmd->add_option("files", sum.files, "Summands in order")->required()->check(CLI::ExistingFile);
  sum_cmd->add_option("-o,--output", sum.output, "Output file (default stdout)");
  sum_cmd->callback([&] { action = [&] { return cmd_sum(sum, ctx); }; });

  FileArgs check;
  auto* check_cmd = app.add_subcommand("check", "Smooth Fano certificate; exit 0 valid, 1 invalid, 2 bad input");
  check_cmd->add_option("file", check.file)->required();
  check_cmd->add_option("--mode", check.mode, "auto (full up to d=12), full or local")->check(CLI::IsMember(modes));
  check_cmd->callback([&] { action = [&] { return cmd_check(check, ctx); }; });

  FileArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Special facet, eta vector and A/B/C partition");
  analyze_cmd->add_option("file", analyze.file)->required();
  analyze_cmd->add_option("--mode", analyze.mode)->check(CLI::IsMember(modes));
  analyze_cmd->callback([&] { action = [&] { return cmd_analyze(analyze, ctx); }; });

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Split off hexagon summands and report the finest decomposition");
  split_cmd->add_option("file", split.file)->required();
  split_cmd->add_option("--mode", split.mode)->check(CLI::IsMember(modes));
  split_cmd->add_flag("--hexagons-only", split.hexagons_only, "Skip the finest decomposition");
  split_cmd->add_option("-o,--output", split.output_dir, "Directory for factor files and manifest.txt");
  split_cmd->callback([&] { action = [&] { return cmd_split(split, ctx); }; });

  NfArgs nf;
  auto* nf_cmd = app.add_subcommand("nf", "Print the normal-form digest");
  nf_cmd->add_option("file", nf.file)->required();
  nf_cmd->add_option("--budget", nf.budget, "Maximum live partial orderings");
  nf_cmd->callback([&] { action = [&] { return cmd_nf(nf, ctx); }; });

  EqArgs eq;
  auto* eq_cmd = app.add_subcommand("eq", "Lattice equivalence; exit 0 equivalent, 1 not, 3 size limit");
  eq_cmd->add_option("first", eq.first)->required();
  eq_cmd->add_option("second", eq.second)->required();
  eq_cmd->add_option("--budget", eq.budget, "Maximum live partial orderings");
  eq_cmd->callback([&] { action = [&] { return cmd_eq(eq, ctx); }; });

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate the structural bounds; exit 0 all pass, 1 any fail");
  verify_cmd->add_option("files", verify.files)->required();
  verify_cmd->add_option("--mode", verify.mode)->check(CLI::IsMember(modes));
  verify_cmd->add_flag("--json", verify.json, "Print a JSON array instead of text reports");
  verify_cmd->add_option("-j,--jobs", verify.jobs, "Worker threads (default: hardware concurrency)");
  verify_cmd->callback([&] { action = [&] { return cmd_verify(verify, ctx); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeLimit& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace sfano::cli
