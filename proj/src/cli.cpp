#include "gaudin/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gaudin/gluing.hpp"
#include "gaudin/parallel.hpp"
#include "gaudin/poisson.hpp"
#include "gaudin/serialize.hpp"

namespace gaudin::cli {

namespace {

namespace fs = std::filesystem;

/// Bad flags or inputs; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int r = 2;
  int sites = 0;  // 0: from the pattern, else 3
  std::string mode = "auto";
  std::string poles;
  std::string pattern;
  std::string eval = "5,7,11";
  int trials = 5;
  std::uint64_t seed = 1;
  std::string out;
  std::string run_dir = "gaudin-run";
  std::string format = "text";
  std::string what = "lax";
  std::string bracket = "limit";
  int k = 0;
  bool unsafe_scale = false;
  std::string suite;
};

constexpr int kMaxRank = 3;
constexpr int kMaxClassicalSites = 5;
constexpr int kMaxQuantumSites = 3;

struct Context {
  RunConfig cfg;
  int N = 0;
  std::vector<Rational> poles;
  std::optional<GluingPattern> pattern;
  Format format = Format::Text;

  AlgebraPtr algebra(Mode mode) const {
    check_scale(mode);
    return Algebra::get(cfg.r, N, mode);
  }

  bool within_scale(Mode mode) const {
    if (cfg.unsafe_scale) return true;
    return cfg.r <= kMaxRank && N <= (mode == Mode::Quantum ? kMaxQuantumSites : kMaxClassicalSites);
  }

  void check_scale(Mode mode) const {
    if (within_scale(mode)) return;
    throw UsageError("gl(" + std::to_string(cfg.r) + ")^" + std::to_string(N) + " in " + to_string(mode) +
                     " mode is beyond the desk limits (r <= 3, N <= 5 classical, N <= 3 quantum); pass --unsafe-scale");
  }

  std::string signature(Mode mode) const { return to_string(Signature{cfg.r, N, mode}); }
};

std::vector<Rational> parse_list(const std::string& text, const std::string& what) {
  try {
    return parse_rational_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + what + ": " + e.what());
  }
}

Context resolve(const RunConfig& cfg) {
  Context ctx;
  ctx.cfg = cfg;
  if (cfg.r < 1) throw UsageError("--r must be at least 1");
  if (cfg.sites < 0) throw UsageError("--sites must be positive");
  if (cfg.trials < 0) throw UsageError("--trials must be non-negative");
  try {
    ctx.format = parse_format(cfg.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!cfg.pattern.empty()) {
    try {
      ctx.pattern = cfg.sites > 0 ? parse_pattern(cfg.pattern, cfg.sites) : parse_pattern(cfg.pattern);
    } catch (const ParseError& e) {
      throw UsageError("--pattern: " + std::string(e.what()));
    }
    ctx.N = ctx.pattern->sites;
  } else {
    ctx.N = cfg.sites > 0 ? cfg.sites : 3;
  }
  if (cfg.poles.empty()) {
    for (int i = 0; i < ctx.N; ++i) ctx.poles.push_back(i);
  } else {
    ctx.poles = parse_list(cfg.poles, "poles");
    if (static_cast<int>(ctx.poles.size()) != ctx.N) {
      throw UsageError("--poles: expected " + std::to_string(ctx.N) + " values, got " + std::to_string(ctx.poles.size()));
    }
    try {
      require_distinct(ctx.poles, "poles");
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--poles: ") + e.what());
    }
  }
  return ctx;
}

Mode parse_mode(const std::string& m) {
  if (m == "classical") return Mode::Classical;
  if (m == "quantum") return Mode::Quantum;
  throw UsageError("--mode must be classical, quantum or auto");
}

/// Modes a suite runs in: an explicit --mode, else the suite's defaults.
std::vector<Mode> suite_modes(const Context& ctx, std::vector<Mode> defaults) {
  if (ctx.cfg.mode != "auto") return {parse_mode(ctx.cfg.mode)};
  return defaults;
}

std::vector<NamedPoly> label(const std::vector<NCPoly>& polys, const std::string& prefix) {
  std::vector<NamedPoly> out;
  for (std::size_t i = 0; i < polys.size(); ++i) out.push_back({prefix + std::to_string(i + 1), polys[i]});
  return out;
}

GluingPattern glue_pattern(const Context& ctx) {
  if (ctx.pattern) return *ctx.pattern;
  if (ctx.N < 2) throw UsageError("gluing needs N >= 2");
  if (ctx.N == 2) return trivial_pattern(2);
  std::string text = "[1,[";
  for (int i = 2; i <= ctx.N; ++i) text += (i > 2 ? "," : "") + std::to_string(i);
  return parse_pattern(text + "]]", ctx.N);
}

Report skipped(const std::string& check, const std::string& spec, const std::string& reason) {
  Report rep(check, spec);
  rep.skip(reason);
  return rep;
}

// ---- verify suites ----

Report suite_quadratic(const Context& ctx) {
  Report rep("quadratic");
  for (Mode mode : suite_modes(ctx, {Mode::Quantum, Mode::Classical})) {
    const std::string spec = ctx.signature(mode);
    if (!ctx.within_scale(mode) && ctx.cfg.mode == "auto") {
      rep.add(skipped("commutation_matrix", spec, "beyond desk limits"));
      continue;
    }
    const AlgebraPtr alg = ctx.algebra(mode);
    const auto H = quadratic_hamiltonians(alg, ctx.poles);
    rep.add(commutation_matrix(label(H, "H_"), spec));
    Report sum("sum_zero", spec);
    sum.trials = 1;
    NCPoly total(alg);
    for (const auto& h : H) total += h;
    if (!total.is_zero()) sum.fail({{"sum", total.to_string()}});
    rep.add(sum);
  }
  return rep;
}

Report suite_glue(const Context& ctx) {
  Report rep("glue");
  const GluingPattern pattern = glue_pattern(ctx);
  rep.details["pattern"] = pattern.to_string();
  for (Mode mode : suite_modes(ctx, {Mode::Classical})) {
    const std::string spec = ctx.signature(mode) + " " + pattern.to_string();
    const AlgebraPtr alg = ctx.algebra(mode);
    if (mode == Mode::Quantum) {
      const LimitAlgebra lim = limit_gaudin_algebra(alg, pattern, ctx.poles);
      rep.add(commutation_matrix(lim.all(), spec));
      continue;
    }
    const LimitFamily fam = iterate_pattern(alg, pattern, ctx.poles);
    const InvariantFamily inv = fam.invariants();
    rep.add(commutation_matrix(named(inv), spec));
    Report hg = hg_membership_check(inv);
    hg.spec = spec;
    rep.add(hg);
    const InvariantFamily generic = spectral_invariants(gaudin_lax(alg, ctx.poles), ctx.cfg.r);
    Report ranks = rank_completeness_check(inv, generic, ctx.cfg.trials, ctx.cfg.seed);
    ranks.spec = spec;
    rep.add(ranks);
  }
  return rep;
}

Report suite_bending(const Context& ctx) {
  if (ctx.N < 2) throw UsageError("bending needs N >= 2");
  Report rep("bending");
  const Rational z1 = ctx.poles[0], z2 = ctx.poles[1];
  for (Mode mode : suite_modes(ctx, {Mode::Classical, Mode::Quantum})) {
    const std::string spec = ctx.signature(mode);
    if (!ctx.within_scale(mode) && ctx.cfg.mode == "auto") {
      rep.add(skipped("bending_symbols", spec, "beyond desk limits"));
      continue;
    }
    const AlgebraPtr alg = ctx.algebra(mode);
    if (mode == Mode::Quantum) {
      Report symbols = bending_symbol_check(alg, z1, z2);
      symbols.spec = spec;
      rep.add(symbols);
      std::vector<NamedPoly> gens;
      for (const auto& m : quantum_bending_generators(alg, z1, z2).members) {
        gens.push_back({m.provenance.to_string(), m.value});
      }
      rep.add(commutation_matrix(gens, spec));
      continue;
    }
    const LimitFamily comb = iterate_pattern(alg, left_comb_pattern(ctx.N), ctx.poles);
    Report structure("left_comb_structure", spec);
    structure.trials = ctx.N - 1;
    for (int k = 1; k < ctx.N; ++k) {
      if (!comb.matrices[static_cast<std::size_t>(k - 1)].same_entries(bending_lax_rational(alg, k, z1, z2))) {
        structure.fail({{"k", k}});
      }
    }
    rep.add(structure);
    const InvariantFamily inv = comb.invariants();
    rep.add(family_commutes_under(BracketSpec::standard(), inv));
    rep.add(family_commutes_under(BracketSpec::limit(), inv));
    InvariantFamily poly;
    for (int k = 1; k < ctx.N; ++k) poly.append(spectral_invariants(bending_lax(alg, k), ctx.cfg.r));
    Report p = family_commutes_under(BracketSpec::standard(), poly);
    p.spec += " polynomial bending";
    rep.add(p);
  }
  return rep;
}

Report suite_talalaev(const Context& ctx) {
  if (ctx.cfg.mode == "classical") throw UsageError("talalaev runs in quantum mode");
  const AlgebraPtr alg = ctx.algebra(Mode::Quantum);
  const std::string spec = ctx.signature(Mode::Quantum);
  const std::vector<Rational> points = parse_list(ctx.cfg.eval, "eval");
  for (const auto& u : points) {
    for (const auto& p : ctx.poles) {
      if (u == p) throw UsageError("--eval: point " + u.get_str() + " is a pole");
    }
  }
  const LaxMatrix L = gaudin_lax(alg, ctx.poles);
  Report rep("talalaev");
  rep.add(manin_report(manin_operator(L), spec));
  const TalalaevOutput t = talalaev_generators(L);
  Report comm = commutation_matrix(evaluate_talalaev(t, points), spec);
  comm.details["points"] = ctx.cfg.eval;
  comm.details["degree_bound_points"] = ctx.cfg.r * ctx.N + 1;
  rep.add(comm);
  Report norm("qtr_normalization", spec);
  const auto ratios = qtr_normalization(L, t);
  norm.trials = static_cast<int>(ratios.size());
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    const Rational expected = (k % 2 == 0) ? -1 : 1;
    if (!ratios[k] || *ratios[k] != expected) {
      norm.fail({{"k", k + 1}, {"ratio", ratios[k] ? ratios[k]->get_str() : "not proportional"}});
    }
  }
  rep.add(norm);
  Report symbol("classical_limit", spec);
  const LaxMatrix Lc = gaudin_lax(alg->with_mode(Mode::Classical), ctx.poles);
  for (const auto& u : points) {
    ++symbol.trials;
    ScalarMatrix M(ctx.cfg.r, NCPoly(Lc.algebra()));
    for (int a = 0; a < ctx.cfg.r; ++a) {
      for (int b = 0; b < ctx.cfg.r; ++b) M(a, b) = Lc(a, b).eval_z(u);
    }
    NCPoly det = col_det(M);
    if (ctx.cfg.r % 2 == 1) det = -det;
    const NCPoly lim = classical_limit(t.qh[0].eval_z(u));
    if (!(lim == det)) symbol.fail({{"point", u.get_str()}, {"classical_limit", lim.to_string()}, {"expected", det.to_string()}});
  }
  rep.add(symbol);
  return rep;
}

Report suite_manin(const Context& ctx) {
  if (ctx.cfg.mode == "classical") throw UsageError("manin runs in quantum mode");
  const AlgebraPtr alg = ctx.algebra(Mode::Quantum);
  const DiffOpMatrix D = manin_operator(gaudin_lax(alg, ctx.poles));
  Report rep("manin", ctx.signature(Mode::Quantum));
  rep.add(manin_property_suite(D));
  rep.add(column_order_invariance(D));
  rep.add(newton_check(D));
  return rep;
}

Report suite_poisson(const Context& ctx) {
  if (ctx.cfg.mode == "quantum") throw UsageError("poisson runs in classical mode");
  const AlgebraPtr alg = ctx.algebra(Mode::Classical);
  const auto& c = ctx.cfg;
  Report rep("poisson", ctx.signature(Mode::Classical));
  rep.add(antisymmetry_check(BracketSpec::limit(), alg, c.trials, c.seed));
  rep.add(leibniz_check(BracketSpec::limit(), alg, c.trials, c.seed));
  rep.add(jacobi_check(BracketSpec::standard(), alg, c.trials, c.seed));
  rep.add(jacobi_check(BracketSpec::limit(), alg, c.trials, c.seed));
  rep.add(compatibility_check(BracketSpec::standard(), BracketSpec::limit(), alg, c.trials, c.seed));
  const PoissonOperator op = limit_operator(ctx.N);
  Json blocks = Json::array();
  for (int i = 1; i <= ctx.N; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= ctx.N; ++j) row.push_back(op.block_string(i, j));
    blocks.push_back(row);
  }
  rep.details["limit_operator"] = blocks;
  return rep;
}

Report suite_fivesite(const Context& ctx) {
  if (ctx.N != 5) throw UsageError("fivesite needs N = 5");
  const AlgebraPtr alg = ctx.algebra(Mode::Classical);
  const auto& c = ctx.cfg;
  const auto op = BracketSpec::from_operator(fivesite_operator(ctx.poles));
  Report rep("fivesite", ctx.signature(Mode::Classical));
  rep.details["diagnostic"] = true;
  rep.add(jacobi_check(op, alg, c.trials, c.seed));
  rep.add(compatibility_check(BracketSpec::standard(), op, alg, c.trials, c.seed));
  const auto& z = ctx.poles;
  const InvariantFamily inv = elementary_glue(alg, {z[0], z[1]}, {z[2], z[3], z[4]}, z[2]).invariants();
  rep.add(family_commutes_under(op, inv));
  rep.add(family_commutes_under(BracketSpec::standard(), inv));
  return rep;
}

// ---- build ----

Json object(const std::string& label, const std::string& text, const std::string& tex) {
  return {{"label", label}, {"text", text}, {"latex", tex}};
}

Json build_document(const Context& ctx) {
  const auto& c = ctx.cfg;
  Json doc{{"document", "build"}, {"what", c.what}};
  Json objects = Json::array();
  Json notes = Json::array();
  auto add_matrix = [&](const LaxMatrix& L) {
    objects.push_back(object(L.id(), L.to_string(), latex(L)));
  };
  const Mode mode = c.mode == "auto" ? (c.what == "talalaev" || c.what == "limit-algebra" ? Mode::Quantum
                                                                                           : Mode::Classical)
                                     : parse_mode(c.mode);
  doc["signature"] = ctx.signature(mode);

  if (c.what == "lax") {
    const LaxMatrix L = gaudin_lax(ctx.algebra(mode), ctx.poles);
    add_matrix(L);
    doc["data"] = to_json(L);
  } else if (c.what == "quadratic") {
    const AlgebraPtr alg = ctx.algebra(mode);
    const auto H = quadratic_hamiltonians(alg, ctx.poles);
    NCPoly total(alg);
    Json data = Json::array();
    for (std::size_t i = 0; i < H.size(); ++i) {
      objects.push_back(object("H_" + std::to_string(i + 1), H[i].to_string(), latex(H[i])));
      data.push_back(to_json(H[i]));
      total += H[i];
    }
    doc["data"] = data;
    notes.push_back(total.is_zero() ? "sum of H_i is zero" : "sum of H_i is NOT zero: " + total.to_string());
  } else if (c.what == "bending" || c.what == "bending-rational") {
    const AlgebraPtr alg = ctx.algebra(mode);
    if (ctx.N < 2) throw UsageError("bending needs N >= 2");
    if (c.k != 0 && (c.k < 1 || c.k >= ctx.N)) throw UsageError("--k must lie in 1..N-1");
    Json data = Json::array();
    for (int k = 1; k < ctx.N; ++k) {
      if (c.k != 0 && k != c.k) continue;
      const LaxMatrix L = c.what == "bending" ? bending_lax(alg, k) : bending_lax_rational(alg, k, ctx.poles[0], ctx.poles[1]);
      add_matrix(L);
      data.push_back(to_json(L));
    }
    doc["data"] = data;
  } else if (c.what == "pattern") {
    const AlgebraPtr alg = ctx.algebra(mode);
    const GluingPattern pattern = glue_pattern(ctx);
    const LimitFamily fam = iterate_pattern(alg, pattern, ctx.poles);
    for (const auto& L : fam.matrices) add_matrix(L);
    Json data = to_json(fam);
    data["pattern"] = pattern.to_string();
    if (!alg->quantum()) {
      const InvariantFamily inv = fam.invariants();
      for (const auto& m : inv.members) objects.push_back(object(m.provenance.to_string(), m.value.to_string(), latex(m.value)));
      data["commutation"] = commutation_matrix(named(inv)).to_json();
    }
    doc["data"] = data;
  } else if (c.what == "invariants") {
    if (mode == Mode::Quantum) throw UsageError("invariants are classical; use --what talalaev for quantum generators");
    const InvariantFamily inv = spectral_invariants(gaudin_lax(ctx.algebra(mode), ctx.poles), c.r);
    for (const auto& m : inv.members) objects.push_back(object(m.provenance.to_string(), m.value.to_string(), latex(m.value)));
    doc["data"] = to_json(inv);
  } else if (c.what == "talalaev") {
    if (mode != Mode::Quantum) throw UsageError("talalaev generators need quantum mode");
    const std::vector<Rational> points = parse_list(c.eval, "eval");
    const TalalaevOutput t = talalaev_generators(gaudin_lax(ctx.algebra(mode), ctx.poles));
    for (std::size_t i = 0; i < t.qh.size(); ++i) {
      objects.push_back(object("QH_" + std::to_string(i), t.qh[i].to_string(), latex(t.qh[i])));
    }
    doc["data"] = to_json(t, points);
  } else if (c.what == "limit-algebra") {
    if (mode != Mode::Quantum) throw UsageError("limit-algebra needs quantum mode");
    const LimitAlgebra lim = limit_gaudin_algebra(ctx.algebra(mode), glue_pattern(ctx), ctx.poles);
    const auto all = lim.all();
    for (const auto& g : all) objects.push_back(object(g.label, g.value.to_string(), latex(g.value)));
    doc["data"] = {{"generators", to_json(all)}, {"commutation", commutation_matrix(all).to_json()}};
  } else if (c.what == "operator") {
    PoissonOperator op = c.bracket == "standard" ? standard_operator(ctx.N)
                         : c.bracket == "limit"  ? limit_operator(ctx.N)
                         : c.bracket == "fivesite"
                             ? (ctx.N == 5 ? fivesite_operator(ctx.poles) : throw UsageError("fivesite needs N = 5"))
                             : throw UsageError("--bracket must be standard, limit or fivesite");
    Json blocks = Json::array();
    for (int i = 1; i <= ctx.N; ++i) {
      Json row = Json::array();
      for (int j = 1; j <= ctx.N; ++j) {
        const std::string s = op.block_string(i, j);
        row.push_back(s);
        objects.push_back(object("P(" + std::to_string(i) + "," + std::to_string(j) + ")", s, s));
      }
      blocks.push_back(row);
    }
    doc["data"] = {{"operator", op.name()}, {"blocks", blocks}};
  } else {
    throw UsageError("--what must be one of lax, quadratic, bending, bending-rational, pattern, invariants, talalaev, "
                     "limit-algebra, operator");
  }
  doc["objects"] = objects;
  if (!notes.empty()) doc["notes"] = notes;
  return doc;
}

Json config_json(const Context& ctx) {
  const auto& c = ctx.cfg;
  Json poles = Json::array();
  for (const auto& p : ctx.poles) poles.push_back(p.get_str());
  return {{"r", c.r},         {"sites", ctx.N},   {"mode", c.mode},     {"poles", poles},
          {"pattern", ctx.pattern ? ctx.pattern->to_string() : ""},   {"eval", c.eval},
          {"trials", c.trials}, {"seed", c.seed}, {"what", c.what},     {"k", c.k},
          {"bracket", c.bracket}};
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << content;
}

void emit(const Context& ctx, const Json& doc, std::ostream& out) {
  const std::string rendered = render(doc, ctx.format);
  if (ctx.cfg.out.empty()) {
    out << rendered;
  } else {
    write_file(ctx.cfg.out, rendered);
  }
}

int cmd_build(const Context& ctx, std::ostream& out) {
  Json doc = build_document(ctx);
  doc["config"] = config_json(ctx);
  write_file(fs::path(ctx.cfg.run_dir) / ("build-" + ctx.cfg.what + ".json"), doc.dump(2) + "\n");
  emit(ctx, doc, out);
  return 0;
}

int cmd_verify(const Context& ctx, std::ostream& out) {
  const std::string& s = ctx.cfg.suite;
  Report rep;
  if (s == "quadratic") {
    rep = suite_quadratic(ctx);
  } else if (s == "glue") {
    rep = suite_glue(ctx);
  } else if (s == "bending") {
    rep = suite_bending(ctx);
  } else if (s == "talalaev") {
    rep = suite_talalaev(ctx);
  } else if (s == "manin") {
    rep = suite_manin(ctx);
  } else if (s == "poisson") {
    rep = suite_poisson(ctx);
  } else if (s == "fivesite") {
    rep = suite_fivesite(ctx);
  } else {
    throw UsageError("unknown suite '" + s + "' (expected quadratic, glue, bending, talalaev, manin, poisson, fivesite)");
  }
  rep.check = "verify-" + s;
  rep.seed = ctx.cfg.seed;
  for (const auto& p : rep.parts) rep.trials += p.trials;
  Json doc = rep.to_json();
  doc["config"] = config_json(ctx);
  write_file(fs::path(ctx.cfg.run_dir) / ("verify-" + s + ".json"), doc.dump(2) + "\n");
  emit(ctx, doc, out);
  return rep.pass ? 0 : 1;
}

int cmd_export(const Context& ctx, std::ostream& out) {
  const fs::path dir(ctx.cfg.run_dir);
  std::vector<fs::path> artifacts;
  if (fs::is_directory(dir)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      const std::string name = e.path().filename().string();
      if (e.is_regular_file() && e.path().extension() == ".json" && (name.rfind("build-", 0) == 0 || name.rfind("verify-", 0) == 0)) {
        artifacts.push_back(e.path());
      }
    }
  }
  if (artifacts.empty()) throw UsageError("no build or verify artifacts in " + dir.string() + "; run build or verify first");
  std::sort(artifacts.begin(), artifacts.end());
  const std::string ext = ctx.format == Format::Json ? ".json" : ctx.format == Format::Latex ? ".tex" : ".txt";
  for (const auto& path : artifacts) {
    std::ifstream f(path);
    Json doc;
    try {
      doc = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw UsageError("corrupt artifact " + path.string() + ": " + e.what());
    }
    const fs::path target = dir / "export" / (path.stem().string() + ext);
    write_file(target, render(doc, ctx.format));
    out << target.string() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* w = std::getenv("GAUDIN_WORKERS")) {
    try {
      set_worker_count(std::stoi(w));
    } catch (const std::exception&) {
      err << "error: GAUDIN_WORKERS must be an integer\n";
      return 2;
    }
  }

  RunConfig cfg;
  CLI::App app{"Exact computer algebra for Gaudin models and their gluing limits"};
  app.set_config("--config", "", "key=value file mirroring the flags");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--r", cfg.r, "rank r of gl(r)")->capture_default_str();
  app.add_option("--sites", cfg.sites, "number of sites N (default: from --pattern, else 3)");
  app.add_option("--mode", cfg.mode, "classical, quantum or auto")->capture_default_str();
  app.add_option("--poles", cfg.poles, "comma separated poles z_1..z_N (default 0..N-1)")
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)->delimiter(',');
  app.add_option("--pattern", cfg.pattern, "gluing pattern, e.g. [1,2,[3,4,5]@3]")
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)->delimiter(',');
  app.add_option("--eval", cfg.eval, "evaluation points for Talalaev generators")
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)->delimiter(',')->capture_default_str();
  app.add_option("--trials", cfg.trials, "random trials per check")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for random trials")->capture_default_str();
  app.add_option("--out", cfg.out, "write the rendered output here instead of stdout");
  app.add_option("--run-dir", cfg.run_dir, "directory for JSON artifacts")->capture_default_str();
  app.add_option("--format", cfg.format, "json, latex or text")->capture_default_str();
  app.add_option("--what", cfg.what,
                 "build target: lax, quadratic, bending, bending-rational, pattern, invariants, talalaev, "
                 "limit-algebra, operator")
      ->capture_default_str();
  app.add_option("--k", cfg.k, "bending index (default: all)");
  app.add_option("--bracket", cfg.bracket, "operator for --what operator: standard, limit, fivesite")->capture_default_str();
  app.add_flag("--unsafe-scale", cfg.unsafe_scale, "lift the desk-scale limits");

  CLI::App* build = app.add_subcommand("build", "construct Lax matrices, Hamiltonians or generators");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "quadratic, glue, bending, talalaev, manin, poisson or fivesite")->required();
  CLI::App* exp = app.add_subcommand("export", "render stored artifacts as json, latex or text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const Context ctx = resolve(cfg);
    if (build->parsed()) return cmd_build(ctx, out);
    if (verify->parsed()) return cmd_verify(ctx, out);
    if (exp->parsed()) return cmd_export(ctx, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gaudin::cli
