// kissing: build, verify and count layered kissing configurations from
// binary codes.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kissing/bounds.hpp"
#include "kissing/code_io.hpp"
#include "kissing/configuration.hpp"
#include "kissing/constructors.hpp"
#include "kissing/orbit.hpp"
#include "kissing/parallel.hpp"
#include "kissing/permutation.hpp"
#include "kissing/psl2.hpp"
#include "kissing/text_format.hpp"

#ifndef KISSING_VERSION
#define KISSING_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace kissing;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitError = 2;
constexpr std::uint64_t kExhaustiveGate = 1'000'000;

// Raised when a verification step rejects its input; maps to exit status 1.
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// The reproducible part of an invocation: tool version plus the arguments
// that influence outputs (the worker count does not).
struct RunManifest {
  std::vector<std::string> args;

  std::string canonical() const {
    std::string text = std::string("version ") + KISSING_VERSION + "\n";
    for (const auto& a : args) text += "arg " + a + "\n";
    return text;
  }
  std::string hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical())));
    return buf;
  }
  void write(const fs::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write run manifest " + path.string());
    out << "# kissing run manifest; replay with `kissing replay " << path.filename().string() << "`\n"
        << canonical() << "hash " << hash() << '\n';
  }
  static RunManifest read(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open run manifest " + path.string());
    LineReader reader(in);
    std::string line;
    RunManifest m;
    std::optional<std::string> version, hash;
    while (reader.next(line)) {
      const auto space = line.find(' ');
      const std::string key = line.substr(0, space);
      const std::string value = space == std::string::npos ? "" : line.substr(space + 1);
      if (key == "version") version = value;
      else if (key == "arg") m.args.push_back(value);
      else if (key == "hash") hash = value;
      else throw FormatError(reader.line_number(), "unknown run manifest entry '" + key + "'");
    }
    if (!version) throw std::runtime_error(path.string() + ": missing version");
    if (*version != KISSING_VERSION)
      throw std::runtime_error(path.string() + ": recorded with version " + *version + ", this is " + KISSING_VERSION);
    if (hash && *hash != m.hash()) throw std::runtime_error(path.string() + ": hash mismatch");
    return m;
  }
};

struct Context {
  RunManifest manifest;
  unsigned threads = 0;

  std::vector<std::string> header() const {
    std::string command = "kissing";
    for (const auto& a : manifest.args) command += " " + a;
    return {std::string("kissing ") + KISSING_VERSION + " run=" + manifest.hash(), command};
  }
  void write_header(std::ostream& out) const {
    for (const auto& line : header()) out << "# " << line << '\n';
  }
  // Saves the run manifest next to a primary output file.
  void record(const fs::path& output) const { manifest.write(fs::path(output.string() + ".run")); }
};

std::string counted(Count c) { return with_separators(c) + " (" + to_string(c) + ")"; }

ScanConvention parse_convention(const std::string& order, const std::string& direction) {
  ScanConvention c;
  c.order = order == "colex" ? ScanOrder::Colex : ScanOrder::Lex;
  c.direction = direction == "desc" ? ScanDirection::Descending : ScanDirection::Ascending;
  return c;
}

std::vector<std::string> certificate_comments(const Code& code, unsigned threads) {
  const auto v = verify(code, threads);
  if (!v.ok()) throw Rejected("construction failed verification: " + v.violation->describe(code));
  std::ostringstream line;
  line << "certified: size=" << v.certificate->size << " declared_d=" << code.declared_distance() << " min_distance=";
  if (v.certificate->min_distance) line << *v.certificate->min_distance;
  else line << "inf";
  return {line.str()};
}

// Writes `code` to `output`, or to stdout when no path is given. The summary
// goes to stdout in the first case and to stderr in the second.
void emit_code(const Context& ctx, const Code& code, const std::string& output, std::vector<std::string> notes) {
  auto comments = ctx.header();
  for (auto& n : certificate_comments(code, ctx.threads)) comments.push_back(std::move(n));
  for (auto& n : notes) comments.push_back(std::move(n));
  std::ostream& summary = output.empty() ? std::cerr : std::cout;
  if (output.empty()) {
    write_code(std::cout, code, comments);
  } else {
    write_code_file(output, code, comments);
    ctx.record(output);
  }
  summary << "size " << code.size() << '\n';
}

ConstantWeightCode read_cw(const std::string& path) {
  const Code code = read_code_file(path);
  if (!code.weight()) throw std::invalid_argument(path + ": not a constant-weight code (header lacks w=)");
  return ConstantWeightCode(code);
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_uint(item, 0, "list entry"));
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

// ---------------------------------------------------------------------------

struct LexicodeArgs {
  std::size_t n = 0, d = 0, w = 0;
  std::string order = "lex", direction = "asc", output;
};

void add_convention(CLI::App* sub, LexicodeArgs& a) {
  sub->add_option("--order", a.order, "Most significant position: lex (first) or colex (last)")
      ->check(CLI::IsMember({"lex", "colex"}));
  sub->add_option("--direction", a.direction, "Scan direction")->check(CLI::IsMember({"asc", "desc"}));
  sub->add_option("-o,--output", a.output, "Output code file (stdout if omitted)");
}

int run_lexicode(const Context& ctx, const LexicodeArgs& a) {
  const auto conv = parse_convention(a.order, a.direction);
  emit_code(ctx, lexicode(a.n, a.d, conv), a.output, {"lexicode n=" + std::to_string(a.n) + " d=" + std::to_string(a.d) + " " + to_string(conv)});
  return kExitOk;
}

int run_cw_lexicode(const Context& ctx, const LexicodeArgs& a) {
  const auto conv = parse_convention(a.order, a.direction);
  emit_code(ctx, cw_lexicode(a.n, a.d, a.w, conv), a.output,
            {"cw-lexicode n=" + std::to_string(a.n) + " d=" + std::to_string(a.d) + " w=" + std::to_string(a.w) + " " +
             to_string(conv)});
  return kExitOk;
}

struct TransformArgs {
  std::string input, output;
  std::size_t position = 0, weight = 0;
};

struct GroupArgs {
  std::string group, times;
  std::uint32_t psl2 = 0;

  void add(CLI::App* sub) {
    auto* g = sub->add_option("--group", group, "Group file");
    auto* p = sub->add_option("--psl2", psl2, "Use PSL(2,q) on the projective line");
    g->excludes(p);
    sub->add_option("--times", times, "Second group file; acts on pairs (i, j) as the product action");
  }
  PermutationGroup load() const {
    if (psl2 == 0 && group.empty()) throw std::invalid_argument("one of --group or --psl2 is required");
    PermutationGroup g = psl2 ? psl2_action(psl2) : read_group_file(group);
    if (!times.empty()) g = product_action(g, read_group_file(times));
    return g;
  }
};

struct OrbitArgs {
  GroupArgs group;
  std::string seed, output;
};

int run_orbit(const Context& ctx, const OrbitArgs& a) {
  const auto g = a.group.load();
  const Codeword seed = Codeword::from_string(a.seed);
  if (seed.length() != g.degree())
    throw std::invalid_argument("seed length " + std::to_string(seed.length()) + " != group degree " + std::to_string(g.degree()));
  auto words = orbit(g, seed);
  const std::size_t size = words.size();
  const Code probe(seed.length(), 1, words);
  const auto dist = size > 1 ? min_distance(probe, ctx.threads) : std::nullopt;
  const ConstantWeightCode code(seed.length(), dist.value_or(seed.length()), seed.weight(), std::move(words));
  emit_code(ctx, code, a.output, {"orbit of " + a.seed});
  if (auto order = g.order_by_closure()) std::cout << "group order " << *order << '\n';
  return kExitOk;
}

struct OrbitSearchArgs {
  GroupArgs group;
  std::size_t d = 0, w = 0, exact_max = 64;
  std::string strategy = "largest", output, inventory, seeds_file;
  std::vector<std::string> seeds;
  std::uint64_t seen_limit_mb = 1024;
};

int run_orbit_search(const Context& ctx, const OrbitSearchArgs& a) {
  const auto g = a.group.load();
  OrbitSearchOptions options;
  options.strategy = a.strategy == "input" ? UnionStrategy::InputOrder
                     : a.strategy == "exact" ? UnionStrategy::Exact
                                             : UnionStrategy::LargestFirst;
  options.exact_max_orbits = a.exact_max;
  options.seen_set_limit_bytes = a.seen_limit_mb << 20;
  for (const auto& s : a.seeds) options.seeds.push_back(Codeword::from_string(s));
  if (!a.seeds_file.empty()) {
    std::ifstream in(a.seeds_file);
    if (!in) throw std::runtime_error("cannot open " + a.seeds_file);
    LineReader reader(in);
    std::string line;
    while (reader.next(line))
      for (const auto& token : split_ws(line)) options.seeds.push_back(Codeword::from_string(token));
  }
  const auto result = orbit_code_search(g, a.d, a.w, options);
  std::size_t chosen = 0;
  for (const auto& r : result.inventory) chosen += r.chosen;
  emit_code(ctx, result.code, a.output,
            {"orbit-search strategy=" + a.strategy + " orbits_enumerated=" + std::to_string(result.orbits_enumerated) +
             " admissible=" + std::to_string(result.inventory.size()) + " chosen=" + std::to_string(chosen)});
  if (!a.inventory.empty()) {
    std::ofstream out(a.inventory);
    if (!out) throw std::runtime_error("cannot write " + a.inventory);
    ctx.write_header(out);
    write_inventory(out, result.inventory);
  }
  std::cout << "orbits enumerated " << result.orbits_enumerated << ", admissible " << result.inventory.size()
            << ", chosen " << chosen << (result.streamed ? " (streamed)" : "") << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string manifest, output;
  bool no_verify = false;
};

std::string describe(const StructuralFailure& f) {
  const char* part = f.component == StructuralFailure::Component::Chain        ? "chain"
                     : f.component == StructuralFailure::Component::SupportCode ? "support code"
                                                                               : "sign code";
  return std::string("REJECTED: ") + part + " (level " + std::to_string(f.level) + "): " + f.message;
}

void print_angle(const KissingConfiguration& config, unsigned threads) {
  if (auto c = min_angle(config, threads)) {
    std::cout << "max cosine " << c->overlap << "/sqrt(" << c->product << ") = " << std::setprecision(12)
              << c->cosine() << ", min angle " << c->angle_degrees() << " deg"
              << (c->within_sixty_degrees() ? "" : " (below 60 deg)") << '\n';
  }
}

int run_build(const Context& ctx, const BuildArgs& a) {
  const ConfigManifest manifest = read_manifest_file(a.manifest);
  BuildOptions options;
  options.threads = ctx.threads;
  options.skip_code_verification = a.no_verify;
  const KissingConfiguration config = load_configuration(manifest, options);
  const Count total = count(config);
  bool certified = false;
  if (!a.no_verify) {
    const auto s = verify_structural(config, ctx.threads);
    if (!s.certified()) {
      std::cout << describe(*s.failure) << '\n';
      return kExitRejected;
    }
    certified = true;
  }
  if (!a.output.empty()) {
    const fs::path out_path = fs::absolute(a.output);
    ConfigManifest copy = manifest;
    for (auto* files : {&copy.support_files, &copy.sign_files})
      for (auto& p : *files) p = fs::relative(fs::absolute(p), out_path.parent_path());
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + a.output);
    ctx.write_header(out);
    out << "# centers " << to_string(total) << (certified ? " structurally certified" : " unverified") << '\n';
    write_manifest(out, copy);
    ctx.record(a.output);
  }
  for (std::size_t k = 0; k < config.levels().size(); ++k) {
    const auto& level = config.levels()[k];
    std::cout << "level " << k << ": k=" << level.support_size << " supports=" << level.support_code.size()
              << " signs=" << level.sign_code.size() << " centers=" << counted(config.level_count(k)) << '\n';
  }
  std::cout << with_separators(total) << " centers" << (certified ? ", certified" : ", not verified") << '\n';
  std::cout << "count " << to_string(total) << '\n';
  if (certified) print_angle(config, ctx.threads);
  return kExitOk;
}

struct VerifyArgs {
  std::string config, mode = "structural";
  std::uint64_t pairs = 1'000'000, seed = 1;
  bool force = false;
};

int run_verify(const Context& ctx, const VerifyArgs& a) {
  BuildOptions options;
  options.threads = ctx.threads;
  options.skip_code_verification = true;  // the verifier itself judges the codes
  const KissingConfiguration config = load_configuration(read_manifest_file(a.config), options);
  const Count total = count(config);
  std::cout << "centers " << counted(total) << '\n';
  if (a.mode == "structural") {
    const auto s = verify_structural(config, ctx.threads);
    if (!s.certified()) {
      std::cout << describe(*s.failure) << '\n';
      return kExitRejected;
    }
    std::cout << "CERTIFIED (structural): chain " << config.chain().to_string() << " and all level codes\n";
    print_angle(config, ctx.threads);
    return kExitOk;
  }
  PairScanResult r;
  if (a.mode == "exhaustive") {
    if (total > kExhaustiveGate && !a.force)
      throw std::invalid_argument("exhaustive verification of " + with_separators(total) +
                                  " centers exceeds the 1,000,000 gate; pass --force or use --mode sample");
    r = verify_exhaustive(config, ctx.threads);
  } else {
    r = verify_sampled(config, a.pairs, a.seed);
    std::cout << "seed " << a.seed << '\n';
  }
  std::cout << "pairs checked " << r.pairs_checked << '\n';
  if (!r.certified()) {
    std::cout << "REJECTED: " << r.violation->describe(config) << '\n';
    return kExitRejected;
  }
  std::cout << (a.mode == "exhaustive" ? "CERTIFIED (exhaustive): every pair within 60 deg bound\n"
                                       : "PASS (sampled): no violating pair found\n");
  return kExitOk;
}

struct CountArgs {
  std::string config, table, chain;
  std::size_t n = 0;
};

int run_count(const Context&, const CountArgs& a) {
  if (!a.config.empty()) {
    BuildOptions options;
    options.skip_code_verification = true;
    const auto config = load_configuration(read_manifest_file(a.config), options);
    std::cout << with_separators(count(config)) << '\n' << to_string(count(config)) << '\n';
    return kExitOk;
  }
  if (a.chain.empty() || a.n == 0) throw std::invalid_argument("count needs --config, or -n with --chain");
  const BoundsTable table = a.table.empty() ? BoundsTable{} : load_table_file(a.table);
  const auto report = evaluate_chain(a.n, parse_list(a.chain), table);
  write_chain_report(std::cout, report);
  return kExitOk;
}

struct ExportArgs {
  std::string config, format = "exact", output;
  std::uint64_t cap = 10'000'000;
};

int run_export(const Context& ctx, const ExportArgs& a) {
  BuildOptions options;
  options.threads = ctx.threads;
  const auto config = load_configuration(read_manifest_file(a.config), options);
  const auto format = a.format == "decimal" ? ExportFormat::Decimal : ExportFormat::Exact;
  if (a.output.empty()) {
    ctx.write_header(std::cout);
    export_centers(std::cout, config, format, a.cap);
    return kExitOk;
  }
  std::ofstream out(a.output);
  if (!out) throw std::runtime_error("cannot write " + a.output);
  ctx.write_header(out);
  export_centers(out, config, format, a.cap);
  ctx.record(a.output);
  std::cout << "exported " << counted(count(config)) << " centers\n";
  return kExitOk;
}

struct OptimizeArgs {
  std::size_t n = 0, max_levels = 8;
  std::string table, dims = "32,36,40,44,64,80,128";
  bool tsv = false;
};

BoundsTable table_or_floors(const std::string& path) { return path.empty() ? BoundsTable{} : load_table_file(path); }

int run_optimize(const Context& ctx, const OptimizeArgs& a) {
  const auto report = best_chain(a.n, table_or_floors(a.table), a.max_levels);
  ctx.write_header(std::cout);
  if (a.tsv) write_chain_report_tsv(std::cout, report);
  else write_chain_report(std::cout, report);
  return kExitOk;
}

int run_report(const Context& ctx, const OptimizeArgs& a) {
  const auto rows = record_report(table_or_floors(a.table), parse_list(a.dims), a.max_levels);
  ctx.write_header(std::cout);
  if (a.tsv) write_record_report_tsv(std::cout, rows);
  else write_record_report(std::cout, rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------

int dispatch(std::vector<std::string> args, bool replayed);

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(std::move(args), false);
}

int dispatch(std::vector<std::string> args, bool replayed) {
  CLI::App app{"Layered kissing configurations from binary codes"};
  app.set_version_flag("--version", std::string(KISSING_VERSION));
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("-j,--threads", threads, "Worker threads (0 = available parallelism)");

  LexicodeArgs lex, cwlex;
  auto* s_lex = app.add_subcommand("lexicode", "Greedy lexicode C(n, d)");
  s_lex->add_option("-n", lex.n, "Length")->required();
  s_lex->add_option("-d", lex.d, "Minimum distance")->required();
  add_convention(s_lex, lex);

  auto* s_cwlex = app.add_subcommand("cw-lexicode", "Greedy constant-weight lexicode C(n, d, w)");
  s_cwlex->add_option("-n", cwlex.n, "Length")->required();
  s_cwlex->add_option("-d", cwlex.d, "Minimum distance")->required();
  s_cwlex->add_option("-w", cwlex.w, "Weight")->required();
  add_convention(s_cwlex, cwlex);

  TransformArgs comp, shrt, slice;
  auto* s_comp = app.add_subcommand("complement", "Complement every word of a constant-weight code");
  s_comp->add_option("input", comp.input, "Code file")->required()->check(CLI::ExistingFile);
  s_comp->add_option("-o,--output", comp.output, "Output code file");

  auto* s_shrt = app.add_subcommand("shorten", "Keep words with 0 at a position and delete it");
  s_shrt->add_option("input", shrt.input, "Code file")->required()->check(CLI::ExistingFile);
  s_shrt->add_option("-p,--position", shrt.position, "Coordinate to delete")->required();
  s_shrt->add_option("-o,--output", shrt.output, "Output code file");

  auto* s_slice = app.add_subcommand("slice", "Words of one weight");
  s_slice->add_option("input", slice.input, "Code file")->required()->check(CLI::ExistingFile);
  s_slice->add_option("-w", slice.weight, "Weight")->required();
  s_slice->add_option("-o,--output", slice.output, "Output code file");

  OrbitArgs orb;
  auto* s_orbit = app.add_subcommand("orbit", "Orbit of one word under a permutation group");
  orb.group.add(s_orbit);
  s_orbit->add_option("--seed", orb.seed, "Seed word (bit string)")->required();
  s_orbit->add_option("-o,--output", orb.output, "Output code file");

  OrbitSearchArgs os;
  auto* s_os = app.add_subcommand("orbit-search", "Constant-weight code as a union of group orbits");
  os.group.add(s_os);
  s_os->add_option("-d", os.d, "Minimum distance")->required();
  s_os->add_option("-w", os.w, "Weight")->required();
  s_os->add_option("--strategy", os.strategy, "Orbit union policy")
      ->check(CLI::IsMember({"largest", "input", "exact"}));
  s_os->add_option("--seed", os.seeds, "Restrict to orbits of these words");
  s_os->add_option("--seeds-file", os.seeds_file, "File of seed words");
  s_os->add_option("--exact-max-orbits", os.exact_max, "Orbit limit for --strategy exact");
  s_os->add_option("--seen-limit-mb", os.seen_limit_mb, "Seen-set memory budget before streaming");
  s_os->add_option("-o,--output", os.output, "Output code file");
  s_os->add_option("--inventory", os.inventory, "Write the orbit inventory here");

  BuildArgs build;
  auto* s_build = app.add_subcommand("build", "Assemble a configuration from its manifest");
  s_build->add_option("manifest", build.manifest, "Configuration manifest")->required()->check(CLI::ExistingFile);
  s_build->add_flag("--no-verify", build.no_verify, "Skip code certification and structural verification");
  s_build->add_option("-o,--output", build.output, "Write the resolved configuration manifest");

  VerifyArgs ver;
  auto* s_verify = app.add_subcommand("verify", "Certify that all centers are at least 60 degrees apart");
  s_verify->add_option("config", ver.config, "Configuration manifest")->required()->check(CLI::ExistingFile);
  s_verify->add_option("--mode", ver.mode, "structural, exhaustive or sample")
      ->check(CLI::IsMember({"structural", "exhaustive", "sample"}));
  s_verify->add_option("--pairs", ver.pairs, "Pairs drawn in sample mode");
  s_verify->add_option("--seed", ver.seed, "Seed for sample mode");
  s_verify->add_flag("--force", ver.force, "Allow exhaustive mode above 1,000,000 centers");

  CountArgs cnt;
  auto* s_count = app.add_subcommand("count", "Exact number of centers");
  s_count->add_option("--config", cnt.config, "Configuration manifest")->check(CLI::ExistingFile);
  s_count->add_option("-n", cnt.n, "Dimension (table mode)");
  s_count->add_option("--chain", cnt.chain, "Support sizes, e.g. 32,8,2 (table mode)");
  s_count->add_option("--table", cnt.table, "Bounds table (table mode)")->check(CLI::ExistingFile);

  ExportArgs exp;
  auto* s_export = app.add_subcommand("export", "Write every center");
  s_export->add_option("config", exp.config, "Configuration manifest")->required()->check(CLI::ExistingFile);
  s_export->add_option("--format", exp.format, "exact or decimal")->check(CLI::IsMember({"exact", "decimal"}));
  s_export->add_option("--cap", exp.cap, "Refuse to write more centers than this");
  s_export->add_option("-o,--output", exp.output, "Output file");

  OptimizeArgs opt, rep;
  auto* s_opt = app.add_subcommand("optimize", "Best support chain for a dimension");
  s_opt->add_option("-n", opt.n, "Dimension")->required();
  s_opt->add_option("--table", opt.table, "Bounds table (trivial floors if omitted)")->check(CLI::ExistingFile);
  s_opt->add_option("--max-levels", opt.max_levels, "Longest chain considered");
  s_opt->add_flag("--tsv", opt.tsv, "Tab-separated output");

  auto* s_rep = app.add_subcommand("report", "Compare best chains with known lattices");
  s_rep->add_option("--table", rep.table, "Bounds table (trivial floors if omitted)")->check(CLI::ExistingFile);
  s_rep->add_option("--dims", rep.dims, "Comma-separated dimensions");
  s_rep->add_option("--max-levels", rep.max_levels, "Longest chain considered");
  s_rep->add_flag("--tsv", rep.tsv, "Tab-separated output");

  std::string replay_path;
  auto* s_replay = app.add_subcommand("replay", "Re-run a recorded run manifest");
  s_replay->add_option("run_manifest", replay_path, "*.run file")->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  if (s_replay->parsed()) {
    if (replayed) throw std::invalid_argument("a run manifest cannot replay another");
    return dispatch(RunManifest::read(replay_path).args, true);
  }

  Context ctx;
  ctx.threads = resolve_threads(threads);
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "-j" || a == "--threads") {
      ++i;
      continue;
    }
    if (a.starts_with("--threads=") || (a.starts_with("-j") && a.size() > 2)) continue;
    ctx.manifest.args.push_back(a);
  }

  if (s_lex->parsed()) return run_lexicode(ctx, lex);
  if (s_cwlex->parsed()) return run_cw_lexicode(ctx, cwlex);
  if (s_comp->parsed()) {
    const auto code = complement(read_cw(comp.input));
    emit_code(ctx, code, comp.output, {"complement of " + fs::path(comp.input).filename().string()});
    return kExitOk;
  }
  if (s_shrt->parsed()) {
    const auto code = shorten(read_cw(shrt.input), shrt.position);
    emit_code(ctx, code, shrt.output,
              {"shortened " + fs::path(shrt.input).filename().string() + " at position " + std::to_string(shrt.position)});
    return kExitOk;
  }
  if (s_slice->parsed()) {
    const auto code = weight_slice(read_code_file(slice.input), slice.weight);
    emit_code(ctx, code, slice.output,
              {"weight-" + std::to_string(slice.weight) + " slice of " + fs::path(slice.input).filename().string()});
    return kExitOk;
  }
  if (s_orbit->parsed()) return run_orbit(ctx, orb);
  if (s_os->parsed()) return run_orbit_search(ctx, os);
  if (s_build->parsed()) return run_build(ctx, build);
  if (s_verify->parsed()) return run_verify(ctx, ver);
  if (s_count->parsed()) return run_count(ctx, cnt);
  if (s_export->parsed()) return run_export(ctx, exp);
  if (s_opt->parsed()) return run_optimize(ctx, opt);
  if (s_rep->parsed()) return run_report(ctx, rep);
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Rejected& e) {
    std::cerr << "kissing: " << e.what() << '\n';
    return kExitRejected;
  } catch (const ChainViolation& e) {
    std::cerr << "kissing: invalid chain (level " << e.level() << "): " << e.what() << '\n';
    return kExitRejected;
  } catch (const LevelError& e) {
    std::cerr << "kissing: " << e.what() << '\n';
    return kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "kissing: " << e.what() << '\n';
    return kExitError;
  }
}
