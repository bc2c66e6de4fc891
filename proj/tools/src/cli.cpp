#include "toricnash_cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toricnash/catalog.hpp"
#include "toricnash/report.hpp"

namespace toricnash::cli {

namespace {

struct AnalyzeArgs {
  std::string input;
  std::string rays;
  std::string catalog;
  std::string name;
  bool min = false, ter = false, mmp = false, all = false;
  bool json = false;
  std::string out;
  bool oracle = false;
  std::string height;
  long long box = 6;
  std::string golden;
  std::optional<std::uint64_t> seed;
  std::size_t count = 10;
  std::size_t rank = 3;
  long long bound = 8;
  bool reverse = false;
  bool timings = false;
  bool quiet = false;
};

std::string slurp(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) raise(ErrorKind::InvalidInput, "cannot read " + path);
  return slurp(f);
}

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  const char* dir = std::getenv("TORICNASH_OUTPUT_DIR");
  if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

std::vector<ConeSpec> inputs(const AnalyzeArgs& a, std::istream& in) {
  int sources = !a.input.empty() + !a.rays.empty() + !a.catalog.empty() + a.seed.has_value();
  if (sources > 1) raise(ErrorKind::InvalidInput, "give only one of FILE, --rays, --catalog, --seed");
  if (!a.rays.empty()) return {parse_inline_rays(a.rays, a.name.empty() ? "inline" : a.name)};
  if (!a.catalog.empty()) {
    auto spec = catalog_lookup(a.catalog);
    if (!spec) raise(ErrorKind::InvalidInput, "unknown catalog entry '" + a.catalog + "'");
    return {*spec};
  }
  if (a.seed) {
    RandomConeOptions opts;
    opts.rank = a.rank;
    opts.bound = a.bound;
    return random_cones(*a.seed, a.count, opts);
  }
  ConeSpec spec = parse_cone_spec_json(a.input.empty() || a.input == "-" ? slurp(in) : read_file(a.input));
  if (!a.name.empty()) spec.name = a.name;
  return {spec};
}

int analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out) {
  ReportOptions opts;
  if (a.min || a.ter || a.mmp) {
    opts.min = a.min || a.all;
    opts.ter = a.ter || a.all;
    opts.mmp = a.mmp || a.all;
  }
  opts.oracle = a.oracle;
  if (!a.height.empty()) {
    try {
      opts.height = Integer(a.height);
    } catch (const std::exception&) {
      raise(ErrorKind::InvalidInput, "field '--height': expected an integer");
    }
    if (*opts.height < 0) raise(ErrorKind::InvalidInput, "field '--height': expected a nonnegative integer");
  }
  if (a.box < 0) raise(ErrorKind::InvalidInput, "field '--box': expected a nonnegative integer");
  opts.box = a.box;
  opts.timings = a.timings;
  opts.order = a.reverse ? PlacingOrder::Reverse : PlacingOrder::Forward;

  std::optional<Report> golden;
  if (!a.golden.empty()) golden = report_from_json(read_file(a.golden));

  std::vector<Report> reports;
  for (const auto& spec : inputs(a, in)) {
    Report r = build_report(spec, opts);
    if (golden) {
      if (!r.oracle) r.oracle = OracleSummary{0, opts.box, {}, {}};
      r.oracle->checks.push_back("golden");
      for (auto& d : compare_reports(*golden, r)) r.oracle->diffs.push_back(std::move(d));
    }
    reports.push_back(std::move(r));
  }

  std::string rendered;
  if (a.json) {
    rendered = reports.size() == 1 && !a.seed ? to_json(reports.front()) : to_json(reports);
  } else {
    for (const auto& r : reports) rendered += to_text(r);
  }
  if (!a.out.empty()) {
    std::ofstream f(output_path(a.out));
    if (!f) raise(ErrorKind::InvalidInput, "cannot write " + output_path(a.out).string());
    f << rendered;
  } else if (!a.quiet) {
    out << rendered;
  }

  bool internal = false, mismatch = false;
  for (const auto& r : reports) {
    if (!r.verification.failures.empty()) internal = true;
    for (const auto& flag : {r.verification.minimal_model, r.verification.all_terminal, r.verification.all_nef})
      if (flag && !*flag) internal = true;
    if (r.oracle && !r.oracle->ok()) mismatch = true;
  }
  if (internal) return kInternal;
  return mismatch ? kMismatch : kOk;
}

int catalog(bool json, std::ostream& out) {
  if (json) {
    out << "[\n";
    auto entries = catalog_entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto spec = *catalog_lookup(entries[i].name);
      out << "  {\"name\": \"" << spec.name << "\", \"lattice_rank\": " << spec.lattice_rank << ", \"rays\": [";
      for (std::size_t j = 0; j < spec.rays.size(); ++j) {
        out << (j ? ", " : "") << "[";
        for (std::size_t k = 0; k < spec.rays[j].rank(); ++k) out << (k ? ", " : "") << spec.rays[j][k];
        out << "]";
      }
      out << "]}" << (i + 1 < entries.size() ? "," : "") << "\n";
    }
    out << "]\n";
    return kOk;
  }
  for (const auto& e : catalog_entries()) {
    const auto spec = *catalog_lookup(e.name);
    out << e.name << "\n  rays:";
    for (const auto& r : spec.rays) out << " " << r;
    out << "\n  " << e.description << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nash and terminal valuations of affine toric varieties", "toricnash"};
  app.require_subcommand(1);

  AnalyzeArgs a;
  auto* an = app.add_subcommand("analyze", "analyze one cone (or a seeded batch of random cones)");
  an->add_option("input", a.input, "JSON cone description; '-' or nothing reads standard input");
  an->add_option("--rays", a.rays, "inline rays, e.g. \"1,0,0;0,1,0;1,1,2\"");
  an->add_option("--catalog", a.catalog, "named cone from the catalog");
  an->add_option("--name", a.name, "name used in the report");
  an->add_flag("--min", a.min, "compute Min");
  an->add_flag("--ter", a.ter, "compute Ter");
  an->add_flag("--mmp", a.mmp, "compute and verify the minimal model fan");
  an->add_flag("--all", a.all, "compute everything (default)");
  an->add_flag("--json", a.json, "machine-readable output");
  an->add_option("--out", a.out, "write the report to a file (relative to $TORICNASH_OUTPUT_DIR if set)");
  an->add_flag("--oracle", a.oracle, "compare against the brute-force oracles");
  an->add_option("--height", a.height, "slab height for the Min oracle (default: twice the largest height)");
  an->add_option("--box", a.box, "coordinate bound for the box oracles")->capture_default_str();
  an->add_option("--golden", a.golden, "compare against a stored JSON report");
  an->add_option("--seed", a.seed, "analyze random cones drawn with this seed");
  an->add_option("--count", a.count, "number of random cones")->capture_default_str();
  an->add_option("--rank", a.rank, "rank of the random cones")->capture_default_str();
  an->add_option("--bound", a.bound, "coordinate bound of the random rays")->capture_default_str();
  an->add_flag("--reverse", a.reverse, "place lattice points in reverse order when triangulating");
  an->add_flag("--timings", a.timings, "include timings in the report");
  an->add_flag("--quiet", a.quiet, "print nothing on standard output");

  bool catalog_json = false;
  auto* cat = app.add_subcommand("catalog", "list the built-in cones");
  cat->add_flag("--json", catalog_json, "machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (*cat) return catalog(catalog_json, out);
    return analyze(a, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::InvariantViolation || e.kind() == ErrorKind::NonSimplicialFan) return kInternal;
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace toricnash::cli
