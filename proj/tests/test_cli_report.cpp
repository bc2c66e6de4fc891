#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "toricnash/report.hpp"
#include "toricnash_cli/cli.hpp"

using namespace toricnash;
using namespace testing_support;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "toricnash");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string fixture(const std::string& name) { return std::string(TORICNASH_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("catalog listing") {
  auto r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "terminal-112"));
  CHECK(contains(r.out, "(0,1,0) (1,1,2)"));
  auto j = run({"catalog", "--json"});
  CHECK(j.code == 0);
  CHECK(contains(j.out, "\"name\": \"terminal-112\""));
  for (const auto& spec : catalog_corpus()) CHECK(contains(r.out, spec.name));
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_lookup("A3")->rays == std::vector<LatticeVector>{{1, 0}, {1, 4}});
  CHECK(catalog_lookup("regular-5")->rays.size() == 5);
  CHECK(catalog_lookup("quotient-7-3"));
  CHECK_FALSE(catalog_lookup("quotient-6-3"));
  CHECK_FALSE(catalog_lookup("regular-0"));
  CHECK_FALSE(catalog_lookup("nonsense"));
}

TEST_CASE("random cones are reproducible") {
  RandomConeOptions opts;
  opts.rank = 3;
  auto a = random_cones(7, 5, opts);
  auto b = random_cones(7, 5, opts);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rays == b[i].rays);
    CHECK(a[i].name == "random-7-" + std::to_string(i));
    CHECK_NOTHROW(a[i].to_cone());
  }
  opts.simplicial = true;
  opts.max_abs_det = 20;
  for (const auto& s : random_cones(3, 10, opts)) {
    auto c = s.to_cone();
    CHECK(c.is_simplicial());
    CHECK(c.dim() == 3);
    CHECK(abs(det(IntMatrix::from_columns(c.rays(), 3))) <= 20);
  }
}

TEST_CASE("analyze the catalog examples") {
  auto p = run({"analyze", "--catalog", "terminal-112"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "Min [1]: (1,1,1)"));
  CHECK(contains(p.out, "Ter [0]: none"));

  auto a3 = run({"analyze", "--catalog", "A3", "--json"});
  CHECK(a3.code == 0);
  auto rep = report_from_json(a3.out);
  CHECK(*rep.min_set == vecs({{1, 1}, {1, 2}, {1, 3}}));
  CHECK(*rep.ter_set == *rep.min_set);
  REQUIRE(rep.fan);
  CHECK(rep.fan->max_cones.size() == 4);
  for (const auto& w : rep.fan->walls) CHECK(w.bend == 0);

  auto reg = report_from_json(run({"analyze", "--catalog", "regular-3", "--json"}).out);
  CHECK(reg.min_set->empty());
  CHECK(reg.ter_set->empty());
  CHECK(reg.singular_faces.empty());
  CHECK(reg.is_regular_variety);

  auto third = report_from_json(run({"analyze", "--catalog", "third-111", "--json"}).out);
  CHECK(*third.min_set == vecs({{0, 0, 1}}));
  CHECK(*third.ter_set == vecs({{0, 0, 1}}));
  CHECK(third.is_terminal_variety == false);
  CHECK(third.is_canonical_variety == true);
}

TEST_CASE("subsets of the computation") {
  auto r = report_from_json(run({"analyze", "--catalog", "A2", "--min", "--json"}).out);
  CHECK(r.min_set);
  CHECK_FALSE(r.ter_set);
  CHECK_FALSE(r.fan);
  r = report_from_json(run({"analyze", "--catalog", "A2", "--mmp", "--json"}).out);
  CHECK_FALSE(r.min_set);
  CHECK(r.fan);
}

TEST_CASE("input forms") {
  auto j = run({"analyze", "--json"}, R"({"name": "stdin-cone", "lattice_rank": 2, "rays": [[1,0],[1,4]]})");
  CHECK(j.code == 0);
  CHECK(report_from_json(j.out).name == "stdin-cone");
  auto i = run({"analyze", "--rays", "1,0;1,4", "--json"});
  CHECK(i.code == 0);
  CHECK(*report_from_json(i.out).min_set == *report_from_json(j.out).min_set);
  // A stored report carries its cone, so it can be analyzed again.
  auto f = run({"analyze", fixture("terminal-112.json"), "--json"});
  CHECK(f.code == 0);
  CHECK(compare_reports(report_from_json(f.out), build_report(*catalog_lookup("terminal-112"))).empty());
  CHECK(run({"analyze", fixture("missing.json")}).code == 2);
}

TEST_CASE("user errors") {
  auto r = run({"analyze", "--json"}, R"({"lattice_rank": 2, "rays": [[1,0],[-1,0]]})");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "NotStronglyConvex"));

  r = run({"analyze"}, R"({"lattice_rank": 2, "rays": [[1,0],[1,"x"]]})");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "rays[1][1]"));

  r = run({"analyze"}, R"({"lattice_rank": 3, "rays": [[1,0],[1,1]]})");
  CHECK(r.code == 2);

  r = run({"analyze"}, "{not json");
  CHECK(r.code == 2);

  r = run({"analyze", "--catalog", "nope"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "nope"));

  r = run({"analyze", "--catalog", "A2", "--rays", "1,0;0,1"});
  CHECK(r.code == 2);

  r = run({"analyze", "--bogus"});
  CHECK(r.code == 2);

  r = run({"analyze", "--catalog", "A2", "--height", "abc"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--height"));

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("oracle runs") {
  auto p = run({"analyze", "--catalog", "terminal-112", "--oracle", "--height", "10", "--json"});
  CHECK(p.code == 0);
  auto rep = report_from_json(p.out);
  REQUIRE(rep.oracle);
  CHECK(rep.oracle->height == 10);
  CHECK(rep.oracle->ok());
  CHECK(std::count(rep.oracle->checks.begin(), rep.oracle->checks.end(), "min") == 1);

  auto a3 = run({"analyze", "--catalog", "A3", "--oracle"});
  CHECK(a3.code == 0);
  CHECK(contains(a3.out, "hj:min"));
  CHECK(contains(a3.out, "no diffs"));

  auto batch = run({"analyze", "--seed", "5", "--count", "3", "--rank", "3", "--bound", "5", "--oracle", "--quiet"});
  CHECK(batch.code == 0);
}

TEST_CASE("golden comparison") {
  auto ok = run({"analyze", "--catalog", "terminal-112", "--golden", fixture("terminal-112.json")});
  CHECK(ok.code == 0);
  auto bad = run({"analyze", "--catalog", "terminal-112", "--golden", fixture("terminal-112.corrupted.json")});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "golden:min_set"));
  CHECK(contains(bad.out, "(2,2,1)"));
  CHECK(contains(bad.out, "(1,1,1)"));

  std::ifstream f(fixture("terminal-112.json"));
  std::stringstream ss;
  ss << f.rdbuf();
  auto expected = report_from_json(ss.str());
  CHECK(compare_reports(expected, build_report(*catalog_lookup("terminal-112"))).empty());
}

TEST_CASE("json round trip, schema and determinism") {
  for (const auto& spec : catalog_corpus()) {
    auto r = build_report(spec);
    auto text = to_json(r);
    CHECK(validate_report_json(text).empty());
    CHECK(report_from_json(text) == r);
    CHECK(to_json(report_from_json(text)) == text);
    CHECK(to_json(build_report(spec)) == text);
    CHECK(r.timings_ms.empty());
  }
  ReportOptions opts;
  opts.timings = true;
  auto timed = build_report(*catalog_lookup("A2"), opts);
  CHECK_FALSE(timed.timings_ms.empty());

  CHECK_FALSE(validate_report_json("{}").empty());
  CHECK_FALSE(validate_report_json("[1]").empty());
  auto doc = to_json(build_report(*catalog_lookup("A2")));
  auto pos = doc.find("\"dim\": 2");
  REQUIRE(pos != std::string::npos);
  doc.replace(pos, 9, "\"dim\": \"two\"");
  CHECK_FALSE(validate_report_json(doc).empty());
  CHECK_THROWS_AS(report_from_json(doc), Error);
}

TEST_CASE("large coordinates survive the json form") {
  auto spec = parse_inline_rays("1,0;100000000000000000000,1");
  ReportOptions opts;
  opts.mmp = false;
  auto r = build_report(spec, opts);
  auto text = to_json(r);
  CHECK(contains(text, "\"100000000000000000000\""));
  CHECK(report_from_json(text) == r);
}

TEST_CASE("output file") {
  auto path = (std::filesystem::temp_directory_path() / "toricnash-out-test.json").string();
  auto r = run({"analyze", "--catalog", "A2", "--json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(report_from_json(ss.str()).name == "A2");
  std::remove(path.c_str());
}
