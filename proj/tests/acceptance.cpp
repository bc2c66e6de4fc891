// One PASS/FAIL line per acceptance criterion. Optional argv[1]: path of the
// toricnash tool, used to compare output bytes across two processes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "support.hpp"
#include "toricnash/minimal_model.hpp"
#include "toricnash/oracles.hpp"
#include "toricnash/report.hpp"

using namespace toricnash;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string show(const std::vector<LatticeVector>& vs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  os << "}";
  return os.str();
}

bool subset(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Cone> random_corpus(std::uint64_t seed, std::size_t count, RandomConeOptions opts) {
  std::vector<Cone> out;
  for (const auto& s : random_cones(seed, count, opts)) out.push_back(s.to_cone());
  return out;
}

// Catalog cones plus 50 simplicial rank-3 cones with |det| <= 20.
std::vector<std::pair<std::string, Cone>> oracle_corpus() {
  std::vector<std::pair<std::string, Cone>> out;
  for (const auto& s : catalog_corpus()) out.emplace_back(s.name, s.to_cone());
  RandomConeOptions opts;
  opts.rank = 3;
  opts.bound = 8;
  opts.simplicial = true;
  opts.max_abs_det = 20;
  for (const auto& s : random_cones(2024, 50, opts)) out.emplace_back(s.name, s.to_cone());
  return out;
}

Outcome terminal_112() {
  Outcome o;
  auto c = terminal_112_cone();
  auto r = analyze(c);
  if (r.min_set != vecs({{1, 1, 1}})) o.fail("Min = " + show(r.min_set));
  if (!r.ter_set.empty()) o.fail("Ter = " + show(r.ter_set));
  if (!r.is_terminal_variety || !*r.is_terminal_variety) o.fail("not terminal");
  auto m = minimal_model_fan(c);
  if (m.fan.rays != c.rays() || m.fan.max_cones.size() != 1) o.fail("fan is not {σ}");
  if (!verify_minimal_model(c, m)) o.fail("verification failed");
  return o;
}

Outcome inclusion_chain() {
  Outcome o;
  std::size_t n = 0;
  for (std::size_t rank : {2, 3, 4}) {
    RandomConeOptions opts;
    opts.rank = rank;
    opts.bound = 8;
    for (const auto& c : random_corpus(100 + rank, 70, opts)) {
      auto r = analyze(c);
      ++n;
      if (!subset(r.ter_set, r.min_set)) o.fail("Ter not in Min for rays " + show(c.rays()));
    }
  }
  if (n < 200) o.fail("only " + std::to_string(n) + " cones");
  if (o.ok) o.detail = std::to_string(n) + " cones";
  return o;
}

Outcome dimension_two() {
  Outcome o;
  RandomConeOptions opts;
  opts.rank = 2;
  opts.bound = 12;
  auto corpus = random_corpus(202, 120, opts);
  for (const auto& c : corpus) {
    auto r = analyze(c);
    auto hj = oracle::hj_boundary(c);
    if (r.min_set != r.ter_set) o.fail("Min != Ter for rays " + show(c.rays()));
    if (r.min_set != hj) o.fail("Min " + show(r.min_set) + " != HJ " + show(hj));
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " cones";
  return o;
}

Outcome a_n_family() {
  Outcome o;
  for (int n = 1; n <= 30; ++n) {
    auto c = cone({{1, 0}, {1, n + 1}});
    auto r = analyze(c);
    auto m = minimal_model_fan(c);
    if (r.min_set.size() != static_cast<std::size_t>(n)) o.fail("A" + std::to_string(n) + ": |Min| wrong");
    if (r.ter_set != r.min_set) o.fail("A" + std::to_string(n) + ": Ter != Min");
    if (m.fan.max_cones.size() != static_cast<std::size_t>(n + 1)) o.fail("A" + std::to_string(n) + ": max cones");
    for (const auto& w : m.certificates)
      if (w.bend != 0) o.fail("A" + std::to_string(n) + ": nonzero bend");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, c] : oracle_corpus()) {
    auto r = analyze(c);
    Integer top = 1;
    for (const auto& v : r.min_set) top = std::max(top, height(c, v));
    const Integer h = 2 * top;
    std::vector<LatticeVector> in_slab;
    for (const auto& v : r.min_set)
      if (height(c, v) <= h) in_slab.push_back(v);
    auto brute = oracle::brute_min(c, h);
    if (brute != in_slab) o.fail(name + ": brute Min " + show(brute) + " vs " + show(in_slab));
    // Coverage: every singular lattice point with coordinates <= 12 lies above Min.
    for (const auto& v : oracle::cone_points_in_box(c, 12)) {
      if (v.is_zero() || !oracle::singular_point(c, v)) continue;
      if (std::any_of(r.min_set.begin(), r.min_set.end(), [&](const auto& m) { return c.contains(v - m); }))
        continue;
      std::ostringstream os;
      os << name << ": " << v << " is above no element of Min";
      o.fail(os.str());
    }
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " cones";
  return o;
}

Outcome hilbert_equivalence() {
  Outcome o;
  for (const auto& [name, c] : oracle_corpus()) {
    std::vector<LatticeVector> boxed;
    for (const auto& h : hilbert_basis(c).elements)
      if (std::all_of(h.coords().begin(), h.coords().end(), [](const Integer& x) { return abs(x) <= 6; }))
        boxed.push_back(h);
    auto brute = oracle::brute_hilbert(c, 6);
    if (brute != boxed) o.fail(name + ": brute " + show(brute) + " vs " + show(boxed));
  }
  return o;
}

Outcome model_verification() {
  Outcome o;
  for (const auto& [name, c] : oracle_corpus()) {
    auto m = minimal_model_fan(c);
    auto v = verify_minimal_model(c, m);
    if (!v) o.fail(name + ": " + v.failures.front());
    if (!m.all_terminal || !m.all_nef) o.fail(name + ": flags");
    for (const auto& w : m.certificates) {
      if (w.bend < 0) o.fail(name + ": negative bend");
      if ((reverse_bend(m.fan, w) > 0) != (w.bend > 0)) o.fail(name + ": bend depends on the side");
    }
    std::vector<LatticeVector> singular_exceptional;
    for (const auto& e : m.exceptional_rays)
      if (oracle::singular_point(c, e)) singular_exceptional.push_back(e);
    if (singular_exceptional != terminal_valuations(c)) o.fail(name + ": exceptional rays vs Ter");
  }
  return o;
}

using Pattern = std::set<std::tuple<std::vector<LatticeVector>, std::vector<LatticeVector>, int>>;

Pattern bend_pattern(const Cone& c, const MinimalModelResult& m) {
  const auto gamma = newton_polyhedron(c);
  Pattern out;
  for (const auto& w : m.certificates) {
    auto a = gamma.maximal_compact_faces[m.fan.source_face[w.left_cone]].vertices;
    auto b = gamma.maximal_compact_faces[m.fan.source_face[w.right_cone]].vertices;
    if (b < a) std::swap(a, b);
    out.emplace(a, b, w.bend > 0 ? 1 : w.bend < 0 ? -1 : 0);
  }
  return out;
}

Outcome order_independence() {
  Outcome o;
  auto corpus = oracle_corpus();
  RandomConeOptions opts;
  opts.rank = 4;
  opts.bound = 4;
  for (const auto& s : random_cones(404, 10, opts)) corpus.emplace_back(s.name, s.to_cone());
  for (const auto& [name, c] : corpus) {
    auto f = minimal_model_fan(c, PlacingOrder::Forward);
    auto r = minimal_model_fan(c, PlacingOrder::Reverse);
    if (f.fan.rays != r.fan.rays) o.fail(name + ": rays differ");
    std::vector<LatticeVector> tf, tr;
    for (const auto& e : f.exceptional_rays)
      if (oracle::singular_point(c, e)) tf.push_back(e);
    for (const auto& e : r.exceptional_rays)
      if (oracle::singular_point(c, e)) tr.push_back(e);
    if (tf != tr) o.fail(name + ": Ter differs");
    if (bend_pattern(c, f) != bend_pattern(c, r)) o.fail(name + ": bend-sign pattern differs");
    if (!verify_minimal_model(c, r)) o.fail(name + ": reversed fan fails verification");
  }
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

Outcome deterministic_json(const std::string& tool) {
  Outcome o;
  std::vector<ConeSpec> specs = catalog_corpus();
  RandomConeOptions opts;
  for (const auto& s : random_cones(909, 20, opts)) specs.push_back(s);
  for (const auto& s : specs) {
    ReportOptions ro;
    ro.oracle = s.lattice_rank <= 3;
    ro.box = 4;
    if (to_json(build_report(s, ro)) != to_json(build_report(s, ro))) o.fail(s.name + ": in-process runs differ");
  }
  if (!tool.empty()) {
    const std::string cmd = "'" + tool + "' analyze --seed 909 --count 20 --json";
    auto first = capture(cmd), second = capture(cmd);
    if (first.empty()) o.fail("tool produced no output");
    if (first != second) o.fail("tool runs differ");
    if (o.ok) o.detail = "in-process and two tool processes";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "terminal-112: Min = {(1,1,1)}, Ter = {}, fan = {sigma}", 1, terminal_112},
      {2, "Ter within Min on random cones of rank 2-4", 60, inclusion_chain},
      {3, "rank two: Min = Ter = Hirzebruch-Jung boundary", 0, dimension_two},
      {4, "A_1..A_30: |Min| = n, n+1 cones, all bends 0", 5, a_n_family},
      {5, "Min against the brute-force slab and coverage oracles", 300, oracle_equivalence},
      {6, "Hilbert basis against brute force in the box |x| <= 6", 0, hilbert_equivalence},
      {7, "minimal model verification and wall certificates", 0, model_verification},
      {8, "reversed placing order: same rays, Ter and bend signs", 0, order_independence},
      {9, "byte-identical JSON across runs", 0, [&] { return deterministic_json(tool); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s > c.limit_s) o.fail("took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << "  (" << std::fixed
              << std::setprecision(2) << s << " s)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
