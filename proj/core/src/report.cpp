#include "toricnash/report.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toricnash/minimal_model.hpp"
#include "toricnash/oracles.hpp"
#include "toricnash/valuations.hpp"

namespace toricnash {

using Json = nlohmann::ordered_json;

namespace {

// ---- input ----------------------------------------------------------------

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  raise(ErrorKind::InvalidInput, "field '" + field + "': " + what);
}

Integer read_integer(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), [](char ch) {
          return ch >= '0' && ch <= '9';
        }))
      return Integer(s);
  }
  bad_field(field, "expected an integer");
}

std::size_t read_index(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad_field(field, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

LatticeVector read_vector(const Json& j, const std::string& field, std::optional<std::size_t> len) {
  if (!j.is_array()) bad_field(field, "expected an array of integers");
  if (len && j.size() != *len) bad_field(field, "expected " + std::to_string(*len) + " coordinates, got " + std::to_string(j.size()));
  std::vector<Integer> x;
  for (std::size_t i = 0; i < j.size(); ++i) x.push_back(read_integer(j[i], field + "[" + std::to_string(i) + "]"));
  return LatticeVector(std::move(x));
}

std::vector<LatticeVector> read_vectors(const Json& j, const std::string& field, std::optional<std::size_t> len) {
  if (!j.is_array()) bad_field(field, "expected an array");
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_vector(j[i], field + "[" + std::to_string(i) + "]", len));
  return out;
}

std::vector<std::size_t> read_indices(const Json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_index(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad_field(where.empty() ? "<root>" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad_field(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string path(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

bool read_bool(const Json& j, const std::string& field) {
  if (!j.is_boolean()) bad_field(field, "expected true or false");
  return j.get<bool>();
}

std::optional<bool> read_opt_bool(const Json& j, const std::string& field) {
  if (j.is_null()) return std::nullopt;
  return read_bool(j, field);
}

std::string read_string(const Json& j, const std::string& field) {
  if (!j.is_string()) bad_field(field, "expected a string");
  return j.get<std::string>();
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    raise(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// ---- output ---------------------------------------------------------------

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

Json vector_json(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& x : v.coords()) a.push_back(integer_json(x));
  return a;
}

Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json report_json(const Report& r) {
  Json j;
  j["name"] = r.name;
  j["lattice_rank"] = r.lattice_rank;
  j["rays"] = vectors_json(r.rays);
  j["dim"] = r.dim;
  j["is_simplicial"] = r.is_simplicial;
  j["is_regular_variety"] = r.is_regular_variety;
  j["is_terminal_variety"] = opt_bool(r.is_terminal_variety);
  j["is_canonical_variety"] = opt_bool(r.is_canonical_variety);
  j["singular_faces"] = r.singular_faces;
  j["min_set"] = r.min_set ? vectors_json(*r.min_set) : Json(nullptr);
  j["ter_set"] = r.ter_set ? vectors_json(*r.ter_set) : Json(nullptr);
  if (r.fan) {
    Json f;
    f["rays"] = vectors_json(r.fan->rays);
    f["max_cones"] = r.fan->max_cones;
    Json walls = Json::array();
    for (const auto& w : r.fan->walls) {
      Json wj;
      wj["wall"] = w.wall;
      wj["left_cone"] = w.left_cone;
      wj["right_cone"] = w.right_cone;
      wj["bend"] = to_string(w.bend);
      wj["intra_face"] = w.intra_face;
      walls.push_back(std::move(wj));
    }
    f["walls"] = std::move(walls);
    f["exceptional_rays"] = vectors_json(r.fan->exceptional_rays);
    j["fan"] = std::move(f);
  } else {
    j["fan"] = nullptr;
  }
  Json v;
  v["invariants"] = opt_bool(r.verification.invariants);
  v["minimal_model"] = opt_bool(r.verification.minimal_model);
  v["all_terminal"] = opt_bool(r.verification.all_terminal);
  v["all_nef"] = opt_bool(r.verification.all_nef);
  v["failures"] = r.verification.failures;
  j["verification"] = std::move(v);
  if (r.oracle) {
    Json o;
    o["height"] = integer_json(r.oracle->height);
    o["box"] = integer_json(r.oracle->box);
    o["checks"] = r.oracle->checks;
    Json diffs = Json::array();
    for (const auto& d : r.oracle->diffs) {
      Json dj;
      dj["check"] = d.check;
      dj["only_oracle"] = vectors_json(d.only_oracle);
      dj["only_main"] = vectors_json(d.only_main);
      diffs.push_back(std::move(dj));
    }
    o["diffs"] = std::move(diffs);
    o["ok"] = r.oracle->ok();
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  if (!r.timings_ms.empty()) {
    Json t = Json::object();
    for (const auto& [k, ms] : r.timings_ms) t[k] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

Report report_from(const Json& j) {
  Report r;
  r.name = read_string(member(j, "name", ""), "name");
  r.lattice_rank = read_index(member(j, "lattice_rank", ""), "lattice_rank");
  const std::size_t n = r.lattice_rank;
  r.rays = read_vectors(member(j, "rays", ""), "rays", n);
  r.dim = read_index(member(j, "dim", ""), "dim");
  r.is_simplicial = read_bool(member(j, "is_simplicial", ""), "is_simplicial");
  r.is_regular_variety = read_bool(member(j, "is_regular_variety", ""), "is_regular_variety");
  r.is_terminal_variety = read_opt_bool(member(j, "is_terminal_variety", ""), "is_terminal_variety");
  r.is_canonical_variety = read_opt_bool(member(j, "is_canonical_variety", ""), "is_canonical_variety");
  const Json& sf = member(j, "singular_faces", "");
  if (!sf.is_array()) bad_field("singular_faces", "expected an array");
  for (std::size_t i = 0; i < sf.size(); ++i)
    r.singular_faces.push_back(read_indices(sf[i], "singular_faces[" + std::to_string(i) + "]"));
  for (const char* key : {"min_set", "ter_set"}) {
    const Json& s = member(j, key, "");
    auto& slot = std::string(key) == "min_set" ? r.min_set : r.ter_set;
    if (!s.is_null()) slot = read_vectors(s, key, n);
  }
  const Json& f = member(j, "fan", "");
  if (!f.is_null()) {
    FanSummary fan;
    fan.rays = read_vectors(member(f, "rays", "fan"), "fan.rays", n);
    const Json& mc = member(f, "max_cones", "fan");
    if (!mc.is_array()) bad_field("fan.max_cones", "expected an array");
    for (std::size_t i = 0; i < mc.size(); ++i)
      fan.max_cones.push_back(read_indices(mc[i], "fan.max_cones[" + std::to_string(i) + "]"));
    const Json& walls = member(f, "walls", "fan");
    if (!walls.is_array()) bad_field("fan.walls", "expected an array");
    for (std::size_t i = 0; i < walls.size(); ++i) {
      const std::string where = "fan.walls[" + std::to_string(i) + "]";
      WallSummary w;
      w.wall = read_indices(member(walls[i], "wall", where), path(where, "wall"));
      w.left_cone = read_index(member(walls[i], "left_cone", where), path(where, "left_cone"));
      w.right_cone = read_index(member(walls[i], "right_cone", where), path(where, "right_cone"));
      try {
        w.bend = parse_rational(read_string(member(walls[i], "bend", where), path(where, "bend")));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidInput) throw;
        bad_field(path(where, "bend"), "expected a rational \"p/q\"");
      }
      w.intra_face = read_bool(member(walls[i], "intra_face", where), path(where, "intra_face"));
      fan.walls.push_back(std::move(w));
    }
    fan.exceptional_rays = read_vectors(member(f, "exceptional_rays", "fan"), "fan.exceptional_rays", n);
    r.fan = std::move(fan);
  }
  const Json& v = member(j, "verification", "");
  r.verification.invariants = read_opt_bool(member(v, "invariants", "verification"), "verification.invariants");
  r.verification.minimal_model =
      read_opt_bool(member(v, "minimal_model", "verification"), "verification.minimal_model");
  r.verification.all_terminal = read_opt_bool(member(v, "all_terminal", "verification"), "verification.all_terminal");
  r.verification.all_nef = read_opt_bool(member(v, "all_nef", "verification"), "verification.all_nef");
  const Json& fl = member(v, "failures", "verification");
  if (!fl.is_array()) bad_field("verification.failures", "expected an array");
  for (std::size_t i = 0; i < fl.size(); ++i)
    r.verification.failures.push_back(read_string(fl[i], "verification.failures[" + std::to_string(i) + "]"));
  const Json& o = member(j, "oracle", "");
  if (!o.is_null()) {
    OracleSummary os;
    os.height = read_integer(member(o, "height", "oracle"), "oracle.height");
    os.box = read_integer(member(o, "box", "oracle"), "oracle.box");
    const Json& checks = member(o, "checks", "oracle");
    if (!checks.is_array()) bad_field("oracle.checks", "expected an array");
    for (std::size_t i = 0; i < checks.size(); ++i)
      os.checks.push_back(read_string(checks[i], "oracle.checks[" + std::to_string(i) + "]"));
    const Json& diffs = member(o, "diffs", "oracle");
    if (!diffs.is_array()) bad_field("oracle.diffs", "expected an array");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      const std::string where = "oracle.diffs[" + std::to_string(i) + "]";
      OracleDiff d;
      d.check = read_string(member(diffs[i], "check", where), path(where, "check"));
      d.only_oracle = read_vectors(member(diffs[i], "only_oracle", where), path(where, "only_oracle"), n);
      d.only_main = read_vectors(member(diffs[i], "only_main", where), path(where, "only_main"), n);
      os.diffs.push_back(std::move(d));
    }
    if (read_bool(member(o, "ok", "oracle"), "oracle.ok") != os.ok()) bad_field("oracle.ok", "disagrees with diffs");
    r.oracle = std::move(os);
  }
  if (auto it = j.find("timings_ms"); it != j.end()) {
    if (!it->is_object()) bad_field("timings_ms", "expected an object");
    for (const auto& [k, ms] : it->items()) {
      if (!ms.is_number()) bad_field("timings_ms." + k, "expected a number");
      r.timings_ms.emplace_back(k, ms.get<double>());
    }
  }
  return r;
}

// ---- analysis -------------------------------------------------------------

OracleDiff diff_sets(std::string check, std::vector<LatticeVector> oracle, std::vector<LatticeVector> main) {
  std::sort(oracle.begin(), oracle.end());
  std::sort(main.begin(), main.end());
  OracleDiff d{std::move(check), {}, {}};
  std::set_difference(oracle.begin(), oracle.end(), main.begin(), main.end(), std::back_inserter(d.only_oracle));
  std::set_difference(main.begin(), main.end(), oracle.begin(), oracle.end(), std::back_inserter(d.only_main));
  return d;
}

bool within_box(const LatticeVector& v, const Integer& b) {
  return std::all_of(v.coords().begin(), v.coords().end(), [&](const Integer& x) { return abs(x) <= b; });
}

void run_oracles(const Cone& c, Report& r, const ReportOptions& opts) {
  OracleSummary os;
  os.box = opts.box;
  auto record = [&](OracleDiff d) {
    os.checks.push_back(d.check);
    if (!d.empty()) os.diffs.push_back(std::move(d));
  };
  const auto min_set = r.min_set ? *r.min_set : nash_valuations(c);
  const auto ell = height_functional(c);

  Integer top = 0;
  for (const auto& v : min_set) top = std::max(top, dot(ell, v));
  for (const auto& v : c.rays()) top = std::max(top, dot(ell, v));
  os.height = opts.height ? *opts.height : 2 * top;

  std::vector<LatticeVector> in_slab;
  for (const auto& v : min_set)
    if (dot(ell, v) <= os.height) in_slab.push_back(v);
  record(diff_sets("min", oracle::brute_min(c, os.height), in_slab));

  // Every singular point in the box dominates something in Min.
  std::vector<LatticeVector> uncovered;
  for (const auto& v : oracle::cone_points_in_box(c, opts.box)) {
    if (v.is_zero() || !oracle::singular_point(c, v)) continue;
    if (std::none_of(min_set.begin(), min_set.end(), [&](const LatticeVector& m) { return c.contains(v - m); }))
      uncovered.push_back(v);
  }
  record(diff_sets("coverage", uncovered, {}));

  std::vector<LatticeVector> hb;
  for (const auto& h : hilbert_basis(c).elements)
    if (within_box(h, opts.box)) hb.push_back(h);
  record(diff_sets("hilbert", oracle::brute_hilbert(c, opts.box), hb));

  if (c.rank() == 2 && c.dim() == 2) {
    const auto hj = oracle::hj_boundary(c);
    record(diff_sets("hj:min", hj, min_set));
    record(diff_sets("hj:ter", hj, r.ter_set ? *r.ter_set : terminal_valuations(c)));
  }
  if (c.is_simplicial()) {
    // A disagreement shows up as the cone's rays on the side that says "not terminal".
    const bool main_t = is_terminal_cone(c), brute_t = oracle::brute_is_terminal(c);
    record(diff_sets("terminal", brute_t ? std::vector<LatticeVector>{} : c.rays(),
                     main_t ? std::vector<LatticeVector>{} : c.rays()));
    const bool main_c = is_canonical_cone(c), brute_c = oracle::brute_is_canonical(c);
    record(diff_sets("canonical", brute_c ? std::vector<LatticeVector>{} : c.rays(),
                     main_c ? std::vector<LatticeVector>{} : c.rays()));
  }
  r.oracle = std::move(os);
}

std::string index_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string vector_list(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + vs[i].str();
  return out;
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

bool sorted_unique(const std::vector<LatticeVector>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](const auto& a, const auto& b) { return !(a < b); }) == v.end();
}

}  // namespace

ConeSpec parse_cone_spec_json(const std::string& text) {
  Json j = parse_document(text);
  if (!j.is_object()) bad_field("<root>", "expected an object");
  ConeSpec spec;
  spec.name = j.contains("name") ? read_string(j["name"], "name") : "input";
  const Json& rank = member(j, "lattice_rank", "");
  if (!rank.is_number_integer() || rank.get<long long>() < 1) bad_field("lattice_rank", "expected a positive integer");
  spec.lattice_rank = rank.get<std::size_t>();
  spec.rays = read_vectors(member(j, "rays", ""), "rays", spec.lattice_rank);
  if (spec.rays.empty()) bad_field("rays", "expected at least one ray");
  return spec;
}

ConeSpec parse_inline_rays(const std::string& text, std::string name) {
  ConeSpec spec;
  spec.name = std::move(name);
  std::stringstream tuples(text);
  std::string tuple;
  while (std::getline(tuples, tuple, ';')) {
    const std::string field = "rays[" + std::to_string(spec.rays.size()) + "]";
    std::stringstream parts(tuple);
    std::string part;
    std::vector<Integer> x;
    while (std::getline(parts, part, ',')) {
      part.erase(0, part.find_first_not_of(" \t"));
      part.erase(part.find_last_not_of(" \t") + 1);
      x.push_back(read_integer(Json(part), field + "[" + std::to_string(x.size()) + "]"));
    }
    if (x.empty()) bad_field(field, "empty tuple");
    if (spec.rays.empty()) spec.lattice_rank = x.size();
    if (x.size() != spec.lattice_rank)
      bad_field(field, "expected " + std::to_string(spec.lattice_rank) + " coordinates, got " + std::to_string(x.size()));
    spec.rays.emplace_back(std::move(x));
  }
  if (spec.rays.empty()) bad_field("rays", "expected at least one ray");
  return spec;
}

bool Report::ok() const {
  if (!verification.failures.empty()) return false;
  for (const auto& flag : {verification.invariants, verification.minimal_model, verification.all_terminal,
                           verification.all_nef})
    if (flag && !*flag) return false;
  return !oracle || oracle->ok();
}

Report build_report(const ConeSpec& spec, const ReportOptions& opts) {
  using clock = std::chrono::steady_clock;
  auto last = clock::now();
  Report r;
  auto lap = [&](const char* what) {
    auto now = clock::now();
    r.timings_ms.emplace_back(what, std::chrono::duration<double, std::milli>(now - last).count());
    last = now;
  };

  r.name = spec.name;
  r.lattice_rank = spec.lattice_rank;
  const Cone c = spec.to_cone();
  r.rays = c.rays();
  r.dim = c.dim();
  r.is_simplicial = c.is_simplicial();
  const auto sing = singular_locus(c);
  r.is_regular_variety = sing.empty();
  for (const auto& f : sing.singular_faces) r.singular_faces.push_back(f.ray_indices);
  std::sort(r.singular_faces.begin(), r.singular_faces.end());
  if (c.is_simplicial()) {
    r.is_terminal_variety = is_terminal_cone(c);
    r.is_canonical_variety = is_canonical_cone(c);
  }
  lap("cone");

  if (opts.min && opts.ter) {
    auto v = analyze(c);
    r.min_set = std::move(v.min_set);
    r.ter_set = std::move(v.ter_set);
    r.verification.invariants = true;
  } else if (opts.min) {
    r.min_set = nash_valuations(c);
  } else if (opts.ter) {
    r.ter_set = terminal_valuations(c);
  }
  lap("valuations");

  if (opts.mmp) {
    const auto mm = minimal_model_fan(c, opts.order);
    FanSummary fan;
    fan.rays = mm.fan.rays;
    fan.max_cones = mm.fan.max_cones;
    for (const auto& w : mm.certificates)
      fan.walls.push_back({w.wall, w.left_cone, w.right_cone, w.bend, w.intra_face});
    fan.exceptional_rays = mm.exceptional_rays;
    r.fan = std::move(fan);
    auto check = verify_minimal_model(c, mm);
    r.verification.minimal_model = check.ok();
    r.verification.all_terminal = mm.all_terminal;
    r.verification.all_nef = mm.all_nef;
    r.verification.failures = std::move(check.failures);
  }
  lap("minimal_model");

  if (opts.oracle) {
    run_oracles(c, r, opts);
    lap("oracle");
  }
  if (!opts.timings) r.timings_ms.clear();
  return r;
}

std::vector<OracleDiff> compare_reports(const Report& expected, const Report& actual) {
  std::vector<OracleDiff> out;
  auto add = [&](OracleDiff d) {
    if (!d.empty()) out.push_back(std::move(d));
  };
  if (expected.min_set && actual.min_set) add(diff_sets("golden:min_set", *expected.min_set, *actual.min_set));
  if (expected.ter_set && actual.ter_set) add(diff_sets("golden:ter_set", *expected.ter_set, *actual.ter_set));
  if (expected.fan && actual.fan) {
    add(diff_sets("golden:fan.rays", expected.fan->rays, actual.fan->rays));
    add(diff_sets("golden:fan.exceptional_rays", expected.fan->exceptional_rays, actual.fan->exceptional_rays));
  }
  add(diff_sets("golden:rays", expected.rays, actual.rays));
  return out;
}

std::string to_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<Report>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(report_json(r));
  return a.dump(2) + "\n";
}

Report report_from_json(const std::string& text) { return report_from(parse_document(text)); }

std::vector<std::string> validate_report_json(const std::string& text) {
  std::vector<std::string> problems;
  Report r;
  try {
    r = report_from_json(text);
  } catch (const Error& e) {
    problems.push_back(e.what());
    return problems;
  }
  const std::size_t nrays = r.rays.size();
  auto check_sorted = [&](const std::vector<LatticeVector>& v, const std::string& field) {
    if (!sorted_unique(v)) problems.push_back(field + " is not strictly lexicographically sorted");
  };
  check_sorted(r.rays, "rays");
  if (r.dim > r.lattice_rank) problems.push_back("dim exceeds lattice_rank");
  if (r.is_simplicial != (nrays == r.dim)) problems.push_back("is_simplicial disagrees with the ray count");
  if (r.is_terminal_variety.has_value() != r.is_simplicial) problems.push_back("is_terminal_variety must be set exactly for simplicial cones");
  if (!std::is_sorted(r.singular_faces.begin(), r.singular_faces.end())) problems.push_back("singular_faces is not sorted");
  for (const auto& f : r.singular_faces) {
    if (!std::is_sorted(f.begin(), f.end())) problems.push_back("singular face " + index_set(f) + " is not sorted");
    for (auto i : f)
      if (i >= nrays) problems.push_back("singular face " + index_set(f) + " has an index out of range");
  }
  if (r.is_regular_variety != r.singular_faces.empty()) problems.push_back("is_regular_variety disagrees with singular_faces");
  if (r.min_set) check_sorted(*r.min_set, "min_set");
  if (r.ter_set) check_sorted(*r.ter_set, "ter_set");
  if (r.fan) {
    check_sorted(r.fan->rays, "fan.rays");
    check_sorted(r.fan->exceptional_rays, "fan.exceptional_rays");
    for (const auto& mc : r.fan->max_cones)
      for (auto i : mc)
        if (i >= r.fan->rays.size()) problems.push_back("max cone " + index_set(mc) + " has an index out of range");
    for (const auto& w : r.fan->walls)
      if (w.left_cone >= r.fan->max_cones.size() || w.right_cone >= r.fan->max_cones.size())
        problems.push_back("wall " + index_set(w.wall) + " refers to a missing max cone");
  }
  if (r.oracle)
    for (const auto& d : r.oracle->diffs) {
      check_sorted(d.only_oracle, "oracle diff " + d.check + " only_oracle");
      check_sorted(d.only_main, "oracle diff " + d.check + " only_main");
    }
  return problems;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "cone " << r.name << "  rank " << r.lattice_rank << ", dim " << r.dim
     << (r.is_simplicial ? ", simplicial" : ", not simplicial") << "\n";
  os << "  rays: " << vector_list(r.rays) << "\n";
  os << "  regular: " << (r.is_regular_variety ? "yes" : "no") << "  terminal: " << yes_no(r.is_terminal_variety)
     << "  canonical: " << yes_no(r.is_canonical_variety) << "\n";
  os << "  singular faces:";
  if (r.singular_faces.empty()) os << " none";
  for (const auto& f : r.singular_faces) os << " " << index_set(f);
  os << "\n";
  if (r.min_set) os << "  Min [" << r.min_set->size() << "]: " << vector_list(*r.min_set) << "\n";
  if (r.ter_set) os << "  Ter [" << r.ter_set->size() << "]: " << vector_list(*r.ter_set) << "\n";
  if (r.fan) {
    const auto& f = *r.fan;
    os << "  fan: " << f.rays.size() << " rays, " << f.max_cones.size() << " max cones, " << f.walls.size()
       << " interior walls\n";
    os << "    rays: " << vector_list(f.rays) << "\n";
    os << "    exceptional: " << vector_list(f.exceptional_rays) << "\n";
    os << "    max cones:";
    for (const auto& mc : f.max_cones) os << " " << index_set(mc);
    os << "\n";
    for (const auto& w : f.walls)
      os << "    wall " << index_set(w.wall) << " between " << w.left_cone << " and " << w.right_cone << ": bend "
         << to_string(w.bend) << (w.intra_face ? " (same compact face)" : "") << "\n";
  }
  const auto& v = r.verification;
  os << "  verification: invariants " << yes_no(v.invariants) << ", minimal model " << yes_no(v.minimal_model)
     << ", terminal cones " << yes_no(v.all_terminal) << ", nef " << yes_no(v.all_nef) << "\n";
  for (const auto& f : v.failures) os << "    FAILED: " << f << "\n";
  if (r.oracle) {
    const auto& o = *r.oracle;
    os << "  oracle: height " << o.height << ", box " << o.box << ", checks";
    for (const auto& c : o.checks) os << " " << c;
    os << (o.ok() ? ", no diffs" : ", DIFFS") << "\n";
    for (const auto& d : o.diffs) {
      const bool golden = d.check.rfind("golden:", 0) == 0;
      os << "    " << d.check << ":\n";
      for (const auto& x : d.only_oracle) os << "      - " << x << (golden ? "  (golden only)\n" : "  (oracle only)\n");
      for (const auto& x : d.only_main) os << "      + " << x << (golden ? "  (computed only)\n" : "  (main path only)\n");
    }
  }
  if (!r.timings_ms.empty()) {
    os << "  timings (ms):";
    for (const auto& [k, ms] : r.timings_ms) os << " " << k << "=" << ms;
    os << "\n";
  }
  return os.str();
}

}  // namespace toricnash
