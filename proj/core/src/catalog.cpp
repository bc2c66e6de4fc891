#include "toricnash/catalog.hpp"

#include <charconv>
#include <random>

namespace toricnash {

namespace {

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

ConeSpec make(std::string name, std::size_t rank, std::vector<LatticeVector> rays) {
  return {std::move(name), rank, std::move(rays)};
}

// Uniform integer in [lo, hi] from raw engine output; independent of the
// standard library's distribution implementation.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"regular-2", "first quadrant; regular-<n> for any n >= 1"},
      {"regular-3", "first orthant in rank 3"},
      {"regular-4", "first orthant in rank 4"},
      {"A1", "cone((1,0),(1,2)); A<n> = cone((1,0),(1,n+1)) for any n >= 1"},
      {"A2", "cone((1,0),(1,3))"},
      {"A3", "cone((1,0),(1,4))"},
      {"quotient-5-2", "cone((0,1),(5,-2)); quotient-<r>-<a> for 0 < a < r, gcd(r,a) = 1"},
      {"quotient-7-3", "cone((0,1),(7,-3))"},
      {"odp", "cone over the unit square"},
      {"terminal-112", "terminal but not regular; Min = {(1,1,1)} and Ter is empty"},
      {"third-111", "cone((1,0,0),(0,1,0),(-1,-1,3))"},
  };
}

std::optional<ConeSpec> catalog_lookup(const std::string& name) {
  if (name == "odp") return make(name, 3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  if (name == "terminal-112") return make(name, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
  if (name == "third-111") return make(name, 3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 3}});
  std::string_view s = name;
  if (s.starts_with("regular-")) {
    auto n = parse_int(s.substr(8));
    if (!n || *n < 1 || *n > 64) return std::nullopt;
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < static_cast<std::size_t>(*n); ++i) rays.push_back(LatticeVector::unit(*n, i));
    return make(name, *n, std::move(rays));
  }
  if (s.starts_with("A")) {
    auto n = parse_int(s.substr(1));
    if (!n || *n < 1) return std::nullopt;
    return make(name, 2, {{1, 0}, {1, *n + 1}});
  }
  if (s.starts_with("quotient-")) {
    auto rest = s.substr(9);
    auto dash = rest.find('-');
    if (dash == std::string_view::npos) return std::nullopt;
    auto r = parse_int(rest.substr(0, dash));
    auto a = parse_int(rest.substr(dash + 1));
    if (!r || !a || *a <= 0 || *a >= *r || gcd(*r, *a) != 1) return std::nullopt;
    return make(name, 2, {{0, 1}, {*r, -*a}});
  }
  return std::nullopt;
}

std::vector<ConeSpec> random_cones(std::uint64_t seed, std::size_t count, const RandomConeOptions& opts) {
  if (opts.rank == 0 || opts.bound <= 0) raise(ErrorKind::InvalidInput, "random cones need rank >= 1 and bound >= 1");
  std::mt19937_64 rng(seed);
  std::vector<ConeSpec> out;
  while (out.size() < count) {
    const std::size_t m = opts.simplicial ? opts.rank
                                          : opts.rank + static_cast<std::size_t>(
                                                            draw(rng, 0, static_cast<long long>(opts.extra_rays)));
    std::vector<LatticeVector> rays;
    bool zero = false;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Integer> x(opts.rank);
      for (auto& xi : x) xi = draw(rng, -opts.bound, opts.bound);
      rays.emplace_back(std::move(x));
      zero = zero || rays.back().is_zero();
    }
    if (zero) continue;
    if (rank(std::span<const LatticeVector>(rays)) != opts.rank) continue;
    if (opts.simplicial && opts.max_abs_det > 0 &&
        abs(det(IntMatrix::from_columns(rays, opts.rank))) > opts.max_abs_det)
      continue;
    try {
      (void)cone_from_rays(rays, opts.rank);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotStronglyConvex) continue;
      throw;
    }
    out.push_back({"random-" + std::to_string(seed) + "-" + std::to_string(out.size()), opts.rank, std::move(rays)});
  }
  return out;
}

}  // namespace toricnash
