#include "toricnash/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricnash::oracle {

namespace {

// Calls f on every integer point of the box lo <= x <= hi, lexicographically.
template <class F>
void scan(const std::vector<Integer>& lo, const std::vector<Integer>& hi, F&& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<Integer> x = lo;
  while (true) {
    f(LatticeVector(x));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

// Integer bounding box of a finite set of rational points.
std::pair<std::vector<Integer>, std::vector<Integer>> bounds(const std::vector<std::vector<Rational>>& pts,
                                                             std::size_t n) {
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = pts.front()[i], mx = pts.front()[i];
    for (const auto& p : pts) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
  }
  return {lo, hi};
}

std::vector<Rational> as_rational(const LatticeVector& v) { return {v.coords().begin(), v.coords().end()}; }

Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    Integer q = floor_div(old_r, r);
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * ss;
    old_s = ss;
    ss = tmp;
    tmp = old_t - q * tt;
    old_t = tt;
    tt = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// λ with v = Σ λ_i u_i for independent u_i; nullopt when v is off their span.
std::optional<std::vector<Rational>> coefficients(const std::vector<LatticeVector>& u, const LatticeVector& v) {
  return solve_rational(IntMatrix::from_columns(u, v.rank()), v);
}

std::vector<Rational> simplex_levels(const Cone& c) {
  if (!c.is_simplicial()) raise(ErrorKind::NotSimplicial, "cone is not simplicial");
  const std::size_t n = c.rank();
  std::vector<std::vector<Rational>> corners{std::vector<Rational>(n)};
  for (const auto& u : c.rays()) corners.push_back(as_rational(u));
  auto [lo, hi] = bounds(corners, n);
  std::vector<Rational> levels;
  scan(lo, hi, [&](const LatticeVector& v) {
    if (v.is_zero() || !c.contains(v)) return;
    if (std::find(c.rays().begin(), c.rays().end(), v) != c.rays().end()) return;
    auto lambda = coefficients(c.rays(), v);
    invariant(lambda.has_value(), "point of a simplicial cone off its span");
    Rational s = 0;
    for (const auto& x : *lambda) s += x;
    if (s <= 1) levels.push_back(s);
  });
  return levels;
}

}  // namespace

std::vector<Integer> height_form(const Cone& c) {
  std::vector<Integer> l(c.rank());
  for (const auto& f : c.facet_normals())
    for (std::size_t i = 0; i < l.size(); ++i) l[i] += f[i];
  return l;
}

std::vector<LatticeVector> slab_points(const HeightSlab& slab) {
  const Cone& c = slab.cone;
  const std::size_t n = c.rank();
  const auto ell = height_form(c);
  // σ ∩ {ℓ <= H} is the simplex-like hull of 0 and the H u / ℓ(u).
  std::vector<std::vector<Rational>> corners{std::vector<Rational>(n)};
  for (const auto& u : c.rays()) {
    Rational s = Rational(slab.bound) / Rational(dot(ell, u));
    std::vector<Rational> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = s * Rational(u[i]);
    corners.push_back(std::move(p));
  }
  auto [lo, hi] = bounds(corners, n);
  std::vector<LatticeVector> out;
  scan(lo, hi, [&](const LatticeVector& v) {
    if (dot(ell, v) <= slab.bound && c.contains(v)) out.push_back(v);
  });
  return out;
}

bool singular_point(const Cone& c, const LatticeVector& v) {
  std::vector<const std::vector<Integer>*> tight;
  for (const auto& f : c.facet_normals())
    if (dot(f, v) == 0) tight.push_back(&f);
  std::vector<LatticeVector> face;
  for (const auto& u : c.rays())
    if (std::all_of(tight.begin(), tight.end(), [&](const auto* f) { return dot(*f, u) == 0; })) face.push_back(u);
  if (face.empty()) return false;
  if (rank(std::span<const LatticeVector>(face)) != face.size()) return true;
  for (const auto& d : snf_divisors(IntMatrix::from_rows(face, c.rank())))
    if (d != 1) return true;
  return false;
}

namespace {

// Facet values of lattice points as machine integers, with the singularity
// test cached per pattern of vanishing facets.
struct PointTable {
  const Cone& cone;
  std::map<std::vector<bool>, bool> singular_by_pattern;

  std::vector<long long> values(const LatticeVector& v) const {
    std::vector<long long> out;
    for (const auto& f : cone.facet_normals()) {
      Integer x = dot(f, v);
      invariant(abs(x) < (Integer(1) << 62), "facet value too large for the oracle");
      out.push_back(x.convert_to<long long>());
    }
    return out;
  }

  bool singular(const LatticeVector& v, const std::vector<long long>& vals) {
    std::vector<bool> pattern;
    for (auto x : vals) pattern.push_back(x == 0);
    auto it = singular_by_pattern.find(pattern);
    if (it == singular_by_pattern.end()) it = singular_by_pattern.emplace(pattern, singular_point(cone, v)).first;
    return it->second;
  }
};

bool dominates(const std::vector<long long>& lower, const std::vector<long long>& upper) {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return false;
  return true;
}

struct Ranked {
  Integer height;
  LatticeVector v;
  std::vector<long long> vals;
};

std::vector<Ranked> by_height(const Cone& c, std::vector<LatticeVector> pts, PointTable& table) {
  const auto ell = height_form(c);
  std::vector<Ranked> out;
  for (auto& v : pts) {
    auto vals = table.values(v);
    out.push_back({dot(ell, v), std::move(v), std::move(vals)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) { return a.height < b.height; });
  return out;
}

}  // namespace

std::vector<LatticeVector> brute_min(const Cone& c, const Integer& h) {
  PointTable table{c, {}};
  std::vector<LatticeVector> sing;
  for (auto& v : slab_points({c, h})) {
    if (v.is_zero()) continue;
    if (table.singular(v, table.values(v))) sing.push_back(std::move(v));
  }
  // In height order, a dominated point is dominated by an earlier minimal one:
  // ≤_σ is a partial order and lower points have strictly smaller height.
  std::vector<Ranked> minimal;
  for (auto& e : by_height(c, std::move(sing), table)) {
    bool below = std::any_of(minimal.begin(), minimal.end(), [&](const Ranked& m) { return dominates(m.vals, e.vals); });
    if (!below) minimal.push_back(std::move(e));
  }
  std::vector<LatticeVector> out;
  for (auto& m : minimal) out.push_back(std::move(m.v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> cone_points_in_box(const Cone& c, const Integer& b) {
  std::vector<Integer> lo(c.rank(), -b), hi(c.rank(), b);
  std::vector<LatticeVector> out;
  scan(lo, hi, [&](const LatticeVector& v) {
    if (c.contains(v)) out.push_back(v);
  });
  return out;
}

std::vector<LatticeVector> brute_hilbert(const Cone& c, const Integer& b) {
  if (c.is_zero()) return {};
  // An irreducible x in cone(u_S), S independent, has all coefficients below
  // 1 (else x - u_i is in σ), so it lies in the box bounded by the sum of the
  // dim largest |u_ik| in each coordinate.
  std::vector<Integer> lo(c.rank()), hi(c.rank());
  for (std::size_t k = 0; k < c.rank(); ++k) {
    std::vector<Integer> col;
    for (const auto& u : c.rays()) col.push_back(abs(u[k]));
    std::sort(col.rbegin(), col.rend());
    for (std::size_t i = 0; i < std::min(col.size(), c.dim()); ++i) hi[k] += col[i];
    lo[k] = -hi[k];
  }
  std::vector<LatticeVector> pts;
  scan(lo, hi, [&](const LatticeVector& v) {
    if (!v.is_zero() && c.contains(v)) pts.push_back(v);
  });
  // In height order a point is reducible iff it lies above an irreducible
  // point found earlier.
  PointTable table{c, {}};
  const auto ranked = by_height(c, std::move(pts), table);
  std::vector<const Ranked*> irreducible;
  for (const auto& w : ranked) {
    bool reducible = false;
    for (const auto* h : irreducible)
      if (h->height < w.height && dominates(h->vals, w.vals)) {
        reducible = true;
        break;
      }
    if (!reducible) irreducible.push_back(&w);
  }
  std::vector<LatticeVector> out;
  for (const auto* h : irreducible)
    if (std::all_of(h->v.coords().begin(), h->v.coords().end(), [&](const Integer& x) { return abs(x) <= b; }))
      out.push_back(h->v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> hj_boundary(const Cone& c) {
  if (c.rank() != 2) raise(ErrorKind::NotRank2, "continued fraction walk needs a rank-2 cone");
  if (c.dim() < 2) return {};
  LatticeVector u1 = c.rays()[0], u2 = c.rays()[1];
  if (det2(u1, u2) < 0) std::swap(u1, u2);
  const Integer d = det2(u1, u2);

  // w with det(u1, w) = 1, then the first lattice point past u1 on that line.
  Integer s, t;
  ext_gcd(u1[0], u1[1], s, t);
  LatticeVector w({-t, s});
  const Integer shift = ceil_div(-det2(w, u2), d);
  LatticeVector prev = u1, cur = w + shift * u1;

  std::vector<LatticeVector> out;
  while (cur != u2) {
    invariant(out.size() <= static_cast<std::size_t>(d), "continued fraction walk did not terminate");
    out.push_back(cur);
    const Integer bcoef = ceil_div(det2(prev, u2), det2(cur, u2));
    LatticeVector next = bcoef * cur - prev;
    prev = cur;
    cur = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> brute_box_points(const HalfOpenBox& box) {
  const auto& u = box.base_rays;
  if (u.empty()) return {};
  const std::size_t n = u.front().rank(), k = u.size();
  std::vector<std::vector<Rational>> corners;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Rational> p(n);
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1)
        for (std::size_t i = 0; i < n; ++i) p[i] += Rational(u[j][i]);
    corners.push_back(std::move(p));
  }
  auto [lo, hi] = bounds(corners, n);
  std::vector<LatticeVector> out;
  scan(lo, hi, [&](const LatticeVector& v) {
    auto lambda = coefficients(u, v);
    if (!lambda) return;
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& x = (*lambda)[j];
      if (x < 0 || x > 1) return;
      if (x == 0 && !box.coords[j].include_zero) return;
      if (x == 1 && !box.coords[j].include_one) return;
    }
    out.push_back(v);
  });
  return out;
}

bool brute_is_terminal(const Cone& c) {
  auto levels = simplex_levels(c);
  return levels.empty();
}

bool brute_is_canonical(const Cone& c) {
  auto levels = simplex_levels(c);
  return std::none_of(levels.begin(), levels.end(), [](const Rational& s) { return s < 1; });
}

}  // namespace toricnash::oracle
