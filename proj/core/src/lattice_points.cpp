#include "toricnash/lattice_points.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricnash {

HalfOpenBox HalfOpenBox::lower_closed(std::vector<LatticeVector> rays) {
  HalfOpenBox b{std::move(rays), {}};
  b.coords.assign(b.base_rays.size(), Interval{true, false});
  return b;
}

HalfOpenBox HalfOpenBox::upper_closed(std::vector<LatticeVector> rays) {
  HalfOpenBox b{std::move(rays), {}};
  b.coords.assign(b.base_rays.size(), Interval{false, true});
  return b;
}

HalfOpenBox HalfOpenBox::closed(std::vector<LatticeVector> rays) {
  HalfOpenBox b{std::move(rays), {}};
  b.coords.assign(b.base_rays.size(), Interval{true, true});
  return b;
}

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Advances a mixed-radix counter; false once it wraps around.
bool advance(std::vector<Integer>& x, const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] < hi[i]) {
      ++x[i];
      return true;
    }
    x[i] = lo[i];
  }
  return false;
}

Rational det_rational(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

}  // namespace

std::vector<BoxPoint> box_points_with_coefficients(const HalfOpenBox& box) {
  const std::size_t k = box.base_rays.size();
  if (box.coords.size() != k) raise(ErrorKind::InvalidInput, "box interval count does not match its rays");
  if (k == 0) raise(ErrorKind::EmptyInput, "box without base rays");
  const std::size_t n = box.base_rays.front().rank();
  Sublattice lat = Sublattice::span_of(box.base_rays, n);
  if (lat.dim() != k) raise(ErrorKind::InvalidInput, "box base rays are linearly dependent");

  std::vector<LatticeVector> gens;
  for (const auto& r : box.base_rays) gens.push_back(*lat.to_local(r));
  IntMatrix g = IntMatrix::from_columns(gens, k);
  const Integer d = det(g);
  const Integer d_abs = boost::multiprecision::abs(d);
  const Integer sign = d < 0 ? -1 : 1;
  // adj(G) = det(G) * G^{-1}
  RatMatrix ginv = inverse(to_rational(g));
  IntMatrix adj(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) adj(i, j) = boost::multiprecision::numerator(ginv(i, j) * Rational(d));

  // Rows of the HNF of G^T are an upper triangular basis of the generated
  // lattice, so 0 <= x_i < h_ii enumerates Z^k modulo it.
  IntMatrix h = hnf(g.transpose()).h;
  std::vector<Integer> lo(k, Integer(0)), hi(k);
  for (std::size_t i = 0; i < k; ++i) hi[i] = h(i, i) - 1;

  std::vector<BoxPoint> out;
  std::vector<Integer> x = lo;
  do {
    std::vector<Integer> mu(k);
    for (std::size_t i = 0; i < k; ++i) {
      Integer w = 0;
      for (std::size_t j = 0; j < k; ++j) w += adj(i, j) * x[j];
      mu[i] = mod(sign * w, d_abs);
    }
    std::vector<Integer> base(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) base[j] += mu[i] * gens[i][j];
    for (auto& c : base) c /= d_abs;

    std::vector<std::size_t> zero_coords;
    bool feasible = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (mu[i] != 0) continue;
      if (!box.coords[i].include_zero && !box.coords[i].include_one) feasible = false;
      zero_coords.push_back(i);
    }
    if (!feasible) continue;

    // Each zero coordinate may be pushed to 1 where the interval allows it.
    const std::size_t z = zero_coords.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << z); ++mask) {
      bool ok = true;
      std::vector<Integer> pt = base;
      std::vector<Rational> lambda(k);
      for (std::size_t i = 0; i < k; ++i) lambda[i] = Rational(mu[i], d_abs);
      for (std::size_t b = 0; b < z && ok; ++b) {
        const std::size_t i = zero_coords[b];
        const bool one = (mask >> b) & 1U;
        if (one ? !box.coords[i].include_one : !box.coords[i].include_zero) ok = false;
        if (one) {
          lambda[i] = 1;
          for (std::size_t j = 0; j < k; ++j) pt[j] += gens[i][j];
        }
      }
      if (!ok) continue;
      out.push_back({lat.from_local(LatticeVector(std::move(pt))), std::move(lambda)});
    }
  } while (advance(x, lo, hi));

  std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) { return a.point < b.point; });
  return out;
}

std::vector<LatticeVector> box_points(const HalfOpenBox& box) {
  std::vector<LatticeVector> out;
  for (auto& p : box_points_with_coefficients(box)) out.push_back(std::move(p.point));
  return out;
}

std::vector<LatticeVector> polytope_points(std::span<const std::vector<Rational>> vertices) {
  if (vertices.empty()) raise(ErrorKind::EmptyInput, "polytope with no vertices");
  const std::size_t n = vertices.front().size();
  const auto ineq = detail::polytope_inequalities(vertices);
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = vertices.front()[i], mx = vertices.front()[i];
    for (const auto& v : vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<LatticeVector> out;
  std::vector<Integer> x = lo;
  do {
    bool inside = true;
    for (const auto& e : ineq.equations)
      if (Rational(dot(e.normal, x)) != e.offset) {
        inside = false;
        break;
      }
    if (!inside) continue;
    for (const auto& f : ineq.facets)
      if (Rational(dot(f.normal, x)) < f.offset) {
        inside = false;
        break;
      }
    if (inside) out.emplace_back(x);
  } while (advance(x, lo, hi));
  return out;
}

std::vector<LatticeVector> polytope_points(std::span<const LatticeVector> vertices) {
  std::vector<std::vector<Rational>> rv;
  for (const auto& v : vertices) rv.emplace_back(v.coords().begin(), v.coords().end());
  return polytope_points(std::span<const std::vector<Rational>>(rv));
}

// ---------------------------------------------------------------------------
// Placing triangulation

std::vector<std::vector<std::size_t>> placing_triangulation(std::span<const LatticeVector> points,
                                                            PlacingOrder order) {
  if (points.empty()) return {};
  const std::size_t n = points.front().rank();
  std::vector<std::size_t> seq(points.size());
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i;
  if (order == PlacingOrder::Reverse) std::reverse(seq.begin(), seq.end());

  // Coordinates with respect to a basis picked greedily in placing order, so
  // the span of the first j placed basis points is the first j axes.
  std::vector<LatticeVector> basis;
  for (std::size_t i : seq) {
    basis.push_back(points[i]);
    if (rank(std::span<const LatticeVector>(basis)) < basis.size()) basis.pop_back();
  }
  const std::size_t dim = basis.size();
  const IntMatrix bm = IntMatrix::from_columns(basis, n);
  std::vector<std::vector<Rational>> alpha(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto a = solve_rational(bm, points[i]);
    invariant(a.has_value(), "point outside the span of its own basis");
    alpha[i] = std::move(*a);
  }

  using Simplex = std::vector<std::size_t>;
  std::vector<Simplex> simplices;
  std::size_t j = 0;  // current dimension

  auto coords_matrix = [&](const std::vector<std::size_t>& cols) {
    RatMatrix m(j, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < j; ++r) m(r, c) = alpha[cols[c]][r];
    return m;
  };

  for (std::size_t p : seq) {
    bool raises = false;
    for (std::size_t r = j; r < dim; ++r) raises = raises || alpha[p][r] != 0;
    if (raises) {
      if (simplices.empty()) {
        simplices.push_back({p});
      } else {
        for (auto& s : simplices) s.push_back(p);
      }
      ++j;
      continue;
    }

    // p lies in the current span: inside or outside the current cone?
    std::optional<std::vector<std::size_t>> carrier;
    std::vector<Rational> rhs(alpha[p].begin(), alpha[p].begin() + static_cast<std::ptrdiff_t>(j));
    for (const auto& s : simplices) {
      auto beta = solve_rational(coords_matrix(s), rhs);
      invariant(beta.has_value(), "degenerate simplex in placing triangulation");
      if (std::any_of(beta->begin(), beta->end(), [](const Rational& b) { return b < 0; })) continue;
      std::vector<std::size_t> g;
      for (std::size_t t = 0; t < s.size(); ++t)
        if ((*beta)[t] > 0) g.push_back(s[t]);
      std::sort(g.begin(), g.end());
      carrier = std::move(g);
      break;
    }

    std::vector<Simplex> next;
    if (carrier) {
      invariant(carrier->size() > 1, "repeated ray in placing triangulation");
      for (const auto& s : simplices) {
        Simplex sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (!std::includes(sorted.begin(), sorted.end(), carrier->begin(), carrier->end())) {
          next.push_back(s);
          continue;
        }
        for (std::size_t v : *carrier) {
          Simplex t;
          for (std::size_t u : s)
            if (u != v) t.push_back(u);
          t.push_back(p);
          next.push_back(std::move(t));
        }
      }
    } else {
      // Boundary facets (in exactly one simplex) visible from p.
      std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> facets;
      for (std::size_t si = 0; si < simplices.size(); ++si) {
        const auto& s = simplices[si];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex f;
          for (std::size_t t = 0; t < s.size(); ++t)
            if (t != drop) f.push_back(s[t]);
          std::sort(f.begin(), f.end());
          facets[f].emplace_back(si, s[drop]);
        }
      }
      next = simplices;
      for (const auto& [f, owners] : facets) {
        if (owners.size() != 1) continue;
        std::vector<std::size_t> with_q = f, with_p = f;
        with_q.push_back(owners.front().second);
        with_p.push_back(p);
        Rational dq = det_rational(coords_matrix(with_q));
        Rational dp = det_rational(coords_matrix(with_p));
        if (dq * dp < 0) next.push_back(with_p);
      }
      invariant(next.size() > simplices.size(), "placed point sees no boundary facet");
    }
    simplices = std::move(next);
  }

  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

std::vector<Cone> triangulate_by_rays(const Cone& c) {
  if (c.is_zero()) return {c};
  if (c.is_simplicial()) return {c};
  std::vector<Cone> out;
  for (const auto& s : placing_triangulation(c.rays())) {
    std::vector<LatticeVector> rays;
    for (auto i : s) rays.push_back(c.rays()[i]);
    out.push_back(cone_from_rays(rays, c.rank()));
  }
  return out;
}

std::vector<LatticeVector> interior_box_points(const Face& f) {
  if (f.dim == 0) raise(ErrorKind::InvalidInput, "interior_box_points of the zero face");
  const Cone tau = f.as_cone();
  const auto& rays = tau.rays();
  std::vector<std::vector<std::size_t>> pieces;
  if (tau.is_simplicial()) {
    std::vector<std::size_t> all(rays.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    pieces.push_back(std::move(all));
  } else {
    pieces = placing_triangulation(rays);
  }

  // Cells of the triangulation whose relative interior lies in f°.
  std::set<std::vector<std::size_t>> cells;
  for (const auto& piece : pieces) {
    const std::size_t k = piece.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> cell;
      LatticeVector bary = LatticeVector::zero(tau.rank());
      for (std::size_t b = 0; b < k; ++b)
        if ((mask >> b) & 1U) {
          cell.push_back(piece[b]);
          bary = bary + rays[piece[b]];
        }
      if (f.relint_contains(bary)) cells.insert(std::move(cell));
    }
  }

  std::set<LatticeVector> out;
  for (const auto& cell : cells) {
    std::vector<LatticeVector> base;
    for (auto i : cell) base.push_back(rays[i]);
    for (auto& p : box_points(HalfOpenBox::upper_closed(std::move(base))))
      if (f.relint_contains(p)) out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

HilbertBasis hilbert_basis(const Cone& c) {
  HilbertBasis hb{c, {}};
  if (c.is_zero()) return hb;
  const Cone local = c.local_cone();

  std::set<LatticeVector> candidates(local.rays().begin(), local.rays().end());
  for (const Cone& piece : triangulate_by_rays(local))
    for (auto& p : box_points(HalfOpenBox::lower_closed(piece.rays())))
      if (!p.is_zero()) candidates.insert(std::move(p));

  struct Entry {
    Integer height;
    LatticeVector v;
    std::vector<Integer> values;
  };
  std::vector<Entry> entries;
  for (const auto& v : candidates) {
    Entry e{0, v, local.facet_values(v)};
    for (const auto& x : e.values) e.height += x;
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.v < b.v;
  });

  // A reducible v dominates an irreducible element of strictly smaller
  // height, and v - w ∈ σ exactly when every facet value of w is at most
  // that of v.
  std::vector<const Entry*> basis;
  for (const auto& e : entries) {
    bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Entry* b) {
      if (b->height >= e.height) return false;
      for (std::size_t i = 0; i < e.values.size(); ++i)
        if (b->values[i] > e.values[i]) return false;
      return true;
    });
    if (!reducible) basis.push_back(&e);
  }
  for (const Entry* e : basis) hb.elements.push_back(c.lattice().from_local(e->v));
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

}  // namespace toricnash
