#include "toricnash/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <set>

namespace toricnash {

struct Cone::Data {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<Integer>> facets;
  std::vector<std::vector<std::size_t>> facet_rays;
  Sublattice lattice;
  std::vector<LatticeVector> local_rays;
  std::vector<std::vector<Integer>> local_facets;
};

namespace {

// Fixed-width bitset over constraint indices for the adjacency test.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void resize(std::size_t n) { words_.resize((n + 63) / 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r;
    r.words_.resize(a.words_.size());
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] & b.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<Integer> combine(const Integer& a, const std::vector<Integer>& x, const Integer& b,
                             const std::vector<Integer>& y) {
  // a*x - b*y, made primitive
  std::vector<Integer> r(x.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a * x[i] - b * y[i];
  Integer g = content(r);
  if (g > 1)
    for (auto& c : r) c /= g;
  return r;
}

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

namespace detail {

DualDescription double_description(const std::vector<std::vector<Integer>>& constraints, std::size_t d) {
  struct Ray {
    std::vector<Integer> v;
    Bits zero;
  };
  std::vector<std::vector<Integer>> lin;
  for (std::size_t i = 0; i < d; ++i) lin.push_back(LatticeVector::unit(d, i).coords());
  std::vector<Ray> rays;
  const std::size_t m = constraints.size();

  for (std::size_t t = 0; t < m; ++t) {
    const auto& a = constraints[t];
    std::optional<std::size_t> pivot;
    std::vector<Integer> lin_vals(lin.size());
    for (std::size_t i = 0; i < lin.size(); ++i) {
      lin_vals[i] = dot(a, lin[i]);
      if (!pivot && lin_vals[i] != 0) pivot = i;
    }

    if (pivot) {
      std::vector<Integer> l0 = lin[*pivot];
      Integer a0 = lin_vals[*pivot];
      if (a0 < 0) {
        for (auto& c : l0) c = -c;
        a0 = -a0;
      }
      std::vector<std::vector<Integer>> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == *pivot) continue;
        if (lin_vals[i] == 0) {
          next_lin.push_back(lin[i]);
        } else {
          next_lin.push_back(combine(a0, lin[i], lin_vals[i], l0));
        }
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r.v);
        if (ar != 0) r.v = combine(a0, r.v, ar, l0);
        r.zero.resize(m);
        r.zero.set(t);
      }
      Ray nr{l0, Bits(m)};
      for (std::size_t s = 0; s < t; ++s) nr.zero.set(s);
      rays.push_back(std::move(nr));
      lin = std::move(next_lin);
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Integer> vals(rays.size());
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(a, rays[i].v);
      if (vals[i] > 0) {
        pos.push_back(i);
      } else if (vals[i] < 0) {
        neg.push_back(i);
      }
    }
    const std::size_t need = d - lin.size() >= 2 ? d - lin.size() - 2 : 0;
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        Bits common = rays[ip].zero & rays[in].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == ip || r == in) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr{combine(vals[ip], rays[in].v, vals[in], rays[ip].v), common};
        nr.zero.resize(m);
        nr.zero.set(t);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] < 0) continue;
      if (vals[i] == 0) rays[i].zero.set(t);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  DualDescription out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  return out;
}

PolytopeInequalities polytope_inequalities(std::span<const std::vector<Rational>> vertices) {
  if (vertices.empty()) raise(ErrorKind::EmptyInput, "polytope with no vertices");
  const std::size_t n = vertices.front().size();
  std::vector<LatticeVector> homog;
  for (const auto& p : vertices) {
    if (p.size() != n) raise(ErrorKind::RankMismatch, "polytope vertex dimension");
    Integer den = 1;
    for (const auto& x : p) den = lcm(den, boost::multiprecision::denominator(x));
    std::vector<Integer> h(n + 1);
    for (std::size_t i = 0; i < n; ++i) h[i] = boost::multiprecision::numerator(Rational(p[i] * den));
    h[n] = den;
    homog.emplace_back(std::move(h));
  }
  Cone c = cone_from_rays(homog, n + 1);
  PolytopeInequalities out;
  auto split = [n](const std::vector<Integer>& f) {
    RationalHalfSpace h;
    h.normal.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
    h.offset = Rational(-f[n]);
    return h;
  };
  for (const auto& f : c.facet_normals()) out.facets.push_back(split(f));
  for (const auto& e : c.equations()) out.equations.push_back(split(e));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cone

Cone::Cone() : Cone(zero(0)) {}

Cone Cone::zero(std::size_t rank) {
  auto d = std::make_shared<Data>();
  d->rank = rank;
  d->lattice = Sublattice::span_of({}, rank);
  return Cone(std::move(d));
}

std::size_t Cone::rank() const noexcept { return d_->rank; }
std::size_t Cone::dim() const noexcept { return d_->lattice.dim(); }
const std::vector<LatticeVector>& Cone::rays() const noexcept { return d_->rays; }
const std::vector<std::vector<Integer>>& Cone::facet_normals() const noexcept { return d_->facets; }
const std::vector<std::vector<Integer>>& Cone::equations() const noexcept { return d_->lattice.equations(); }
const std::vector<std::vector<std::size_t>>& Cone::facet_rays() const noexcept { return d_->facet_rays; }
const Sublattice& Cone::lattice() const noexcept { return d_->lattice; }
const std::vector<LatticeVector>& Cone::local_rays() const noexcept { return d_->local_rays; }
const std::vector<std::vector<Integer>>& Cone::local_facets() const noexcept { return d_->local_facets; }

std::vector<DualVector> Cone::facets() const {
  std::vector<DualVector> out;
  for (const auto& f : d_->facets) out.emplace_back(f);
  return out;
}

Cone Cone::local_cone() const {
  if (is_zero()) return Cone::zero(0);
  if (is_full_dimensional()) return *this;
  return cone_from_rays(d_->local_rays, dim());
}

bool Cone::in_span(const LatticeVector& v) const {
  if (v.rank() != rank()) raise(ErrorKind::RankMismatch, "vector rank " + std::to_string(v.rank()) +
                                                             " vs cone rank " + std::to_string(rank()));
  for (const auto& e : equations())
    if (dot(e, v) != 0) return false;
  return true;
}

bool Cone::contains(const LatticeVector& v) const {
  if (!in_span(v)) return false;
  for (const auto& f : d_->facets)
    if (dot(f, v) < 0) return false;
  return true;
}

std::vector<Integer> Cone::facet_values(const LatticeVector& v) const {
  if (v.rank() != rank()) raise(ErrorKind::RankMismatch, "facet_values");
  std::vector<Integer> out;
  out.reserve(d_->facets.size());
  for (const auto& f : d_->facets) out.push_back(dot(f, v));
  return out;
}

bool operator==(const Cone& a, const Cone& b) { return a.rank() == b.rank() && a.rays() == b.rays(); }

Cone cone_from_rays(std::span<const LatticeVector> input, std::size_t ambient_rank) {
  if (ambient_rank == 0) raise(ErrorKind::InvalidInput, "lattice rank must be at least 1");
  if (input.empty()) raise(ErrorKind::EmptyInput, "no ray generators");
  std::vector<LatticeVector> prim;
  for (const auto& r : input) {
    if (r.rank() != ambient_rank)
      raise(ErrorKind::RankMismatch, "ray " + r.str() + " does not have rank " + std::to_string(ambient_rank));
    if (r.is_zero()) raise(ErrorKind::ZeroVector, "zero ray generator");
    prim.push_back(primitive(r));
  }
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

  auto d = std::make_shared<Cone::Data>();
  d->rank = ambient_rank;
  d->lattice = Sublattice::span_of(prim, ambient_rank);
  const std::size_t k = d->lattice.dim();

  std::vector<LatticeVector> local;
  std::vector<std::vector<Integer>> constraints;
  for (const auto& r : prim) {
    auto l = d->lattice.to_local(r);
    invariant(l.has_value(), "generator outside its own span");
    constraints.push_back(l->coords());
    local.push_back(std::move(*l));
  }
  auto dd = detail::double_description(constraints, k);
  invariant(dd.lineality.empty(), "dual cone has lineality inside the span");

  std::vector<Integer> sum(k);
  for (const auto& f : dd.rays)
    for (std::size_t i = 0; i < k; ++i) sum[i] += f[i];
  if (dd.rays.empty()) raise(ErrorKind::NotStronglyConvex, "the generators span a linear subspace");
  for (const auto& g : local)
    if (dot(sum, g) <= 0) raise(ErrorKind::NotStronglyConvex, "the generators positively span a line");

  // Facets in a canonical order (by their ambient lift).
  std::vector<std::pair<std::vector<Integer>, std::vector<Integer>>> facets;
  for (auto& f : dd.rays) facets.emplace_back(d->lattice.lift_functional(f), std::move(f));
  std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  for (auto& [amb, loc] : facets) {
    d->facets.push_back(std::move(amb));
    d->local_facets.push_back(std::move(loc));
  }

  // Keep only generators of extreme rays.
  for (std::size_t i = 0; i < prim.size(); ++i) {
    std::vector<LatticeVector> tight;
    for (const auto& f : d->local_facets)
      if (dot(f, local[i]) == 0) tight.emplace_back(f);
    if (rank(std::span<const LatticeVector>(tight)) + 1 == k) {
      d->rays.push_back(prim[i]);
      d->local_rays.push_back(local[i]);
    }
  }
  for (const auto& f : d->local_facets) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < d->local_rays.size(); ++i)
      if (dot(f, d->local_rays[i]) == 0) on.push_back(i);
    d->facet_rays.push_back(std::move(on));
  }
  return Cone(std::move(d));
}

// ---------------------------------------------------------------------------
// Faces

std::vector<LatticeVector> Face::rays() const {
  std::vector<LatticeVector> out;
  for (auto i : ray_indices) out.push_back(parent.rays()[i]);
  return out;
}

Cone Face::as_cone() const {
  if (ray_indices.empty()) return Cone::zero(parent.rank());
  return cone_from_rays(rays(), parent.rank());
}

bool Face::relint_contains(const LatticeVector& v) const {
  if (!parent.contains(v)) return false;
  const auto& fs = parent.facet_normals();
  std::size_t next = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool tight = dot(fs[i], v) == 0;
    bool expected = next < tight_facets.size() && tight_facets[next] == i;
    if (expected) ++next;
    if (tight != expected) return false;
  }
  return true;
}

namespace {

Face make_face(const Cone& c, std::vector<std::size_t> ray_indices) {
  Face f{c, std::move(ray_indices), {}, 0};
  for (std::size_t j = 0; j < c.facet_rays().size(); ++j) {
    const auto& on = c.facet_rays()[j];
    if (std::includes(on.begin(), on.end(), f.ray_indices.begin(), f.ray_indices.end())) f.tight_facets.push_back(j);
  }
  f.dim = rank(std::span<const LatticeVector>(f.rays()));
  return f;
}

}  // namespace

std::vector<Face> faces(const Cone& c) {
  std::vector<std::size_t> all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<Face> out{make_face(c, all)};
  for (std::size_t q = 0; q < out.size(); ++q) {
    const Face cur = out[q];
    for (std::size_t j = 0; j < c.facet_rays().size(); ++j) {
      if (std::binary_search(cur.tight_facets.begin(), cur.tight_facets.end(), j)) continue;
      std::vector<std::size_t> sub;
      const auto& on = c.facet_rays()[j];
      std::set_intersection(cur.ray_indices.begin(), cur.ray_indices.end(), on.begin(), on.end(),
                            std::back_inserter(sub));
      if (!seen.insert(sub).second) continue;
      out.push_back(make_face(c, std::move(sub)));
    }
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_indices < b.ray_indices;
  });
  return out;
}

bool contains(const Cone& c, const LatticeVector& v) { return c.contains(v); }

Face carrier_face(const Cone& c, const LatticeVector& v) {
  if (!c.contains(v)) raise(ErrorKind::NotInCone, v.str() + " is not in the cone");
  Face f{c, {}, {}, 0};
  const auto& fs = c.facet_normals();
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (dot(fs[j], v) == 0) f.tight_facets.push_back(j);
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    bool on_all = std::all_of(f.tight_facets.begin(), f.tight_facets.end(), [&](std::size_t j) {
      return std::binary_search(c.facet_rays()[j].begin(), c.facet_rays()[j].end(), i);
    });
    if (on_all) f.ray_indices.push_back(i);
  }
  f.dim = rank(std::span<const LatticeVector>(f.rays()));
  return f;
}

// ---------------------------------------------------------------------------
// Polyhedra

Polyhedron minkowski_hull(std::span<const LatticeVector> points, std::span<const LatticeVector> rays) {
  if (points.empty()) raise(ErrorKind::EmptyInput, "polyhedron with no points");
  const std::size_t n = points.front().rank();
  Polyhedron p;
  p.rank_ = n;
  p.points_.assign(points.begin(), points.end());
  p.rays_.assign(rays.begin(), rays.end());

  std::vector<LatticeVector> homog;
  for (const auto& x : points) {
    if (x.rank() != n) raise(ErrorKind::RankMismatch, "polyhedron point dimension");
    auto h = x.coords();
    h.emplace_back(1);
    homog.emplace_back(std::move(h));
  }
  for (const auto& r : rays) {
    if (r.rank() != n) raise(ErrorKind::RankMismatch, "polyhedron ray dimension");
    auto h = r.coords();
    h.emplace_back(0);
    homog.emplace_back(std::move(h));
  }
  p.homog_ = cone_from_rays(homog, n + 1);

  auto split = [n](const std::vector<Integer>& f) {
    HalfSpace h;
    h.normal.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
    h.offset = -f[n];
    return h;
  };
  for (const auto& f : p.homog_.facet_normals()) {
    HalfSpace h = split(f);
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Integer& x) { return x == 0; })) {
      p.homog_to_facet_.push_back(std::numeric_limits<std::size_t>::max());
      continue;
    }
    p.homog_to_facet_.push_back(p.facets_.size());
    p.facets_.push_back(std::move(h));
  }
  for (const auto& e : p.homog_.equations()) p.equations_.push_back(split(e));
  return p;
}

bool Polyhedron::contains(const LatticeVector& v) const {
  if (v.rank() != rank_) raise(ErrorKind::RankMismatch, "polyhedron membership");
  for (const auto& e : equations_)
    if (dot(e.normal, v) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, v) < f.offset) return false;
  return true;
}

std::vector<BoundedFace> compact_faces(const Polyhedron& p) {
  const std::size_t n = p.rank();
  const Cone& h = p.homogenization();
  std::vector<BoundedFace> out;
  for (const Face& f : faces(h)) {
    if (f.ray_indices.empty()) continue;
    bool bounded = std::all_of(f.ray_indices.begin(), f.ray_indices.end(),
                               [&](std::size_t i) { return h.rays()[i][n] > 0; });
    if (!bounded) continue;
    BoundedFace b;
    b.dim = f.dim - 1;
    for (auto j : f.tight_facets) {
      auto mapped = p.homog_facet_map()[j];
      if (mapped != std::numeric_limits<std::size_t>::max()) b.tight.push_back(mapped);
    }
    for (auto i : f.ray_indices) {
      const auto& r = h.rays()[i];
      invariant(r[n] == 1, "vertex of a lattice polyhedron is not a lattice point");
      b.vertices.emplace_back(std::vector<Integer>(r.coords().begin(), r.coords().begin() + static_cast<std::ptrdiff_t>(n)));
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BoundedFace& a, const BoundedFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<BoundedFace> maximal_compact_faces(const Polyhedron& p) {
  auto all = compact_faces(p);
  std::vector<BoundedFace> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j) {
      if (i == j || all[j].vertices.size() <= all[i].vertices.size()) continue;
      if (std::includes(all[j].vertices.begin(), all[j].vertices.end(), all[i].vertices.begin(),
                        all[i].vertices.end()))
        maximal = false;
    }
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

}  // namespace toricnash
