#include "toricnash/minimal_model.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace toricnash {

std::vector<Cone> Fan::cones() const {
  std::vector<Cone> out;
  for (const auto& mc : max_cones) {
    std::vector<LatticeVector> r;
    for (auto i : mc) r.push_back(rays[i]);
    out.push_back(cone_from_rays(r, ambient.rank()));
  }
  return out;
}

std::vector<std::vector<LatticeVector>> full_triangulation(const BoundedFace& face, PlacingOrder order) {
  const auto pts = polytope_points(std::span<const LatticeVector>(face.vertices));
  std::vector<std::vector<LatticeVector>> out;
  for (const auto& s : placing_triangulation(pts, order)) {
    std::vector<LatticeVector> simplex;
    for (auto i : s) simplex.push_back(pts[i]);
    out.push_back(std::move(simplex));
  }
  return out;
}

namespace {

std::vector<LatticeVector> local_rays(const Fan& fan) {
  std::vector<LatticeVector> out;
  for (const auto& r : fan.rays) {
    auto l = fan.ambient.lattice().to_local(r);
    invariant(l.has_value(), "fan ray " + r.str() + " outside the span of σ");
    out.push_back(std::move(*l));
  }
  return out;
}

// For every (k-1)-subset of a max cone: the owning cones and their extra ray.
using WallMap = std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>>;

WallMap wall_map(const Fan& fan) {
  WallMap walls;
  for (std::size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
    const auto& mc = fan.max_cones[ci];
    for (std::size_t drop = 0; drop < mc.size(); ++drop) {
      std::vector<std::size_t> w;
      for (std::size_t t = 0; t < mc.size(); ++t)
        if (t != drop) w.push_back(mc[t]);
      walls[w].emplace_back(ci, mc[drop]);
    }
  }
  return walls;
}

Rational bend_from(const std::vector<LatticeVector>& local, const std::vector<std::size_t>& cone, std::size_t other) {
  const std::size_t k = local.front().rank();
  std::vector<LatticeVector> rows;
  for (auto i : cone) rows.push_back(local[i]);
  std::vector<Rational> ones(k, Rational(1));
  auto m = solve_rational(to_rational(IntMatrix::from_rows(rows, k)), ones);
  invariant(m.has_value(), "degenerate max cone");
  return DualVector(std::move(*m))(local[other]) - 1;
}

int side(const std::vector<LatticeVector>& local, const std::vector<std::size_t>& wall, std::size_t extra) {
  std::vector<LatticeVector> cols;
  for (auto i : wall) cols.push_back(local[i]);
  cols.push_back(local[extra]);
  Integer d = det(IntMatrix::from_columns(cols, local.front().rank()));
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

}  // namespace

std::vector<WallCertificate> nef_certificate(const Fan& fan) {
  const std::size_t k = fan.ambient.dim();
  if (fan.max_cones.empty()) return {};
  const auto local = local_rays(fan);
  for (const auto& mc : fan.max_cones) {
    std::vector<LatticeVector> r;
    for (auto i : mc) r.push_back(local[i]);
    if (mc.size() != k || rank(std::span<const LatticeVector>(r)) != k)
      raise(ErrorKind::NonSimplicialFan, "max cone is not a full-dimensional simplicial cone");
  }
  std::vector<WallCertificate> out;
  for (const auto& [wall, owners] : wall_map(fan)) {
    if (owners.size() != 2) continue;
    WallCertificate cert;
    cert.wall = wall;
    cert.left_cone = owners[0].first;
    cert.right_cone = owners[1].first;
    cert.left_extra_ray = fan.rays[owners[0].second];
    cert.right_extra_ray = fan.rays[owners[1].second];
    cert.bend = bend_from(local, fan.max_cones[cert.left_cone], owners[1].second);
    cert.intra_face = !fan.source_face.empty() &&
                      fan.source_face[cert.left_cone] == fan.source_face[cert.right_cone];
    out.push_back(std::move(cert));
  }
  return out;
}

Rational reverse_bend(const Fan& fan, const WallCertificate& cert) {
  const auto local = local_rays(fan);
  const auto& left = fan.max_cones[cert.left_cone];
  std::size_t u = 0;
  for (auto i : left)
    if (!std::binary_search(cert.wall.begin(), cert.wall.end(), i)) u = i;
  return bend_from(local, fan.max_cones[cert.right_cone], u);
}

MinimalModelResult minimal_model_fan(const Cone& c, PlacingOrder order) {
  MinimalModelResult res;
  res.fan.ambient = c;
  if (c.is_zero()) {
    res.all_terminal = res.all_nef = true;
    return res;
  }
  const auto gamma = newton_polyhedron(c);

  std::vector<std::pair<std::vector<LatticeVector>, std::size_t>> simplices;
  std::set<LatticeVector> ray_set;
  for (std::size_t fi = 0; fi < gamma.maximal_compact_faces.size(); ++fi) {
    const auto& face = gamma.maximal_compact_faces[fi];
    invariant(face.dim + 1 == c.dim(), "maximal compact face of Γ is not of codimension one");
    for (auto& s : full_triangulation(face, order)) {
      ray_set.insert(s.begin(), s.end());
      simplices.emplace_back(std::move(s), fi);
    }
  }
  res.fan.rays.assign(ray_set.begin(), ray_set.end());
  auto index_of = [&](const LatticeVector& v) {
    return static_cast<std::size_t>(std::lower_bound(res.fan.rays.begin(), res.fan.rays.end(), v) -
                                    res.fan.rays.begin());
  };
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> indexed;
  for (const auto& [s, fi] : simplices) {
    std::vector<std::size_t> idx;
    for (const auto& v : s) idx.push_back(index_of(v));
    std::sort(idx.begin(), idx.end());
    indexed.emplace_back(std::move(idx), fi);
  }
  std::sort(indexed.begin(), indexed.end());
  for (auto& [idx, fi] : indexed) {
    res.fan.max_cones.push_back(std::move(idx));
    res.fan.source_face.push_back(fi);
  }

  res.certificates = nef_certificate(res.fan);
  for (const auto& r : res.fan.rays)
    if (!std::binary_search(c.rays().begin(), c.rays().end(), r)) res.exceptional_rays.push_back(r);

  res.all_terminal = true;
  for (const auto& mc : res.fan.cones()) res.all_terminal = res.all_terminal && is_terminal_cone(mc);
  res.all_nef = std::all_of(res.certificates.begin(), res.certificates.end(),
                            [](const WallCertificate& w) { return w.bend >= 0; });
  return res;
}

ModelVerification verify_minimal_model(const Cone& c, const MinimalModelResult& res) {
  ModelVerification v;
  auto fail = [&](std::string msg) { v.failures.push_back(std::move(msg)); };
  const Fan& fan = res.fan;
  if (c.is_zero()) {
    if (!fan.max_cones.empty()) fail("zero cone with a nonempty fan");
    return v;
  }
  const std::size_t k = c.dim();
  const auto gamma = newton_polyhedron(c);

  // Indices first; nothing below is meaningful if they are off.
  if (fan.source_face.size() != fan.max_cones.size()) fail("source_face and max_cones differ in length");
  for (const auto& mc : fan.max_cones)
    for (auto i : mc)
      if (i >= fan.rays.size()) fail("max cone refers to ray " + std::to_string(i) + " out of range");
  for (auto f : fan.source_face)
    if (f >= gamma.maximal_compact_faces.size()) fail("source face " + std::to_string(f) + " out of range");
  for (const auto& cert : res.certificates) {
    if (cert.left_cone >= fan.max_cones.size() || cert.right_cone >= fan.max_cones.size())
      fail("certificate refers to a max cone out of range");
    for (auto i : cert.wall)
      if (i >= fan.rays.size()) fail("certificate wall refers to ray " + std::to_string(i) + " out of range");
  }
  if (!v.ok()) return v;

  const auto local = local_rays(fan);

  // Max cones: simplicial, full dimensional, inside σ, terminal.
  const auto cones = fan.cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const auto& mc = cones[i];
    if (!mc.is_simplicial() || mc.dim() != k) fail("max cone " + std::to_string(i) + " is not simplicial of full dimension");
    for (const auto& r : mc.rays())
      if (!c.contains(r)) fail("ray " + r.str() + " of max cone " + std::to_string(i) + " is outside σ");
    if (mc.is_simplicial() && !is_terminal_cone(mc)) fail("max cone " + std::to_string(i) + " is not terminal");
  }

  // Support: a pseudomanifold whose boundary lies in ∂σ, with interior walls
  // separating their two cones, covering one generic point exactly once.
  for (const auto& [wall, owners] : wall_map(fan)) {
    if (owners.size() > 2) {
      fail("wall shared by more than two max cones");
    } else if (owners.size() == 1) {
      bool on_boundary = std::any_of(c.facet_normals().begin(), c.facet_normals().end(), [&](const auto& f) {
        return std::all_of(wall.begin(), wall.end(), [&](std::size_t i) { return dot(f, fan.rays[i]) == 0; });
      });
      if (!on_boundary) fail("unmatched wall not contained in the boundary of σ");
    } else if (side(local, wall, owners[0].second) * side(local, wall, owners[1].second) >= 0) {
      fail("interior wall does not separate its two cones");
    }
  }
  for (std::size_t t = 0; t < 16; ++t) {
    LatticeVector q = LatticeVector::zero(c.rank());
    for (std::size_t i = 0; i < c.rays().size(); ++i) q = q + Integer(1 + (t + 3) * i * i + i) * c.rays()[i];
    bool generic = true;
    std::size_t hits = 0;
    for (const auto& mc : cones) {
      auto vals = mc.facet_values(q);
      if (std::any_of(vals.begin(), vals.end(), [](const Integer& x) { return x == 0; })) generic = false;
      if (mc.contains(q)) ++hits;
    }
    if (!generic) continue;
    if (hits != 1) fail("generic interior point covered " + std::to_string(hits) + " times");
    break;
  }

  // Every lattice point of σ with coordinates in [-2, 2] lies in some max cone.
  {
    const std::size_t n = c.rank();
    std::vector<Integer> x(n, -2);
    while (true) {
      LatticeVector p(x);
      if (c.contains(p) && std::none_of(cones.begin(), cones.end(), [&](const Cone& mc) { return mc.contains(p); }))
        fail("lattice point " + p.str() + " of σ is not covered by Δ");
      std::size_t i = n;
      while (i > 0 && x[i - 1] == 2) x[--i] = -2;
      if (i == 0) break;
      ++x[i - 1];
    }
  }

  // The certificates must be the ones the fan itself yields.
  if (std::all_of(cones.begin(), cones.end(), [](const Cone& mc) { return mc.is_simplicial(); })) {
    auto fresh = nef_certificate(fan);
    bool same = fresh.size() == res.certificates.size();
    for (std::size_t i = 0; same && i < fresh.size(); ++i)
      same = fresh[i].wall == res.certificates[i].wall && fresh[i].left_cone == res.certificates[i].left_cone &&
             fresh[i].right_cone == res.certificates[i].right_cone && fresh[i].bend == res.certificates[i].bend &&
             fresh[i].intra_face == res.certificates[i].intra_face;
    if (!same) fail("certificates do not match the walls of Δ");
  }

  // Nefness: bends nonnegative, zero exactly inside one compact face, and the
  // same sign seen from either side.
  for (const auto& cert : res.certificates) {
    if (cert.bend < 0) fail("negative bend " + to_string(cert.bend));
    if ((cert.bend == 0) != cert.intra_face) fail("bend " + to_string(cert.bend) + " disagrees with face membership");
    Rational back = reverse_bend(fan, cert);
    if ((back > 0) != (cert.bend > 0) || (back < 0) != (cert.bend < 0)) fail("bend sign depends on the side");
  }
  if (!res.all_nef) fail("K is not relatively nef");
  if (!res.all_terminal) fail("some max cone is not terminal");

  // Rays: exactly ∂_cΓ ∩ N, containing the rays of σ.
  if (fan.rays != compact_boundary_points(gamma)) fail("fan rays differ from the lattice points of the compact boundary");
  for (const auto& r : c.rays())
    if (!std::binary_search(fan.rays.begin(), fan.rays.end(), r)) fail("ray " + r.str() + " of σ missing from Δ");

  std::vector<LatticeVector> extra;
  std::set_difference(fan.rays.begin(), fan.rays.end(), c.rays().begin(), c.rays().end(), std::back_inserter(extra));
  if (res.exceptional_rays != extra) fail("exceptional rays are not the rays of Δ outside σ(1)");

  std::vector<LatticeVector> singular_exceptional;
  for (const auto& r : res.exceptional_rays)
    if (in_sing_locus(c, r)) singular_exceptional.push_back(r);
  if (singular_exceptional != terminal_valuations(c)) fail("exceptional singular rays differ from Ter(σ)");
  return v;
}

ModelVerification verify_minimal_model(const Cone& c, PlacingOrder order) {
  return verify_minimal_model(c, minimal_model_fan(c, order));
}

}  // namespace toricnash
