#include "toricnash/valuations.hpp"

#include <algorithm>
#include <set>

namespace toricnash {

std::vector<Integer> height_functional(const Cone& c) {
  std::vector<Integer> l(c.rank());
  for (const auto& f : c.facet_normals())
    for (std::size_t i = 0; i < l.size(); ++i) l[i] += f[i];
  return l;
}

Integer height(const Cone& c, const LatticeVector& v) { return dot(height_functional(c), v); }

bool leq_sigma(const Cone& c, const LatticeVector& v, const LatticeVector& w) {
  if (!c.contains(v)) raise(ErrorKind::NotInCone, v.str() + " is not in the cone");
  if (!c.contains(w)) raise(ErrorKind::NotInCone, w.str() + " is not in the cone");
  return c.contains(w - v);
}

NewtonPolyhedron newton_polyhedron(const Cone& c) {
  if (c.is_zero()) raise(ErrorKind::InvalidInput, "the zero cone has no nonzero lattice points");
  HilbertBasis hb = hilbert_basis(c);
  Polyhedron hull = minkowski_hull(hb.elements, c.rays());
  auto all = compact_faces(hull);
  auto maximal = maximal_compact_faces(hull);
  return {c, std::move(hb), std::move(hull), std::move(all), std::move(maximal)};
}

std::vector<LatticeVector> compact_boundary_points(const NewtonPolyhedron& gamma) {
  std::set<LatticeVector> pts;
  for (const auto& f : gamma.maximal_compact_faces)
    for (auto& p : polytope_points(std::span<const LatticeVector>(f.vertices))) pts.insert(std::move(p));
  return {pts.begin(), pts.end()};
}

namespace {

std::vector<LatticeVector> terminal_from(const Cone& c, const SingularLocus& sing) {
  if (sing.empty()) return {};
  auto gamma = newton_polyhedron(c);
  std::vector<LatticeVector> out;
  for (auto& p : compact_boundary_points(gamma))
    if (in_sing_locus(c, p)) out.push_back(std::move(p));
  return out;
}

std::vector<LatticeVector> minimal_from(const Cone& c, const SingularLocus& sing) {
  std::set<LatticeVector> candidates;
  for (const auto& f : sing.singular_faces)
    for (auto& p : interior_box_points(f)) candidates.insert(std::move(p));

  struct Entry {
    Integer height;
    LatticeVector v;
    std::vector<Integer> values;
  };
  const auto ell = height_functional(c);
  std::vector<Entry> entries;
  for (const auto& v : candidates) entries.push_back({dot(ell, v), v, c.facet_values(v)});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.v < b.v;
  });
  // Anything dominating a candidate dominates a minimal one of smaller height.
  std::vector<const Entry*> minimal;
  for (const auto& e : entries) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Entry* m) {
      if (m->height >= e.height) return false;
      for (std::size_t i = 0; i < e.values.size(); ++i)
        if (m->values[i] > e.values[i]) return false;
      return true;
    });
    if (!dominated) minimal.push_back(&e);
  }
  std::vector<LatticeVector> out;
  for (const Entry* m : minimal) out.push_back(m->v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LatticeVector> terminal_valuations(const Cone& c) { return terminal_from(c, singular_locus(c)); }

std::vector<LatticeVector> nash_valuations(const Cone& c) { return minimal_from(c, singular_locus(c)); }

std::vector<LatticeVector> essential_valuations(const Cone& c) { return nash_valuations(c); }

ValuationReport analyze(const Cone& c) {
  ValuationReport r{c, {}, {}, singular_locus(c), false, std::nullopt};
  r.is_regular_variety = r.singular.empty();
  r.min_set = minimal_from(c, r.singular);
  r.ter_set = terminal_from(c, r.singular);
  if (c.is_simplicial()) r.is_terminal_variety = is_terminal_cone(c);

  for (const auto& t : r.ter_set)
    invariant(std::binary_search(r.min_set.begin(), r.min_set.end(), t),
              "terminal valuation " + t.str() + " is not in Min");
  for (const auto& v : r.min_set) invariant(in_sing_locus(c, v), v.str() + " in Min is not in the singular locus");
  for (std::size_t i = 0; i < r.min_set.size(); ++i)
    for (std::size_t j = 0; j < r.min_set.size(); ++j)
      if (i != j)
        invariant(!leq_sigma(c, r.min_set[i], r.min_set[j]),
                  "Min is not an antichain: " + r.min_set[i].str() + " <= " + r.min_set[j].str());
  return r;
}

}  // namespace toricnash
