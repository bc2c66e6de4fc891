#include "toricnash/toric_cones.hpp"

#include <algorithm>

#include "toricnash/lattice_points.hpp"

namespace toricnash {

bool is_regular(const Face& f) {
  if (f.ray_indices.empty()) return true;
  if (f.ray_indices.size() != f.dim) return false;
  const auto rays = f.rays();
  const auto d = snf_divisors(IntMatrix::from_rows(rays, f.parent.rank()));
  return d.size() == rays.size() && std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

bool is_regular(const Cone& c) {
  if (c.is_zero()) return true;
  if (!c.is_simplicial()) return false;
  const auto d = snf_divisors(IntMatrix::from_rows(c.rays(), c.rank()));
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

SingularLocus singular_locus(const Cone& c) {
  SingularLocus s{c, {}};
  for (auto& f : faces(c))
    if (!is_regular(f)) s.singular_faces.push_back(std::move(f));
  return s;
}

bool in_sing_locus(const Cone& c, const LatticeVector& v) {
  if (v.rank() != c.rank()) raise(ErrorKind::RankMismatch, "in_sing_locus");
  if (v.is_zero()) raise(ErrorKind::ZeroVector, "the origin is not a valuation");
  return !is_regular(carrier_face(c, v));
}

namespace {

// Generator-hyperplane levels Σλ_i of the nonzero points of the fundamental
// parallelepiped; every lattice point with level <= 1 other than the
// generators is one of these.
std::vector<Rational> parallelepiped_levels(const Cone& c) {
  if (!c.is_simplicial()) raise(ErrorKind::NotSimplicial, "terminality needs a simplicial cone");
  std::vector<Rational> levels;
  if (c.is_zero()) return levels;
  for (const auto& p : box_points_with_coefficients(HalfOpenBox::lower_closed(c.rays()))) {
    if (p.point.is_zero()) continue;
    Rational s = 0;
    for (const auto& l : p.coefficients) s += l;
    levels.push_back(s);
  }
  return levels;
}

}  // namespace

DualVector generator_hyperplane(const Cone& c) {
  if (!c.is_simplicial()) raise(ErrorKind::NotSimplicial, "generator hyperplane of a non-simplicial cone");
  const std::size_t k = c.dim();
  std::vector<Rational> local(k);
  if (k > 0) {
    // Solve ⟨m, u_i⟩ = 1 in local coordinates: U^T m = 1.
    IntMatrix ut = IntMatrix::from_rows(c.local_rays(), k);
    std::vector<Rational> ones(k, Rational(1));
    auto m = solve_rational(to_rational(ut), ones);
    invariant(m.has_value(), "simplicial cone with dependent generators");
    local = std::move(*m);
  }
  // Lift through the integral lift of each local coordinate functional.
  std::vector<Rational> amb(c.rank());
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> e(k);
    e[i] = 1;
    auto lift = c.lattice().lift_functional(e);
    for (std::size_t j = 0; j < c.rank(); ++j) amb[j] += local[i] * lift[j];
  }
  return DualVector(std::move(amb));
}

bool is_terminal_cone(const Cone& c) {
  const auto levels = parallelepiped_levels(c);
  return std::all_of(levels.begin(), levels.end(), [](const Rational& l) { return l > 1; });
}

bool is_canonical_cone(const Cone& c) {
  const auto levels = parallelepiped_levels(c);
  return std::all_of(levels.begin(), levels.end(), [](const Rational& l) { return l >= 1; });
}

}  // namespace toricnash
