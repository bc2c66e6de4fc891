#pragma once

// Lattice-point enumeration: polytopes, fundamental parallelepipeds of
// simplicial cones, placing triangulations and Hilbert bases.

#include <cstddef>
#include <span>
#include <vector>

#include "toricnash/polyhedra.hpp"

namespace toricnash {

/// The parallelepiped { Σ λ_i u_i } over linearly independent base rays u_i,
/// each λ_i ranging over [0,1], with each endpoint included or not.
struct HalfOpenBox {
  struct Interval {
    bool include_zero = true;
    bool include_one = false;
  };

  std::vector<LatticeVector> base_rays;
  std::vector<Interval> coords;

  /// λ ∈ [0,1)^k, the fundamental parallelepiped.
  static HalfOpenBox lower_closed(std::vector<LatticeVector> rays);
  /// λ ∈ (0,1]^k.
  static HalfOpenBox upper_closed(std::vector<LatticeVector> rays);
  static HalfOpenBox closed(std::vector<LatticeVector> rays);
};

struct BoxPoint {
  LatticeVector point;
  std::vector<Rational> coefficients;  // λ with point = Σ λ_i u_i
};

/// Lattice points of N in the box (they all lie in span(base_rays)),
/// ordered lexicographically. Enumerates the |det| coset representatives of
/// the sublattice generated by the base rays rather than a bounding box.
std::vector<BoxPoint> box_points_with_coefficients(const HalfOpenBox& box);
std::vector<LatticeVector> box_points(const HalfOpenBox& box);

/// All lattice points of conv(vertices), by filtering an exact bounding box
/// through the facet inequalities. Lexicographic order.
std::vector<LatticeVector> polytope_points(std::span<const std::vector<Rational>> vertices);
std::vector<LatticeVector> polytope_points(std::span<const LatticeVector> vertices);

enum class PlacingOrder { Forward, Reverse };

/// Triangulation of the pointed cone cone(points) using every point as a
/// ray. Points are placed in the given order; a point beyond the current
/// cone is coned over the visible boundary facets, a point inside is
/// inserted by stellar subdivision. Simplices are sorted index sets into
/// points, sorted lexicographically.
std::vector<std::vector<std::size_t>> placing_triangulation(std::span<const LatticeVector> points,
                                                            PlacingOrder order = PlacingOrder::Forward);

/// Simplicial subcones of c using only rays of c (placing order = ray order).
std::vector<Cone> triangulate_by_rays(const Cone& c);

/// Lattice points of f° with box coordinates in (0,1] over some cell of a
/// triangulation of f by its rays; cells of every dimension whose relative
/// interior lies in f° are used.
std::vector<LatticeVector> interior_box_points(const Face& f);

struct HilbertBasis {
  Cone cone;
  std::vector<LatticeVector> elements;  // lexicographic
};

/// The minimal generating set of the semigroup σ ∩ N.
HilbertBasis hilbert_basis(const Cone& c);

}  // namespace toricnash
