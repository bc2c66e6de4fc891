#pragma once

// Rational polyhedral cones and polyhedra with exact V- and H-descriptions.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "toricnash/exact_linalg.hpp"

namespace toricnash {

/// A strongly convex rational polyhedral cone in N_R = R^n.
///
/// Rays are the primitive generators of the extreme rays, sorted
/// lexicographically. Facet normals are primitive integral functionals,
/// nonnegative on the cone. For a cone that is not full dimensional the
/// facets are lifts of the facets inside its linear span, and equations()
/// cut out that span; contains() checks both.
///
/// Cones are immutable and cheap to copy (shared state).
class Cone {
 public:
  /// The zero cone in rank 0; mostly a placeholder for default construction.
  Cone();
  /// The zero cone {0} in rank n.
  static Cone zero(std::size_t rank);

  std::size_t rank() const noexcept;
  std::size_t dim() const noexcept;
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full_dimensional() const noexcept { return dim() == rank(); }
  bool is_simplicial() const noexcept { return rays().size() == dim(); }

  const std::vector<LatticeVector>& rays() const noexcept;
  const std::vector<std::vector<Integer>>& facet_normals() const noexcept;
  std::vector<DualVector> facets() const;
  const std::vector<std::vector<Integer>>& equations() const noexcept;
  /// For each facet, the indices of the rays lying on it.
  const std::vector<std::vector<std::size_t>>& facet_rays() const noexcept;

  /// Saturated sublattice span(σ) ∩ N and coordinates inside it.
  const Sublattice& lattice() const noexcept;
  const std::vector<LatticeVector>& local_rays() const noexcept;
  const std::vector<std::vector<Integer>>& local_facets() const noexcept;
  /// The same cone expressed as a full-dimensional cone of rank dim().
  Cone local_cone() const;

  bool in_span(const LatticeVector& v) const;
  bool contains(const LatticeVector& v) const;
  /// Values of every facet normal at v.
  std::vector<Integer> facet_values(const LatticeVector& v) const;

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  struct Data;
  explicit Cone(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;

  friend Cone cone_from_rays(std::span<const LatticeVector> rays, std::size_t rank);
};

/// Builds a cone from generators: primitive, redundant generators removed,
/// facets by exact double description. Throws EmptyInput, ZeroVector,
/// RankMismatch or NotStronglyConvex.
Cone cone_from_rays(std::span<const LatticeVector> rays, std::size_t rank);
inline Cone cone_from_rays(std::initializer_list<LatticeVector> rays, std::size_t rank) {
  return cone_from_rays(std::span<const LatticeVector>(rays.begin(), rays.size()), rank);
}

/// A face τ of a cone: the intersection with the facets in tight_facets.
struct Face {
  Cone parent;
  std::vector<std::size_t> ray_indices;   // into parent.rays()
  std::vector<std::size_t> tight_facets;  // into parent.facet_normals()
  std::size_t dim = 0;

  std::vector<LatticeVector> rays() const;
  Cone as_cone() const;
  bool is_whole() const { return tight_facets.empty(); }
  /// v ∈ τ°.
  bool relint_contains(const LatticeVector& v) const;
};

/// The full face lattice including {0} and σ, ordered by (dim, ray indices).
std::vector<Face> faces(const Cone& c);
bool contains(const Cone& c, const LatticeVector& v);
/// The unique face whose relative interior contains v. Throws NotInCone.
Face carrier_face(const Cone& c, const LatticeVector& v);

/// ⟨normal, v⟩ ≥ offset (or = offset for equations).
struct HalfSpace {
  std::vector<Integer> normal;  // primitive
  Integer offset;

  DualVector functional() const { return DualVector(normal); }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// conv(points) + cone(rays).
class Polyhedron {
 public:
  const std::vector<LatticeVector>& gen_points() const noexcept { return points_; }
  const std::vector<LatticeVector>& gen_rays() const noexcept { return rays_; }
  const std::vector<HalfSpace>& facets() const noexcept { return facets_; }
  const std::vector<HalfSpace>& equations() const noexcept { return equations_; }
  std::size_t rank() const noexcept { return rank_; }

  bool contains(const LatticeVector& v) const;
  /// The cone over P × {1} in rank n + 1; its faces not at infinity are the faces of P.
  const Cone& homogenization() const noexcept { return homog_; }
  /// Index into facets() of each homogenization facet, or npos for t ≥ 0.
  const std::vector<std::size_t>& homog_facet_map() const noexcept { return homog_to_facet_; }

 private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> points_;
  std::vector<LatticeVector> rays_;
  std::vector<HalfSpace> facets_;
  std::vector<HalfSpace> equations_;
  Cone homog_ = Cone::zero(1);
  std::vector<std::size_t> homog_to_facet_;

  friend Polyhedron minkowski_hull(std::span<const LatticeVector>, std::span<const LatticeVector>);
};

Polyhedron minkowski_hull(std::span<const LatticeVector> points, std::span<const LatticeVector> rays);

/// A bounded face of a polyhedron.
struct BoundedFace {
  std::vector<std::size_t> tight;  // indices into the parent's facets()
  std::vector<LatticeVector> vertices;
  std::size_t dim = 0;
};

/// All nonempty bounded faces, ordered by (dim, vertices).
std::vector<BoundedFace> compact_faces(const Polyhedron& p);
/// Bounded faces not contained in a larger bounded face.
std::vector<BoundedFace> maximal_compact_faces(const Polyhedron& p);

namespace detail {

struct DualDescription {
  std::vector<std::vector<Integer>> rays;       // extreme rays, primitive
  std::vector<std::vector<Integer>> lineality;  // basis of the lineality space
};

/// Extreme rays and lineality of {m ∈ Q^d : ⟨c, m⟩ ≥ 0 for c in constraints}
/// by incremental double description.
DualDescription double_description(const std::vector<std::vector<Integer>>& constraints, std::size_t d);

/// H-description of conv(vertices) for rational vertices; facets as
/// ⟨normal, x⟩ ≥ offset with primitive integral normals (offset rational).
struct RationalHalfSpace {
  std::vector<Integer> normal;
  Rational offset;
};
struct PolytopeInequalities {
  std::vector<RationalHalfSpace> facets;
  std::vector<RationalHalfSpace> equations;
};
PolytopeInequalities polytope_inequalities(std::span<const std::vector<Rational>> vertices);

}  // namespace detail

}  // namespace toricnash
