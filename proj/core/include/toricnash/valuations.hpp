#pragma once

// Torus-invariant valuations over the affine toric variety of a cone σ:
// the order ≤_σ, the Nash/essential set Min(σ), the Newton polyhedron Γ(σ)
// and the terminal set Ter(σ).

#include <optional>
#include <vector>

#include "toricnash/lattice_points.hpp"
#include "toricnash/polyhedra.hpp"
#include "toricnash/toric_cones.hpp"

namespace toricnash {

/// ℓ = sum of the primitive facet normals; strictly positive on σ \ {0}.
std::vector<Integer> height_functional(const Cone& c);
Integer height(const Cone& c, const LatticeVector& v);

/// v ≤_σ w iff w ∈ v + σ. Throws NotInCone when either point is outside σ.
bool leq_sigma(const Cone& c, const LatticeVector& v, const LatticeVector& w);

/// Γ(σ) = conv(σ ∩ N \ {0}) = conv(Hilbert basis) + σ.
struct NewtonPolyhedron {
  Cone cone;
  HilbertBasis hilbert;
  Polyhedron hull;
  std::vector<BoundedFace> compact_faces;
  std::vector<BoundedFace> maximal_compact_faces;
};

/// Throws InvalidInput for the zero cone, whose Γ is empty.
NewtonPolyhedron newton_polyhedron(const Cone& c);

/// ∂_cΓ(σ) ∩ N, lexicographic.
std::vector<LatticeVector> compact_boundary_points(const NewtonPolyhedron& gamma);

/// Ter(σ) = ∂_cΓ(σ) ∩ σ_sing ∩ N.
std::vector<LatticeVector> terminal_valuations(const Cone& c);
/// Min(σ): the ≤_σ-minimal elements of σ_sing ∩ N.
std::vector<LatticeVector> nash_valuations(const Cone& c);
/// Same set as nash_valuations (the two notions coincide on toric varieties).
std::vector<LatticeVector> essential_valuations(const Cone& c);

struct ValuationReport {
  Cone cone;
  std::vector<LatticeVector> min_set;
  std::vector<LatticeVector> ter_set;
  SingularLocus singular;
  bool is_regular_variety = false;
  std::optional<bool> is_terminal_variety;  // simplicial cones only
};

/// Computes every set above and checks Ter ⊆ Min, σ_sing membership and
/// ≤_σ-incomparability of Min; a failure raises InvariantViolation.
ValuationReport analyze(const Cone& c);

}  // namespace toricnash
