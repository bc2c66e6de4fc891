#pragma once

#include <vector>

#include "toricnash/polyhedra.hpp"

namespace toricnash {

/// The singular faces of a cone; σ_sing is the union of their relative interiors.
struct SingularLocus {
  Cone cone;
  std::vector<Face> singular_faces;

  bool empty() const { return singular_faces.empty(); }
};

/// Simplicial with primitive generators extending to a basis of N.
bool is_regular(const Face& f);
bool is_regular(const Cone& c);

SingularLocus singular_locus(const Cone& c);

/// Whether v lies in σ_sing. Throws NotInCone or ZeroVector.
bool in_sing_locus(const Cone& c, const LatticeVector& v);

/// The functional equal to 1 on every primitive generator of a simplicial cone
/// (as a functional on the span of the cone).
DualVector generator_hyperplane(const Cone& c);

/// Reid's criterion: the only lattice points v of c with ⟨m_c, v⟩ <= 1 are 0
/// and the primitive generators. Throws NotSimplicial.
bool is_terminal_cone(const Cone& c);
/// No nonzero lattice point of c with ⟨m_c, v⟩ < 1. Throws NotSimplicial.
bool is_canonical_cone(const Cone& c);

}  // namespace toricnash
