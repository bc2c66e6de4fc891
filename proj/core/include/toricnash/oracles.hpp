#pragma once

// Brute-force reference computations. These deliberately avoid the main
// pipeline (no Hilbert bases, no triangulations, no Newton polyhedra): they
// enumerate bounded regions of σ ∩ N and test membership directly. They are
// slow and only meant for small inputs.

#include <vector>

#include "toricnash/lattice_points.hpp"
#include "toricnash/polyhedra.hpp"

namespace toricnash::oracle {

/// {v ∈ σ ∩ N : ℓ(v) <= bound}, ℓ the sum of the facet normals.
struct HeightSlab {
  Cone cone;
  Integer bound;
};

/// Lattice points of the slab, lexicographic; includes 0.
std::vector<LatticeVector> slab_points(const HeightSlab& slab);

/// Sum of the primitive facet normals, recomputed independently.
std::vector<Integer> height_form(const Cone& c);

/// Regularity of the face through v, from its rays and elementary divisors.
bool singular_point(const Cone& c, const LatticeVector& v);

/// ≤_σ-minimal singular lattice points of height at most h. Every element
/// of Min(σ) of height <= h appears, and nothing else.
std::vector<LatticeVector> brute_min(const Cone& c, const Integer& h);

/// Irreducible elements of σ ∩ N \ {0} inside [-b, b]^n. Reducibility is
/// tested by scanning every lattice point of σ in the box that contains all
/// closed parallelepipeds over independent rays, so the answer equals the
/// Hilbert basis restricted to [-b, b]^n.
std::vector<LatticeVector> brute_hilbert(const Cone& c, const Integer& b);

/// Interior lattice points on the boundary of conv(σ ∩ N \ {0}) for a
/// two-dimensional cone in rank 2, by the continued fraction walk from one
/// ray to the other. Throws NotRank2.
std::vector<LatticeVector> hj_boundary(const Cone& c);

/// Lattice points of the box by scanning the bounding box of its corners.
std::vector<LatticeVector> brute_box_points(const HalfOpenBox& box);

/// Terminal / canonical test for a simplicial cone by scanning the bounding
/// box of conv(0, u_1, ..., u_k). Throws NotSimplicial.
bool brute_is_terminal(const Cone& c);
bool brute_is_canonical(const Cone& c);

/// Lattice points of σ with every coordinate in [-b, b].
std::vector<LatticeVector> cone_points_in_box(const Cone& c, const Integer& b);

}  // namespace toricnash::oracle
