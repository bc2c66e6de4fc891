#pragma once

// The fan Δ over σ obtained by coning over a full triangulation of the
// compact faces of Γ(σ), together with per-wall convexity certificates.
//
// Sign convention: for a wall τ shared by max cones cone(τ, u) and
// cone(τ, u'), let m be the functional equal to 1 on the rays of cone(τ, u).
// The bend is ⟨m, u'⟩ - 1. The value-1 piecewise linear function is convex
// across the wall iff bend >= 0, which is the sign of K·γ for the
// corresponding exceptional curve. Only the sign is meaningful.

#include <string>
#include <vector>

#include "toricnash/lattice_points.hpp"
#include "toricnash/valuations.hpp"

namespace toricnash {

struct Fan {
  Cone ambient;
  std::vector<LatticeVector> rays;                  // Δ(1)_prim, lexicographic
  std::vector<std::vector<std::size_t>> max_cones;  // sorted ray-index sets
  std::vector<std::size_t> source_face;             // maximal compact face each max cone lies over

  std::vector<Cone> cones() const;
};

struct WallCertificate {
  std::vector<std::size_t> wall;  // ray indices of τ
  std::size_t left_cone = 0;
  std::size_t right_cone = 0;
  LatticeVector left_extra_ray;   // u
  LatticeVector right_extra_ray;  // u'
  Rational bend;
  bool intra_face = false;  // both cones lie over the same compact face
};

struct MinimalModelResult {
  Fan fan;
  std::vector<WallCertificate> certificates;
  std::vector<LatticeVector> exceptional_rays;  // rays of Δ that are not rays of σ
  bool all_terminal = false;
  bool all_nef = false;
};

/// A triangulation of a bounded face using every lattice point of it as a
/// vertex; each simplex is listed by its vertices.
std::vector<std::vector<LatticeVector>> full_triangulation(const BoundedFace& face,
                                                           PlacingOrder order = PlacingOrder::Forward);

MinimalModelResult minimal_model_fan(const Cone& c, PlacingOrder order = PlacingOrder::Forward);

/// One certificate per wall interior to σ. Throws NonSimplicialFan.
std::vector<WallCertificate> nef_certificate(const Fan& fan);

/// bend computed from the right-hand cone instead of the left.
Rational reverse_bend(const Fan& fan, const WallCertificate& cert);

struct ModelVerification {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks support, simpliciality, terminality of every max cone, nefness,
/// the ray set ∂_cΓ ∩ N and agreement of the exceptional singular rays with
/// terminal_valuations().
ModelVerification verify_minimal_model(const Cone& c, const MinimalModelResult& result);
ModelVerification verify_minimal_model(const Cone& c, PlacingOrder order = PlacingOrder::Forward);

}  // namespace toricnash
