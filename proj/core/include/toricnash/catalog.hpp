#pragma once

// Named example cones and a seeded random-cone generator.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricnash/polyhedra.hpp"

namespace toricnash {

/// A cone as given by the user: generators, not yet reduced.
struct ConeSpec {
  std::string name;
  std::size_t lattice_rank = 0;
  std::vector<LatticeVector> rays;

  Cone to_cone() const { return cone_from_rays(rays, lattice_rank); }
};

struct CatalogEntry {
  std::string name;
  std::string description;
};

/// The fixed catalog listing. Parametrised families (regular-<n>, A<n>,
/// quotient-<r>-<a>) are listed with a few representatives but accept any
/// valid parameter in catalog_lookup.
std::vector<CatalogEntry> catalog_entries();

/// nullopt for an unknown name or invalid parameters.
std::optional<ConeSpec> catalog_lookup(const std::string& name);

struct RandomConeOptions {
  std::size_t rank = 3;
  long long bound = 8;           // coordinates in [-bound, bound]
  std::size_t extra_rays = 2;    // number of generators in [rank, rank + extra_rays]
  bool simplicial = false;       // exactly rank generators
  long long max_abs_det = 0;     // simplicial only; 0 means no limit
};

/// Draws full-dimensional strongly convex cones; samples failing the
/// requirements are rejected and redrawn. Deterministic for a given seed.
std::vector<ConeSpec> random_cones(std::uint64_t seed, std::size_t count, const RandomConeOptions& opts);

}  // namespace toricnash
