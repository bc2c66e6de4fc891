#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "toricnash/catalog.hpp"
#include "toricnash/polyhedra.hpp"

namespace testing_support {

using namespace toricnash;

inline Cone cone(std::initializer_list<LatticeVector> rays) {
  return cone_from_rays(rays, rays.begin()->rank());
}

inline Cone terminal_112_cone() { return cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}); }
inline Cone square_cone() { return cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}); }
inline Cone cone_2_5() { return cone({{1, 0}, {2, 5}}); }

inline std::vector<LatticeVector> vecs(std::initializer_list<LatticeVector> vs) {
  std::vector<LatticeVector> out(vs);
  std::sort(out.begin(), out.end());
  return out;
}

inline LatticeVector apply(const IntMatrix& g, const LatticeVector& v) {
  std::vector<Integer> out(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out[i] += g(i, j) * v[j];
  return LatticeVector(std::move(out));
}

inline std::vector<LatticeVector> apply(const IntMatrix& g, const std::vector<LatticeVector>& vs) {
  std::vector<LatticeVector> out;
  for (const auto& v : vs) out.push_back(apply(g, v));
  std::sort(out.begin(), out.end());
  return out;
}

/// A product of random elementary matrices and sign flips.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  IntMatrix g = IntMatrix::identity(n);
  if (n < 2) return g;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) j = (i + 1) % n;
    long long k = static_cast<long long>(rng() % 5) - 2;
    for (std::size_t c = 0; c < n; ++c) g(i, c) += k * g(j, c);
    if (rng() % 4 == 0)
      for (std::size_t c = 0; c < n; ++c) g(i, c) = -g(i, c);
  }
  return g;
}

/// Catalog cones used across the unit tests.
inline std::vector<ConeSpec> catalog_corpus() {
  std::vector<ConeSpec> out;
  for (const auto& e : catalog_entries()) out.push_back(*catalog_lookup(e.name));
  return out;
}

}  // namespace testing_support
