#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "toricnash/lattice_points.hpp"
#include "toricnash/oracles.hpp"
#include "toricnash/valuations.hpp"

using namespace toricnash;
using namespace testing_support;

namespace {

std::vector<Cone> corpus(std::uint64_t seed, std::size_t rank, std::size_t count, long long bound,
                         bool simplicial = false) {
  RandomConeOptions opts;
  opts.rank = rank;
  opts.bound = bound;
  opts.simplicial = simplicial;
  std::vector<Cone> out;
  for (const auto& s : random_cones(seed, count, opts)) out.push_back(s.to_cone());
  return out;
}

// Whether p is a nonnegative integer combination of the basis, by recursion
// on height (p - h stays in σ and gets lower).
bool generated(const Cone& c, const std::vector<LatticeVector>& basis, const LatticeVector& p,
               std::map<LatticeVector, bool>& memo) {
  if (p.is_zero()) return true;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  bool ok = false;
  for (const auto& h : basis)
    if (c.contains(p - h) && generated(c, basis, p - h, memo)) {
      ok = true;
      break;
    }
  memo[p] = ok;
  return ok;
}

}  // namespace

TEST_CASE("box points agree with the bounding-box scan") {
  for (std::size_t rank : {2, 3, 4}) {
    for (const auto& c : corpus(200 + rank, rank, rank == 4 ? 4 : 15, rank == 4 ? 3 : 4, true)) {
      for (int flags = 0; flags < 4; flags += rank == 4 ? 3 : 1) {
        HalfOpenBox box;
        box.base_rays = c.rays();
        for (std::size_t i = 0; i < c.rays().size(); ++i)
          box.coords.push_back({(flags & 1) != 0, (flags & 2) != 0 || i % 2 == 1});
        auto fast = box_points(box);
        CHECK(fast == oracle::brute_box_points(box));
        for (const auto& bp : box_points_with_coefficients(box)) {
          auto lambda = solve_rational(IntMatrix::from_columns(c.rays(), c.rank()), bp.point);
          REQUIRE(lambda);
          CHECK(*lambda == bp.coefficients);
        }
      }
    }
  }
  // Lower-dimensional base.
  auto box = HalfOpenBox::upper_closed({{1, 0, 0}, {1, 1, 2}});
  CHECK(box_points(box) == oracle::brute_box_points(box));
  CHECK(box_points(HalfOpenBox::lower_closed({{1, 0}, {2, 5}})).size() == 5);
}

TEST_CASE("polytope_points") {
  std::vector<LatticeVector> tri{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
  CHECK(polytope_points(std::span<const LatticeVector>(tri)) == vecs({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
  std::vector<LatticeVector> seg{{1, 0}, {1, 3}};
  CHECK(polytope_points(std::span<const LatticeVector>(seg)) == vecs({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  std::vector<LatticeVector> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(polytope_points(std::span<const LatticeVector>(sq)) == vecs({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  std::vector<std::vector<Rational>> q{{Rational(1, 2), 0}, {Rational(7, 2), 0}, {Rational(1, 2), 3}};
  CHECK(polytope_points(std::span<const std::vector<Rational>>(q)) ==
        vecs({{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}}));
}

TEST_CASE("triangulate_by_rays") {
  auto p = terminal_112_cone();
  auto t = triangulate_by_rays(p);
  REQUIRE(t.size() == 1);
  CHECK(t[0] == p);
  auto o = cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(triangulate_by_rays(o).size() == 1);

  auto sq = triangulate_by_rays(square_cone());
  REQUIRE(sq.size() == 2);
  int shared = 0;
  for (const auto& r : sq[0].rays()) shared += std::count(sq[1].rays().begin(), sq[1].rays().end(), r);
  CHECK(shared == 2);
}

TEST_CASE("triangulate_by_rays covers the cone without overlap") {
  for (std::size_t rank : {2, 3, 4}) {
    for (const auto& c : corpus(300 + rank, rank, 15, 4)) {
      auto pieces = triangulate_by_rays(c);
      for (const auto& piece : pieces) {
        CHECK(piece.is_simplicial());
        CHECK(piece.dim() == c.dim());
        for (const auto& r : piece.rays()) CHECK(std::count(c.rays().begin(), c.rays().end(), r) == 1);
      }
      for (const auto& v : oracle::cone_points_in_box(c, 3)) {
        int inside = 0, interior = 0;
        for (const auto& piece : pieces) {
          if (!piece.contains(v)) continue;
          ++inside;
          auto vals = piece.facet_values(v);
          if (std::all_of(vals.begin(), vals.end(), [](const Integer& x) { return x > 0; })) ++interior;
        }
        CHECK(inside >= 1);
        CHECK(interior <= 1);
        if (interior == 1) CHECK(inside == 1);
      }
    }
  }
}

TEST_CASE("hilbert basis examples") {
  CHECK(hilbert_basis(cone({{1, 0}, {0, 1}})).elements == vecs({{1, 0}, {0, 1}}));
  CHECK(hilbert_basis(terminal_112_cone()).elements == vecs({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}, {1, 1, 1}}));
  CHECK(hilbert_basis(cone_2_5()).elements == vecs({{1, 0}, {1, 1}, {1, 2}, {2, 5}}));
  CHECK(hilbert_basis(square_cone()).elements == square_cone().rays());
  // A lower-dimensional cone: the A_1 cone placed in a plane of rank 3.
  CHECK(hilbert_basis(cone({{1, 0, 0}, {1, 2, 0}})).elements == vecs({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}}));
}

TEST_CASE("hilbert basis is irreducible, complete and matches brute force") {
  for (std::size_t rank : {2, 3}) {
    for (const auto& c : corpus(400 + rank, rank, 12, 4)) {
      const auto hb = hilbert_basis(c).elements;
      for (const auto& h : hb)
        for (const auto& g : hb)
          if (h != g) CHECK_FALSE(c.contains(h - g));
      std::map<LatticeVector, bool> memo;
      for (const auto& p : oracle::cone_points_in_box(c, rank == 2 ? 10 : 5))
        CHECK(generated(c, hb, p, memo));
      std::vector<LatticeVector> boxed;
      for (const auto& h : hb)
        if (std::all_of(h.coords().begin(), h.coords().end(), [](const Integer& x) { return abs(x) <= 4; }))
          boxed.push_back(h);
      CHECK(oracle::brute_hilbert(c, 4) == boxed);
    }
  }
}

TEST_CASE("interior box points") {
  auto p = terminal_112_cone();
  auto fs = faces(p);
  for (const auto& f : fs)
    if (f.dim == 1) CHECK(interior_box_points(f) == f.rays());
  CHECK(interior_box_points(fs.back()) == vecs({{1, 1, 1}, {2, 2, 2}}));
  auto reg = faces(cone({{1, 0}, {0, 1}}));
  CHECK(interior_box_points(reg.back()) == vecs({{1, 1}}));
  // Every point lies in the relative interior of its face.
  for (const auto& f : faces(square_cone())) {
    if (f.dim == 0) continue;
    for (const auto& v : interior_box_points(f)) CHECK(f.relint_contains(v));
  }
  // The middle point of the square cone comes from the diagonal cell.
  auto sq = faces(square_cone()).back();
  auto pts = interior_box_points(sq);
  CHECK(std::count(pts.begin(), pts.end(), LatticeVector{1, 1, 2}) == 1);
}

TEST_CASE("placing triangulation of a segment and a square") {
  std::vector<LatticeVector> seg{{1, 0}, {1, 1}, {1, 2}, {1, 3}};
  for (auto order : {PlacingOrder::Forward, PlacingOrder::Reverse}) {
    auto t = placing_triangulation(seg, order);
    CHECK(t == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
  }
  std::vector<LatticeVector> sq{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  for (auto order : {PlacingOrder::Forward, PlacingOrder::Reverse}) {
    auto t = placing_triangulation(sq, order);
    CHECK(t.size() == 2);
    for (const auto& s : t) CHECK(s.size() == 3);
  }
}
