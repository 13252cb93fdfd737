#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "toriq/error.hpp"
#include "toriq/polyhedral.hpp"

using namespace toriq;

namespace {

Cone cone_of(std::size_t n, std::vector<LatticeVector> gens) {
  return Cone::from_generators(n, gens);
}

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& vs) {
  return {vs.begin(), vs.end()};
}

}  // namespace

TEST_CASE("dual cone examples") {
  const Cone orthant = cone_of(2, {{1, 0}, {0, 1}});
  CHECK(as_set(orthant.dual().rays()) == as_set({{1, 0}, {0, 1}}));

  const Cone c = cone_of(2, {{1, 0}, {1, 2}});
  CHECK(as_set(c.dual().rays()) == as_set({{0, 1}, {2, -1}}));

  const Cone z = Cone::zero(2);
  const Cone all = z.dual();
  CHECK(all.rays().empty());
  CHECK(all.lineality_dim() == 2);
  CHECK(all.dim() == 2);
  CHECK(all.dual() == z);
}

TEST_CASE("cone representations agree") {
  const Cone c = cone_of(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, 1}});
  CHECK(c.rays().size() == 4);
  CHECK(c.facets().size() == 4);
  for (const auto& f : c.facets())
    for (const auto& r : c.rays()) CHECK(sgn(dot(f, r)) >= 0);
  CHECK(Cone::from_inequalities(3, c.facets()) == c);
  CHECK(c.in_relative_interior(LatticeVector{0, 0, 1}));
  CHECK_FALSE(c.in_relative_interior(LatticeVector{1, 0, 1}));
  CHECK(c.contains(LatticeVector{1, 0, 1}));
  CHECK_FALSE(c.contains(LatticeVector{2, 0, 1}));

  const Cone flat = cone_of(3, {{1, 0, 0}, {1, 2, 0}});
  CHECK(flat.dim() == 2);
  CHECK(flat.equations().size() == 1);
  CHECK(flat.dual().lineality_dim() == 1);
}

TEST_CASE("dual agrees with the subset oracle on random cones") {
  std::mt19937_64 rng(23);
  for (std::size_t d = 1; d <= 4; ++d)
    for (int t = 0; t < 20; ++t) {
      const auto gens = oracle::random_cone(rng, d);
      const Cone c = Cone::from_generators(d, oracle::to_lattices(gens));
      CHECK(oracle::to_ivecs(c.dual().rays()) == oracle::dual_rays(gens, d));
      CHECK(c.dual().dual() == c);
    }
}

TEST_CASE("biduality on random pointed cones of any dimension") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> e(-5, 5);
  std::uniform_int_distribution<std::size_t> count(1, 5);
  int checked = 0;
  while (checked < 80) {
    const std::size_t d = 1 + checked % 4;
    std::vector<LatticeVector> gens;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
      LatticeVector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = e(rng);
      gens.push_back(v);
    }
    const Cone c = Cone::from_generators(d, gens);
    if (!c.is_pointed()) continue;
    ++checked;
    CHECK(c.dual().dual() == c);
    for (const auto& g : gens) CHECK(c.contains(g));
  }
}

TEST_CASE("face lattices") {
  CHECK(face_lattice(cone_of(2, {{1, 0}, {0, 1}})).faces.size() == 4);
  const FaceLattice sq = face_lattice(cone_of(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}));
  CHECK(sq.faces.size() == 10);
  std::vector<std::size_t> by_dim(4);
  for (const auto& f : sq.faces) ++by_dim[f.dim];
  CHECK(by_dim == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK(face_lattice(Cone::zero(3)).faces.size() == 1);
  CHECK_THROWS_AS(face_lattice(cone_of(2, {{1, 0}, {-1, 0}})), Error);
}

TEST_CASE("face lattice duality on random cones") {
  std::mt19937_64 rng(31);
  for (std::size_t d = 2; d <= 4; ++d)
    for (int t = 0; t < 10; ++t) {
      const Cone c = Cone::from_generators(d, oracle::to_lattices(oracle::random_cone(rng, d)));
      const Cone dc = c.dual();
      const FaceLattice fl = face_lattice(c);
      const FaceLattice dl = face_lattice(dc);
      CHECK(fl.faces.size() == dl.faces.size());
      for (std::size_t i = 0; i < fl.faces.size(); ++i) {
        const Face& f = fl.faces[i];
        auto j = dl.find(f.normals);
        REQUIRE(j);
        CHECK(f.dim + dl.faces[*j].dim == d);
        for (std::size_t k = 0; k < fl.faces.size(); ++k) {
          if (!fl.contains(i, k)) continue;
          auto jk = dl.find(fl.faces[k].normals);
          REQUIRE(jk);
          CHECK(dl.contains(*jk, *j));
        }
      }
    }
}

TEST_CASE("hilbert basis examples") {
  CHECK(hilbert_basis(cone_of(2, {{1, 0}, {0, 1}})) ==
        std::vector<LatticeVector>{{0, 1}, {1, 0}});
  CHECK(hilbert_basis(cone_of(2, {{1, 0}, {1, 2}})) ==
        std::vector<LatticeVector>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(hilbert_basis(cone_of(2, {{1, 0}, {1, 3}})) ==
        std::vector<LatticeVector>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  CHECK(hilbert_basis(cone_of(3, {{1, 0, 0}, {1, 2, 0}})) ==
        std::vector<LatticeVector>{{1, 0, 0}, {1, 1, 0}, {1, 2, 0}});
  CHECK(hilbert_basis(cone_of(3, {{1, 1, 1}})) == std::vector<LatticeVector>{{1, 1, 1}});
  CHECK(hilbert_basis(Cone::zero(2)).empty());
  CHECK_THROWS_AS(hilbert_basis(cone_of(2, {{1, 0}, {-1, 0}, {0, 1}})), Error);
  // cone over the 2x2 square: the nine points at height one
  const auto hb = hilbert_basis(cone_of(3, {{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {2, 2, 1}}));
  CHECK(hb.size() == 9);
}

TEST_CASE("hilbert basis agrees with exhaustive enumeration") {
  std::mt19937_64 rng(37);
  for (std::size_t d = 2; d <= 3; ++d)
    for (int t = 0; t < 12; ++t) {
      const auto gens = oracle::random_cone(rng, d);
      const Cone c = Cone::from_generators(d, oracle::to_lattices(gens));
      const auto hb = oracle::to_ivecs(hilbert_basis(c));
      CHECK(hb == oracle::hilbert_basis(gens, d));
    }
}

TEST_CASE("hilbert basis generates bounded lattice points and is irreducible") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 6; ++t) {
    const auto gens = oracle::random_cone(rng, 3);
    const Cone c = Cone::from_generators(3, oracle::to_lattices(gens));
    const auto hb = oracle::to_ivecs(hilbert_basis(c));
    for (long long x = -6; x <= 6; ++x)
      for (long long y = -6; y <= 6; ++y)
        for (long long z = -6; z <= 6; ++z) {
          const oracle::IVec p{x, y, z};
          if (c.contains(oracle::to_lattice(p))) CHECK(oracle::representable(hb, p));
        }
    for (std::size_t i = 0; i < hb.size(); ++i) {
      std::vector<oracle::IVec> others = hb;
      others.erase(others.begin() + static_cast<long>(i));
      CHECK_FALSE(oracle::representable(others, hb[i]));
    }
  }
}

TEST_CASE("semigroup generators with lineality") {
  const Cone half = Cone::from_inequalities(2, std::vector<LatticeVector>{{0, 1}});
  const auto gens = semigroup_generators(half);
  CHECK(as_set(gens) == as_set({{1, 0}, {-1, 0}, {0, 1}}));
  const Cone wedge = Cone::from_inequalities(3, std::vector<LatticeVector>{{0, 1, 0}, {0, 1, 2}});
  const auto wg = semigroup_generators(wedge);
  std::set<LatticeVector> images;
  for (const auto& g : wg) {
    CHECK(wedge.contains(g));
    images.insert(LatticeVector{g[1].get_si(), g[2].get_si()});
  }
  CHECK(images == as_set({{0, 0}, {0, 1}, {1, 0}, {2, -1}}));
}

TEST_CASE("relative interior points") {
  CHECK(relative_interior_point(cone_of(2, {{1, 0}, {0, 1}})) == LatticeVector{1, 1});
  CHECK(relative_interior_point(cone_of(2, {{2, 4}})) == LatticeVector{1, 2});
  CHECK_THROWS_AS(relative_interior_point(Cone::zero(2)), Error);
  CHECK_THROWS_AS(relative_interior_point(cone_of(2, {{1, 0}, {-1, 0}, {0, 1}})), Error);

  std::mt19937_64 rng(43);
  for (std::size_t d = 1; d <= 4; ++d)
    for (int t = 0; t < 10; ++t) {
      const Cone c = Cone::from_generators(d, oracle::to_lattices(oracle::random_cone(rng, d)));
      const LatticeVector p = relative_interior_point(c);
      for (const auto& f : c.facets()) CHECK(sgn(dot(f, p)) > 0);
    }
}

TEST_CASE("simpliciality") {
  CHECK(is_simplicial(cone_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(is_simplicial(cone_of(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})));
  CHECK(is_simplicial(cone_of(3, {{1, 2, 3}})));
}

TEST_CASE("lattice points of polytopes") {
  const std::vector<LatticeVector> a{{1, 0}, {0, 1}, {-1, -1}};
  const std::vector<Integer> b{0, 0, -2};
  const PolytopePoints tri = lattice_points(2, a, b);
  CHECK(tri.bounded);
  CHECK(tri.points.size() == 6);

  const std::vector<Integer> neg{0, 0, 1};
  CHECK(lattice_points(2, a, neg).points.empty());

  const std::vector<LatticeVector> ray{{1, 0}, {0, 1}, {0, -1}};
  const std::vector<Integer> rb{0, 0, -1};
  const PolytopePoints strip = lattice_points(2, ray, rb);
  CHECK_FALSE(strip.bounded);
  REQUIRE(strip.recession);
  CHECK(*strip.recession == LatticeVector{1, 0});

  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int t = 0; t < 30; ++t) {
    std::vector<LatticeVector> rows{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {e(rng), e(rng)}};
    std::vector<Integer> rhs{-3, -3, -3, -3, Integer(e(rng))};
    const PolytopePoints p = lattice_points(2, rows, rhs);
    REQUIRE(p.bounded);
    std::size_t brute = 0;
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) {
        const LatticeVector v{x, y};
        bool ok = true;
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (dot(rows[i], v) < rhs[i]) ok = false;
        if (ok) ++brute;
      }
    CHECK(p.points.size() == brute);
  }
}
