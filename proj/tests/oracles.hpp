#pragma once

// Brute-force reference computations used by the tests. Everything here works
// on small machine integers and shares no code with the library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "toriq/exact_linalg.hpp"

namespace oracle {

using IVec = std::vector<long long>;

IVec to_ivec(const toriq::LatticeVector& v);
toriq::LatticeVector to_lattice(const IVec& v);
std::vector<IVec> to_ivecs(const std::vector<toriq::LatticeVector>& vs);
std::vector<toriq::LatticeVector> to_lattices(const std::vector<IVec>& vs);

long long dot(const IVec& a, const IVec& b);
IVec primitive(IVec v);

/// Cofactor expansion.
long long det(const std::vector<IVec>& rows);

/// Rank over Q by rational Gaussian elimination.
std::size_t rank(const std::vector<IVec>& rows, std::size_t cols);

/// Facet normals of a full-dimensional cone, found by testing every hyperplane
/// through d-1 generators. Primitive and sorted.
std::vector<IVec> facets(const std::vector<IVec>& gens, std::size_t d);

/// Full-dimensional and pointed, decided from the facet normals.
bool is_pointed_full(const std::vector<IVec>& gens, std::size_t d);

/// Extremal rays of the dual of a full-dimensional pointed cone.
inline std::vector<IVec> dual_rays(const std::vector<IVec>& gens, std::size_t d) {
  return facets(gens, d);
}

bool in_cone(const std::vector<IVec>& facet_normals, const IVec& x);

/// Irreducible lattice points of a full-dimensional pointed cone, by exhaustive
/// enumeration of the points of degree at most that of the generator sum.
std::vector<IVec> hilbert_basis(const std::vector<IVec>& gens, std::size_t d);

/// Whether x is a nonnegative integer combination of `basis`.
bool representable(const std::vector<IVec>& basis, const IVec& x);

/// Dimension of the space of compatible families {m_sigma} modulo the
/// ambiguity in each sigma-perp.
std::size_t sf_rank(const std::vector<IVec>& rays,
                    const std::vector<std::vector<std::size_t>>& maximal, std::size_t d);

/// #{m in [-box, box]^d : x0_rho + <m, n_rho> >= 0 for all rho}.
long long count_sections(const std::vector<IVec>& rays, const IVec& x0, std::size_t d,
                         long long box);

/// Pointed full-dimensional cone with generators in [-4, 4]^d.
std::vector<IVec> random_cone(std::mt19937_64& rng, std::size_t d);

struct FanData {
  std::vector<IVec> rays;
  std::vector<std::vector<std::size_t>> maximal;
};

/// Complete fan in the plane with 3 to 6 rays in [-4, 4]^2.
FanData random_complete_fan_2d(std::mt19937_64& rng);

/// Face fan of a random lattice polytope in [-4, 4]^3 containing 0 in its interior.
FanData random_face_fan_3d(std::mt19937_64& rng);

}  // namespace oracle
