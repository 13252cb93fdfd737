#pragma once

// Rational polyhedral cones carried in both generator and inequality form,
// their face lattices, Hilbert bases and lattice-point enumeration.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toriq/exact_linalg.hpp"

namespace toriq {

/// Output of the double description method for {x : <a, x> >= 0 for all a}.
struct DoubleDescription {
  /// Spans the lineality space over Q (not canonicalized).
  std::vector<LatticeVector> lineality;
  /// Primitive extremal rays modulo the lineality space.
  std::vector<LatticeVector> rays;
};

/// Constraints are made primitive, deduplicated and inserted in lexicographic
/// order; adjacency of rays is decided by the rank test.
DoubleDescription double_description(std::size_t dim,
                                     std::span<const LatticeVector> constraints);

/// A rational polyhedral cone {L + cone(rays)} = {x : <f, x> >= 0, <e, x> = 0}.
///
/// Canonical form: rays and facets are primitive, sorted lexicographically and
/// irredundant; ray representatives are orthogonal to the lineality space and
/// facet representatives orthogonal to the equations. Lineality and equation
/// bases are Hermite-reduced bases of saturated lattices. Two cones are equal
/// iff their canonical data agree.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t ambient_rank,
                              std::span<const LatticeVector> generators);
  static Cone from_inequalities(std::size_t ambient_rank,
                                std::span<const LatticeVector> inequalities,
                                std::span<const LatticeVector> equations = {});
  static Cone zero(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<LatticeVector>& lineality() const noexcept { return lineality_; }
  const std::vector<LatticeVector>& facets() const noexcept { return facets_; }
  const std::vector<LatticeVector>& equations() const noexcept { return equations_; }

  /// rays() followed by +l, -l for every lineality basis vector l.
  std::vector<LatticeVector> generators() const;

  std::size_t dim() const noexcept { return ambient_rank_ - equations_.size(); }
  std::size_t lineality_dim() const noexcept { return lineality_.size(); }
  bool is_pointed() const noexcept { return lineality_.empty(); }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }
  bool is_zero() const noexcept { return dim() == 0; }

  bool contains(const LatticeVector& v) const;
  bool in_relative_interior(const LatticeVector& v) const;

  /// {u : <u, v> >= 0 for all v in this cone}; swaps the two representations.
  Cone dual() const;

  friend bool operator==(const Cone& a, const Cone& b) = default;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

Cone dual_cone(const Cone& c);

/// Intersection of two cones in the same ambient lattice.
Cone intersect(const Cone& a, const Cone& b);

/// A face of a pointed cone, identified by the sorted indices of the parent's
/// extremal rays it contains.
struct Face {
  std::vector<std::size_t> rays;
  /// Indices of the parent's facets vanishing on the face. These are also the
  /// ray indices of the dual face in dual_cone(parent).
  std::vector<std::size_t> normals;
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

struct FaceLattice {
  Cone cone;
  /// Sorted by (dim, rays); faces.front() is {0}, faces.back() the cone itself.
  std::vector<Face> faces;

  std::optional<std::size_t> find(const std::vector<std::size_t>& rays) const;
  /// Face a is contained in face b.
  bool contains(std::size_t b, std::size_t a) const;
  /// Faces of face i of dimension dim - 1.
  std::vector<std::size_t> facets_of(std::size_t i) const;
};

/// Throws NotPointed for cones with lineality.
FaceLattice face_lattice(const Cone& c);

/// The face as a cone in its own right.
Cone face_cone(const Cone& parent, const Face& face);

/// Unique minimal generating set of c ∩ Z^n, sorted. Throws NotPointed.
std::vector<LatticeVector> hilbert_basis(const Cone& c);

/// A generating set of the semigroup c ∩ Z^n: the Hilbert basis for pointed
/// cones, otherwise ±(lineality basis) plus lifts of the Hilbert basis of the
/// pointed quotient.
std::vector<LatticeVector> semigroup_generators(const Cone& c);

/// Sum of the extremal rays, checked to lie in the relative interior.
/// Throws ZeroCone for {0} and NotPointed for cones with lineality.
LatticeVector relative_interior_point(const Cone& c);

bool is_simplicial(const Cone& c);

/// Lattice points of {x in Z^dim : <a_i, x> >= b_i}.
struct PolytopePoints {
  bool bounded = true;
  std::vector<LatticeVector> points;
  /// Nonzero recession direction when unbounded.
  std::optional<LatticeVector> recession;
};

PolytopePoints lattice_points(std::size_t dim, std::span<const LatticeVector> a,
                              std::span<const Integer> b);

}  // namespace toriq
