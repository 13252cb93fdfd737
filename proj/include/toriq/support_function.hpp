#pragma once

// Integral support functions of a fan, the map iota : M -> SF(N, fan) and the
// Picard group as its cokernel.

#include <cstddef>
#include <memory>
#include <vector>

#include "toriq/exact_linalg.hpp"
#include "toriq/fan.hpp"

namespace toriq {

/// An element of SF(N, fan).
struct SupportFunction {
  /// Coordinates in the basis of the owning SupportLattice.
  LatticeVector coords;
  /// h(n_rho) for every ray, in the order of Fan::rays().
  LatticeVector values;
  /// Integral m_sigma for every maximal cone, in SupportLattice::maximal_cones() order.
  std::vector<LatticeVector> pieces;

  friend bool operator==(const SupportFunction& a, const SupportFunction& b) {
    return a.coords == b.coords;
  }
};

struct PicClass {
  LatticeVector coords;

  friend bool operator==(const PicClass&, const PicClass&) = default;
  friend auto operator<=>(const PicClass&, const PicClass&) = default;
};

class SupportLattice {
 public:
  const Fan& fan() const noexcept { return *fan_; }
  std::shared_ptr<const Fan> fan_ptr() const noexcept { return fan_; }

  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<SupportFunction>& basis() const noexcept { return basis_; }
  /// Indices into Fan::cones() of the maximal cones.
  const std::vector<std::size_t>& maximal_cones() const noexcept { return maximal_; }

  /// rays x rank matrix whose column i holds the ray values of basis element i.
  const LatticeMatrix& evaluation_matrix() const noexcept { return evaluation_; }
  /// rank x lattice_rank matrix of iota.
  const LatticeMatrix& iota_matrix() const noexcept { return iota_; }
  const CokernelData& pic() const noexcept { return pic_; }
  std::size_t pic_rank() const noexcept { return pic_.free_rank; }

  /// The support function with the given coordinates.
  SupportFunction element(const LatticeVector& coords) const;
  /// The support function with the given ray values; nullopt when these values
  /// are not those of an integral support function.
  std::optional<SupportFunction> from_ray_values(const LatticeVector& values) const;

 private:
  friend SupportLattice compute_SF(const Fan& f, bool reject_torsion);

  std::shared_ptr<const Fan> fan_;
  std::vector<std::size_t> maximal_;
  std::vector<SupportFunction> basis_;
  LatticeMatrix evaluation_;
  LatticeMatrix iota_;
  CokernelData pic_;
};

/// Throws InvalidFan for invalid fans, SpanDeficient when the rays do not span,
/// and TorsionPic when Pic has torsion and `reject_torsion` is set.
SupportLattice compute_SF(const Fan& f, bool reject_torsion = true);

/// h(n) for n in the support. Throws OutsideSupport.
Integer evaluate(const SupportLattice& sl, const SupportFunction& h, const LatticeVector& n);

/// The globally linear function <m, .>.
SupportFunction iota(const SupportLattice& sl, const LatticeVector& m);

PicClass degree(const SupportLattice& sl, const SupportFunction& h);
PicClass degree(const SupportLattice& sl, const LatticeVector& coords);

struct QuotientGroupRanks {
  std::size_t big_torus = 0;  // rank SF
  std::size_t torus = 0;      // rank M
  std::size_t group = 0;      // rank Pic

  friend bool operator==(const QuotientGroupRanks&, const QuotientGroupRanks&) = default;
};

/// Throws TorsionPic.
QuotientGroupRanks quotient_group_data(const SupportLattice& sl);

inline const LatticeVector& ray_values(const SupportFunction& h) { return h.values; }

/// h(n_rho) >= 0 for every ray.
bool is_effective(const SupportFunction& h);

}  // namespace toriq
