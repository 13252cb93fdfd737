#pragma once

// The cone of effective support functions, its dual cone C, the lifted fan
// and the irrelevant ideal.
//
// Coordinates: support functions live in SF with the basis of the
// SupportLattice; C lives in the dual lattice with the dual basis, so the
// pairing <l, h> is the ordinary dot product.

#include <cstddef>
#include <optional>
#include <vector>

#include "toriq/fan.hpp"
#include "toriq/polyhedral.hpp"
#include "toriq/support_function.hpp"

namespace toriq {

/// The functional h -> h(n_rho) on SF. Throws UnknownRay.
LatticeVector half_space(const SupportLattice& sl, std::size_t ray_id);

/// {h : h(n_rho) >= 0 for all rho}.
Cone effective_cone(const SupportLattice& sl);

struct EnoughCartierRow {
  /// Index into Fan::cones().
  std::size_t cone = 0;
  bool holds = false;
  /// Vanishes on the rays of the cone and is positive on all others.
  std::optional<SupportFunction> witness;
  /// A ray outside the cone on which every admissible h vanishes.
  std::optional<std::size_t> blocking_ray;
};

struct EnoughCartierReport {
  std::vector<EnoughCartierRow> rows;

  bool all_hold() const;
  /// Indices into Fan::cones() of the cones that fail.
  std::vector<std::size_t> failing() const;
};

/// Decides, for every cone of the fan, whether some integral support function
/// vanishes exactly on its rays and is positive on the others. The candidate
/// set is a face of the effective cone; the sum of its extremal rays lies in
/// its relative interior, so it is a witness whenever one exists.
EnoughCartierReport check_enough_cartier(const SupportLattice& sl);

struct HatCone {
  /// Index into Fan::cones().
  std::size_t cone = 0;
  /// Index into QuotientPresentation::faces_of_c().faces.
  std::size_t face = 0;
  /// Indices into cone_c().rays().
  std::vector<std::size_t> c_rays;
  /// The dual face in the effective cone, as indices into effective().rays().
  std::vector<std::size_t> dual_rays;
};

class QuotientPresentation {
 public:
  const SupportLattice& support() const noexcept { return sl_; }
  const Fan& fan() const noexcept { return sl_.fan(); }

  /// The cone called C-check: effective support functions.
  const Cone& effective() const noexcept { return check_; }
  /// Its dual cone C.
  const Cone& cone_c() const noexcept { return c_; }
  const FaceLattice& faces_of_c() const noexcept { return c_faces_; }

  /// l_rho for every ray (in Fan::rays() order).
  const std::vector<LatticeVector>& l() const noexcept { return l_; }
  /// Position of l_rho among cone_c().rays().
  const std::vector<std::size_t>& l_index() const noexcept { return l_index_; }

  /// One entry per cone of the fan, in Fan::cones() order.
  const std::vector<HatCone>& hat_cones() const noexcept { return hat_; }
  /// The distinguished h_sigma for every cone of the fan.
  const std::vector<SupportFunction>& distinguished() const noexcept { return h_dist_; }

  /// The dual face of a hat cone as a cone of SF_R.
  Cone dual_face(std::size_t cone) const;

 private:
  friend QuotientPresentation build_quotient(const SupportLattice& sl);

  SupportLattice sl_;
  Cone check_;
  Cone c_;
  FaceLattice c_faces_;
  std::vector<LatticeVector> l_;
  std::vector<std::size_t> l_index_;
  std::vector<HatCone> hat_;
  std::vector<SupportFunction> h_dist_;
};

/// Throws NotEnoughCartier listing the failing cones, TorsionPic, or
/// InternalInconsistency when a structural certificate fails.
QuotientPresentation build_quotient(const SupportLattice& sl);

struct HatFan {
  /// The lifted fan in the dual of SF; ray ids agree with those of the fan.
  Fan fan;
  /// correspondence[i] is the index in fan.cones() of the lift of cone i.
  std::vector<std::size_t> correspondence;
  bool valid = false;
  bool poset_isomorphic = false;
  bool dimensions_match = false;
  bool simpliciality_matches = false;
  /// The dual of iota maps every lifted cone onto its cone.
  bool projection_matches = false;

  bool all() const {
    return valid && poset_isomorphic && dimensions_match && simpliciality_matches &&
           projection_matches;
  }
};

/// Throws InternalInconsistency when a certificate fails.
HatFan hat_fan(const QuotientPresentation& qp);

struct VanishingComponent {
  /// Index into faces_of_c().faces of a minimal face of C outside the lifted fan.
  std::size_t face = 0;
  /// Its rays (indices into cone_c().rays()).
  std::vector<std::size_t> c_rays;
  /// The dual face in the effective cone (indices into effective().rays()).
  std::vector<std::size_t> dual_rays;
  std::size_t dim = 0;
};

struct IrrelevantIdeal {
  /// Indices into Fan::cones() of the maximal cones.
  std::vector<std::size_t> maximal;
  /// h_sigma for each maximal cone; each B_sigma is the radical of (chi(h_sigma)).
  std::vector<SupportFunction> radical_generators;
  /// Minimal monomial generators (SF coordinates) of each B_sigma, when requested.
  std::optional<std::vector<std::vector<LatticeVector>>> full_generators;
  /// Irreducible components of V(B).
  std::vector<VanishingComponent> vanishing;
};

IrrelevantIdeal irrelevant_ideal(const QuotientPresentation& qp, bool full_generators = false);

/// Minimal lattice points, under divisibility in the effective cone, of the
/// relative interior of the dual face of the lift of a cone.
std::vector<LatticeVector> minimal_generators(const QuotientPresentation& qp, std::size_t cone);

/// Codimension of V(B) in Spec S; nullopt when V(B) is empty. Throws
/// InternalInconsistency when it is below 2 while Pic is nonzero.
std::optional<std::size_t> codim_check(const QuotientPresentation& qp);

}  // namespace toriq
