#pragma once

// Fans of strongly convex rational cones in a lattice N.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toriq/polyhedral.hpp"

namespace toriq {

struct Ray {
  /// Stable identifier; subfans keep the ids of their parent.
  std::size_t id = 0;
  /// Primitive generator n(rho).
  LatticeVector generator;
};

struct FanCone {
  /// Sorted ids of the extremal rays.
  std::vector<std::size_t> rays;
  Cone cone;
  bool maximal = false;

  std::size_t dim() const { return cone.dim(); }
};

enum class FanViolation { NotPointed, BadIntersection, MissingFace, SpanDeficient };

std::string_view fan_violation_name(FanViolation v);

struct ValidationIssue {
  FanViolation kind;
  /// Indices into Fan::cones() of the cones involved.
  std::vector<std::size_t> cones;
  std::string detail;
  /// Warnings do not make a fan invalid.
  bool warning = false;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool valid() const;
  bool has(FanViolation kind) const;
};

class Fan {
 public:
  Fan() = default;

  /// Rays get ids 0..rays.size()-1 and are made primitive. Each entry of
  /// `cones` lists the rays generating a cone; all faces are added, and every
  /// listed ray is a one-dimensional cone of the fan.
  /// Throws InvalidFan on zero or duplicate rays, bad indices or lengths.
  static Fan from_maximal_cones(std::size_t lattice_rank, std::vector<LatticeVector> rays,
                                const std::vector<std::vector<std::size_t>>& cones);

  /// Exactly the given cones (plus the zero cone), without face completion.
  static Fan from_cones(std::size_t lattice_rank, std::vector<LatticeVector> rays,
                        const std::vector<std::vector<std::size_t>>& cones);

  std::size_t lattice_rank() const noexcept { return lattice_rank_; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  std::size_t ray_count() const noexcept { return rays_.size(); }
  /// Position of the ray with the given id in rays().
  std::optional<std::size_t> ray_index(std::size_t id) const;
  const LatticeVector& generator_of(std::size_t id) const;

  /// Sorted by (dim, rays); cones().front() is the zero cone.
  const std::vector<FanCone>& cones() const noexcept { return cones_; }
  std::vector<std::size_t> maximal_cones() const;
  std::optional<std::size_t> find_cone(const std::vector<std::size_t>& ray_ids) const;
  /// Cone a is a face of cone b (by extremal rays; meaningful for valid fans).
  bool is_face(std::size_t a, std::size_t b) const;

  /// The rays span N_R.
  bool spans() const;

 private:
  friend Fan star_subfan(const Fan& f, std::size_t ray_id);
  static Fan build(std::size_t lattice_rank, std::vector<Ray> rays,
                   const std::vector<std::vector<std::size_t>>& cones, bool complete);

  std::size_t lattice_rank_ = 0;
  std::vector<Ray> rays_;
  std::vector<FanCone> cones_;
};

ValidationReport validate_fan(const Fan& f);

/// Subfan generated by the maximal cones containing the ray. Throws UnknownRay.
Fan star_subfan(const Fan& f, std::size_t ray_id);

/// Index of the minimal cone containing n, or nullopt when n is outside |f|.
std::optional<std::size_t> cone_containing(const Fan& f, const LatticeVector& n);

}  // namespace toriq
