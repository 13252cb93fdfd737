#include "toriq/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toriq/error.hpp"

namespace toriq {

namespace {

std::string ids_to_string(const std::vector<std::size_t>& ids) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << '}';
  return os.str();
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Whether `inter` is a face of `c`, where `c_ids` labels the rays of c.
bool is_face_of(const Cone& inter, const Cone& c) {
  if (!c.is_pointed()) return false;
  std::vector<LatticeVector> inside;
  for (const auto& r : c.rays())
    if (inter.contains(r)) inside.push_back(r);
  const Cone spanned = Cone::from_generators(c.ambient_rank(), inside);
  if (!(spanned == inter)) return false;
  // a subcone spanned by rays is a face iff some supporting functional cuts it out
  if (inside.empty()) return true;
  LatticeVector normal(c.ambient_rank());
  for (const auto& f : c.facets()) {
    bool vanishes = true;
    for (const auto& r : inside)
      if (sgn(dot(f, r)) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) normal += f;
  }
  for (const auto& r : c.rays()) {
    const bool in = std::find(inside.begin(), inside.end(), r) != inside.end();
    if (!in && sgn(dot(normal, r)) == 0) return false;
  }
  return true;
}

}  // namespace

std::string_view fan_violation_name(FanViolation v) {
  switch (v) {
    case FanViolation::NotPointed: return "NOT_POINTED";
    case FanViolation::BadIntersection: return "BAD_INTERSECTION";
    case FanViolation::MissingFace: return "MISSING_FACE";
    case FanViolation::SpanDeficient: return "SPAN_DEFICIENT";
  }
  return "UNKNOWN";
}

bool ValidationReport::valid() const {
  return std::all_of(issues.begin(), issues.end(), [](const auto& i) { return i.warning; });
}

bool ValidationReport::has(FanViolation kind) const {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.kind == kind; });
}

Fan Fan::from_maximal_cones(std::size_t lattice_rank, std::vector<LatticeVector> rays,
                            const std::vector<std::vector<std::size_t>>& cones) {
  std::vector<Ray> rs;
  for (std::size_t i = 0; i < rays.size(); ++i) rs.push_back({i, std::move(rays[i])});
  return build(lattice_rank, std::move(rs), cones, true);
}

Fan Fan::from_cones(std::size_t lattice_rank, std::vector<LatticeVector> rays,
                    const std::vector<std::vector<std::size_t>>& cones) {
  std::vector<Ray> rs;
  for (std::size_t i = 0; i < rays.size(); ++i) rs.push_back({i, std::move(rays[i])});
  return build(lattice_rank, std::move(rs), cones, false);
}

Fan Fan::build(std::size_t lattice_rank, std::vector<Ray> rays,
               const std::vector<std::vector<std::size_t>>& cones, bool complete) {
  Fan f;
  f.lattice_rank_ = lattice_rank;
  std::set<LatticeVector> seen;
  for (auto& r : rays) {
    if (r.generator.size() != lattice_rank) {
      throw Error(ErrorCode::InvalidFan, "ray " + std::to_string(r.id) + " has length " +
                                             std::to_string(r.generator.size()) +
                                             ", expected " + std::to_string(lattice_rank));
    }
    if (r.generator.is_zero()) {
      throw Error(ErrorCode::InvalidFan, "ray " + std::to_string(r.id) + " is zero");
    }
    r.generator = primitive(r.generator);
    if (!seen.insert(r.generator).second) {
      throw Error(ErrorCode::InvalidFan, "duplicate ray " + r.generator.to_string());
    }
  }
  f.rays_ = std::move(rays);

  std::map<LatticeVector, std::size_t> id_of;
  for (const auto& r : f.rays_) id_of[r.generator] = r.id;

  std::map<std::vector<std::size_t>, Cone> found;
  found.emplace(std::vector<std::size_t>{}, Cone::zero(lattice_rank));
  if (complete)
    for (const auto& r : f.rays_)
      found.emplace(std::vector<std::size_t>{r.id},
                    Cone::from_generators(lattice_rank, std::span(&r.generator, 1)));

  for (const auto& listed : cones) {
    std::vector<LatticeVector> gens;
    std::vector<std::size_t> ids;
    for (std::size_t idx : listed) {
      auto pos = f.ray_index(idx);
      if (!pos) {
        throw Error(ErrorCode::InvalidFan, "cone references unknown ray " + std::to_string(idx));
      }
      gens.push_back(f.rays_[*pos].generator);
      ids.push_back(idx);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Cone c = Cone::from_generators(lattice_rank, gens);
    if (!c.is_pointed()) {
      // kept as listed so validation can report it
      found.emplace(ids, std::move(c));
      continue;
    }
    std::vector<std::size_t> ext;
    for (const auto& r : c.rays()) ext.push_back(id_of.at(r));
    std::sort(ext.begin(), ext.end());
    if (!complete) {
      found.emplace(ext, c);
      continue;
    }
    const FaceLattice fl = face_lattice(c);
    for (const auto& face : fl.faces) {
      std::vector<std::size_t> face_ids;
      for (auto k : face.rays) face_ids.push_back(id_of.at(c.rays()[k]));
      std::sort(face_ids.begin(), face_ids.end());
      if (!found.count(face_ids)) found.emplace(face_ids, face_cone(c, face));
    }
  }

  for (auto& [ids, cone] : found) f.cones_.push_back({ids, std::move(cone), false});
  std::sort(f.cones_.begin(), f.cones_.end(), [](const FanCone& a, const FanCone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rays < b.rays;
  });
  for (std::size_t i = 0; i < f.cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.cones_.size() && maximal; ++j)
      if (j != i && f.cones_[j].rays.size() > f.cones_[i].rays.size() &&
          is_subset(f.cones_[i].rays, f.cones_[j].rays))
        maximal = false;
    f.cones_[i].maximal = maximal;
  }
  return f;
}

std::optional<std::size_t> Fan::ray_index(std::size_t id) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), id,
                             [](const Ray& r, std::size_t v) { return r.id < v; });
  if (it == rays_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

const LatticeVector& Fan::generator_of(std::size_t id) const {
  auto pos = ray_index(id);
  if (!pos) throw Error(ErrorCode::UnknownRay, "unknown ray " + std::to_string(id));
  return rays_[*pos].generator;
}

std::vector<std::size_t> Fan::maximal_cones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].maximal) out.push_back(i);
  return out;
}

std::optional<std::size_t> Fan::find_cone(const std::vector<std::size_t>& ray_ids) const {
  std::vector<std::size_t> key = ray_ids;
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].rays == key) return i;
  return std::nullopt;
}

bool Fan::is_face(std::size_t a, std::size_t b) const {
  return is_subset(cones_[a].rays, cones_[b].rays);
}

bool Fan::spans() const {
  std::vector<LatticeVector> gens;
  for (const auto& r : rays_) gens.push_back(r.generator);
  return rank(gens, lattice_rank_) == lattice_rank_;
}

ValidationReport validate_fan(const Fan& f) {
  ValidationReport rep;
  const auto& cones = f.cones();
  std::vector<bool> pointed(cones.size());
  for (std::size_t i = 0; i < cones.size(); ++i) {
    pointed[i] = cones[i].cone.is_pointed();
    if (!pointed[i]) {
      rep.issues.push_back({FanViolation::NotPointed, {i},
                            "cone " + ids_to_string(cones[i].rays) + " contains a line", false});
    }
  }

  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!pointed[i]) continue;
    const FaceLattice fl = face_lattice(cones[i].cone);
    for (const auto& face : fl.faces) {
      std::vector<std::size_t> ids;
      for (auto k : face.rays) {
        const auto& r = cones[i].cone.rays()[k];
        auto it = std::find_if(f.rays().begin(), f.rays().end(),
                               [&](const Ray& ray) { return ray.generator == r; });
        if (it != f.rays().end()) ids.push_back(it->id);
      }
      std::sort(ids.begin(), ids.end());
      if (ids.size() != face.rays.size() || !f.find_cone(ids)) {
        rep.issues.push_back({FanViolation::MissingFace, {i},
                              "face " + ids_to_string(ids) + " of cone " +
                                  ids_to_string(cones[i].rays) + " is not in the fan",
                              false});
      }
    }
  }

  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!pointed[i]) continue;
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!pointed[j]) continue;
      if (is_subset(cones[i].rays, cones[j].rays) && is_face_of(cones[i].cone, cones[j].cone))
        continue;
      const Cone inter = intersect(cones[i].cone, cones[j].cone);
      if (!is_face_of(inter, cones[i].cone) || !is_face_of(inter, cones[j].cone)) {
        rep.issues.push_back({FanViolation::BadIntersection, {i, j},
                              "cones " + ids_to_string(cones[i].rays) + " and " +
                                  ids_to_string(cones[j].rays) +
                                  " meet outside a common face",
                              false});
      }
    }
  }

  if (!f.spans()) {
    rep.issues.push_back({FanViolation::SpanDeficient, {},
                          "rays do not span the ambient space", true});
  }
  return rep;
}

Fan star_subfan(const Fan& f, std::size_t ray_id) {
  if (!f.ray_index(ray_id)) {
    throw Error(ErrorCode::UnknownRay, "unknown ray " + std::to_string(ray_id));
  }
  std::vector<std::vector<std::size_t>> chosen;
  std::set<std::size_t> used;
  for (auto m : f.maximal_cones()) {
    const auto& ids = f.cones()[m].rays;
    if (std::binary_search(ids.begin(), ids.end(), ray_id)) {
      chosen.push_back(ids);
      used.insert(ids.begin(), ids.end());
    }
  }
  std::vector<Ray> rays;
  for (const auto& r : f.rays())
    if (used.count(r.id)) rays.push_back(r);
  return Fan::build(f.lattice_rank(), std::move(rays), chosen, true);
}

std::optional<std::size_t> cone_containing(const Fan& f, const LatticeVector& n) {
  if (n.size() != f.lattice_rank()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from the lattice rank");
  }
  // cones are sorted by dimension, so the first hit is minimal
  for (std::size_t i = 0; i < f.cones().size(); ++i)
    if (f.cones()[i].cone.contains(n)) return i;
  return std::nullopt;
}

}  // namespace toriq
