#include "toriq/cox_quotient.hpp"

#include <algorithm>
#include <set>

#include "toriq/error.hpp"

namespace toriq {

namespace {

std::vector<LatticeVector> evaluation_rows(const SupportLattice& sl) {
  return sl.evaluation_matrix().row_vectors();
}

std::vector<std::size_t> ray_positions(const Fan& f, const std::vector<std::size_t>& ids) {
  std::vector<std::size_t> out;
  for (auto id : ids) out.push_back(*f.ray_index(id));
  std::sort(out.begin(), out.end());
  return out;
}

std::string cone_label(const Fan& f, std::size_t i) {
  std::string s = "{";
  const auto& ids = f.cones()[i].rays;
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + std::to_string(ids[k]);
  return s + "}";
}

LatticeVector sum_of(const std::vector<LatticeVector>& vs, std::size_t n) {
  LatticeVector s(n);
  for (const auto& v : vs) s += v;
  return s;
}

}  // namespace

LatticeVector half_space(const SupportLattice& sl, std::size_t ray_id) {
  auto pos = sl.fan().ray_index(ray_id);
  if (!pos) throw Error(ErrorCode::UnknownRay, "unknown ray " + std::to_string(ray_id));
  return sl.evaluation_matrix().row(*pos);
}

Cone effective_cone(const SupportLattice& sl) {
  return Cone::from_inequalities(sl.rank(), evaluation_rows(sl));
}

bool EnoughCartierReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds; });
}

std::vector<std::size_t> EnoughCartierReport::failing() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows)
    if (!r.holds) out.push_back(r.cone);
  return out;
}

EnoughCartierReport check_enough_cartier(const SupportLattice& sl) {
  const Fan& f = sl.fan();
  const auto rows = evaluation_rows(sl);
  EnoughCartierReport rep;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const auto on = ray_positions(f, f.cones()[i].rays);
    std::vector<LatticeVector> eqs;
    for (auto p : on) eqs.push_back(rows[p]);
    const Cone candidates = Cone::from_inequalities(sl.rank(), rows, eqs);
    const LatticeVector w = sum_of(candidates.rays(), sl.rank());

    EnoughCartierRow row;
    row.cone = i;
    row.holds = true;
    for (std::size_t p = 0; p < rows.size(); ++p) {
      if (std::binary_search(on.begin(), on.end(), p)) continue;
      if (sgn(dot(rows[p], w)) <= 0) {
        row.holds = false;
        row.blocking_ray = f.rays()[p].id;
        break;
      }
    }
    if (row.holds) row.witness = sl.element(w);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Cone QuotientPresentation::dual_face(std::size_t cone) const {
  std::vector<LatticeVector> gens;
  for (auto k : hat_.at(cone).dual_rays) gens.push_back(check_.rays()[k]);
  return Cone::from_generators(sl_.rank(), gens);
}

QuotientPresentation build_quotient(const SupportLattice& sl) {
  if (!sl.pic().torsion_free()) throw Error(ErrorCode::TorsionPic, "the Picard group has torsion");
  const Fan& f = sl.fan();
  const EnoughCartierReport ec = check_enough_cartier(sl);
  if (!ec.all_hold()) {
    std::string msg = "no support function vanishing exactly on cone(s)";
    for (auto i : ec.failing()) msg += " " + cone_label(f, i);
    throw Error(ErrorCode::NotEnoughCartier, msg);
  }

  QuotientPresentation qp;
  qp.sl_ = sl;
  qp.check_ = effective_cone(sl);
  if (!qp.check_.is_pointed() || !qp.check_.is_full_dimensional()) {
    throw Error(ErrorCode::InternalInconsistency, "effective cone is not pointed and full-dimensional");
  }
  qp.c_ = qp.check_.dual();
  if (qp.c_.facets() != qp.check_.rays()) {
    throw Error(ErrorCode::InternalInconsistency, "facets of C differ from rays of its dual");
  }
  qp.c_faces_ = face_lattice(qp.c_);

  const auto rows = evaluation_rows(sl);
  std::set<std::size_t> used;
  for (const auto& row : rows) {
    const LatticeVector l = primitive(row);
    auto it = std::find(qp.c_.rays().begin(), qp.c_.rays().end(), l);
    if (it == qp.c_.rays().end() || !used.insert(it - qp.c_.rays().begin()).second) {
      throw Error(ErrorCode::InternalInconsistency,
                  "evaluation functional " + row.to_string() + " is not a distinct ray of C");
    }
    qp.l_.push_back(l);
    qp.l_index_.push_back(static_cast<std::size_t>(it - qp.c_.rays().begin()));
  }
  if (qp.c_.rays().size() != rows.size()) {
    throw Error(ErrorCode::InternalInconsistency, "C has rays not coming from the fan");
  }

  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    HatCone hc;
    hc.cone = i;
    for (auto p : ray_positions(f, f.cones()[i].rays)) hc.c_rays.push_back(qp.l_index_[p]);
    std::sort(hc.c_rays.begin(), hc.c_rays.end());
    auto face = qp.c_faces_.find(hc.c_rays);
    if (!face) {
      throw Error(ErrorCode::InternalInconsistency,
                  "rays of cone " + cone_label(f, i) + " do not span a face of C");
    }
    hc.face = *face;
    hc.dual_rays = qp.c_faces_.faces[*face].normals;
    if (qp.c_faces_.faces[*face].dim != f.cones()[i].dim()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "lift of cone " + cone_label(f, i) + " has the wrong dimension");
    }
    qp.hat_.push_back(std::move(hc));
  }
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const auto hb = hilbert_basis(qp.dual_face(i));
    qp.h_dist_.push_back(sl.element(sum_of(hb, sl.rank())));
  }
  return qp;
}

HatFan hat_fan(const QuotientPresentation& qp) {
  const Fan& f = qp.fan();
  const std::size_t s = qp.support().rank();
  std::vector<std::vector<std::size_t>> maximal;
  for (auto m : f.maximal_cones()) maximal.push_back(ray_positions(f, f.cones()[m].rays));

  HatFan hf;
  hf.fan = Fan::from_maximal_cones(s, qp.l(), maximal);
  hf.valid = validate_fan(hf.fan).valid();

  bool bijective = hf.fan.cones().size() == f.cones().size();
  for (std::size_t i = 0; i < f.cones().size() && bijective; ++i) {
    auto j = hf.fan.find_cone(ray_positions(f, f.cones()[i].rays));
    if (!j) {
      bijective = false;
      break;
    }
    hf.correspondence.push_back(*j);
  }

  hf.poset_isomorphic = bijective;
  hf.dimensions_match = bijective;
  hf.simpliciality_matches = bijective;
  hf.projection_matches = bijective;
  if (bijective) {
    const auto& hat = qp.hat_cones();
    for (std::size_t i = 0; i < f.cones().size(); ++i) {
      const FanCone& lo = f.cones()[i];
      const FanCone& up = hf.fan.cones()[hf.correspondence[i]];
      for (std::size_t j = 0; j < f.cones().size(); ++j) {
        const bool below = f.is_face(i, j);
        if (below != hf.fan.is_face(hf.correspondence[i], hf.correspondence[j]) ||
            below != qp.faces_of_c().contains(hat[j].face, hat[i].face))
          hf.poset_isomorphic = false;
      }
      if (lo.dim() != up.dim()) hf.dimensions_match = false;
      if (is_simplicial(lo.cone) != is_simplicial(up.cone)) hf.simpliciality_matches = false;

      // dual of iota: l -> (l . iota(e_j))_j
      std::vector<LatticeVector> images;
      const LatticeMatrix proj = qp.support().iota_matrix().transpose();
      for (const auto& r : up.cone.rays()) images.push_back(proj * r);
      if (!(Cone::from_generators(f.lattice_rank(), images) == lo.cone))
        hf.projection_matches = false;
    }
  }
  if (!hf.all()) {
    throw Error(ErrorCode::InternalInconsistency, "lifted fan certificate failed");
  }
  return hf;
}

std::vector<LatticeVector> minimal_generators(const QuotientPresentation& qp, std::size_t cone) {
  const Cone face = qp.dual_face(cone);
  const std::size_t s = qp.support().rank();
  if (face.is_zero()) return {LatticeVector(s)};
  const auto hb = hilbert_basis(face);
  constexpr std::size_t kMaxSubsetBasis = 16;
  if (hb.size() > kMaxSubsetBasis) {
    throw Error(ErrorCode::CertificateFailure,
                "dual face has " + std::to_string(hb.size()) +
                    " Hilbert basis elements; too many for the generator search");
  }
  // a minimal generator is a 0/1 combination of the Hilbert basis: any
  // coefficient >= 2 can be lowered without leaving the relative interior
  std::set<LatticeVector> candidates;
  for (std::size_t mask = 1; mask < (std::size_t{1} << hb.size()); ++mask) {
    LatticeVector v(s);
    for (std::size_t k = 0; k < hb.size(); ++k)
      if (mask >> k & 1) v += hb[k];
    if (face.in_relative_interior(v)) candidates.insert(v);
  }
  std::vector<LatticeVector> out;
  for (const auto& y : candidates) {
    bool minimal = true;
    for (const auto& x : candidates)
      if (!(x == y) && face.contains(y - x)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(y);
  }
  return out;
}

IrrelevantIdeal irrelevant_ideal(const QuotientPresentation& qp, bool full_generators) {
  IrrelevantIdeal b;
  b.maximal = qp.fan().maximal_cones();
  for (auto m : b.maximal) b.radical_generators.push_back(qp.distinguished()[m]);
  if (full_generators) {
    b.full_generators.emplace();
    for (auto m : b.maximal) b.full_generators->push_back(minimal_generators(qp, m));
  }

  const FaceLattice& fl = qp.faces_of_c();
  std::set<std::size_t> lifted;
  for (const auto& hc : qp.hat_cones()) lifted.insert(hc.face);
  std::vector<std::size_t> excluded;
  for (std::size_t i = 0; i < fl.faces.size(); ++i)
    if (!lifted.count(i)) excluded.push_back(i);
  for (auto i : excluded) {
    const bool minimal = std::none_of(excluded.begin(), excluded.end(), [&](std::size_t j) {
      return j != i && fl.contains(i, j);
    });
    if (minimal) {
      b.vanishing.push_back({i, fl.faces[i].rays, fl.faces[i].normals, fl.faces[i].dim});
    }
  }
  return b;
}

std::optional<std::size_t> codim_check(const QuotientPresentation& qp) {
  const IrrelevantIdeal b = irrelevant_ideal(qp);
  if (b.vanishing.empty()) return std::nullopt;
  std::size_t codim = b.vanishing.front().dim;
  for (const auto& c : b.vanishing) codim = std::min(codim, c.dim);
  if (qp.support().pic_rank() >= 1 && codim < 2) {
    throw Error(ErrorCode::InternalInconsistency,
                "V(B) has codimension " + std::to_string(codim) + " in Spec S");
  }
  return codim;
}

}  // namespace toriq
