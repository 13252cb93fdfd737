#include "toriq/support_function.hpp"

#include <algorithm>

#include "toriq/error.hpp"

namespace toriq {

namespace {

// Integral m with <m, n_rho> = values_rho for the rays of a cone.
LatticeVector piece_for(const Fan& f, const FanCone& c, const LatticeVector& values) {
  std::vector<LatticeVector> gens;
  LatticeVector rhs(c.rays.size());
  for (std::size_t k = 0; k < c.rays.size(); ++k) {
    const std::size_t pos = *f.ray_index(c.rays[k]);
    gens.push_back(f.rays()[pos].generator);
    rhs[k] = values[pos];
  }
  if (gens.empty()) return LatticeVector(f.lattice_rank());
  auto m = solve_integral(LatticeMatrix::from_rows(gens, f.lattice_rank()), rhs);
  if (!m) throw Error(ErrorCode::InternalInconsistency, "support function is not integral");
  return *m;
}

}  // namespace

SupportFunction SupportLattice::element(const LatticeVector& coords) const {
  if (coords.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch, "support function coordinates have wrong length");
  }
  SupportFunction h;
  h.coords = coords;
  h.values = evaluation_ * coords;
  h.pieces.assign(maximal_.size(), LatticeVector(fan_->lattice_rank()));
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t k = 0; k < maximal_.size(); ++k)
      h.pieces[k] += coords[i] * basis_[i].pieces[k];
  }
  return h;
}

std::optional<SupportFunction> SupportLattice::from_ray_values(const LatticeVector& values) const {
  if (values.size() != fan_->ray_count()) {
    throw Error(ErrorCode::DimensionMismatch, "ray value vector has wrong length");
  }
  auto c = solve_integral(evaluation_, values);
  if (!c) return std::nullopt;
  return element(*c);
}

SupportLattice compute_SF(const Fan& f, bool reject_torsion) {
  const ValidationReport rep = validate_fan(f);
  if (!rep.valid()) {
    std::string msg = "fan is not valid:";
    for (const auto& issue : rep.issues)
      if (!issue.warning) msg += " " + std::string(fan_violation_name(issue.kind));
    throw Error(ErrorCode::InvalidFan, msg);
  }
  if (!f.spans()) throw Error(ErrorCode::SpanDeficient, "rays do not span the ambient space");

  SupportLattice sl;
  sl.fan_ = std::make_shared<const Fan>(f);
  sl.maximal_ = f.maximal_cones();
  const std::size_t n = f.lattice_rank();
  const std::size_t r = f.ray_count();

  // unknowns: ray values x, then coordinates of each m_sigma in a basis of span(sigma) ∩ N
  std::vector<std::vector<LatticeVector>> local;  // per maximal cone, a_rho for rho in sigma(1)
  std::size_t cols = r;
  std::vector<std::size_t> offset;
  for (auto m : sl.maximal_) {
    const FanCone& c = f.cones()[m];
    std::vector<LatticeVector> gens;
    for (auto id : c.rays) gens.push_back(f.generator_of(id));
    const auto basis = saturation(gens, n);
    const LatticeMatrix b = LatticeMatrix::from_columns(basis, n);
    std::vector<LatticeVector> coords;
    for (const auto& g : gens) coords.push_back(*solve_integral(b, g));
    local.push_back(std::move(coords));
    offset.push_back(cols);
    cols += basis.size();
  }
  std::vector<LatticeVector> rows;
  for (std::size_t k = 0; k < sl.maximal_.size(); ++k) {
    const FanCone& c = f.cones()[sl.maximal_[k]];
    for (std::size_t j = 0; j < c.rays.size(); ++j) {
      LatticeVector row(cols);
      row[*f.ray_index(c.rays[j])] = 1;
      for (std::size_t t = 0; t < local[k][j].size(); ++t) row[offset[k] + t] = -local[k][j][t];
      rows.push_back(std::move(row));
    }
  }
  std::vector<LatticeVector> values;
  for (const auto& kv : kernel_basis(LatticeMatrix::from_rows(rows, cols))) {
    values.emplace_back(std::vector<Integer>(kv.begin(), kv.begin() + static_cast<long>(r)));
  }
  const auto value_basis = lattice_basis(values, r);

  sl.evaluation_ = LatticeMatrix::from_columns(value_basis, r);
  for (std::size_t i = 0; i < value_basis.size(); ++i) {
    SupportFunction h;
    h.coords = LatticeVector::unit(value_basis.size(), i);
    h.values = value_basis[i];
    for (auto m : sl.maximal_) h.pieces.push_back(piece_for(f, f.cones()[m], h.values));
    sl.basis_.push_back(std::move(h));
  }

  std::vector<LatticeVector> iota_cols;
  for (std::size_t j = 0; j < n; ++j) iota_cols.push_back(iota(sl, LatticeVector::unit(n, j)).coords);
  sl.iota_ = LatticeMatrix::from_columns(iota_cols, sl.rank());
  sl.pic_ = cokernel(sl.iota_);
  if (reject_torsion && !sl.pic_.torsion_free()) {
    throw Error(ErrorCode::TorsionPic, "the Picard group has torsion");
  }
  return sl;
}

Integer evaluate(const SupportLattice& sl, const SupportFunction& h, const LatticeVector& n) {
  const Fan& f = sl.fan();
  auto c = cone_containing(f, n);
  if (!c) throw Error(ErrorCode::OutsideSupport, n.to_string() + " is outside the support");
  for (std::size_t k = 0; k < sl.maximal_cones().size(); ++k)
    if (f.is_face(*c, sl.maximal_cones()[k])) return dot(h.pieces[k], n);
  throw Error(ErrorCode::InternalInconsistency, "cone lies in no maximal cone");
}

SupportFunction iota(const SupportLattice& sl, const LatticeVector& m) {
  const Fan& f = sl.fan();
  if (m.size() != f.lattice_rank()) {
    throw Error(ErrorCode::DimensionMismatch, "character has wrong length");
  }
  LatticeVector values(f.ray_count());
  for (std::size_t i = 0; i < f.ray_count(); ++i) values[i] = dot(m, f.rays()[i].generator);
  auto h = sl.from_ray_values(values);
  if (!h) throw Error(ErrorCode::InternalInconsistency, "linear function is not in SF");
  return *h;
}

PicClass degree(const SupportLattice& sl, const LatticeVector& coords) {
  if (sl.pic().free_rank == 0) return {LatticeVector(0)};
  return {sl.pic().projection * coords};
}

PicClass degree(const SupportLattice& sl, const SupportFunction& h) {
  return degree(sl, h.coords);
}

QuotientGroupRanks quotient_group_data(const SupportLattice& sl) {
  if (!sl.pic().torsion_free()) throw Error(ErrorCode::TorsionPic, "the Picard group has torsion");
  return {sl.rank(), sl.fan().lattice_rank(), sl.pic_rank()};
}

bool is_effective(const SupportFunction& h) {
  return std::all_of(h.values.begin(), h.values.end(), [](const Integer& v) { return sgn(v) >= 0; });
}

}  // namespace toriq
