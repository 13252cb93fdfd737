#include "toriq/polyhedral.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "toriq/error.hpp"

namespace toriq {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64) {}
  void resize(std::size_t n) { words_.resize((n + 63) / 64); }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<LatticeVector> clean(std::span<const LatticeVector> vs, std::size_t dim) {
  std::set<LatticeVector> s;
  for (const auto& v : vs) {
    if (v.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vector " + v.to_string() + " has wrong length for rank " +
                      std::to_string(dim));
    }
    if (!v.is_zero()) s.insert(primitive(v));
  }
  return {s.begin(), s.end()};
}

// v projected onto the orthogonal complement of span(basis), scaled to a
// primitive integer vector.
LatticeVector reduce_modulo(const LatticeVector& v, const std::vector<LatticeVector>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  LatticeMatrix gram(k, k);
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto c = solve_rational(gram, rhs);
  RationalVector w = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[j] -= (*c)[i] * basis[i][j];
  Integer den = 1;
  for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  LatticeVector r(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rational s = w[j] * den;
    r[j] = s.get_num();
  }
  return primitive(r);
}

std::vector<LatticeVector> canonical_reps(const std::vector<LatticeVector>& vs,
                                          const std::vector<LatticeVector>& modulo) {
  std::set<LatticeVector> s;
  for (const auto& v : vs) {
    auto r = reduce_modulo(v, modulo);
    if (!r.is_zero()) s.insert(std::move(r));
  }
  return {s.begin(), s.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// Double description

DoubleDescription double_description(std::size_t dim,
                                     std::span<const LatticeVector> constraints) {
  const std::vector<LatticeVector> cons = clean(constraints, dim);
  std::vector<LatticeVector> lin;
  for (std::size_t i = 0; i < dim; ++i) lin.push_back(LatticeVector::unit(dim, i));
  std::vector<LatticeVector> rays;
  std::vector<Bitset> tight;

  for (std::size_t k = 0; k < cons.size(); ++k) {
    const LatticeVector& a = cons[k];
    for (auto& t : tight) t.resize(k + 1);

    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (sgn(dot(a, lin[i])) != 0) {
        pivot = i;
        break;
      }

    if (pivot < lin.size()) {
      // the new constraint cuts the lineality space by one dimension
      LatticeVector l0 = lin[pivot];
      Integer s = dot(a, l0);
      if (s < 0) {
        l0 = -l0;
        s = -s;
      }
      std::vector<LatticeVector> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        Integer t = dot(a, lin[i]);
        next_lin.push_back(primitive(s * lin[i] - t * l0));
      }
      for (std::size_t r = 0; r < rays.size(); ++r) {
        Integer t = dot(a, rays[r]);
        if (sgn(t) != 0) rays[r] = primitive(s * rays[r] - t * l0);
        tight[r].set(k);
      }
      Bitset all(k + 1);
      for (std::size_t j = 0; j < k; ++j) all.set(j);
      rays.push_back(l0);
      tight.push_back(all);
      lin = std::move(next_lin);
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<LatticeVector> next_rays;
    std::vector<Bitset> next_tight;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r]);
      int sg = sgn(val[r]);
      if (sg > 0) pos.push_back(r);
      if (sg < 0) neg.push_back(r);
      if (sg >= 0) {
        next_rays.push_back(rays[r]);
        next_tight.push_back(tight[r]);
        if (sg == 0) next_tight.back().set(k);
      }
    }
    if (!neg.empty() && !pos.empty() && dim >= lin.size() + 2) {
      const std::size_t target = dim - lin.size() - 2;
      for (std::size_t p : pos)
        for (std::size_t q : neg) {
          Bitset common = tight[p] & tight[q];
          if (common.count() < target) continue;
          std::vector<LatticeVector> active;
          for (std::size_t j = 0; j < k; ++j)
            if (common.test(j)) active.push_back(cons[j]);
          if (rank(active, dim) != target) continue;
          next_rays.push_back(primitive(val[p] * rays[q] - val[q] * rays[p]));
          common.set(k);
          next_tight.push_back(common);
        }
    }
    rays = std::move(next_rays);
    tight = std::move(next_tight);
  }
  return {std::move(lin), std::move(rays)};
}

// ---------------------------------------------------------------------------
// Cone

Cone Cone::from_generators(std::size_t ambient_rank,
                           std::span<const LatticeVector> generators) {
  const auto gens = clean(generators, ambient_rank);
  Cone c;
  c.ambient_rank_ = ambient_rank;

  DoubleDescription dual = double_description(ambient_rank, gens);
  c.equations_ = saturation(dual.lineality, ambient_rank);
  c.facets_ = canonical_reps(dual.rays, c.equations_);

  std::vector<LatticeVector> h = c.facets_;
  for (const auto& e : c.equations_) {
    h.push_back(e);
    h.push_back(-e);
  }
  DoubleDescription primal = double_description(ambient_rank, h);
  c.lineality_ = saturation(primal.lineality, ambient_rank);
  c.rays_ = canonical_reps(primal.rays, c.lineality_);
  return c;
}

Cone Cone::from_inequalities(std::size_t ambient_rank,
                             std::span<const LatticeVector> inequalities,
                             std::span<const LatticeVector> equations) {
  std::vector<LatticeVector> g(inequalities.begin(), inequalities.end());
  for (const auto& e : equations) {
    g.push_back(e);
    g.push_back(-e);
  }
  return from_generators(ambient_rank, g).dual();
}

Cone Cone::zero(std::size_t ambient_rank) {
  return from_generators(ambient_rank, {});
}

std::vector<LatticeVector> Cone::generators() const {
  std::vector<LatticeVector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

bool Cone::contains(const LatticeVector& v) const {
  for (const auto& e : equations_)
    if (sgn(dot(e, v)) != 0) return false;
  for (const auto& f : facets_)
    if (sgn(dot(f, v)) < 0) return false;
  return true;
}

bool Cone::in_relative_interior(const LatticeVector& v) const {
  for (const auto& e : equations_)
    if (sgn(dot(e, v)) != 0) return false;
  for (const auto& f : facets_)
    if (sgn(dot(f, v)) <= 0) return false;
  return true;
}

Cone Cone::dual() const {
  Cone d;
  d.ambient_rank_ = ambient_rank_;
  d.rays_ = facets_;
  d.lineality_ = equations_;
  d.facets_ = rays_;
  d.equations_ = lineality_;
  return d;
}

Cone dual_cone(const Cone& c) { return c.dual(); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) {
    throw Error(ErrorCode::DimensionMismatch, "intersecting cones of different rank");
  }
  std::vector<LatticeVector> ineq = a.facets();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  std::vector<LatticeVector> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_rank(), ineq, eq);
}

// ---------------------------------------------------------------------------
// Faces

std::optional<std::size_t> FaceLattice::find(const std::vector<std::size_t>& rays) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].rays == rays) return i;
  return std::nullopt;
}

bool FaceLattice::contains(std::size_t b, std::size_t a) const {
  return std::includes(faces[b].rays.begin(), faces[b].rays.end(),
                       faces[a].rays.begin(), faces[a].rays.end());
}

std::vector<std::size_t> FaceLattice::facets_of(std::size_t i) const {
  std::vector<std::size_t> r;
  for (std::size_t j = 0; j < faces.size(); ++j)
    if (faces[j].dim + 1 == faces[i].dim && contains(i, j)) r.push_back(j);
  return r;
}

FaceLattice face_lattice(const Cone& c) {
  if (!c.is_pointed()) {
    throw Error(ErrorCode::NotPointed, "face lattice requires a pointed cone");
  }
  const auto& rays = c.rays();
  const auto& facets = c.facets();
  std::vector<std::vector<std::size_t>> zero_sets;
  for (const auto& f : facets) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (sgn(dot(f, rays[i])) == 0) z.push_back(i);
    zero_sets.push_back(std::move(z));
  }

  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& z : zero_sets) {
      std::vector<std::size_t> next;
      std::set_intersection(cur.begin(), cur.end(), z.begin(), z.end(),
                            std::back_inserter(next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  FaceLattice fl;
  fl.cone = c;
  for (const auto& s : seen) {
    Face f;
    f.rays = s;
    std::vector<LatticeVector> gens;
    for (auto i : s) gens.push_back(rays[i]);
    f.dim = rank(gens, c.ambient_rank());
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (std::includes(zero_sets[j].begin(), zero_sets[j].end(), s.begin(), s.end()))
        f.normals.push_back(j);
    fl.faces.push_back(std::move(f));
  }
  std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.rays < b.rays;
  });
  return fl;
}

Cone face_cone(const Cone& parent, const Face& face) {
  std::vector<LatticeVector> gens;
  for (auto i : face.rays) gens.push_back(parent.rays()[i]);
  return Cone::from_generators(parent.ambient_rank(), gens);
}

bool is_simplicial(const Cone& c) {
  if (!c.is_pointed()) {
    throw Error(ErrorCode::NotPointed, "simpliciality requires a pointed cone");
  }
  return c.rays().size() == c.dim();
}

LatticeVector relative_interior_point(const Cone& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroCone, "the zero cone has no interior point");
  if (!c.is_pointed()) {
    throw Error(ErrorCode::NotPointed, "relative interior point requires a pointed cone");
  }
  LatticeVector s(c.ambient_rank());
  for (const auto& r : c.rays()) s += r;
  if (!c.in_relative_interior(s)) {
    throw Error(ErrorCode::InternalInconsistency,
                "ray sum " + s.to_string() + " is not in the relative interior");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Lattice points of polytopes

PolytopePoints lattice_points(std::size_t dim, std::span<const LatticeVector> a,
                              std::span<const Integer> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "constraint/right-hand side count mismatch");
  }
  // homogenize: <a_i, x> - b_i u >= 0, u >= 0
  std::vector<LatticeVector> h;
  for (std::size_t i = 0; i < a.size(); ++i) {
    LatticeVector v(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) v[j] = a[i][j];
    v[dim] = -b[i];
    h.push_back(std::move(v));
  }
  h.push_back(LatticeVector::unit(dim + 1, dim));
  Cone hom = Cone::from_inequalities(dim + 1, h);

  auto truncate = [dim](const LatticeVector& v) {
    LatticeVector t(dim);
    for (std::size_t j = 0; j < dim; ++j) t[j] = v[j];
    return t;
  };

  PolytopePoints out;
  std::vector<LatticeVector> vertices_hom;
  std::optional<LatticeVector> recession;
  for (const auto& r : hom.rays()) {
    if (sgn(r[dim]) > 0) {
      vertices_hom.push_back(r);
    } else if (!recession) {
      recession = truncate(r);
    }
  }
  if (!hom.lineality().empty() && !recession) recession = truncate(hom.lineality().front());
  if (vertices_hom.empty()) return out;  // empty polytope
  if (recession) {
    out.bounded = false;
    out.recession = recession;
    return out;
  }

  std::vector<Integer> lo(dim), hi(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    bool first = true;
    for (const auto& v : vertices_hom) {
      Integer f, c;
      mpz_fdiv_q(f.get_mpz_t(), v[j].get_mpz_t(), v[dim].get_mpz_t());
      mpz_cdiv_q(c.get_mpz_t(), v[j].get_mpz_t(), v[dim].get_mpz_t());
      if (first || f < lo[j]) lo[j] = f;
      if (first || c > hi[j]) hi[j] = c;
      first = false;
    }
  }

  LatticeVector x(dim);
  for (std::size_t j = 0; j < dim; ++j) x[j] = lo[j];
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      if (dot(a[i], x) < b[i]) ok = false;
    if (ok) out.points.push_back(x);
    std::size_t j = 0;
    while (j < dim) {
      if (x[j] < hi[j]) {
        x[j] += 1;
        break;
      }
      x[j] = lo[j];
      ++j;
    }
    if (j == dim) break;
  }
  return out;
}

}  // namespace toriq
