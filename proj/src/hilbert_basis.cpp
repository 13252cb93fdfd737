// Hilbert bases by triangulation: the lattice points of the fundamental
// parallelepipeds of a pulling triangulation, together with the extremal rays,
// generate the semigroup; irreducible elements are then filtered by degree.

#include <algorithm>
#include <map>
#include <set>

#include "toriq/error.hpp"
#include "toriq/polyhedral.hpp"

namespace toriq {

namespace {

using Simplex = std::vector<std::size_t>;

std::vector<Simplex> pulling_triangulation(const FaceLattice& fl, std::size_t face,
                                           std::map<std::size_t, std::vector<Simplex>>& memo) {
  if (auto it = memo.find(face); it != memo.end()) return it->second;
  const Face& f = fl.faces[face];
  std::vector<Simplex> out;
  if (f.rays.size() == f.dim) {
    out.push_back(f.rays);
  } else {
    const std::size_t apex = f.rays.front();
    for (std::size_t g : fl.facets_of(face)) {
      const auto& gr = fl.faces[g].rays;
      if (std::binary_search(gr.begin(), gr.end(), apex)) continue;
      for (Simplex s : pulling_triangulation(fl, g, memo)) {
        s.push_back(apex);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
    }
  }
  memo[face] = out;
  return out;
}

// Nonzero lattice points sum(l_i g_i), 0 <= l_i < 1, of a simplicial cone.
void parallelepiped_points(const std::vector<LatticeVector>& gens, std::size_t dim,
                           std::set<LatticeVector>& out) {
  const LatticeMatrix r = LatticeMatrix::from_columns(gens, dim);
  const SmithForm s = smith_normal_form(r);
  std::vector<Integer> d(dim);
  for (std::size_t i = 0; i < dim; ++i) d[i] = s.d(i, i);

  // Z^dim / R Z^dim is indexed by y in prod [0, d_i): lambda = V diag(1/d) y
  std::vector<Integer> y(dim, 0);
  for (;;) {
    std::size_t j = 0;
    while (j < dim) {
      if (y[j] + 1 < d[j]) {
        y[j] += 1;
        break;
      }
      y[j] = 0;
      ++j;
    }
    if (j == dim) break;

    RationalVector lambda(dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        if (sgn(y[b]) != 0) lambda[a] += Rational(s.v(a, b) * y[b], d[b]);
    RationalVector p(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      lambda[a].canonicalize();
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), lambda[a].get_num_mpz_t(), lambda[a].get_den_mpz_t());
      Rational frac = lambda[a] - fl;
      for (std::size_t c = 0; c < dim; ++c) p[c] += frac * gens[a][c];
    }
    LatticeVector pt(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      p[c].canonicalize();
      if (p[c].get_den() != 1) {
        throw Error(ErrorCode::InternalInconsistency, "non-integral parallelepiped point");
      }
      pt[c] = p[c].get_num();
    }
    if (!pt.is_zero()) out.insert(std::move(pt));
  }
}

std::vector<LatticeVector> hilbert_basis_full_dimensional(const Cone& c) {
  const std::size_t k = c.ambient_rank();
  const FaceLattice fl = face_lattice(c);
  std::map<std::size_t, std::vector<Simplex>> memo;
  const auto simplices = pulling_triangulation(fl, fl.faces.size() - 1, memo);

  std::set<LatticeVector> candidates(c.rays().begin(), c.rays().end());
  for (const auto& simplex : simplices) {
    std::vector<LatticeVector> gens;
    for (auto i : simplex) gens.push_back(c.rays()[i]);
    parallelepiped_points(gens, k, candidates);
  }

  LatticeVector grading(k);
  for (const auto& f : c.facets()) grading += f;
  std::vector<std::pair<Integer, LatticeVector>> graded;
  for (const auto& v : candidates) graded.emplace_back(dot(grading, v), v);
  std::sort(graded.begin(), graded.end());

  std::vector<std::pair<Integer, LatticeVector>> basis;
  for (const auto& [deg, v] : graded) {
    bool reducible = false;
    for (const auto& [bdeg, b] : basis) {
      if (bdeg >= deg) break;
      if (c.contains(v - b)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.emplace_back(deg, v);
  }
  std::vector<LatticeVector> out;
  for (auto& [deg, v] : basis) out.push_back(std::move(v));
  return out;
}

}  // namespace

std::vector<LatticeVector> hilbert_basis(const Cone& c) {
  if (!c.is_pointed()) {
    throw Error(ErrorCode::NotPointed, "Hilbert basis requires a pointed cone");
  }
  if (c.is_zero()) return {};
  const std::size_t n = c.ambient_rank();

  // work in the saturated lattice spanned by the cone, where it is full-dimensional
  const auto basis = saturation(c.rays(), n);
  const std::size_t k = basis.size();
  const LatticeMatrix embed = LatticeMatrix::from_columns(basis, n);
  std::vector<LatticeVector> coords;
  for (const auto& r : c.rays()) coords.push_back(*solve_integral(embed, r));
  const Cone local = Cone::from_generators(k, coords);

  std::vector<LatticeVector> out;
  for (const auto& v : hilbert_basis_full_dimensional(local)) out.push_back(embed * v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> semigroup_generators(const Cone& c) {
  if (c.is_pointed()) return hilbert_basis(c);
  const std::size_t n = c.ambient_rank();
  const CokernelData q = cokernel(LatticeMatrix::from_columns(c.lineality(), n));
  std::vector<LatticeVector> image;
  for (const auto& r : c.rays()) image.push_back(q.projection * r);
  const Cone pointed = Cone::from_generators(q.free_rank, image);

  std::vector<LatticeVector> out;
  for (const auto& h : hilbert_basis(pointed)) {
    out.push_back(*solve_integral(q.projection, h));
  }
  for (const auto& l : c.lineality()) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

}  // namespace toriq
