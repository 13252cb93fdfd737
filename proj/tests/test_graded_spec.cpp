#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toriq/error.hpp"
#include "toriq/fan_document.hpp"
#include "toriq/graded_spec.hpp"

using namespace toriq;

namespace {

QuotientPresentation quotient_of(const std::string& name) {
  const Fan f = to_fan(load_fan_document(std::filesystem::path(TORIQ_CORPUS_DIR) / (name + ".json")));
  return build_quotient(compute_SF(f));
}

const std::vector<std::string> kCorpus{"p1", "p2", "p1xp1", "hirzebruch_1", "hirzebruch_2",
                                       "hirzebruch_3", "affine_square_cone", "cube_fan",
                                       "blowup_p2"};

const std::vector<std::string> kComplete{"p1", "p2", "p1xp1", "hirzebruch_1", "hirzebruch_2",
                                         "hirzebruch_3", "cube_fan", "blowup_p2"};

bool effective(const QuotientPresentation& qp, const LatticeVector& c) {
  const LatticeVector v = qp.support().evaluation_matrix() * c;
  for (const auto& x : v)
    if (sgn(x) < 0) return false;
  return true;
}

// A random effective exponent: a nonnegative combination of ring generators.
LatticeVector random_effective(const std::vector<GradedMonomial>& gens, std::size_t s,
                               std::mt19937_64& rng, long max_coeff) {
  std::uniform_int_distribution<long> c(0, max_coeff);
  LatticeVector v(s);
  for (const auto& g : gens) v += Integer(c(rng)) * g.exponent;
  return v;
}

}  // namespace

TEST_CASE("ring generators of the projective plane") {
  const QuotientPresentation qp = quotient_of("p2");
  const auto gens = ring_generators(qp);
  REQUIRE(gens.size() == 3);
  std::vector<LatticeVector> values;
  for (const auto& g : gens) {
    CHECK(g.degree.coords == LatticeVector{1});
    values.push_back(qp.support().evaluation_matrix() * g.exponent);
  }
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<LatticeVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("ring generators are the irreducible effective exponents") {
  for (const auto& name : kCorpus) {
    CAPTURE(name);
    const QuotientPresentation qp = quotient_of(name);
    const auto gens = ring_generators(qp);
    std::vector<oracle::IVec> rays, hb;
    for (const auto& r : qp.effective().rays()) rays.push_back(oracle::to_ivec(r));
    for (const auto& g : gens) {
      CHECK(effective(qp, g.exponent));
      CHECK(g.degree == degree(qp.support(), g.exponent));
      hb.push_back(oracle::to_ivec(g.exponent));
    }
    std::sort(hb.begin(), hb.end());
    CHECK(hb == oracle::hilbert_basis(rays, qp.support().rank()));
  }
}

TEST_CASE("global sections match the polytope count") {
  for (const auto& name : kComplete) {
    CAPTURE(name);
    const QuotientPresentation qp = quotient_of(name);
    const SupportLattice& sl = qp.support();
    const auto gens = ring_generators(qp);
    std::vector<oracle::IVec> rays;
    for (const auto& r : qp.fan().rays()) rays.push_back(oracle::to_ivec(r.generator));
    std::mt19937_64 rng(67);
    for (int t = 0; t < 6; ++t) {
      const LatticeVector c = random_effective(gens, sl.rank(), rng, 2);
      const PicClass alpha = degree(sl, c);
      const GlobalSections gs = global_sections(qp, alpha);
      REQUIRE(gs.finite);
      const auto x0 = oracle::to_ivec(sl.evaluation_matrix() * c);
      CHECK(static_cast<long long>(gs.monomials.size()) ==
            oracle::count_sections(rays, x0, qp.fan().lattice_rank(), 14));
      bool found = false;
      for (const auto& m : gs.monomials) {
        CHECK(m.degree == alpha);
        CHECK(effective(qp, m.exponent));
        if (m.exponent == c) found = true;
      }
      CHECK(found);
    }
  }

  const QuotientPresentation p2 = quotient_of("p2");
  for (long k = 0; k <= 5; ++k)
    CHECK(global_sections(p2, PicClass{LatticeVector{k}}).monomials.size() ==
          static_cast<std::size_t>((k + 1) * (k + 2) / 2));
  CHECK(global_sections(p2, PicClass{LatticeVector{-1}}).monomials.empty());
  CHECK_THROWS_AS(global_sections(p2, PicClass{LatticeVector{1, 1}}), Error);
}

TEST_CASE("sections of an affine quotient are infinite") {
  const QuotientPresentation qp = quotient_of("affine_square_cone");
  const GlobalSections gs = global_sections(qp, PicClass{LatticeVector{}});
  CHECK_FALSE(gs.finite);
  REQUIRE(gs.recession);
  CHECK_FALSE(gs.recession->is_zero());
  CHECK(effective(qp, *gs.recession));
  CHECK(degree(qp.support(), *gs.recession).coords.empty());
}

TEST_CASE("degree-zero localizations are the affine charts") {
  const SearchBound bound;
  for (const auto& name : kCorpus) {
    CAPTURE(name);
    const QuotientPresentation qp = quotient_of(name);
    const SupportLattice& sl = qp.support();
    for (auto sigma : qp.fan().maximal_cones()) {
      const NagspecCertificate cert = verify_nagspec(qp, sigma, bound);
      const LatticeVector& h = qp.distinguished()[sigma].coords;
      const Cone sigma_dual = qp.fan().cones()[sigma].cone.dual();
      CHECK(cert.max_k <= 12);
      CHECK_FALSE(cert.forward.empty());
      CHECK_FALSE(cert.backward.empty());
      for (const auto& fw : cert.forward) {
        CHECK(sigma_dual.contains(fw.m));
        const LatticeVector c = iota(sl, fw.m).coords;
        CHECK(effective(qp, c + Integer(fw.k) * h));
        if (fw.k > 0) CHECK_FALSE(effective(qp, c + Integer(fw.k - 1) * h));
      }
      for (const auto& bw : cert.backward) {
        CHECK(sigma_dual.contains(bw.m));
        CHECK(iota(sl, bw.m).coords == bw.h + Integer(bw.k) * h);
        CHECK(degree(sl, bw.h + Integer(bw.k) * h).coords.is_zero());
      }
    }
  }
}

TEST_CASE("homogeneous units factor on every chart") {
  for (const auto& name : kCorpus) {
    CAPTURE(name);
    const QuotientPresentation qp = quotient_of(name);
    const SupportLattice& sl = qp.support();
    const auto gens = ring_generators(qp);
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> shift(0, 5);
    for (auto sigma : qp.fan().maximal_cones()) {
      const LatticeVector& hs = qp.distinguished()[sigma].coords;
      const Cone sigma_dual = qp.fan().cones()[sigma].cone.dual();
      for (int t = 0; t < 10; ++t) {
        const LatticeVector h = random_effective(gens, sl.rank(), rng, 2) - Integer(shift(rng)) * hs;
        const HomunitFactorization fz = homunit_factorize(qp, sigma, h);
        CHECK(iota(sl, fz.m).coords + fz.unit == h);
        CHECK(sigma_dual.contains(fz.m));
        const LatticeVector v = sl.evaluation_matrix() * fz.unit;
        for (auto id : qp.fan().cones()[sigma].rays) CHECK(sgn(v[*qp.fan().ray_index(id)]) == 0);
        CHECK(effective(qp, fz.unit + Integer(fz.k_plus) * hs));
        CHECK(effective(qp, -fz.unit + Integer(fz.k_minus) * hs));
      }
    }
  }
  const QuotientPresentation qp = quotient_of("p2");
  CHECK_THROWS_AS(homunit_factorize(qp, 99, LatticeVector(3)), Error);
  CHECK_THROWS_AS(homunit_factorize(qp, 0, LatticeVector(2)), Error);
}

TEST_CASE("monomial primes of the projective plane") {
  const QuotientPresentation qp = quotient_of("p2");
  const MonomialPrimeData data = monomial_primes(qp);
  CHECK(data.primes.size() == 8);
  std::size_t with_b = 0;
  for (const auto& p : data.primes) {
    if (p.contains_irrelevant) {
      ++with_b;
      CHECK(p.generators.size() == 3);
      CHECK_FALSE(p.fan_cone);
    }
  }
  CHECK(with_b == 1);
  CHECK(data.order_isomorphic);
  // zero cone lifts to the zero ideal
  CHECK(data.primes[data.prime_of_cone[0]].generators.empty());
}

TEST_CASE("monomial primes correspond to cones") {
  for (const auto& name : kCorpus) {
    CAPTURE(name);
    const QuotientPresentation qp = quotient_of(name);
    const MonomialPrimeData data = monomial_primes(qp);
    const Fan& f = qp.fan();
    CHECK(data.primes.size() == qp.faces_of_c().faces.size());
    CHECK(data.order_isomorphic);
    std::size_t avoiding = 0;
    for (const auto& p : data.primes)
      if (!p.contains_irrelevant) ++avoiding;
    CHECK(avoiding == f.cones().size());

    for (const auto& chart : data.charts) {
      CHECK(chart.bijective);
      CHECK(chart.order_preserving);
      std::size_t faces = 0;
      for (std::size_t t = 0; t < f.cones().size(); ++t)
        if (f.is_face(t, chart.cone)) ++faces;
      CHECK(chart.entries.size() == faces);
    }

    // D+ is multiplicative
    const auto& gens = data.generators;
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a; b < gens.size(); ++b) {
        auto da = d_plus(qp, data, gens[a].exponent);
        auto db = d_plus(qp, data, gens[b].exponent);
        std::vector<std::size_t> both;
        std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(both));
        CHECK(d_plus(qp, data, gens[a].exponent + gens[b].exponent) == both);
      }

    // D+(h_sigma) consists of the lifts of the faces of sigma
    for (auto sigma : f.maximal_cones()) {
      std::vector<std::size_t> expected;
      for (std::size_t t = 0; t < f.cones().size(); ++t)
        if (f.is_face(t, sigma)) expected.push_back(data.prime_of_cone[t]);
      std::sort(expected.begin(), expected.end());
      CHECK(d_plus(qp, data, qp.distinguished()[sigma].coords) == expected);
    }
  }
}

TEST_CASE("chart sections of the projective plane") {
  const QuotientPresentation qp = quotient_of("p2");
  const Fan& f = qp.fan();
  const auto sigma = *f.find_cone({1, 2});
  const ChartSections cs = twisted_sections_on_chart(qp, PicClass{LatticeVector{1}}, sigma);
  CHECK(qp.support().evaluation_matrix() * cs.generator == LatticeVector{1, 0, 0});
  CHECK(cs.stalks.size() == 4);
  for (const auto& st : cs.stalks) CHECK(st.samples > 0);
}

TEST_CASE("chart sections glue") {
  for (const auto& name : kCorpus) {
    CAPTURE(name);
    const QuotientPresentation qp = quotient_of(name);
    const SupportLattice& sl = qp.support();
    const auto gens = ring_generators(qp);
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<long> e(-2, 2);
    for (int t = 0; t < 3; ++t) {
      LatticeVector c(sl.rank());
      for (std::size_t i = 0; i < sl.rank(); ++i) c[i] = e(rng);
      const PicClass alpha = degree(sl, c);
      std::vector<ChartSections> charts;
      for (auto sigma : qp.fan().maximal_cones()) {
        charts.push_back(twisted_sections_on_chart(qp, alpha, sigma));
        const ChartSections& cs = charts.back();
        CHECK(degree(sl, cs.generator) == alpha);
        const LatticeVector v = sl.evaluation_matrix() * cs.generator;
        for (auto id : qp.fan().cones()[sigma].rays) CHECK(sgn(v[*qp.fan().ray_index(id)]) == 0);
        for (const auto& st : cs.stalks) {
          const LatticeVector& ht = qp.distinguished()[st.tau].coords;
          CHECK(effective(qp, cs.generator + Integer(st.k_plus) * ht));
          CHECK(effective(qp, -cs.generator + Integer(st.k_minus) * ht));
        }
      }
      const auto overlaps = overlap_units(qp, charts);
      const std::size_t k = charts.size();
      CHECK(overlaps.size() == k * (k - 1) / 2);
      for (const auto& oc : overlaps) {
        CHECK(oc.k_plus <= 12);
        CHECK(oc.k_minus <= 12);
      }
    }
    // direct sums give one generator per summand
    const std::vector<PicClass> shifts{degree(sl, LatticeVector(sl.rank())),
                                       gens.front().degree};
    const auto sum = twisted_sections_on_chart(qp, shifts, qp.fan().maximal_cones().front());
    CHECK(sum.size() == 2);
  }
}

TEST_CASE("search bound from the environment") {
  CHECK(SearchBound{}.initial == 12);
  ::setenv("TORIQ_SEARCH_BOUND", "20", 1);
  CHECK(SearchBound::from_environment().initial == 20);
  ::setenv("TORIQ_SEARCH_BOUND", "junk", 1);
  CHECK(SearchBound::from_environment().initial == 12);
  ::unsetenv("TORIQ_SEARCH_BOUND");

  const QuotientPresentation qp = quotient_of("p2");
  const SearchBound tiny{0, 0};
  const LatticeVector h = qp.distinguished()[qp.fan().maximal_cones().front()].coords;
  CHECK_THROWS_AS(localization_shift(qp, -h, h, tiny), Error);
  CHECK(localization_shift(qp, -h, h, SearchBound{}) == 1);
}
