#include "toriq/report.hpp"

#include <algorithm>
#include <random>

#include "toriq/error.hpp"
#include "toriq/fan_document.hpp"

namespace toriq {

using nlohmann::json;

namespace {

Json ids_to_json(const std::vector<std::size_t>& ids) {
  Json a = Json::array();
  for (auto i : ids) a.push_back(i);
  return a;
}

Json vectors_to_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_to_json(v));
  return a;
}

Json cone_rays_json(const Fan& f, std::size_t cone) { return ids_to_json(f.cones()[cone].rays); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t size_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

bool bool_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a boolean");
  return v.get<bool>();
}

std::vector<std::size_t> ids_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an index array, got " + j.dump());
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw Error(ErrorCode::ParseError, "bad index " + x.dump());
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

std::vector<LatticeVector> vectors_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of vectors, got " + j.dump());
  std::vector<LatticeVector> out;
  for (const auto& x : j) out.push_back(vector_from_json(x));
  return out;
}

Json error_json(const Error& e) {
  Json j;
  j["code"] = std::string(error_code_name(e.code()));
  j["message"] = e.what();
  return j;
}

}  // namespace

Json validation_to_json(const Fan& f, const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  j["lattice_rank"] = f.lattice_rank();
  j["ray_count"] = f.ray_count();
  j["cone_count"] = f.cones().size();
  Json issues = Json::array();
  for (const auto& is : report.issues) {
    Json e;
    e["kind"] = std::string(fan_violation_name(is.kind));
    e["warning"] = is.warning;
    Json cones = Json::array();
    for (auto c : is.cones) cones.push_back(cone_rays_json(f, c));
    e["cones"] = std::move(cones);
    e["detail"] = is.detail;
    issues.push_back(std::move(e));
  }
  j["issues"] = std::move(issues);
  return j;
}

Json support_to_json(const SupportLattice& sl) {
  Json j;
  const QuotientGroupRanks q = quotient_group_data(sl);
  j["sf_rank"] = sl.rank();
  j["pic_rank"] = sl.pic_rank();
  Json torsion = Json::array();
  for (const auto& t : sl.pic().torsion_invariants) torsion.push_back(integer_to_json(t));
  j["pic_torsion"] = std::move(torsion);
  j["big_torus_rank"] = q.big_torus;
  j["torus_rank"] = q.torus;
  j["group_rank"] = q.group;
  Json basis = Json::array();
  for (const auto& h : sl.basis()) basis.push_back(vector_to_json(h.values));
  j["basis_ray_values"] = std::move(basis);
  j["iota_matrix"] = vectors_to_json(sl.iota_matrix().row_vectors());
  return j;
}

Json enough_cartier_to_json(const SupportLattice& sl, const EnoughCartierReport& report) {
  Json j;
  j["all_hold"] = report.all_hold();
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json e;
    e["cone"] = cone_rays_json(sl.fan(), r.cone);
    e["holds"] = r.holds;
    e["witness_ray_values"] = r.witness ? vector_to_json(r.witness->values) : Json(nullptr);
    e["blocking_ray"] = r.blocking_ray ? Json(*r.blocking_ray) : Json(nullptr);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return j;
}

QuotientSummary summarize(const QuotientPresentation& qp, const std::string& name,
                          bool full_irrelevant) {
  const Fan& f = qp.fan();
  const HatFan hf = hat_fan(qp);
  const IrrelevantIdeal b = irrelevant_ideal(qp, full_irrelevant);

  QuotientSummary s;
  s.name = name;
  s.lattice_rank = f.lattice_rank();
  s.sf_rank = qp.support().rank();
  s.pic_rank = qp.support().pic_rank();
  s.c_rays = qp.cone_c().rays();
  s.effective_rays = qp.effective().rays();
  s.l = qp.l();
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    QuotientSummary::ConeEntry e;
    e.rays = f.cones()[i].rays;
    e.c_rays = qp.hat_cones()[i].c_rays;
    e.dim = f.cones()[i].dim();
    e.simplicial = is_simplicial(f.cones()[i].cone);
    e.maximal = f.cones()[i].maximal;
    e.distinguished = qp.distinguished()[i].coords;
    s.cones.push_back(std::move(e));
  }
  for (const auto& v : b.vanishing) s.vanishing.push_back(v.c_rays);
  s.codim = codim_check(qp);
  s.full_generators = b.full_generators;
  s.hat_fan_valid = hf.valid;
  s.poset_isomorphic = hf.poset_isomorphic;
  s.dimensions_match = hf.dimensions_match;
  s.simpliciality_matches = hf.simpliciality_matches;
  s.projection_matches = hf.projection_matches;
  return s;
}

Json to_json(const QuotientSummary& s) {
  Json j;
  j["name"] = s.name;
  j["lattice_rank"] = s.lattice_rank;
  j["sf_rank"] = s.sf_rank;
  j["pic_rank"] = s.pic_rank;
  j["c_rays"] = vectors_to_json(s.c_rays);
  j["effective_rays"] = vectors_to_json(s.effective_rays);
  j["l"] = vectors_to_json(s.l);
  Json cones = Json::array();
  for (const auto& c : s.cones) {
    Json e;
    e["rays"] = ids_to_json(c.rays);
    e["c_rays"] = ids_to_json(c.c_rays);
    e["dim"] = c.dim;
    e["simplicial"] = c.simplicial;
    e["maximal"] = c.maximal;
    e["distinguished"] = vector_to_json(c.distinguished);
    cones.push_back(std::move(e));
  }
  j["cones"] = std::move(cones);
  Json irr;
  Json van = Json::array();
  for (const auto& v : s.vanishing) van.push_back(ids_to_json(v));
  irr["vanishing"] = std::move(van);
  irr["codim"] = s.codim ? Json(*s.codim) : Json(nullptr);
  if (s.full_generators) {
    Json g = Json::array();
    for (const auto& gens : *s.full_generators) g.push_back(vectors_to_json(gens));
    irr["full_generators"] = std::move(g);
  } else {
    irr["full_generators"] = nullptr;
  }
  j["irrelevant"] = std::move(irr);
  Json cert;
  cert["hat_fan_valid"] = s.hat_fan_valid;
  cert["poset_isomorphic"] = s.poset_isomorphic;
  cert["dimensions_match"] = s.dimensions_match;
  cert["simpliciality_matches"] = s.simpliciality_matches;
  cert["projection_matches"] = s.projection_matches;
  j["certificates"] = std::move(cert);
  return j;
}

QuotientSummary quotient_summary_from_json(const json& j) {
  QuotientSummary s;
  const json& name = field(j, "name");
  if (!name.is_string()) throw Error(ErrorCode::ParseError, "\"name\" must be a string");
  s.name = name.get<std::string>();
  s.lattice_rank = size_from(j, "lattice_rank");
  s.sf_rank = size_from(j, "sf_rank");
  s.pic_rank = size_from(j, "pic_rank");
  s.c_rays = vectors_from(field(j, "c_rays"));
  s.effective_rays = vectors_from(field(j, "effective_rays"));
  s.l = vectors_from(field(j, "l"));
  const json& cones = field(j, "cones");
  if (!cones.is_array()) throw Error(ErrorCode::ParseError, "\"cones\" must be an array");
  for (const auto& c : cones) {
    QuotientSummary::ConeEntry e;
    e.rays = ids_from(field(c, "rays"));
    e.c_rays = ids_from(field(c, "c_rays"));
    e.dim = size_from(c, "dim");
    e.simplicial = bool_from(c, "simplicial");
    e.maximal = bool_from(c, "maximal");
    e.distinguished = vector_from_json(field(c, "distinguished"));
    s.cones.push_back(std::move(e));
  }
  const json& irr = field(j, "irrelevant");
  const json& van = field(irr, "vanishing");
  if (!van.is_array()) throw Error(ErrorCode::ParseError, "\"vanishing\" must be an array");
  for (const auto& v : van) s.vanishing.push_back(ids_from(v));
  if (!field(irr, "codim").is_null()) s.codim = size_from(irr, "codim");
  const json& fg = field(irr, "full_generators");
  if (!fg.is_null()) {
    if (!fg.is_array()) throw Error(ErrorCode::ParseError, "\"full_generators\" must be an array");
    s.full_generators.emplace();
    for (const auto& g : fg) s.full_generators->push_back(vectors_from(g));
  }
  const json& cert = field(j, "certificates");
  s.hat_fan_valid = bool_from(cert, "hat_fan_valid");
  s.poset_isomorphic = bool_from(cert, "poset_isomorphic");
  s.dimensions_match = bool_from(cert, "dimensions_match");
  s.simpliciality_matches = bool_from(cert, "simpliciality_matches");
  s.projection_matches = bool_from(cert, "projection_matches");
  return s;
}

Json sections_to_json(const QuotientPresentation& qp, const PicClass& alpha,
                      const GlobalSections& global, const std::vector<ChartSections>& charts,
                      const std::vector<OverlapCertificate>& overlaps) {
  const Fan& f = qp.fan();
  Json j;
  j["degree"] = vector_to_json(alpha.coords);
  j["finite"] = global.finite;
  if (global.finite) {
    j["count"] = global.monomials.size();
    Json mons = Json::array();
    for (const auto& m : global.monomials) {
      Json e;
      e["exponent"] = vector_to_json(m.exponent);
      e["ray_values"] = vector_to_json(qp.support().evaluation_matrix() * m.exponent);
      mons.push_back(std::move(e));
    }
    j["monomials"] = std::move(mons);
    j["recession"] = nullptr;
  } else {
    j["count"] = "INFINITE";
    j["monomials"] = Json::array();
    j["recession"] = vector_to_json(*global.recession);
  }
  Json cs = Json::array();
  for (const auto& c : charts) {
    Json e;
    e["cone"] = cone_rays_json(f, c.cone);
    e["generator"] = vector_to_json(c.generator);
    e["generator_ray_values"] = vector_to_json(qp.support().evaluation_matrix() * c.generator);
    Json stalks = Json::array();
    for (const auto& st : c.stalks) {
      Json s;
      s["face"] = cone_rays_json(f, st.tau);
      s["k_plus"] = st.k_plus;
      s["k_minus"] = st.k_minus;
      s["samples"] = st.samples;
      stalks.push_back(std::move(s));
    }
    e["stalks"] = std::move(stalks);
    cs.push_back(std::move(e));
  }
  j["charts"] = std::move(cs);
  Json ov = Json::array();
  for (const auto& o : overlaps) {
    Json e;
    e["cones"] = Json::array({cone_rays_json(f, o.sigma), cone_rays_json(f, o.sigma2)});
    e["common_face"] = cone_rays_json(f, o.tau);
    e["k_plus"] = o.k_plus;
    e["k_minus"] = o.k_minus;
    ov.push_back(std::move(e));
  }
  j["overlaps"] = std::move(ov);
  return j;
}

VerifyOutcome run_verification(const QuotientPresentation& qp, const SearchBound& bound,
                               std::size_t homunit_samples) {
  const Fan& f = qp.fan();
  const SupportLattice& sl = qp.support();
  const auto maximal = f.maximal_cones();
  VerifyOutcome out;
  out.passed = true;
  Json checks = Json::array();

  auto record = [&](const std::string& name, auto&& body) {
    Json e;
    e["check"] = name;
    try {
      Json detail;
      const bool ok = body(detail);
      e["passed"] = ok;
      e["detail"] = std::move(detail);
      if (!ok) out.passed = false;
    } catch (const Error& err) {
      e["passed"] = false;
      e["error"] = error_json(err);
      out.passed = false;
    }
    checks.push_back(std::move(e));
  };

  record("lifted_fan", [&](Json& d) {
    const HatFan hf = hat_fan(qp);
    d["poset_isomorphic"] = hf.poset_isomorphic;
    d["dimensions_match"] = hf.dimensions_match;
    d["simpliciality_matches"] = hf.simpliciality_matches;
    d["projection_matches"] = hf.projection_matches;
    return hf.all();
  });

  record("degree_zero_localizations", [&](Json& d) {
    Json rows = Json::array();
    long max_k = 0;
    for (auto sigma : maximal) {
      const NagspecCertificate c = verify_nagspec(qp, sigma, bound);
      Json r;
      r["cone"] = cone_rays_json(f, sigma);
      r["forward"] = c.forward.size();
      r["backward"] = c.backward.size();
      r["max_k"] = c.max_k;
      rows.push_back(std::move(r));
      max_k = std::max(max_k, c.max_k);
    }
    d["cones"] = std::move(rows);
    d["max_k"] = max_k;
    d["bound"] = bound.initial;
    return max_k <= bound.initial;
  });

  record("homogeneous_units", [&](Json& d) {
    const auto gens = ring_generators(qp);
    std::mt19937_64 rng(0x70717269);
    std::uniform_int_distribution<long> coeff(0, 3);
    std::uniform_int_distribution<long> shift(0, 6);
    std::size_t checked = 0;
    bool ok = true;
    for (auto sigma : maximal) {
      const LatticeVector& hs = qp.distinguished()[sigma].coords;
      for (std::size_t t = 0; t < homunit_samples; ++t) {
        LatticeVector h(sl.rank());
        for (const auto& g : gens) h += Integer(coeff(rng)) * g.exponent;
        h -= Integer(shift(rng)) * hs;
        const HomunitFactorization fz = homunit_factorize(qp, sigma, h, bound);
        if (!(iota(sl, fz.m).coords + fz.unit == h)) ok = false;
        ++checked;
      }
    }
    d["samples"] = checked;
    return ok;
  });

  record("monomial_primes", [&](Json& d) {
    const MonomialPrimeData data = monomial_primes(qp, bound);
    std::size_t avoiding = 0;
    for (const auto& p : data.primes)
      if (!p.contains_irrelevant) ++avoiding;
    bool charts_ok = true;
    for (const auto& c : data.charts) charts_ok = charts_ok && c.bijective && c.order_preserving;
    bool d_plus_ok = true;
    const auto& gens = data.generators;
    for (std::size_t a = 0; a < gens.size() && d_plus_ok; ++a)
      for (std::size_t b = a; b < gens.size(); ++b) {
        const auto da = d_plus(qp, data, gens[a].exponent);
        const auto db = d_plus(qp, data, gens[b].exponent);
        std::vector<std::size_t> both;
        std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(both));
        if (d_plus(qp, data, gens[a].exponent + gens[b].exponent) != both) {
          d_plus_ok = false;
          break;
        }
      }
    d["faces_of_c"] = qp.faces_of_c().faces.size();
    d["primes"] = data.primes.size();
    d["primes_avoiding_b"] = avoiding;
    d["cones"] = f.cones().size();
    d["order_isomorphic"] = data.order_isomorphic;
    d["charts_bijective"] = charts_ok;
    d["d_plus_multiplicative"] = d_plus_ok;
    return data.primes.size() == qp.faces_of_c().faces.size() && avoiding == f.cones().size() &&
           data.order_isomorphic && charts_ok && d_plus_ok;
  });

  record("stalks", [&](Json& d) {
    std::vector<PicClass> degrees{degree(sl, LatticeVector(sl.rank()))};
    for (const auto& g : ring_generators(qp))
      if (std::find(degrees.begin(), degrees.end(), g.degree) == degrees.end()) degrees.push_back(g.degree);
    Json rows = Json::array();
    for (const auto& alpha : degrees) {
      std::vector<ChartSections> charts;
      std::size_t stalks = 0;
      for (auto sigma : maximal) {
        charts.push_back(twisted_sections_on_chart(qp, alpha, sigma, bound));
        stalks += charts.back().stalks.size();
      }
      const auto overlaps = overlap_units(qp, charts, bound);
      Json r;
      r["degree"] = vector_to_json(alpha.coords);
      r["stalks"] = stalks;
      r["overlaps"] = overlaps.size();
      rows.push_back(std::move(r));
    }
    d["degrees"] = std::move(rows);
    return true;
  });

  out.report["checks"] = std::move(checks);
  out.report["all_passed"] = out.passed;
  return out;
}

}  // namespace toriq
