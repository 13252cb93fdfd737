#include <filesystem>

#include "doctest.h"
#include "toriq/error.hpp"
#include "toriq/fan_document.hpp"
#include "toriq/report.hpp"

using namespace toriq;

namespace {

FanDocument corpus_doc(const std::string& name) {
  return load_fan_document(std::filesystem::path(TORIQ_CORPUS_DIR) / (name + ".json"));
}

}  // namespace

TEST_CASE("quotient summaries round-trip through JSON") {
  for (const char* name : {"p1", "p2", "p1xp1", "hirzebruch_2", "affine_square_cone", "cube_fan",
                           "blowup_p2"}) {
    CAPTURE(name);
    const FanDocument doc = corpus_doc(name);
    const QuotientPresentation qp = build_quotient(compute_SF(to_fan(doc)));
    const bool full = std::string(name) != "cube_fan";
    const QuotientSummary s = summarize(qp, doc.name, full);
    const std::string text = to_json(s).dump(2);
    const QuotientSummary back = quotient_summary_from_json(nlohmann::json::parse(text));
    CHECK(back == s);
    CHECK(to_json(back).dump(2) == text);
    CHECK(to_json(summarize(qp, doc.name, full)).dump(2) == text);

    // field-for-field against the presentation
    CHECK(back.l == qp.l());
    CHECK(back.c_rays == qp.cone_c().rays());
    REQUIRE(back.cones.size() == qp.fan().cones().size());
    for (std::size_t i = 0; i < back.cones.size(); ++i) {
      CHECK(back.cones[i].rays == qp.fan().cones()[i].rays);
      CHECK(back.cones[i].c_rays == qp.hat_cones()[i].c_rays);
      CHECK(back.cones[i].distinguished == qp.distinguished()[i].coords);
    }
  }
}

TEST_CASE("quotient summary parsing rejects bad input") {
  const QuotientPresentation qp = build_quotient(compute_SF(to_fan(corpus_doc("p2"))));
  nlohmann::json j = nlohmann::json::parse(to_json(summarize(qp, "p2", false)).dump());
  j.erase("l");
  CHECK_THROWS_AS(quotient_summary_from_json(j), Error);
  j = nlohmann::json::parse(to_json(summarize(qp, "p2", false)).dump());
  j["cones"][1]["dim"] = "two";
  CHECK_THROWS_AS(quotient_summary_from_json(j), Error);
  CHECK_THROWS_AS(quotient_summary_from_json(nlohmann::json::array()), Error);
}

TEST_CASE("large integers serialize as decimal strings") {
  QuotientSummary s;
  s.name = "big";
  Integer huge;
  huge.set_str("123456789012345678901234567890", 10);
  s.l = {LatticeVector(std::vector<Integer>{huge, Integer(-3)})};
  const Json j = to_json(s);
  CHECK(j["l"][0][0].is_string());
  CHECK(j["l"][0][1].is_number_integer());
  CHECK(quotient_summary_from_json(nlohmann::json::parse(j.dump())) == s);
}

TEST_CASE("verification report of the projective plane") {
  const QuotientPresentation qp = build_quotient(compute_SF(to_fan(corpus_doc("p2"))));
  const VerifyOutcome v = run_verification(qp, SearchBound{}, 10);
  CHECK(v.passed);
  CHECK(v.report["all_passed"].get<bool>());
  CHECK(v.report["checks"].size() == 5);
  for (const auto& c : v.report["checks"]) CHECK(c["passed"].get<bool>());
  CHECK(run_verification(qp, SearchBound{}, 10).report.dump() == v.report.dump());
}

TEST_CASE("enough-Cartier table lists blocking rays") {
  const SupportLattice sl = compute_SF(to_fan(corpus_doc("perturbed_cube")));
  const Json j = enough_cartier_to_json(sl, check_enough_cartier(sl));
  CHECK_FALSE(j["all_hold"].get<bool>());
  bool some_blocked = false;
  for (const auto& r : j["rows"])
    if (!r["holds"].get<bool>()) {
      CHECK(r["witness_ray_values"].is_null());
      CHECK(r["blocking_ray"].is_number_unsigned());
      some_blocked = true;
    }
  CHECK(some_blocked);
}
