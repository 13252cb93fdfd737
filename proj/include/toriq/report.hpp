#pragma once

// Machine-readable reports for the command-line tool. Keys are snake_case and
// emitted in a fixed order, so identical input gives identical bytes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toriq/cox_quotient.hpp"
#include "toriq/fan.hpp"
#include "toriq/graded_spec.hpp"
#include "toriq/support_function.hpp"

namespace toriq {

using Json = nlohmann::ordered_json;

Json validation_to_json(const Fan& f, const ValidationReport& report);
Json support_to_json(const SupportLattice& sl);
Json enough_cartier_to_json(const SupportLattice& sl, const EnoughCartierReport& report);

struct QuotientSummary {
  struct ConeEntry {
    /// Ray ids of the cone.
    std::vector<std::size_t> rays;
    /// Rays of its lift, as indices into c_rays.
    std::vector<std::size_t> c_rays;
    std::size_t dim = 0;
    bool simplicial = false;
    bool maximal = false;
    /// h_sigma in SF coordinates.
    LatticeVector distinguished;

    friend bool operator==(const ConeEntry&, const ConeEntry&) = default;
  };

  std::string name;
  std::size_t lattice_rank = 0;
  std::size_t sf_rank = 0;
  std::size_t pic_rank = 0;
  std::vector<LatticeVector> c_rays;
  std::vector<LatticeVector> effective_rays;
  /// l_rho in ray order.
  std::vector<LatticeVector> l;
  std::vector<ConeEntry> cones;
  /// Ray sets (indices into c_rays) of the components of V(B).
  std::vector<std::vector<std::size_t>> vanishing;
  std::optional<std::size_t> codim;
  std::optional<std::vector<std::vector<LatticeVector>>> full_generators;
  bool hat_fan_valid = false;
  bool poset_isomorphic = false;
  bool dimensions_match = false;
  bool simpliciality_matches = false;
  bool projection_matches = false;

  friend bool operator==(const QuotientSummary&, const QuotientSummary&) = default;
};

/// Throws what hat_fan, irrelevant_ideal and codim_check throw.
QuotientSummary summarize(const QuotientPresentation& qp, const std::string& name,
                          bool full_irrelevant);
Json to_json(const QuotientSummary& s);
/// Throws ParseError.
QuotientSummary quotient_summary_from_json(const nlohmann::json& j);

Json sections_to_json(const QuotientPresentation& qp, const PicClass& alpha,
                      const GlobalSections& global, const std::vector<ChartSections>& charts,
                      const std::vector<OverlapCertificate>& overlaps);

struct VerifyOutcome {
  Json report;
  bool passed = false;
};

/// Runs every certificate on the presentation. Certificate errors are
/// recorded in the report rather than thrown.
VerifyOutcome run_verification(const QuotientPresentation& qp, const SearchBound& bound,
                               std::size_t homunit_samples = 100);

}  // namespace toriq
