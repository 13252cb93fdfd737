#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toriq/cox_quotient.hpp"
#include "toriq/error.hpp"
#include "toriq/fan_document.hpp"
#include "toriq/graded_spec.hpp"
#include "toriq/report.hpp"

using namespace toriq;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit : int {
  kOk = 0,
  kInvalid = 1,
  kParse = 2,
  kNoQuotient = 3,
  kCertificate = 4,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DegreeUnreachable:
      return kParse;
    case ErrorCode::NotEnoughCartier:
    case ErrorCode::TorsionPic:
      return kNoQuotient;
    case ErrorCode::CertificateFailure:
    case ErrorCode::InternalInconsistency:
    case ErrorCode::NonIntegralRestriction:
      return kCertificate;
    default:
      return kInvalid;
  }
}

struct Options {
  std::string command;
  std::string path;
  std::string out;
  std::string degree;
  bool full_irrelevant = false;
};

PicClass parse_degree(const std::string& text) {
  PicClass alpha;
  std::vector<Integer> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw Error(ErrorCode::ParseError, "bad degree coordinate \"" + item + "\"");
    }
    coords.push_back(v);
  }
  alpha.coords = LatticeVector(std::move(coords));
  return alpha;
}

// Loads the document and checks the fan; a report entry is written either way.
struct Loaded {
  FanDocument doc;
  Fan fan;
  ValidationReport validation;
};

Loaded load(const Options& opt, Json& report) {
  Loaded l;
  l.doc = load_fan_document(opt.path);
  report["fan"] = l.doc.name;
  Json warnings = Json::array();
  for (const auto& w : l.doc.warnings) warnings.push_back(w);
  report["warnings"] = std::move(warnings);
  l.fan = to_fan(l.doc);
  l.validation = validate_fan(l.fan);
  report["validation"] = validation_to_json(l.fan, l.validation);
  return l;
}

int run(const Options& opt, Json& report) {
  Loaded l = load(opt, report);
  if (!l.validation.valid()) {
    report["status"] = "error";
    report["error"] = {{"code", "INVALID_FAN"}, {"message", "the fan has violations"}};
    return kInvalid;
  }
  if (opt.command == "validate") return kOk;

  if (opt.command == "analyze") {
    const SupportLattice sl = compute_SF(l.fan, false);
    report["support"] = support_to_json(sl);
    report["enough_cartier"] = enough_cartier_to_json(sl, check_enough_cartier(sl));
    return kOk;
  }

  const SupportLattice sl = compute_SF(l.fan);
  report["support"] = support_to_json(sl);
  const QuotientPresentation qp = build_quotient(sl);
  const SearchBound bound = SearchBound::from_environment();

  if (opt.command == "quotient") {
    const QuotientSummary s = summarize(qp, l.doc.name, opt.full_irrelevant);
    report["quotient"] = to_json(s);
    const bool ok = s.hat_fan_valid && s.poset_isomorphic && s.dimensions_match &&
                    s.simpliciality_matches && s.projection_matches;
    return ok ? kOk : kCertificate;
  }

  if (opt.command == "sections") {
    const PicClass alpha = opt.degree.empty() ? PicClass{LatticeVector(sl.pic_rank())}
                                              : parse_degree(opt.degree);
    const GlobalSections gs = global_sections(qp, alpha);
    std::vector<ChartSections> charts;
    for (auto sigma : qp.fan().maximal_cones())
      charts.push_back(twisted_sections_on_chart(qp, alpha, sigma, bound));
    const auto overlaps = overlap_units(qp, charts, bound);
    report["sections"] = sections_to_json(qp, alpha, gs, charts, overlaps);
    return kOk;
  }

  // verify
  const VerifyOutcome v = run_verification(qp, bound);
  report["verify"] = v.report;
  if (!v.passed) {
    report["status"] = "error";
    report["error"] = {{"code", "CERTIFICATE_FAILURE"}, {"message", "a certificate failed"}};
    return kCertificate;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous coordinate rings of toric varieties from fans"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options opt;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("fan", opt.path, "fan document (JSON)")->required();
    sub->add_option("--out", opt.out, "write the report to FILE instead of stdout");
    return sub;
  };
  add("validate", "check the fan axioms");
  add("analyze", "support functions, Picard group and the enough-Cartier table");
  add("quotient", "quotient presentation with certificates")
      ->add_flag("--full-irrelevant", opt.full_irrelevant, "list minimal generators of every B_sigma");
  add("sections", "monomials of a given degree and chart trivializations")
      ->add_option("--degree", opt.degree, "Pic coordinates, comma separated");
  add("verify", "run every certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParse;
  }
  opt.command = app.get_subcommands().front()->get_name();

  Json report;
  report["tool"] = "toriq";
  report["version"] = kVersion;
  report["command"] = opt.command;
  report["status"] = "ok";
  int code = kOk;
  try {
    code = run(opt, report);
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    report["status"] = "error";
    report["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  }

  const std::string text = report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "cannot write " << opt.out << "\n";
      return kParse;
    }
  }
  if (code != kOk) std::cerr << "toriq: " << report["status"].get<std::string>() << " (exit " << code << ")\n";
  return code;
}
