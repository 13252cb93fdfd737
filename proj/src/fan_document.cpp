#include "toriq/fan_document.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "toriq/error.hpp"

namespace toriq {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

ordered_json vector_to_json(const LatticeVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer v;
    const std::string s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) {
      throw Error(ErrorCode::ParseError, "not a decimal integer: \"" + s + "\"");
    }
    return v;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

LatticeVector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an integer array, got " + j.dump());
  std::vector<Integer> e;
  for (const auto& x : j) e.push_back(integer_from_json(x));
  return LatticeVector(std::move(e));
}

FanDocument parse_fan_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "fan document must be a JSON object");

  FanDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, "\"lattice_rank\" must be a nonnegative integer");
  }
  doc.lattice_rank = j["lattice_rank"].get<std::size_t>();

  if (!j.contains("rays") || !j["rays"].is_array()) {
    throw Error(ErrorCode::ParseError, "\"rays\" must be an array");
  }
  for (const auto& r : j["rays"]) {
    LatticeVector v = vector_from_json(r);
    if (v.size() == doc.lattice_rank && !v.is_zero() && v.content() != 1) {
      doc.warnings.push_back("ray " + std::to_string(doc.rays.size()) + " " + v.to_string() +
                             " is not primitive; replaced by " + primitive(v).to_string());
      v = primitive(v);
    }
    doc.rays.push_back(std::move(v));
  }

  if (!j.contains("cones") || !j["cones"].is_array()) {
    throw Error(ErrorCode::ParseError, "\"cones\" must be an array");
  }
  for (const auto& c : j["cones"]) {
    if (!c.is_array()) throw Error(ErrorCode::ParseError, "each cone must be an array of ray indices");
    std::vector<std::size_t> ids;
    for (const auto& i : c) {
      if (!i.is_number_unsigned()) {
        throw Error(ErrorCode::ParseError, "ray index must be a nonnegative integer, got " + i.dump());
      }
      ids.push_back(i.get<std::size_t>());
    }
    doc.cones.push_back(std::move(ids));
  }

  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw Error(ErrorCode::ParseError, "\"metadata\" must be an object");
    for (const auto& [k, v] : j["metadata"].items())
      doc.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return doc;
}

FanDocument load_fan_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fan_document(ss.str());
}

ordered_json to_json(const FanDocument& doc) {
  ordered_json j;
  j["name"] = doc.name;
  j["lattice_rank"] = doc.lattice_rank;
  j["rays"] = ordered_json::array();
  for (const auto& r : doc.rays) j["rays"].push_back(vector_to_json(r));
  j["cones"] = doc.cones;
  j["metadata"] = ordered_json::object();
  for (const auto& [k, v] : doc.metadata) j["metadata"][k] = v;
  return j;
}

Fan to_fan(const FanDocument& doc) {
  return Fan::from_maximal_cones(doc.lattice_rank, doc.rays, doc.cones);
}

}  // namespace toriq
