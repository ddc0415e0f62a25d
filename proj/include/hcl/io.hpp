#pragma once
// Configuration serialization: the plain-text grid format and the JSON export.
// Both round-trip bit-exactly.
//
// Text format:   first line "L=<int>", then L lines of L characters in {., #};
//                row v2 = 0 comes first, v1 increases rightward.
// JSON format:   {"L": <int>, "occupied": [<siteIndex>, ...]} with ascending
//                site indices.

#include <sstream>
#include <string>

#include "hcl/lattice.hpp"

namespace hcl {

inline std::string to_text(const Configuration& cfg) {
  const Lattice& lat = cfg.lattice();
  std::ostringstream os;
  os << "L=" << lat.L() << "\n";
  for (int v2 = 0; v2 < lat.L(); ++v2) {
    for (int v1 = 0; v1 < lat.L(); ++v1)
      os << (cfg.occupied(lat.index(v1, v2)) ? '#' : '.');
    os << "\n";
  }
  return os.str();
}

// Parses the text format. The returned configuration references `lat`, whose
// side length must match the header; hard-coreness is verified.
inline Configuration from_text(const Lattice& lat, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("L=", 0) != 0)
    throw Error(ErrorCode::BadFormat, "expected header line L=<int>");
  int L = 0;
  try {
    L = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadFormat, "bad side length in header");
  }
  if (L != lat.L())
    throw Error(ErrorCode::BadFormat, "side length mismatch with lattice");
  Configuration cfg(lat);
  for (int v2 = 0; v2 < L; ++v2) {
    if (!std::getline(is, line) || static_cast<int>(line.size()) < L)
      throw Error(ErrorCode::BadFormat, "short grid row");
    for (int v1 = 0; v1 < L; ++v1) {
      char c = line[v1];
      if (c == '#')
        cfg.set(lat.index(v1, v2), true);
      else if (c != '.')
        throw Error(ErrorCode::BadFormat, "grid characters must be '.' or '#'");
    }
  }
  if (!cfg.is_hardcore())
    throw Error(ErrorCode::NotHardcore, "parsed configuration is not hard-core");
  return cfg;
}

inline std::string to_json(const Configuration& cfg) {
  const Lattice& lat = cfg.lattice();
  std::ostringstream os;
  os << "{\"L\":" << lat.L() << ",\"occupied\":[";
  bool first = true;
  for (int i = 0; i < lat.N(); ++i) {
    if (!cfg.occupied(i)) continue;
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "]}";
  return os.str();
}

// Parses the JSON export; see to_json for the schema.
inline Configuration from_json(const Lattice& lat, const std::string& text);

}  // namespace hcl

#include <json.hpp>

namespace hcl {

inline Configuration from_json(const Lattice& lat, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::BadFormat, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("L") || !j.contains("occupied"))
    throw Error(ErrorCode::BadFormat, "JSON must contain L and occupied");
  if (j["L"].get<int>() != lat.L())
    throw Error(ErrorCode::BadFormat, "side length mismatch with lattice");
  Configuration cfg(lat);
  for (const auto& v : j["occupied"]) {
    int i = v.get<int>();
    if (i < 0 || i >= lat.N())
      throw Error(ErrorCode::BadFormat, "site index out of range");
    cfg.set(i, true);
  }
  if (!cfg.is_hardcore())
    throw Error(ErrorCode::NotHardcore, "parsed configuration is not hard-core");
  return cfg;
}

}  // namespace hcl
