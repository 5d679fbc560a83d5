#include "geostat/io/config.hpp"

#include <fstream>

#include "geostat/error.hpp"

namespace geostat::io {

namespace {

Vec3 vec3_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw Error(ErrorCode::BadConfig, std::string(what) + " must be a 3-element array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json vec3_to(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

}  // namespace

HoleSet holes_from_json(const Json& j) {
  if (!j.contains("holes") || !j["holes"].is_array())
    throw Error(ErrorCode::BadConfig, "config needs a 'holes' array");
  HoleSet set;
  set.strict_beta = j.value("strict_beta", true);
  for (const auto& hj : j["holes"]) {
    Hole h;
    if (!hj.contains("p")) throw Error(ErrorCode::BadConfig, "hole needs field 'p'");
    h.p = vec3_from(hj["p"], "hole position");
    if (!hj.contains("alpha") || !hj.contains("beta"))
      throw Error(ErrorCode::BadConfig, "hole needs fields 'alpha' and 'beta'");
    h.alpha = hj["alpha"].get<double>();
    h.beta = hj["beta"].get<double>();
    set.holes.push_back(h);
  }
  const ValidationResult v = validate(set);
  if (!v.ok()) throw Error(ErrorCode::BadConfig, v.describe());
  return set;
}

Json holes_to_json(const HoleSet& holes) {
  Json j;
  Json arr = Json::array();
  for (const Hole& h : holes.holes) {
    Json hj;
    hj["p"] = vec3_to(h.p);
    hj["alpha"] = h.alpha;
    hj["beta"] = h.beta;
    arr.push_back(hj);
  }
  j["holes"] = arr;
  j["strict_beta"] = holes.strict_beta;
  return j;
}

Region region_from_json(const Json& j) {
  Region r;
  if (!j.contains("outer")) throw Error(ErrorCode::BadConfig, "region needs 'outer'");
  r.outer.center = vec3_from(j["outer"]["c"], "outer center");
  r.outer.radius = j["outer"]["r"].get<double>();
  if (j.contains("excluded"))
    for (const auto& bj : j["excluded"])
      r.excluded.push_back({vec3_from(bj["c"], "excluded center"), bj["r"].get<double>()});
  return r;
}

Json region_to_json(const Region& region) {
  Json j;
  j["outer"] = {{"c", vec3_to(region.outer.center)}, {"r", region.outer.radius}};
  Json arr = Json::array();
  for (const Ball& b : region.excluded) arr.push_back({{"c", vec3_to(b.center)}, {"r", b.radius}});
  j["excluded"] = arr;
  return j;
}

SequenceSpec sequence_from_json(const Json& j) {
  if (!j.contains("positions")) throw Error(ErrorCode::BadConfig, "sequence needs 'positions'");
  std::vector<Vec3> positions;
  for (const auto& pj : j["positions"]) positions.push_back(vec3_from(pj, "sequence position"));
  return make_power_sequence(positions, j.value("alpha_coef", 0.25), j.value("beta_coef", 0.25),
                             j.value("base", 10.0), j.value("k_from", 3), j.value("k_to", 7));
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::BadConfig, path + ": " + e.what());
  }
  return j;
}

HoleSet load_holes(const std::string& path) { return holes_from_json(load_json(path)); }

SequenceSpec load_sequence(const std::string& path) { return sequence_from_json(load_json(path)); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadConfig, "cannot write " + path);
  out << text;
}

}  // namespace geostat::io
