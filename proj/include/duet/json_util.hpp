#pragma once

#include "duet/geometry.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace duet {

using Json = nlohmann::json;

inline Json vec3_to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

inline Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::runtime_error("expected a 3-number array, got: " + j.dump());
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

/// [x, y, z, qw, qx, qy, qz]
inline Json pose_to_json(const Pose& pose) {
  return Json::array({pose.p.x(), pose.p.y(), pose.p.z(), pose.q.w(), pose.q.x(), pose.q.y(),
                      pose.q.z()});
}

inline Pose pose_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 7) {
    throw std::runtime_error("expected a 7-number pose array, got: " + j.dump());
  }
  Pose pose;
  pose.p = Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
  pose.q = Quat(j[3].get<double>(), j[4].get<double>(), j[5].get<double>(), j[6].get<double>());
  return pose;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  Json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const Json& j, int indent = 2) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << j.dump(indent) << "\n";
}

}  // namespace duet
