#include "duet/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace duet {

Pose pose_from_axis_angle(const Vec3& axis_unit, double angle) {
  return Pose{Vec3::Zero(), Quat(Eigen::AngleAxisd(angle, axis_unit))};
}

double angle_between(const Vec3& a, const Vec3& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na < 1e-12 || nb < 1e-12) {
    throw std::invalid_argument("angle_between: degenerate (near-zero) axis");
  }
  double c = a.dot(b) / (na * nb);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

double point_line_distance(const Vec3& point, const Vec3& line_point, const Vec3& line_dir) {
  const double n = line_dir.norm();
  if (n < 1e-12) {
    throw std::invalid_argument("point_line_distance: degenerate line direction");
  }
  const Vec3 d = line_dir / n;
  const Vec3 r = point - line_point;
  return (r - d * r.dot(d)).norm();
}

namespace {

Mat3 skew(const Vec3& w) {
  Mat3 m;
  m << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return m;
}

Vec3 rotation_log(const Quat& q) {
  Quat qn = q.normalized();
  if (qn.w() < 0) qn.coeffs() *= -1.0;
  const Eigen::AngleAxisd aa(qn);
  return aa.axis() * aa.angle();
}

}  // namespace

Vec6 se3_log(const Pose& a, const Pose& b) {
  const Pose rel = a.inverse() * b;
  const Vec3 w = rotation_log(rel.q);
  const double theta = w.norm();
  Mat3 v_inv = Mat3::Identity();
  if (theta > 1e-10) {
    const Vec3 axis = w / theta;
    const Mat3 k = skew(axis);
    const double half = 0.5 * theta;
    // V^-1 = I - theta/2 K + (1 - theta/(2 tan(theta/2))) K^2
    v_inv = Mat3::Identity() - half * k + (1.0 - half / std::tan(half)) * k * k;
  } else {
    v_inv = Mat3::Identity() - 0.5 * skew(w);
  }
  Vec6 xi;
  xi.head<3>() = v_inv * rel.p;
  xi.tail<3>() = w;
  return xi;
}

Pose se3_exp(const Pose& base, const Vec6& xi) {
  const Vec3 v = xi.head<3>();
  const Vec3 w = xi.tail<3>();
  const double theta = w.norm();
  Mat3 rot = Mat3::Identity();
  Mat3 vmat = Mat3::Identity();
  if (theta > 1e-10) {
    const Vec3 axis = w / theta;
    const Mat3 k = skew(axis);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    rot = Mat3::Identity() + s * k + (1.0 - c) * k * k;
    vmat = Mat3::Identity() + ((1.0 - c) / theta) * k + ((theta - s) / theta) * k * k;
  } else {
    rot = Mat3::Identity() + skew(w);
    vmat = Mat3::Identity() + 0.5 * skew(w);
  }
  Pose rel;
  rel.p = vmat * v;
  rel.q = Quat(rot).normalized();
  return base * rel;
}

Pose screw_interpolate(const Pose& a, const Pose& b, double s) {
  if (s <= 0.0) return a;
  if (s >= 1.0) return b;
  return se3_exp(a, s * se3_log(a, b));
}

Vec3 orientation_error(const Quat& from, const Quat& to) {
  return rotation_log(to * from.conjugate());
}

bool is_unit_quaternion(const Quat& q, double tol) {
  return std::abs(q.norm() - 1.0) <= tol;
}

std::string format_pose(const Pose& pose) {
  std::ostringstream os;
  os << "[" << pose.p.x() << ", " << pose.p.y() << ", " << pose.p.z() << ", " << pose.q.w()
     << ", " << pose.q.x() << ", " << pose.q.y() << ", " << pose.q.z() << "]";
  return os.str();
}

}  // namespace duet
