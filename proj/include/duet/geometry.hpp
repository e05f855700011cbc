#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <string>

namespace duet {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Rigid transform: position + unit quaternion, stored (w, x, y, z).
/// Serialized form everywhere is 7 numbers: [x, y, z, qw, qx, qy, qz].
struct Pose {
  Vec3 p{Vec3::Zero()};
  Quat q{1.0, 0.0, 0.0, 0.0};

  static Pose identity() { return Pose{}; }

  Vec3 apply(const Vec3& point) const { return p + q * point; }
  Vec3 rotate(const Vec3& dir) const { return q * dir; }

  Pose compose(const Pose& other) const {
    return Pose{p + q * other.p, (q * other.q).normalized()};
  }
  Pose operator*(const Pose& other) const { return compose(other); }

  Pose inverse() const {
    Quat qi = q.conjugate();
    return Pose{qi * (-p), qi};
  }

  bool exactly_equal(const Pose& other) const {
    return p.x() == other.p.x() && p.y() == other.p.y() && p.z() == other.p.z() &&
           q.w() == other.q.w() && q.x() == other.q.x() && q.y() == other.q.y() &&
           q.z() == other.q.z();
  }
};

Pose pose_from_axis_angle(const Vec3& axis_unit, double angle);

/// Unsigned angle between two vectors, arccos of the clamped normalized dot,
/// in [0, pi]. Throws on a near-zero input vector.
double angle_between(const Vec3& a, const Vec3& b);

double point_line_distance(const Vec3& point, const Vec3& line_point, const Vec3& line_dir);

/// se(3) logarithm of (a^-1 * b) as [v; w] exponential coordinates.
Vec6 se3_log(const Pose& a, const Pose& b);

/// se(3) exponential: the pose reached from `base` by the twist `xi = [v; w]`.
Pose se3_exp(const Pose& base, const Vec6& xi);

/// Constant-twist interpolation from a to b; s in [0, 1].
Pose screw_interpolate(const Pose& a, const Pose& b, double s);

/// Rotation error between two orientations as an axis-angle vector.
Vec3 orientation_error(const Quat& from, const Quat& to);

bool is_unit_quaternion(const Quat& q, double tol = 1e-9);

std::string format_pose(const Pose& pose);

}  // namespace duet
