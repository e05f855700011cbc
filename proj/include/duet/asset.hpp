#pragma once

#include "duet/geometry.hpp"
#include "duet/world.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace duet {

/// Named key points and key axes in the owner's local frame.
struct Frame {
  std::map<std::string, Vec3> key_points;
  std::map<std::string, Vec3> key_axes;  // unit vectors
};

enum class AtomicOp { PreGrasp, Grasp, PrePinch, Pinch, Open, Press };

const char* atomic_op_name(AtomicOp op);
std::optional<AtomicOp> atomic_op_from_name(const std::string& name);

/// Which local frame an annotation or collision primitive lives in. Link
/// entries move with the joint; their world placement depends on openness.
enum class LocalFrame { Base, Link };

/// One (operation, key point) annotation entry: the contact point plus the
/// approach / attach / parallel axis triple.
struct OpAnnotation {
  AtomicOp op = AtomicOp::Grasp;
  std::string point_name;
  LocalFrame frame = LocalFrame::Base;
  Vec3 point{Vec3::Zero()};
  std::optional<Vec3> approach_axis;
  std::optional<Vec3> attach_axis;
  std::optional<Vec3> parallel_axis;
};

/// Annotated goal for "target"/"target1"/"target2" actions: a world-frame
/// offset from the asset's current position, with axes to keep.
struct TargetAnnotation {
  std::string name;
  Vec3 world_offset{Vec3::Zero()};
  std::vector<std::string> keep_axes;  // base-frame axis names to hold parallel
};

struct AnnotationSet {
  Frame inherent;                      // functional points/axes (base frame)
  Frame inherent_link;                 // functional points/axes on the moving link
  std::vector<OpAnnotation> ops;
  std::map<std::string, TargetAnnotation> targets;

  std::vector<const OpAnnotation*> ops_for(AtomicOp op) const;
};

struct CollisionShape {
  enum class Kind { Sphere, Box } kind = Kind::Sphere;
  LocalFrame frame = LocalFrame::Base;
  Pose pose;          // shape pose in its local frame
  double radius = 0;  // sphere
  Vec3 half_extents{Vec3::Zero()};  // box
};

enum class JointType { Prismatic, Revolute };

struct JointSpec {
  JointType type = JointType::Prismatic;
  Vec3 axis{1, 0, 0};    // in the base-link frame, unit
  Vec3 origin{0, 0, 0};  // point on the axis (revolute)
  double value_lo = 0.0, value_hi = 1.0;  // affine image of openness [0,1]

  double value_at(double openness) const { return value_lo + openness * (value_hi - value_lo); }
  /// Link-frame -> base-frame transform at the given openness.
  Pose link_transform(double openness) const;
};

struct AssetSpec {
  std::string type_name;
  int type_id = 0;
  Vec3 bbox_min{Vec3::Zero()}, bbox_max{Vec3::Zero()};
  bool articulated = false;
  JointSpec joint;  // valid when articulated
  AnnotationSet annotations;
  std::vector<CollisionShape> collision;
  std::string color;

  Pose link_pose(const Pose& base_pose, double openness) const {
    return articulated ? base_pose * joint.link_transform(openness) : base_pose;
  }
};

/// Loads `<root>/<type_name>/<type_id>/{spec.json,annotations.json}` lazily
/// and caches the result.
class AssetLibrary {
 public:
  explicit AssetLibrary(std::string root_dir);

  const AssetSpec& get(const std::string& type_name, int type_id) const;
  bool has(const std::string& type_name, int type_id) const;
  const std::string& root() const { return root_; }

 private:
  std::string root_;
  mutable std::map<std::pair<std::string, int>, AssetSpec> cache_;
};

AssetSpec load_asset_spec(const std::string& dir);

}  // namespace duet
