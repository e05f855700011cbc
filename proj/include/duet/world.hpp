#pragma once

#include "duet/geometry.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace duet {

/// (type_name, obj_id): obj_id is the add-order index among objects of the
/// same type, independent of type_id (the model variant).
struct ObjectId {
  std::string type;
  int id = 0;

  bool operator<(const ObjectId& o) const {
    return type < o.type || (type == o.type && id < o.id);
  }
  bool operator==(const ObjectId& o) const { return type == o.type && id == o.id; }
  std::string str() const { return type + std::to_string(id); }
};

enum class HandSide { Left, Right };

inline const char* side_name(HandSide s) { return s == HandSide::Left ? "left" : "right"; }

enum class HandModeKind { Idle, PreGrasp, PrePinch, Grasping, Pinching };

struct HandMode {
  HandModeKind kind = HandModeKind::Idle;
  std::optional<ObjectId> object;  // set for Grasping / Pinching

  bool operator==(const HandMode& o) const { return kind == o.kind && object == o.object; }
};

struct Attachment {
  ObjectId object;
  Pose relative;         // hand_pose^-1 * object_pose at attach time (rigid only)
  bool articulated = false;  // articulated handles update openness, not pose

  bool operator==(const Attachment& o) const {
    return object == o.object && relative.exactly_equal(o.relative) && articulated == o.articulated;
  }
};

/// Support relation recorded at release time; objects resting on an
/// articulated link ride along when the link moves.
struct Support {
  enum class Kind { Table, Object, ArticulatedLink } kind = Kind::Table;
  ObjectId object;  // for Object / ArticulatedLink

  bool operator==(const Support& o) const { return kind == o.kind && object == o.object; }
};

using JointVector = Eigen::VectorXd;

/// Mutable kinematic world state. A plain value: copy = snapshot.
struct WorldState {
  std::map<ObjectId, Pose> object_poses;
  std::map<ObjectId, int> type_ids;       // model variant per object
  std::map<ObjectId, double> openness;    // articulated objects only, in [0,1]
  std::map<ObjectId, Support> supports;   // resting objects
  HandMode hand_mode_left, hand_mode_right;
  double closure_left = 0.0, closure_right = 0.0;
  std::optional<Attachment> attach_left, attach_right;
  std::set<ObjectId> ignore_list;
  JointVector arm_left, arm_right;

  HandMode& hand_mode(HandSide s) { return s == HandSide::Left ? hand_mode_left : hand_mode_right; }
  const HandMode& hand_mode(HandSide s) const {
    return s == HandSide::Left ? hand_mode_left : hand_mode_right;
  }
  std::optional<Attachment>& attachment(HandSide s) {
    return s == HandSide::Left ? attach_left : attach_right;
  }
  const std::optional<Attachment>& attachment(HandSide s) const {
    return s == HandSide::Left ? attach_left : attach_right;
  }
  double& closure(HandSide s) { return s == HandSide::Left ? closure_left : closure_right; }
  double closure(HandSide s) const { return s == HandSide::Left ? closure_left : closure_right; }
  JointVector& arm_angles(HandSide s) { return s == HandSide::Left ? arm_left : arm_right; }
  const JointVector& arm_angles(HandSide s) const {
    return s == HandSide::Left ? arm_left : arm_right;
  }

  std::optional<HandSide> holder_of(const ObjectId& obj) const {
    if (attach_left && attach_left->object == obj) return HandSide::Left;
    if (attach_right && attach_right->object == obj) return HandSide::Right;
    return std::nullopt;
  }

  /// Field-for-field, bit-exact equality on all scalars.
  bool operator==(const WorldState& o) const;
};

}  // namespace duet
