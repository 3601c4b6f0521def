#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoscale/common.hpp"

namespace monoscale {

enum class CameraId { kLeft, kRight };

inline std::string to_string(CameraId id) {
  return id == CameraId::kLeft ? "left" : "right";
}

inline CameraId camera_id_from_string(const std::string& s) {
  if (s == "left") return CameraId::kLeft;
  if (s == "right") return CameraId::kRight;
  throw DataError("unknown camera id: " + s);
}

// Camera-to-world rigid pose. The translation is the camera center in the
// world frame; this matches the KITTI odometry ground-truth convention.
struct PoseSE3 {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  std::int64_t frame_index = 0;
  std::optional<double> timestamp;
};

inline constexpr double kRotationTol = 1e-6;

inline bool is_orthonormal(const Eigen::Matrix3d& r, double tol = kRotationTol) {
  const Eigen::Matrix3d err = r.transpose() * r - Eigen::Matrix3d::Identity();
  return err.cwiseAbs().maxCoeff() < tol &&
         std::fabs(r.determinant() - 1.0) < tol;
}

inline void validate_pose(const PoseSE3& pose) {
  if (!pose.rotation.allFinite() || !pose.translation.allFinite())
    throw DataError("pose has non-finite entries (frame " +
                    std::to_string(pose.frame_index) + ")");
  if (!is_orthonormal(pose.rotation))
    throw DataError("pose rotation is not orthonormal (frame " +
                    std::to_string(pose.frame_index) + ")");
}

struct Trajectory {
  std::vector<PoseSE3> poses;
  std::string sequence_id;
  CameraId camera_id = CameraId::kLeft;
};

inline void validate_trajectory(const Trajectory& traj) {
  for (std::size_t i = 1; i < traj.poses.size(); ++i) {
    if (traj.poses[i].frame_index <= traj.poses[i - 1].frame_index)
      throw DataError("trajectory " + traj.sequence_id +
                      ": frame_index not strictly increasing at position " +
                      std::to_string(i));
  }
}

// Pinhole intrinsics. The canonical normalization target of the pipeline is
// CameraModel(250, 250, (140, 60), (280, 120)).
struct CameraModel {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;
};

inline void validate_camera(const CameraModel& cam) {
  if (!(cam.fx > 0.0) || !(cam.fy > 0.0))
    throw DataError("camera focal lengths must be positive");
  if (cam.width <= 0 || cam.height <= 0)
    throw DataError("camera image size must be positive");
  if (cam.cx < 0.0 || cam.cx > cam.width || cam.cy < 0.0 || cam.cy > cam.height)
    throw DataError("camera principal point outside image bounds");
}

inline bool camera_equal(const CameraModel& a, const CameraModel& b) {
  return a.fx == b.fx && a.fy == b.fy && a.cx == b.cx && a.cy == b.cy &&
         a.width == b.width && a.height == b.height;
}

inline const CameraModel& canonical_camera() {
  static const CameraModel cam{250.0, 250.0, 140.0, 60.0, 280, 120};
  return cam;
}

struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.topLeftCorner<3, 3>() = rotation;
    m.topRightCorner<3, 1>() = translation;
    return m;
  }

  static RigidTransform from_matrix(const Eigen::Matrix4d& m) {
    RigidTransform t;
    t.rotation = m.topLeftCorner<3, 3>();
    t.translation = m.topRightCorner<3, 1>();
    return t;
  }
};

inline void validate_rigid(const RigidTransform& t) {
  if (!t.rotation.allFinite() || !t.translation.allFinite())
    throw DataError("rigid transform has non-finite entries");
  if (!is_orthonormal(t.rotation))
    throw DataError("rigid transform rotation is not orthonormal");
}

// Camera center in world coordinates.
inline Eigen::Vector3d camera_center(const PoseSE3& pose) {
  validate_pose(pose);
  return pose.translation;
}

// Euclidean distance between the camera centers of two poses.
inline double pair_distance(const PoseSE3& a, const PoseSE3& b) {
  validate_pose(a);
  validate_pose(b);
  return (a.translation - b.translation).norm();
}

// Magnitude of the heading change between two poses, measured between the
// camera forward axes projected onto the plane orthogonal to `up`.
// Returns a value in [0, pi].
inline double yaw_change(const PoseSE3& a, const PoseSE3& b,
                         const Eigen::Vector3d& up) {
  validate_pose(a);
  validate_pose(b);
  const Eigen::Vector3d n = up.normalized();
  // Camera forward axis is +z of the camera frame expressed in world.
  const Eigen::Vector3d fa = a.rotation.col(2);
  const Eigen::Vector3d fb = b.rotation.col(2);
  Eigen::Vector3d pa = fa - n * n.dot(fa);
  Eigen::Vector3d pb = fb - n * n.dot(fb);
  constexpr double kDegenerate = 1e-9;
  if (pa.norm() < kDegenerate || pb.norm() < kDegenerate)
    throw DataError("yaw_change: forward axis parallel to the ground normal");
  pa.normalize();
  pb.normalize();
  return std::atan2(pa.cross(pb).norm(), pa.dot(pb));
}

// World axis best aligned with the normal of the dominant motion plane of a
// trajectory. The plane normal is the smallest principal component of the
// camera centers; straight-line runs leave that ill-conditioned, in which
// case the mean camera down axis decides. Snapping to a coordinate axis keeps
// the choice stable across nearly planar trajectories.
inline Eigen::Vector3d fit_ground_axis(const Trajectory& traj) {
  if (traj.poses.empty())
    throw DataError("fit_ground_axis: empty trajectory");
  Eigen::Vector3d candidate = Eigen::Vector3d::Zero();
  bool have_fit = false;
  if (traj.poses.size() >= 3) {
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : traj.poses) mean += p.translation;
    mean /= static_cast<double>(traj.poses.size());
    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (const auto& p : traj.poses) {
      const Eigen::Vector3d d = p.translation - mean;
      cov += d * d.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
    const Eigen::Vector3d evals = es.eigenvalues();  // ascending
    // Well-conditioned when the two in-plane directions clearly dominate
    // the out-of-plane one.
    if (evals(1) > 1e-12 && evals(0) < 0.25 * evals(1)) {
      candidate = es.eigenvectors().col(0);
      have_fit = true;
    }
  }
  if (!have_fit) {
    // Mean camera down axis (+y of the camera frame) points along gravity
    // for forward-facing rigs.
    Eigen::Vector3d down = Eigen::Vector3d::Zero();
    for (const auto& p : traj.poses) down += p.rotation.col(1);
    if (down.norm() < 1e-12)
      throw DataError("fit_ground_axis: degenerate trajectory");
    candidate = down;
  }
  int axis = 0;
  candidate.cwiseAbs().maxCoeff(&axis);
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  out(axis) = 1.0;
  return out;
}

// Composes every pose with a fixed rig offset (new camera expressed in the
// old camera frame): R' = R * R_off, t' = R * t_off + t.
inline Trajectory offset_trajectory(const Trajectory& traj,
                                    const RigidTransform& rig_offset) {
  validate_rigid(rig_offset);
  Trajectory out = traj;
  for (auto& pose : out.poses) {
    validate_pose(pose);
    pose.translation = pose.rotation * rig_offset.translation + pose.translation;
    pose.rotation = pose.rotation * rig_offset.rotation;
  }
  return out;
}

}  // namespace monoscale
