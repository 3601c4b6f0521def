#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace monoscale {

// Simulator-export interchange format, version 1:
//
//   root/
//     meta.json                 {"format_version": 1, "map_tag": ...,
//                                "camera_models": {id: {fx,fy,cx,cy,width,height}},
//                                "rig_offsets": {id: 4x4 row-major}}
//     episodes/<episode_id>/poses.csv
//     episodes/<episode_id>/images/<camera_id>/<frame, zero-padded to 6>.png
//
// poses.csv holds one row per frame per camera; rotations are row-major
// camera-to-world, translations in meters. rig_offsets map a camera's frame
// into the reference (left) camera frame, so composing a left pose with
// rig_offsets["right"] yields the right camera pose.
inline constexpr int kExportFormatVersion = 1;
inline constexpr const char* kPosesCsvHeader =
    "frame_index,camera_id,timestamp,r00,r01,r02,r10,r11,r12,r20,r21,r22,tx,"
    "ty,tz,weather_tag";

inline std::string frame_image_name(std::int64_t frame_index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06lld.png",
                static_cast<long long>(frame_index));
  return buf;
}

// Shortest decimal form that round-trips a double exactly.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == v) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[40];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
      std::sscanf(shorter, "%lf", &back);
      if (back == v) return shorter;
    }
  }
  return buf;
}

}  // namespace monoscale
