#pragma once

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <filesystem>
#include <string>

#include "monoscale/common.hpp"
#include "monoscale/image.hpp"

namespace monoscale {

// Reads an 8-bit RGB PNG/JPEG into a (H, W, 3) tensor scaled to [0, 1].
// Grayscale and alpha images are rejected: the models consume exactly three
// channels per frame.
inline Tensor load_image(const std::string& path) {
  cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
  if (m.empty()) throw DataError("cannot read image: " + path);
  if (m.channels() != 3)
    throw DataError("image must have exactly 3 channels, got " +
                    std::to_string(m.channels()) + ": " + path);
  if (m.depth() != CV_8U)
    throw DataError("image must be 8-bit: " + path);
  Tensor img = make_image(m.rows, m.cols, 3);
  for (int y = 0; y < m.rows; ++y) {
    const auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < m.cols; ++x) {
      // OpenCV loads BGR.
      px(img, y, x, 0) = row[x][2] / 255.0;
      px(img, y, x, 1) = row[x][1] / 255.0;
      px(img, y, x, 2) = row[x][0] / 255.0;
    }
  }
  return img;
}

// Writes a (H, W, 3) tensor as an 8-bit RGB PNG.
inline void save_image(const Tensor& img, const std::string& path) {
  if (!is_image(img) || image_channels(img) != 3)
    throw DataError("save_image expects a (H, W, 3) tensor");
  cv::Mat m(static_cast<int>(image_height(img)),
            static_cast<int>(image_width(img)), CV_8UC3);
  for (int y = 0; y < m.rows; ++y) {
    auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < m.cols; ++x) {
      row[x][2] = to_u8(px(img, y, x, 0));
      row[x][1] = to_u8(px(img, y, x, 1));
      row[x][0] = to_u8(px(img, y, x, 2));
    }
  }
  std::filesystem::create_directories(
      std::filesystem::path(path).parent_path());
  if (!cv::imwrite(path, m)) throw DataError("cannot write image: " + path);
}

}  // namespace monoscale
