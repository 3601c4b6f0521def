#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "monoscale/common.hpp"
#include "monoscale/tensor.hpp"

namespace monoscale {

// Images are Tensors of shape (H, W, C) with values in [0, 1].
inline Tensor make_image(std::int64_t h, std::int64_t w, std::int64_t c) {
  return Tensor({h, w, c});
}

inline bool is_image(const Tensor& t) { return t.shape().size() == 3; }

inline std::int64_t image_height(const Tensor& t) { return t.dim(0); }
inline std::int64_t image_width(const Tensor& t) { return t.dim(1); }
inline std::int64_t image_channels(const Tensor& t) { return t.dim(2); }

inline double& px(Tensor& img, std::int64_t y, std::int64_t x, std::int64_t c) {
  return img[(y * img.dim(1) + x) * img.dim(2) + c];
}
inline double px(const Tensor& img, std::int64_t y, std::int64_t x,
                 std::int64_t c) {
  return img[(y * img.dim(1) + x) * img.dim(2) + c];
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Quantization used when writing 8-bit files; round-to-nearest on [0,1].
inline std::uint8_t to_u8(double v) {
  return static_cast<std::uint8_t>(std::lround(clamp01(v) * 255.0));
}

// Bilinear sample with zero fill outside the image. Coordinates are in
// pixel-center convention: (0, 0) is the center of the top-left pixel.
inline void bilinear_sample(const Tensor& img, double y, double x,
                            double* out) {
  const std::int64_t h = img.dim(0), w = img.dim(1), c = img.dim(2);
  const double xf = std::floor(x), yf = std::floor(y);
  const std::int64_t x0 = static_cast<std::int64_t>(xf);
  const std::int64_t y0 = static_cast<std::int64_t>(yf);
  const double ax = x - xf, ay = y - yf;
  const double w00 = (1.0 - ay) * (1.0 - ax);
  const double w01 = (1.0 - ay) * ax;
  const double w10 = ay * (1.0 - ax);
  const double w11 = ay * ax;
  auto at = [&](std::int64_t yy, std::int64_t xx, std::int64_t cc) -> double {
    if (yy < 0 || yy >= h || xx < 0 || xx >= w) return 0.0;
    return img[(yy * w + xx) * c + cc];
  };
  for (std::int64_t cc = 0; cc < c; ++cc) {
    out[cc] = w00 * at(y0, x0, cc) + w01 * at(y0, x0 + 1, cc) +
              w10 * at(y0 + 1, x0, cc) + w11 * at(y0 + 1, x0 + 1, cc);
  }
}

}  // namespace monoscale
