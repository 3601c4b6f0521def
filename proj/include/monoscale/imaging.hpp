#pragma once

#include <cmath>
#include <cstdint>

#include "monoscale/common.hpp"
#include "monoscale/geometry.hpp"
#include "monoscale/image.hpp"
#include "monoscale/rng.hpp"

namespace monoscale {

// Label-preserving augmentation parameters. Defaults follow the training
// recipe: rotation within +/-10 degrees, translation within +/-10% of the
// image size, and moderate photometric jitter.
struct AugmentConfig {
  bool enabled = true;
  double max_rotation = 10.0 * M_PI / 180.0;
  double max_translation_frac = 0.10;
  double brightness_delta_min = -0.2;
  double brightness_delta_max = 0.2;
  double contrast_factor_min = 0.8;
  double contrast_factor_max = 1.2;
  double hflip_probability = 0.5;
};

inline void validate_augment_config(const AugmentConfig& cfg) {
  if (cfg.brightness_delta_min > cfg.brightness_delta_max ||
      cfg.contrast_factor_min > cfg.contrast_factor_max)
    throw ConfigError("augmentation ranges are degenerate");
  if (cfg.hflip_probability < 0.0 || cfg.hflip_probability > 1.0)
    throw ConfigError("hflip_probability must be in [0, 1]");
  if (cfg.max_rotation < 0.0 || cfg.max_translation_frac < 0.0)
    throw ConfigError("augmentation magnitudes must be non-negative");
}

// Rewarps an image taken with `source` intrinsics so that it appears taken
// by the `target` camera: output pixel (u, v) samples the source image at
// K_source * K_target^-1 * (u, v, 1). Pure intrinsic homography, bilinear
// interpolation, zero fill outside the source frame. When source == target
// the mapping lands on exact pixel centers and the output equals the input.
inline Tensor normalize(const Tensor& image, const CameraModel& source,
                        const CameraModel& target) {
  validate_camera(source);
  validate_camera(target);
  if (image_height(image) != source.height || image_width(image) != source.width)
    throw DataError("normalize: image size " +
                    std::to_string(image_width(image)) + "x" +
                    std::to_string(image_height(image)) +
                    " does not match source camera " +
                    std::to_string(source.width) + "x" +
                    std::to_string(source.height));
  const std::int64_t c = image_channels(image);
  Tensor out = make_image(target.height, target.width, c);
  std::vector<double> sample(static_cast<std::size_t>(c));
  for (std::int64_t v = 0; v < target.height; ++v) {
    const double ys = source.fy * (static_cast<double>(v) - target.cy) / target.fy +
                      source.cy;
    for (std::int64_t u = 0; u < target.width; ++u) {
      const double xs =
          source.fx * (static_cast<double>(u) - target.cx) / target.fx +
          source.cx;
      bilinear_sample(image, ys, xs, sample.data());
      for (std::int64_t ch = 0; ch < c; ++ch) px(out, v, u, ch) = sample[ch];
    }
  }
  return out;
}

// One random draw of augmentation parameters. A single draw is shared by
// both images of a pair and by every frame of an LSTM window.
struct AugmentDraw {
  double contrast = 1.0;
  double brightness = 0.0;
  bool flip = false;
  double angle = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  bool identity = true;
};

inline AugmentDraw draw_augment(const AugmentConfig& cfg, std::uint64_t seed) {
  validate_augment_config(cfg);
  AugmentDraw d;
  if (!cfg.enabled) return d;
  RngStream rng(seed);
  d.contrast = rng.uniform(cfg.contrast_factor_min, cfg.contrast_factor_max);
  d.brightness = rng.uniform(cfg.brightness_delta_min, cfg.brightness_delta_max);
  d.flip = rng.bernoulli(cfg.hflip_probability);
  d.angle = rng.uniform(-cfg.max_rotation, cfg.max_rotation);
  d.dx = rng.uniform(-cfg.max_translation_frac, cfg.max_translation_frac);
  d.dy = rng.uniform(-cfg.max_translation_frac, cfg.max_translation_frac);
  d.identity = false;
  return d;
}

inline Tensor hflip(const Tensor& img) {
  const std::int64_t h = image_height(img), w = image_width(img),
                     c = image_channels(img);
  Tensor out = make_image(h, w, c);
  for (std::int64_t y = 0; y < h; ++y)
    for (std::int64_t x = 0; x < w; ++x)
      for (std::int64_t ch = 0; ch < c; ++ch)
        px(out, y, x, ch) = px(img, y, w - 1 - x, ch);
  return out;
}

// Applies photometric jitter, then mirroring, then the rotation+translation
// warp. Photometrics pivot around mid-gray; geometric borders fill with zero
// so augmented frames keep black margins rather than tinted ones.
inline Tensor apply_augment(const Tensor& img, const AugmentDraw& d) {
  if (d.identity) return img;
  const std::int64_t h = image_height(img), w = image_width(img),
                     c = image_channels(img);
  Tensor work = img;
  for (std::int64_t i = 0; i < work.size(); ++i)
    work[i] = clamp01((work[i] - 0.5) * d.contrast + 0.5 + d.brightness);
  if (d.flip) work = hflip(work);
  const double tx = d.dx * static_cast<double>(w);
  const double ty = d.dy * static_cast<double>(h);
  if (d.angle == 0.0 && tx == 0.0 && ty == 0.0) return work;
  const double cx = (static_cast<double>(w) - 1.0) / 2.0;
  const double cy = (static_cast<double>(h) - 1.0) / 2.0;
  const double ca = std::cos(d.angle), sa = std::sin(d.angle);
  Tensor out = make_image(h, w, c);
  std::vector<double> sample(static_cast<std::size_t>(c));
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      // Inverse map of: rotate about center by angle, then shift by (tx, ty).
      const double rx = static_cast<double>(x) - cx - tx;
      const double ry = static_cast<double>(y) - cy - ty;
      const double sx = ca * rx + sa * ry + cx;
      const double sy = -sa * rx + ca * ry + cy;
      bilinear_sample(work, sy, sx, sample.data());
      for (std::int64_t ch = 0; ch < c; ++ch) px(out, y, x, ch) = clamp01(sample[ch]);
    }
  }
  return out;
}

// Augments both images of a pair with one shared random draw. The distance
// label is never touched; callers carry it alongside.
inline std::pair<Tensor, Tensor> augment_pair(const Tensor& a, const Tensor& b,
                                              const AugmentConfig& cfg,
                                              std::uint64_t rng_seed) {
  const AugmentDraw d = draw_augment(cfg, rng_seed);
  return {apply_augment(a, d), apply_augment(b, d)};
}

// Channel concatenation of a frame pair, earlier frame first:
// (H, W, 3) + (H, W, 3) -> (H, W, 6).
inline Tensor stack_pair(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b))
    throw DataError("stack_pair: shape mismatch " +
                    Tensor::shape_str(a.shape()) + " vs " +
                    Tensor::shape_str(b.shape()));
  const std::int64_t h = image_height(a), w = image_width(a),
                     c = image_channels(a);
  Tensor out({h, w, 2 * c});
  for (std::int64_t y = 0; y < h; ++y)
    for (std::int64_t x = 0; x < w; ++x)
      for (std::int64_t ch = 0; ch < c; ++ch) {
        px(out, y, x, ch) = px(a, y, x, ch);
        px(out, y, x, c + ch) = px(b, y, x, ch);
      }
  return out;
}

}  // namespace monoscale
