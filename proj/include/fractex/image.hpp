#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>

namespace fractex {

/// Scalar image carrier used throughout the pipeline. Indexed (y, x) with
/// y = row from the top, so raster(y, x) matches the PGM pixel layout.
/// Values are real; file ingestion produces integral values in [0, 255].
using Raster = Eigen::ArrayXXd;

/// A single 8-bit colour plane.
using Plane8 = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

enum class Channel { R, G, B, Gray };

struct ColorImage {
  Plane8 r, g, b;

  Eigen::Index height() const { return r.rows(); }
  Eigen::Index width() const { return r.cols(); }

  bool well_formed() const {
    return r.size() > 0 && r.rows() == g.rows() && r.rows() == b.rows() &&
           r.cols() == g.cols() && r.cols() == b.cols();
  }
};

/// Half-sample symmetric reflection of an out-of-range index:
/// -1 -> 0, -2 -> 1, n -> n-1, n+1 -> n-2. Folds repeatedly, so offsets
/// wider than the image stay well defined.
inline int mirror_index(int i, int n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -1 - i;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

/// Continuous counterpart of mirror_index for resampling; reflects about
/// the half-sample boundaries at -0.5 and n - 0.5.
double mirror_coord(double t, int n);

/// Bilinear sample with mirror extension. Integer coordinates return the
/// exact pixel value.
double bilinear_at(const Raster& img, double x, double y);

} // namespace fractex
