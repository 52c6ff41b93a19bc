#include "fractex/imgprep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fractex {
namespace {

enum class Extremum { Min, Max };

// Running min/max over a centered window of `size` along one axis with
// mirror extension. The all-ones square SE makes dilation/erosion separable.
Raster axis_extremum(const Raster& in, int size, Extremum kind, bool along_x) {
  const int h = static_cast<int>(in.rows());
  const int w = static_cast<int>(in.cols());
  const int half = size / 2;
  Raster out(h, w);
  if (along_x) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double v = in(y, mirror_index(x - half, w));
        for (int k = 1; k < size; ++k) {
          const double c = in(y, mirror_index(x - half + k, w));
          v = kind == Extremum::Max ? std::max(v, c) : std::min(v, c);
        }
        out(y, x) = v;
      }
    }
  } else {
    for (int x = 0; x < w; ++x) {
      for (int y = 0; y < h; ++y) {
        double v = in(mirror_index(y - half, h), x);
        for (int k = 1; k < size; ++k) {
          const double c = in(mirror_index(y - half + k, h), x);
          v = kind == Extremum::Max ? std::max(v, c) : std::min(v, c);
        }
        out(y, x) = v;
      }
    }
  }
  return out;
}

} // namespace

Raster select_channel(const ColorImage& img, Channel channel) {
  if (!img.well_formed())
    throw std::invalid_argument("select_channel: colour planes disagree in shape");
  switch (channel) {
    case Channel::R: return img.r.cast<double>();
    case Channel::G: return img.g.cast<double>();
    case Channel::B: return img.b.cast<double>();
    case Channel::Gray: {
      Raster out(img.height(), img.width());
      for (Eigen::Index y = 0; y < img.height(); ++y)
        for (Eigen::Index x = 0; x < img.width(); ++x) {
          const int sum = int(img.r(y, x)) + int(img.g(y, x)) + int(img.b(y, x));
          out(y, x) = std::floor(sum / 3.0 + 0.5); // round half up
        }
      return out;
    }
  }
  throw std::invalid_argument("select_channel: unknown channel");
}

Raster morphological_gradient(const Raster& img, int se_size) {
  if (se_size < 3 || se_size % 2 == 0)
    throw std::invalid_argument("morphological_gradient: structuring element size must be odd and >= 3");
  if (se_size > std::min(img.rows(), img.cols()))
    throw std::invalid_argument("morphological_gradient: structuring element larger than image");
  const Raster dil = axis_extremum(axis_extremum(img, se_size, Extremum::Max, true),
                                   se_size, Extremum::Max, false);
  const Raster ero = axis_extremum(axis_extremum(img, se_size, Extremum::Min, true),
                                   se_size, Extremum::Min, false);
  return dil - ero;
}

Raster shear_deform(const Raster& img, const std::vector<int>& cells, const ShearMap& shear) {
  const double det = shear.a * shear.d - shear.b * shear.c;
  if (std::abs(det) < 1e-12)
    throw std::invalid_argument("shear_deform: singular shear matrix");
  for (int c : cells)
    if (c < 0 || c > 15)
      throw std::invalid_argument("shear_deform: cell index outside the 4x4 lattice");

  Raster out = img;
  if (shear.is_identity()) return out;

  const int h = static_cast<int>(img.rows());
  const int w = static_cast<int>(img.cols());
  // Inverse map, applied in cell-local coordinates.
  const double ia = shear.d / det;
  const double ib = -shear.b / det;
  const double ic = -shear.c / det;
  const double id = shear.a / det;

  for (int c : cells) {
    const int cx = c % 4;
    const int cy = c / 4;
    const int x0 = cx * w / 4;
    const int x1 = (cx + 1) * w / 4;
    const int y0 = cy * h / 4;
    const int y1 = (cy + 1) * h / 4;
    const Raster cell = img.block(y0, x0, y1 - y0, x1 - x0);
    for (int y = y0; y < y1; ++y) {
      for (int x = x0; x < x1; ++x) {
        const double lx = x - x0;
        const double ly = y - y0;
        out(y, x) = bilinear_at(cell, ia * lx + ib * ly, ic * lx + id * ly);
      }
    }
  }
  return out;
}

} // namespace fractex
