#pragma once

#include "fractex/image.hpp"

#include <vector>

namespace fractex {

/// Extracts one colour plane as a real-valued raster. Gray is the rounded
/// unweighted mean of the three planes.
Raster select_channel(const ColorImage& img, Channel channel);

/// Dilation minus erosion under an all-ones square structuring element of
/// odd size, mirror-extended at the borders. Output is everywhere >= 0.
Raster morphological_gradient(const Raster& img, int se_size = 5);

/// Affine map applied to cell-local coordinates: (x, y) -> (a x + b y, c x + d y).
struct ShearMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  bool is_identity() const { return a == 1.0 && b == 0.0 && c == 0.0 && d == 1.0; }
};

/// Remaps the selected cells of a 4x4 lattice through the inverse shear,
/// resampling bilinearly with mirror extension at the cell borders. Cells
/// not listed are copied verbatim; an identity map is a bit-exact identity.
/// Cell indices are row-major in 0..15.
Raster shear_deform(const Raster& img, const std::vector<int>& cells, const ShearMap& shear);

} // namespace fractex
