#pragma once

#include "fractex/image.hpp"

#include <filesystem>

namespace fractex {

/// Loads a P5 PGM, P6 PPM or 8-bit PNG. Grayscale sources are promoted to
/// three identical planes so channel selection behaves uniformly.
ColorImage load_image(const std::filesystem::path& file);

/// Writes an 8-bit binary PGM; values are rounded and clamped to [0, 255].
void write_pgm(const std::filesystem::path& file, const Raster& img);

/// Writes a PGM after affinely rescaling [min, max] to [0, 255]. A constant
/// image maps to mid-gray.
void write_pgm_rescaled(const std::filesystem::path& file, const Raster& img);

/// Writes a PGM mapping a fixed value range [lo, hi] to [0, 255].
void write_pgm_range(const std::filesystem::path& file, const Raster& img,
                     double lo, double hi);

} // namespace fractex
