#pragma once

#include "fractex/image.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fractex {

enum class Band : int { LL = 0, LH = 1, HL = 2, HH = 3 };

constexpr std::array<Band, 4> kBandOrder = {Band::LL, Band::LH, Band::HL, Band::HH};

const char* band_name(Band b);
Band parse_band(const std::string& name);

using BandPath = std::vector<Band>;

/// "LL.HH" style dotted path; the empty path ("root") is the source image.
std::string path_string(const BandPath& path);
BandPath parse_path(const std::string& s);

/// Quadrature-mirror highpass from an 8-tap lowpass: g(k) = (-1)^k h(7-k).
std::array<double, 8> derive_highpass(std::span<const double> lowpass);

/// 8-tap analysis pair. The stock bank is the Daubechies filter normalized
/// to unit DC gain (sum h = 1, sum h^2 = 1/2).
struct FilterBank {
  std::array<double, 8> lowpass;
  std::array<double, 8> highpass;

  static FilterBank daubechies8();
};

/// One subband of the overcomplete quad-tree. Coefficients keep the root
/// dimensions at every level; `path` is empty for the root.
struct SubbandNode {
  BandPath path;
  Raster coeffs;

  int level() const { return static_cast<int>(path.size()); }
};

inline constexpr int kMaxDecompositionDepth = 10;

/// Splits a node into its four children without down-sampling. Separable
/// row/column filtering with mirror extension; at level l the taps are
/// dilated a-trous by 2^l so repeated application stays shift-invariant.
/// Children are returned in LL, LH, HL, HH order (first letter = filter
/// along x within each row, second = along y within each column).
std::array<SubbandNode, 4> decompose_level(const SubbandNode& node, const FilterBank& fb,
                                           int max_depth = kMaxDecompositionDepth);

/// Applies one 8-tap filter along a single axis with the a-trous dilation
/// `scale` and mirror extension. Exposed for the dense-operator checks.
Raster filter_axis(const Raster& in, std::span<const double, 8> taps, int scale, bool along_x);

/// Lazily expanded wavelet-packet tree over one root image. A node has
/// either zero or exactly four children; node() decomposes ancestors on
/// demand and caches every subband it produces.
class WPTree {
 public:
  WPTree(Raster root, FilterBank fb, int max_depth = kMaxDecompositionDepth);

  const SubbandNode& node(const BandPath& path);
  const FilterBank& filter_bank() const { return fb_; }
  int max_depth() const { return max_depth_; }

 private:
  FilterBank fb_;
  int max_depth_;
  std::map<std::string, SubbandNode> nodes_;
};

} // namespace fractex
