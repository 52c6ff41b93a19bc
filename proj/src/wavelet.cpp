#include "fractex/wavelet.hpp"

#include <algorithm>
#include <stdexcept>

namespace fractex {

const char* band_name(Band b) {
  switch (b) {
    case Band::LL: return "LL";
    case Band::LH: return "LH";
    case Band::HL: return "HL";
    case Band::HH: return "HH";
  }
  return "??";
}

Band parse_band(const std::string& name) {
  for (Band b : kBandOrder)
    if (name == band_name(b)) return b;
  throw std::invalid_argument("unknown subband label: " + name);
}

std::string path_string(const BandPath& path) {
  if (path.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += '.';
    s += band_name(path[i]);
  }
  return s;
}

BandPath parse_path(const std::string& s) {
  BandPath path;
  if (s.empty() || s == "root") return path;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t dot = s.find('.', pos);
    if (dot == std::string::npos) dot = s.size();
    path.push_back(parse_band(s.substr(pos, dot - pos)));
    pos = dot + 1;
  }
  return path;
}

std::array<double, 8> derive_highpass(std::span<const double> lowpass) {
  if (lowpass.size() != 8)
    throw std::invalid_argument("derive_highpass: expected exactly 8 taps");
  std::array<double, 8> g;
  for (int k = 0; k < 8; ++k)
    g[static_cast<std::size_t>(k)] = (k % 2 == 0 ? 1.0 : -1.0) * lowpass[static_cast<std::size_t>(7 - k)];
  return g;
}

FilterBank FilterBank::daubechies8() {
  FilterBank fb;
  fb.lowpass = {0.16290184, 0.50547316, 0.44610023, -0.01978767,
                -0.13225371, 0.02180788, 0.02325179, -0.00749321};
  fb.highpass = derive_highpass(fb.lowpass);
  return fb;
}

Raster filter_axis(const Raster& in, std::span<const double, 8> taps, int scale, bool along_x) {
  const int h = static_cast<int>(in.rows());
  const int w = static_cast<int>(in.cols());
  const int n = along_x ? w : h;
  Raster out = Raster::Zero(h, w);
  // Tap k reads offset (k - 4) * scale; the half-length shift keeps the
  // subband aligned with its parent.
  for (int k = 0; k < 8; ++k) {
    const double c = taps[static_cast<std::size_t>(k)];
    const int off = (k - 4) * scale;
    const int lo = std::max(0, -off);
    const int hi = std::min(n, n - off); // [lo, hi): no reflection needed
    if (along_x) {
      if (hi > lo) out.middleCols(lo, hi - lo) += c * in.middleCols(lo + off, hi - lo);
      for (int x = 0; x < std::min(lo, n); ++x)
        out.col(x) += c * in.col(mirror_index(x + off, n));
      for (int x = std::max(hi, 0); x < n; ++x)
        out.col(x) += c * in.col(mirror_index(x + off, n));
    } else {
      if (hi > lo) out.middleRows(lo, hi - lo) += c * in.middleRows(lo + off, hi - lo);
      for (int y = 0; y < std::min(lo, n); ++y)
        out.row(y) += c * in.row(mirror_index(y + off, n));
      for (int y = std::max(hi, 0); y < n; ++y)
        out.row(y) += c * in.row(mirror_index(y + off, n));
    }
  }
  return out;
}

std::array<SubbandNode, 4> decompose_level(const SubbandNode& node, const FilterBank& fb,
                                           int max_depth) {
  if (node.level() >= max_depth)
    throw std::runtime_error("decompose_level: maximum decomposition depth exceeded");
  const int scale = 1 << node.level();
  const Raster low_x = filter_axis(node.coeffs, fb.lowpass, scale, true);
  const Raster high_x = filter_axis(node.coeffs, fb.highpass, scale, true);

  std::array<SubbandNode, 4> children;
  for (Band b : kBandOrder) {
    SubbandNode& child = children[static_cast<std::size_t>(b)];
    child.path = node.path;
    child.path.push_back(b);
  }
  children[0].coeffs = filter_axis(low_x, fb.lowpass, scale, false);
  children[1].coeffs = filter_axis(low_x, fb.highpass, scale, false);
  children[2].coeffs = filter_axis(high_x, fb.lowpass, scale, false);
  children[3].coeffs = filter_axis(high_x, fb.highpass, scale, false);
  return children;
}

WPTree::WPTree(Raster root, FilterBank fb, int max_depth)
    : fb_(fb), max_depth_(max_depth) {
  nodes_.emplace("root", SubbandNode{{}, std::move(root)});
}

const SubbandNode& WPTree::node(const BandPath& path) {
  if (static_cast<int>(path.size()) > max_depth_)
    throw std::runtime_error("WPTree: path deeper than the configured maximum");
  const std::string key = path_string(path);
  auto it = nodes_.find(key);
  if (it != nodes_.end()) return it->second;

  BandPath parent_path(path.begin(), path.end() - 1);
  const SubbandNode& parent = node(parent_path);
  auto children = decompose_level(parent, fb_, max_depth_);
  const SubbandNode* result = nullptr;
  for (auto& child : children) {
    auto [pos, unused] = nodes_.emplace(path_string(child.path), std::move(child));
    if (pos->first == key) result = &pos->second;
  }
  return *result;
}

} // namespace fractex
