#include "fractex/image.hpp"

#include <cmath>

namespace fractex {

double mirror_coord(double t, int n) {
  if (n <= 1) return 0.0;
  const double period = 2.0 * n;
  double s = std::fmod(t + 0.5, period);
  if (s < 0.0) s += period;
  if (s > n) s = period - s;
  return s - 0.5;
}

double bilinear_at(const Raster& img, double x, double y) {
  const int w = static_cast<int>(img.cols());
  const int h = static_cast<int>(img.rows());
  const double xm = mirror_coord(x, w);
  const double ym = mirror_coord(y, h);
  const int x0 = static_cast<int>(std::floor(xm));
  const int y0 = static_cast<int>(std::floor(ym));
  const double fx = xm - x0;
  const double fy = ym - y0;
  const int xa = mirror_index(x0, w);
  const int ya = mirror_index(y0, h);
  if (fx == 0.0 && fy == 0.0) return img(ya, xa);
  const int xb = mirror_index(x0 + 1, w);
  const int yb = mirror_index(y0 + 1, h);
  return (1.0 - fy) * ((1.0 - fx) * img(ya, xa) + fx * img(ya, xb)) +
         fy * ((1.0 - fx) * img(yb, xa) + fx * img(yb, xb));
}

} // namespace fractex
