#include "fractex/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace fractex {
namespace {

[[noreturn]] void fail(const std::filesystem::path& file, const std::string& what) {
  throw std::runtime_error(file.string() + ": " + what);
}

// Reads the next whitespace-delimited token of a PNM header, skipping
// '#' comment lines.
std::string pnm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      while ((c = in.peek()) != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(in.get()));
      }
      return tok;
    }
  }
  return tok;
}

ColorImage load_pnm(const std::filesystem::path& file, bool color) {
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(file, "cannot open");
  std::string magic = pnm_token(in);
  const int w = std::stoi(pnm_token(in));
  const int h = std::stoi(pnm_token(in));
  const int maxval = std::stoi(pnm_token(in));
  if (w < 1 || h < 1) fail(file, "bad dimensions");
  if (maxval != 255) fail(file, "only 8-bit PNM supported");
  in.get(); // single whitespace after maxval

  const std::size_t samples = static_cast<std::size_t>(w) * h * (color ? 3 : 1);
  std::vector<std::uint8_t> buf(samples);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(samples));
  if (static_cast<std::size_t>(in.gcount()) != samples) fail(file, "truncated pixel data");

  ColorImage img;
  img.r.resize(h, w);
  img.g.resize(h, w);
  img.b.resize(h, w);
  const std::uint8_t* p = buf.data();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (color) {
        img.r(y, x) = *p++;
        img.g(y, x) = *p++;
        img.b(y, x) = *p++;
      } else {
        img.r(y, x) = img.g(y, x) = img.b(y, x) = *p++;
      }
    }
  }
  return img;
}

ColorImage load_png(const std::filesystem::path& file) {
  std::FILE* fp = std::fopen(file.string().c_str(), "rb");
  if (!fp) fail(file, "cannot open");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    fail(file, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    fail(file, "libpng decode error");
  }

  png_init_io(png, fp);
  png_read_info(png, info);

  // Normalize everything to 8-bit RGB.
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * 3);

  ColorImage img;
  img.r.resize(h, w);
  img.g.resize(h, w);
  img.b.resize(h, w);
  for (int y = 0; y < h; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (int x = 0; x < w; ++x) {
      img.r(y, x) = row[3 * x + 0];
      img.g(y, x) = row[3 * x + 1];
      img.b(y, x) = row[3 * x + 2];
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return img;
}

} // namespace

ColorImage load_image(const std::filesystem::path& file) {
  std::ifstream probe(file, std::ios::binary);
  if (!probe) fail(file, "cannot open");
  unsigned char sig[8] = {};
  probe.read(reinterpret_cast<char*>(sig), 8);
  probe.close();

  if (sig[0] == 'P' && sig[1] == '5') return load_pnm(file, false);
  if (sig[0] == 'P' && sig[1] == '6') return load_pnm(file, true);
  static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (std::memcmp(sig, png_sig, 8) == 0) return load_png(file);
  fail(file, "unsupported image format (expected P5/P6 PNM or PNG)");
}

void write_pgm(const std::filesystem::path& file, const Raster& img) {
  if (img.size() == 0) throw std::invalid_argument("write_pgm: empty image");
  std::ofstream out(file, std::ios::binary);
  if (!out) fail(file, "cannot write");
  out << "P5\n" << img.cols() << " " << img.rows() << "\n255\n";
  std::vector<std::uint8_t> row(static_cast<std::size_t>(img.cols()));
  for (Eigen::Index y = 0; y < img.rows(); ++y) {
    for (Eigen::Index x = 0; x < img.cols(); ++x) {
      double v = std::round(img(y, x));
      row[static_cast<std::size_t>(x)] =
          static_cast<std::uint8_t>(std::min(255.0, std::max(0.0, v)));
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

void write_pgm_rescaled(const std::filesystem::path& file, const Raster& img) {
  const double lo = img.minCoeff();
  const double hi = img.maxCoeff();
  if (hi - lo <= 0.0) {
    write_pgm(file, Raster::Constant(img.rows(), img.cols(), 128.0));
    return;
  }
  write_pgm_range(file, img, lo, hi);
}

void write_pgm_range(const std::filesystem::path& file, const Raster& img,
                     double lo, double hi) {
  if (hi <= lo) throw std::invalid_argument("write_pgm_range: empty value range");
  write_pgm(file, (img - lo) * (255.0 / (hi - lo)));
}

} // namespace fractex
