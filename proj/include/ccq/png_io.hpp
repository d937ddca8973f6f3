#ifndef CCQ_PNG_IO_HPP
#define CCQ_PNG_IO_HPP

#include <string>
#include <vector>

#include "ccq/image.hpp"

namespace ccq {

/// 16-bit single-channel raster, the on-disk carrier for class maps, labeled
/// masks, and fixed-point a*b* planes.
struct Gray16 {
    int width = 0;
    int height = 0;
    std::vector<std::uint16_t> data;

    Gray16() = default;
    Gray16(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h) {}
};

/// Reads any PNG as 8-bit RGB (palette/gray expanded, alpha stripped,
/// 16-bit depth reduced). Throws std::runtime_error on I/O or decode failure.
RgbImage read_rgb_png(const std::string& path);

void write_rgb_png(const RgbImage& img, const std::string& path);

/// Reads a PNG that must be 16-bit grayscale.
Gray16 read_gray16_png(const std::string& path);

void write_gray16_png(const Gray16& img, const std::string& path);

/// Reads an 8-bit grayscale PNG as a boolean plane (nonzero = set).
std::vector<std::uint8_t> read_mask_png(const std::string& path, int& width, int& height);

// Fixed-point encoding for continuous a*b* planes in 16-bit PNGs:
// stored = round((v + 128) * 256), i.e. [-128, 127.996] at 1/256 resolution.
std::uint16_t ab_to_u16(double v);
double u16_to_ab(std::uint16_t v);

Gray16 encode_ab_plane(const std::vector<double>& plane, int width, int height);
std::vector<double> decode_ab_plane(const Gray16& img);

}  // namespace ccq

#endif
