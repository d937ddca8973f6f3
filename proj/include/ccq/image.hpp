#ifndef CCQ_IMAGE_HPP
#define CCQ_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ccq {

/// 8-bit sRGB image, interleaved r,g,b.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    std::uint8_t* px(int x, int y) { return data.data() + (static_cast<std::size_t>(y) * width + x) * 3; }
    const std::uint8_t* px(int x, int y) const {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }

    bool valid() const { return width > 0 && height > 0 && data.size() == pixel_count() * 3; }
};

/// CIELAB planes. L in [0,100]; a/b nominally in [-128,127] but not clipped.
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<double> L;
    std::vector<double> a;
    std::vector<double> b;

    LabImage() = default;
    LabImage(int w, int h)
        : width(w),
          height(h),
          L(static_cast<std::size_t>(w) * h),
          a(static_cast<std::size_t>(w) * h),
          b(static_cast<std::size_t>(w) * h) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Chroma-only pair of planes, the working representation for quantization,
/// harmonization, and the regression losses.
struct AbPlanes {
    int width = 0;
    int height = 0;
    std::vector<double> a;
    std::vector<double> b;

    AbPlanes() = default;
    AbPlanes(int w, int h)
        : width(w), height(h), a(static_cast<std::size_t>(w) * h), b(static_cast<std::size_t>(w) * h) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    bool same_shape(const AbPlanes& o) const { return width == o.width && height == o.height; }
};

inline void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace ccq

#endif
