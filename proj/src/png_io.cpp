#include "ccq/png_io.hpp"

#include <png.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace ccq {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& path, const char* what) {
    throw std::runtime_error(path + ": " + what);
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    PngReader() {
        png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    PngWriter() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

}  // namespace

RgbImage read_rgb_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open for reading");

    PngReader r;
    if (!r.png || !r.info) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(r.png))) fail(path, "PNG decode failed");

    png_init_io(r.png, fp.get());
    png_read_info(r.png, r.info);

    png_set_strip_16(r.png);
    png_set_palette_to_rgb(r.png);
    png_set_expand_gray_1_2_4_to_8(r.png);
    if (png_get_valid(r.png, r.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(r.png);
    png_set_strip_alpha(r.png);
    png_set_gray_to_rgb(r.png);
    png_read_update_info(r.png, r.info);

    RgbImage img(static_cast<int>(png_get_image_width(r.png, r.info)),
                 static_cast<int>(png_get_image_height(r.png, r.info)));
    if (png_get_rowbytes(r.png, r.info) != static_cast<std::size_t>(img.width) * 3) {
        fail(path, "unexpected row size after RGB conversion");
    }

    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) rows[y] = img.data.data() + static_cast<std::size_t>(y) * img.width * 3;
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return img;
}

void write_rgb_png(const RgbImage& img, const std::string& path) {
    require(img.valid(), "write_rgb_png: invalid image");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");

    PngWriter w;
    if (!w.png || !w.info) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(w.png))) fail(path, "PNG encode failed");

    png_init_io(w.png, fp.get());
    png_set_IHDR(w.png, w.info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);

    std::vector<png_const_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) rows[y] = img.data.data() + static_cast<std::size_t>(y) * img.width * 3;
    png_write_image(w.png, const_cast<png_bytepp>(rows.data()));
    png_write_end(w.png, nullptr);
}

Gray16 read_gray16_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open for reading");

    PngReader r;
    if (!r.png || !r.info) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(r.png))) fail(path, "PNG decode failed");

    png_init_io(r.png, fp.get());
    png_read_info(r.png, r.info);

    if (png_get_color_type(r.png, r.info) != PNG_COLOR_TYPE_GRAY ||
        png_get_bit_depth(r.png, r.info) != 16) {
        fail(path, "expected a 16-bit grayscale PNG");
    }
    if constexpr (std::endian::native == std::endian::little) png_set_swap(r.png);
    png_read_update_info(r.png, r.info);

    Gray16 img(static_cast<int>(png_get_image_width(r.png, r.info)),
               static_cast<int>(png_get_image_height(r.png, r.info)));
    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) {
        rows[y] = reinterpret_cast<png_bytep>(img.data.data() + static_cast<std::size_t>(y) * img.width);
    }
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return img;
}

void write_gray16_png(const Gray16& img, const std::string& path) {
    require(img.width > 0 && img.height > 0 &&
                img.data.size() == static_cast<std::size_t>(img.width) * img.height,
            "write_gray16_png: invalid image");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");

    PngWriter w;
    if (!w.png || !w.info) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(w.png))) fail(path, "PNG encode failed");

    png_init_io(w.png, fp.get());
    png_set_IHDR(w.png, w.info, img.width, img.height, 16, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    if constexpr (std::endian::native == std::endian::little) png_set_swap(w.png);

    std::vector<png_const_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) {
        rows[y] = reinterpret_cast<png_const_bytep>(img.data.data() + static_cast<std::size_t>(y) * img.width);
    }
    png_write_image(w.png, const_cast<png_bytepp>(rows.data()));
    png_write_end(w.png, nullptr);
}

std::vector<std::uint8_t> read_mask_png(const std::string& path, int& width, int& height) {
    const RgbImage img = read_rgb_png(path);
    width = img.width;
    height = img.height;
    std::vector<std::uint8_t> mask(img.pixel_count());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const std::uint8_t* p = img.data.data() + i * 3;
        mask[i] = (p[0] || p[1] || p[2]) ? 1 : 0;
    }
    return mask;
}

std::uint16_t ab_to_u16(double v) {
    const double scaled = std::round((v + 128.0) * 256.0);
    return static_cast<std::uint16_t>(std::clamp(scaled, 0.0, 65535.0));
}

double u16_to_ab(std::uint16_t v) { return v / 256.0 - 128.0; }

Gray16 encode_ab_plane(const std::vector<double>& plane, int width, int height) {
    require(plane.size() == static_cast<std::size_t>(width) * height, "encode_ab_plane: size mismatch");
    Gray16 img(width, height);
    for (std::size_t i = 0; i < plane.size(); ++i) img.data[i] = ab_to_u16(plane[i]);
    return img;
}

std::vector<double> decode_ab_plane(const Gray16& img) {
    std::vector<double> plane(img.data.size());
    for (std::size_t i = 0; i < plane.size(); ++i) plane[i] = u16_to_ab(img.data[i]);
    return plane;
}

}  // namespace ccq
