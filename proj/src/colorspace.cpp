#include "ccq/colorspace.hpp"

#include <algorithm>
#include <cmath>

namespace ccq {

namespace {

// sRGB -> XYZ (D65, 2 degree observer), IEC 61966-2-1 primaries.
constexpr double kM[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

// White point = matrix row sums, so that r=g=b maps exactly onto the neutral
// axis regardless of the matrix's last-digit rounding.
constexpr double kWhiteX = kM[0][0] + kM[0][1] + kM[0][2];
constexpr double kWhiteY = kM[1][0] + kM[1][1] + kM[1][2];
constexpr double kWhiteZ = kM[2][0] + kM[2][1] + kM[2][2];

// XYZ -> linear sRGB, the exact inverse of kM computed in double precision.
struct InverseMatrix {
    double m[3][3];
    constexpr InverseMatrix() : m{} {
        const double det = kM[0][0] * (kM[1][1] * kM[2][2] - kM[1][2] * kM[2][1]) -
                           kM[0][1] * (kM[1][0] * kM[2][2] - kM[1][2] * kM[2][0]) +
                           kM[0][2] * (kM[1][0] * kM[2][1] - kM[1][1] * kM[2][0]);
        const double inv_det = 1.0 / det;
        m[0][0] = (kM[1][1] * kM[2][2] - kM[1][2] * kM[2][1]) * inv_det;
        m[0][1] = (kM[0][2] * kM[2][1] - kM[0][1] * kM[2][2]) * inv_det;
        m[0][2] = (kM[0][1] * kM[1][2] - kM[0][2] * kM[1][1]) * inv_det;
        m[1][0] = (kM[1][2] * kM[2][0] - kM[1][0] * kM[2][2]) * inv_det;
        m[1][1] = (kM[0][0] * kM[2][2] - kM[0][2] * kM[2][0]) * inv_det;
        m[1][2] = (kM[0][2] * kM[1][0] - kM[0][0] * kM[1][2]) * inv_det;
        m[2][0] = (kM[1][0] * kM[2][1] - kM[1][1] * kM[2][0]) * inv_det;
        m[2][1] = (kM[0][1] * kM[2][0] - kM[0][0] * kM[2][1]) * inv_det;
        m[2][2] = (kM[0][0] * kM[1][1] - kM[0][1] * kM[1][0]) * inv_det;
    }
};
constexpr InverseMatrix kMInv;

// CIE 1976 segment boundary constants.
constexpr double kEps = 216.0 / 24389.0;   // (6/29)^3
constexpr double kKappa = 24389.0 / 27.0;  // (29/3)^3

double srgb_decode(double u) {
    return u <= 0.04045 ? u / 12.92 : std::pow((u + 0.055) / 1.055, 2.4);
}

double srgb_encode(double u) {
    return u <= 0.0031308 ? u * 12.92 : 1.055 * std::pow(u, 1.0 / 2.4) - 0.055;
}

double lab_f(double t) {
    return t > kEps ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

double lab_f_inv(double ft) {
    const double t3 = ft * ft * ft;
    return t3 > kEps ? t3 : (116.0 * ft - 16.0) / kKappa;
}

}  // namespace

Lab srgb_to_lab(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
    const double r = srgb_decode(r8 / 255.0);
    const double g = srgb_decode(g8 / 255.0);
    const double b = srgb_decode(b8 / 255.0);

    const double x = (kM[0][0] * r + kM[0][1] * g + kM[0][2] * b) / kWhiteX;
    const double y = (kM[1][0] * r + kM[1][1] * g + kM[1][2] * b) / kWhiteY;
    const double z = (kM[2][0] * r + kM[2][1] * g + kM[2][2] * b) / kWhiteZ;

    const double fx = lab_f(x);
    const double fy = lab_f(y);
    const double fz = lab_f(z);

    Lab out;
    out.L = 116.0 * fy - 16.0;
    out.a = 500.0 * (fx - fy);
    out.b = 200.0 * (fy - fz);
    return out;
}

void lab_to_srgb(const Lab& lab, std::uint8_t& r8, std::uint8_t& g8, std::uint8_t& b8) {
    const double fy = (lab.L + 16.0) / 116.0;
    const double fx = fy + lab.a / 500.0;
    const double fz = fy - lab.b / 200.0;

    const double x = lab_f_inv(fx) * kWhiteX;
    const double y = lab_f_inv(fy) * kWhiteY;
    const double z = lab_f_inv(fz) * kWhiteZ;

    double rgb[3];
    rgb[0] = kMInv.m[0][0] * x + kMInv.m[0][1] * y + kMInv.m[0][2] * z;
    rgb[1] = kMInv.m[1][0] * x + kMInv.m[1][1] * y + kMInv.m[1][2] * z;
    rgb[2] = kMInv.m[2][0] * x + kMInv.m[2][1] * y + kMInv.m[2][2] * z;

    std::uint8_t* out[3] = {&r8, &g8, &b8};
    for (int i = 0; i < 3; ++i) {
        const double lin = std::clamp(rgb[i], 0.0, 1.0);
        const double v = srgb_encode(lin) * 255.0;
        *out[i] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
    }
}

LabImage rgb_to_lab(const RgbImage& img) {
    require(img.valid(), "rgb_to_lab: invalid RgbImage");
    LabImage out(img.width, img.height);
    const std::size_t n = img.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* p = img.data.data() + i * 3;
        const Lab lab = srgb_to_lab(p[0], p[1], p[2]);
        out.L[i] = lab.L;
        out.a[i] = lab.a;
        out.b[i] = lab.b;
    }
    return out;
}

RgbImage lab_to_rgb(const LabImage& img) {
    const std::size_t n = img.pixel_count();
    require(img.L.size() == n && img.a.size() == n && img.b.size() == n,
            "lab_to_rgb: plane sizes disagree");
    RgbImage out(img.width, img.height);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t* p = out.data.data() + i * 3;
        lab_to_srgb({img.L[i], img.a[i], img.b[i]}, p[0], p[1], p[2]);
    }
    return out;
}

RgbImage compose_rgb(const std::vector<double>& L, const AbPlanes& ab) {
    require(L.size() == ab.pixel_count(), "compose_rgb: L plane size mismatch");
    LabImage lab(ab.width, ab.height);
    lab.L = L;
    lab.a = ab.a;
    lab.b = ab.b;
    return lab_to_rgb(lab);
}

}  // namespace ccq
