#ifndef CCQ_COLORSPACE_HPP
#define CCQ_COLORSPACE_HPP

#include "ccq/image.hpp"

namespace ccq {

/// Single CIELAB triple.
struct Lab {
    double L = 0.0;
    double a = 0.0;
    double b = 0.0;
};

/// 8-bit sRGB -> CIE 1976 L*a*b* under D65, computed in double precision.
/// The white point is taken as the row sums of the sRGB->XYZ matrix, so the
/// neutral axis (r=g=b) maps to a=b=0 exactly and white to L=100 exactly.
Lab srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Inverse of srgb_to_lab. Out-of-gamut values are clamped per channel in
/// linear RGB; quantization to 8 bits happens only here.
void lab_to_srgb(const Lab& lab, std::uint8_t& r, std::uint8_t& g, std::uint8_t& b);

LabImage rgb_to_lab(const RgbImage& img);
RgbImage lab_to_rgb(const LabImage& img);

/// Rebuilds an RGB image from an L plane and (possibly modified) a*b* planes.
RgbImage compose_rgb(const std::vector<double>& L, const AbPlanes& ab);

}  // namespace ccq

#endif
