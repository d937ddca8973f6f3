#ifndef CCQ_HARMONIZE_HPP
#define CCQ_HARMONIZE_HPP

#include <string>
#include <vector>

#include "ccq/image.hpp"

namespace ccq {

/// Externally produced segment masks (e.g. from a segmentation model dumped
/// to disk). Each mask is one boolean plane over the full image.
struct SegmentMaskSet {
    int width = 0;
    int height = 0;
    std::vector<std::vector<std::uint8_t>> masks;  // nonzero = member
    std::vector<std::string> labels;               // optional, parallel to masks

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Per-channel replacement thresholds.
struct HarmonizeParams {
    double delta_a = 8.0;
    double delta_b = 8.0;
};

/// What one segment did to one image: the channel modes and how many pixels
/// each channel replaced.
struct SegmentDiff {
    std::string label;
    int mode_a = 0;
    int mode_b = 0;
    std::size_t replaced_a = 0;
    std::size_t replaced_b = 0;
};

struct HarmonizeResult {
    AbPlanes planes;
    std::vector<SegmentDiff> diffs;
};

/// Most frequent value among masked pixels, taken over values rounded to the
/// nearest integer (half away from zero). Ties go to the smaller value.
/// Rejects an empty mask.
int segment_mode(const std::vector<double>& plane, const std::vector<std::uint8_t>& mask);

/// Per segment and per channel independently: the segment mode is fixed once,
/// then every masked pixel deviating from it by more than delta is set to the
/// mode. Masks are processed in list order (later masks see earlier
/// replacements); pixels outside every mask are untouched.
HarmonizeResult harmonize(const AbPlanes& ab, const SegmentMaskSet& masks, const HarmonizeParams& p);

}  // namespace ccq

#endif
