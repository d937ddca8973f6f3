#include "ccq/harmonize.hpp"

#include <cmath>
#include <map>

namespace ccq {

int segment_mode(const std::vector<double>& plane, const std::vector<std::uint8_t>& mask) {
    require(plane.size() == mask.size(), "segment_mode: plane and mask sizes disagree");
    // Ordered map so that equal counts resolve to the smaller value.
    std::map<long, std::size_t> freq;
    for (std::size_t i = 0; i < plane.size(); ++i) {
        if (mask[i]) ++freq[std::lround(plane[i])];
    }
    require(!freq.empty(), "segment_mode: mask has no pixels");
    long best = freq.begin()->first;
    std::size_t best_count = freq.begin()->second;
    for (const auto& [value, count] : freq) {
        if (count > best_count) {
            best = value;
            best_count = count;
        }
    }
    return static_cast<int>(best);
}

namespace {

std::size_t harmonize_channel(std::vector<double>& plane, const std::vector<std::uint8_t>& mask,
                              int mode, double delta) {
    std::size_t replaced = 0;
    for (std::size_t i = 0; i < plane.size(); ++i) {
        if (mask[i] && std::abs(plane[i] - mode) > delta) {
            plane[i] = mode;
            ++replaced;
        }
    }
    return replaced;
}

}  // namespace

HarmonizeResult harmonize(const AbPlanes& ab, const SegmentMaskSet& masks, const HarmonizeParams& p) {
    require(ab.width == masks.width && ab.height == masks.height,
            "harmonize: image and mask dimensions disagree");
    require(p.delta_a >= 0.0 && p.delta_b >= 0.0, "harmonize: thresholds must be non-negative");

    HarmonizeResult result;
    result.planes = ab;
    result.diffs.reserve(masks.masks.size());

    for (std::size_t si = 0; si < masks.masks.size(); ++si) {
        const auto& mask = masks.masks[si];
        require(mask.size() == ab.pixel_count(), "harmonize: mask size disagrees with image");

        SegmentDiff diff;
        diff.label = si < masks.labels.size() ? masks.labels[si] : std::to_string(si);
        diff.mode_a = segment_mode(result.planes.a, mask);
        diff.mode_b = segment_mode(result.planes.b, mask);
        diff.replaced_a = harmonize_channel(result.planes.a, mask, diff.mode_a, p.delta_a);
        diff.replaced_b = harmonize_channel(result.planes.b, mask, diff.mode_b, p.delta_b);
        result.diffs.push_back(std::move(diff));
    }
    return result;
}

}  // namespace ccq
