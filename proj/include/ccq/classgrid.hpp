#ifndef CCQ_CLASSGRID_HPP
#define CCQ_CLASSGRID_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ccq/image.hpp"

namespace ccq {

/// Quantization grid over a*b* space. A bin is an alpha x alpha square; the
/// grid covers [-beta, beta) on both axes with delta bins per axis, so class
/// indices run in [0, delta^2).
struct GridParams {
    int alpha = 0;
    int beta = 0;
    int delta = 0;

    int num_classes() const { return delta * delta; }
    bool operator==(const GridParams&) const = default;
};

/// Per-pixel discrete color classes. `grid` identifies the producing grid;
/// a compacted map holds dense indices into an approved class set instead of
/// raw grid classes (see classopt).
struct ClassMap {
    int width = 0;
    int height = 0;
    GridParams grid;
    bool compacted = false;
    std::string approved_set_hash;  // nonempty iff compacted
    std::vector<std::uint16_t> values;

    ClassMap() = default;
    ClassMap(int w, int h, const GridParams& g)
        : width(w), height(h), grid(g), values(static_cast<std::size_t>(w) * h) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// One row of the bin-size trade-off analysis. The a*b* deviations are exact
/// over the integer grid; the RGB deviations come from an empirical sweep at
/// L=50 around a,b in {50, 0, -50} and are populated only on request.
struct BinAnalysisRow {
    int alpha = 0;
    int total_class_points = 0;
    double max_dev_ab = 0.0;
    double avg_dev_ab = 0.0;
    bool has_rgb_sweep = false;
    std::array<double, 3> rgb_max_dev{};  // sweep centers 50, 0, -50
    std::array<double, 3> rgb_avg_dev{};
    double rgb_max_dev_mean = 0.0;
    double rgb_avg_dev_mean = 0.0;
};

/// Alphas the bin-size analysis was designed around. Other positive even
/// values work but are worth flagging to the user.
bool is_standard_alpha(int alpha);

/// Builds grid parameters for a bin size. beta rounds 108 up to the next
/// multiple of alpha so the grid tiles [-beta, beta) exactly; delta follows
/// as 2*beta/alpha. Rejects non-positive or odd alpha.
GridParams make_grid(int alpha);

/// a*b* pair -> class index (floor division per axis, b-major). Inputs outside
/// [-beta, beta) clamp to the outermost bin.
int encode_class(double a, double b, const GridParams& p);

/// Class index -> bin-center a*b* pair. Rejects indices outside [0, delta^2).
std::pair<double, double> decode_class(int c, const GridParams& p);

ClassMap encode_image(const LabImage& img, const GridParams& p);
AbPlanes decode_map(const ClassMap& m);

/// Exhaustive bin-size analysis over the integer grid a,b in [-beta, beta-1],
/// optionally with the empirical RGB deviation sweep.
std::vector<BinAnalysisRow> bin_table(const std::vector<int>& alphas, bool with_rgb_sweep = false);

}  // namespace ccq

#endif
