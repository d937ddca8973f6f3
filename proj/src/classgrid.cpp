#include "ccq/classgrid.hpp"

#include <algorithm>
#include <cmath>

#include "ccq/colorspace.hpp"

namespace ccq {

bool is_standard_alpha(int alpha) {
    return alpha == 4 || alpha == 6 || alpha == 8 || alpha == 10 || alpha == 12 || alpha == 14;
}

GridParams make_grid(int alpha) {
    require(alpha > 0, "make_grid: alpha must be positive");
    require(alpha % 2 == 0, "make_grid: alpha must be even");
    GridParams p;
    p.alpha = alpha;
    p.beta = alpha * ((108 + alpha - 1) / alpha);  // round 108 up to a multiple of alpha
    p.delta = 2 * p.beta / alpha;
    return p;
}

int encode_class(double a, double b, const GridParams& p) {
    const auto bin = [&](double v) {
        const int i = static_cast<int>(std::floor((v + p.beta) / p.alpha));
        return std::clamp(i, 0, p.delta - 1);
    };
    return bin(b) * p.delta + bin(a);
}

std::pair<double, double> decode_class(int c, const GridParams& p) {
    require(c >= 0 && c < p.num_classes(), "decode_class: class index out of range");
    const double half = p.alpha / 2.0;
    const double a = (c % p.delta) * p.alpha - p.beta + half;
    const double b = (c / p.delta) * p.alpha - p.beta + half;
    return {a, b};
}

ClassMap encode_image(const LabImage& img, const GridParams& p) {
    ClassMap m(img.width, img.height, p);
    const std::size_t n = img.pixel_count();
    require(img.a.size() == n && img.b.size() == n, "encode_image: plane sizes disagree");
    for (std::size_t i = 0; i < n; ++i) {
        m.values[i] = static_cast<std::uint16_t>(encode_class(img.a[i], img.b[i], p));
    }
    return m;
}

AbPlanes decode_map(const ClassMap& m) {
    require(!m.compacted, "decode_map: compacted maps must be expanded through their approved set first");
    AbPlanes out(m.width, m.height);
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        const auto [a, b] = decode_class(m.values[i], m.grid);
        out.a[i] = a;
        out.b[i] = b;
    }
    return out;
}

namespace {

// Quantize->dequantize->RGB distance at L=50 inside the bin containing (v, v),
// for v in {50, 0, -50}. Distances are Euclidean over the three 8-bit channels.
void rgb_sweep(const GridParams& p, BinAnalysisRow& row) {
    constexpr double kL = 50.0;
    constexpr int kCenters[3] = {50, 0, -50};
    double max_sum = 0.0;
    double avg_sum = 0.0;
    for (int ci = 0; ci < 3; ++ci) {
        const int v = kCenters[ci];
        const int lo_a = static_cast<int>(std::floor(static_cast<double>(v + p.beta) / p.alpha)) * p.alpha - p.beta;
        double max_d = 0.0;
        double sum_d = 0.0;
        int n = 0;
        for (int a = lo_a; a < lo_a + p.alpha; ++a) {
            for (int b = lo_a; b < lo_a + p.alpha; ++b) {
                std::uint8_t r1, g1, b1, r2, g2, b2;
                lab_to_srgb({kL, static_cast<double>(a), static_cast<double>(b)}, r1, g1, b1);
                const auto [aq, bq] = decode_class(encode_class(a, b, p), p);
                lab_to_srgb({kL, aq, bq}, r2, g2, b2);
                const double dr = static_cast<double>(r1) - r2;
                const double dg = static_cast<double>(g1) - g2;
                const double db = static_cast<double>(b1) - b2;
                const double d = std::sqrt(dr * dr + dg * dg + db * db);
                max_d = std::max(max_d, d);
                sum_d += d;
                ++n;
            }
        }
        row.rgb_max_dev[ci] = max_d;
        row.rgb_avg_dev[ci] = sum_d / n;
        max_sum += max_d;
        avg_sum += sum_d / n;
    }
    row.rgb_max_dev_mean = max_sum / 3.0;
    row.rgb_avg_dev_mean = avg_sum / 3.0;
    row.has_rgb_sweep = true;
}

}  // namespace

std::vector<BinAnalysisRow> bin_table(const std::vector<int>& alphas, bool with_rgb_sweep) {
    std::vector<BinAnalysisRow> rows;
    rows.reserve(alphas.size());
    for (int alpha : alphas) {
        const GridParams p = make_grid(alpha);
        BinAnalysisRow row;
        row.alpha = alpha;
        row.total_class_points = p.num_classes();

        double max_dev = 0.0;
        double sum_dev = 0.0;
        std::uint64_t n = 0;
        for (int a = -p.beta; a < p.beta; ++a) {
            for (int b = -p.beta; b < p.beta; ++b) {
                const auto [aq, bq] = decode_class(encode_class(a, b, p), p);
                const double da = std::abs(aq - a);
                const double db = std::abs(bq - b);
                max_dev = std::max({max_dev, da, db});
                sum_dev += da + db;
                n += 2;
            }
        }
        row.max_dev_ab = max_dev;
        row.avg_dev_ab = sum_dev / static_cast<double>(n);

        if (with_rgb_sweep) rgb_sweep(p, row);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ccq
