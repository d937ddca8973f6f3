#include "ccq/metrics.hpp"

#include <cmath>
#include <limits>
#include <unordered_set>

namespace ccq {

int unique_classes(const ClassMap& m) {
    std::unordered_set<std::uint16_t> seen(m.values.begin(), m.values.end());
    return static_cast<int>(seen.size());
}

double cnr(const ClassMap& pred, const ClassMap& truth) {
    require(!truth.values.empty(), "cnr: truth map has no pixels");
    require(pred.grid == truth.grid && pred.compacted == truth.compacted,
            "cnr: maps come from different class spaces");
    return static_cast<double>(unique_classes(pred)) / unique_classes(truth);
}

CcarResult ccar(const ClassMap& pred, int n_class) {
    require(n_class >= 1, "ccar: n_class must be >= 1");
    CcarResult r;
    r.raw = unique_classes(pred);
    r.ratio = static_cast<double>(r.raw) / n_class;
    return r;
}

double tar(std::span<const ClassMap> preds, std::span<const ClassMap> truths, bool as_percent) {
    require(preds.size() == truths.size(), "tar: list lengths disagree");
    require(!preds.empty(), "tar: empty image lists");
    double acc_sum = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const ClassMap& p = preds[i];
        const ClassMap& t = truths[i];
        require(p.width == t.width && p.height == t.height, "tar: image dimensions disagree");
        require(!p.values.empty(), "tar: image has no pixels");
        std::size_t match = 0;
        for (std::size_t j = 0; j < p.values.size(); ++j) {
            if (p.values[j] == t.values[j]) ++match;
        }
        acc_sum += static_cast<double>(match) / static_cast<double>(p.values.size());
    }
    const double mean_acc = acc_sum / static_cast<double>(preds.size());
    return as_percent ? mean_acc * 100.0 : mean_acc;
}

MsePsnr mse_psnr(const RgbImage& pred, const RgbImage& truth) {
    require(pred.width == truth.width && pred.height == truth.height, "mse_psnr: shape mismatch");
    require(pred.valid() && truth.valid(), "mse_psnr: invalid image");
    double sum = 0.0;
    for (std::size_t i = 0; i < pred.data.size(); ++i) {
        const double d = (static_cast<double>(pred.data[i]) - truth.data[i]) / 255.0;
        sum += d * d;
    }
    MsePsnr out;
    out.mse = sum / static_cast<double>(pred.data.size());
    out.psnr = out.mse > 0.0 ? 10.0 * std::log10(1.0 / out.mse) : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace ccq
