#ifndef CCQ_WEIGHTING_HPP
#define CCQ_WEIGHTING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccq/classgrid.hpp"

namespace ccq {

/// Dense-class occurrence counts over one batch of truth maps.
struct BatchStats {
    int n_classes = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;  // H*W*B
};

/// Per-dense-class loss weights for one batch, with the threshold and
/// percentage that produced them.
struct WeightTable {
    std::vector<double> weights;
    double psi = 0.0;
    double p_percent = 0.0;
};

/// Per-pixel score vector over n_classes; raw logits or, after softmax,
/// probabilities. Layout is pixel major with the class axis contiguous.
struct ClassDistribution {
    int width = 0;
    int height = 0;
    int n_classes = 0;
    std::vector<double> values;

    ClassDistribution() = default;
    ClassDistribution(int w, int h, int n)
        : width(w), height(h), n_classes(n), values(static_cast<std::size_t>(w) * h * n) {}

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    double* at(int x, int y) { return values.data() + (static_cast<std::size_t>(y) * width + x) * n_classes; }
    const double* at(int x, int y) const {
        return values.data() + (static_cast<std::size_t>(y) * width + x) * n_classes;
    }
};

enum class Reduction { Mean, Sum };

struct RegressionLosses {
    double l1 = 0.0;
    double l2 = 0.0;
    double huber = 0.0;
    double log_cosh = 0.0;
};

/// Counts dense-class occurrences across a batch of compacted truth maps.
BatchStats make_batch_stats(std::span<const ClassMap> batch, int n_classes);

/// Every class weighted 1/n_classes.
WeightTable uniform_weights(int n_classes);

/// Confusion-balanced batch weights:
///   psi   = (total / n_classes) * p_percent / 100   (or the explicit override)
///   w(c)  = total / (max(N_c, psi) + max_c(N_c) / psi)
/// Classes rarer than psi share the maximal weight, so zero-count classes
/// cannot blow up. Rejects empty batches and non-positive psi.
WeightTable batch_weights(const BatchStats& s, double p_percent,
                          std::optional<double> psi_override = std::nullopt);

/// Class-balanced cross entropy: -sum_px w[truth(px)] * log(p(px)[truth(px)]),
/// probabilities floored at eps=1e-12 inside the log. Mean reduction divides
/// by pixel count.
double weighted_ce_loss(const ClassDistribution& probs, const ClassMap& truth, const WeightTable& w,
                        Reduction reduction = Reduction::Mean);

/// d(weighted_ce_loss)/d(probs), same layout as the input distribution.
ClassDistribution weighted_ce_grad_probs(const ClassDistribution& probs, const ClassMap& truth,
                                         const WeightTable& w, Reduction reduction = Reduction::Mean);

/// Gradient of weighted_ce_loss(softmax(logits), ...) with respect to the
/// logits: per pixel w[t] * (softmax(z) - onehot(t)).
ClassDistribution weighted_ce_grad_logits(const ClassDistribution& logits, const ClassMap& truth,
                                          const WeightTable& w, Reduction reduction = Reduction::Mean);

/// L1 / L2 / Huber / log-cosh between predicted and true a*b* planes, each a
/// mean over all channel samples.
RegressionLosses regression_losses(const AbPlanes& pred, const AbPlanes& truth, double huber_delta = 1.0);

/// Per-pixel softmax, stabilized by max subtraction.
ClassDistribution softmax(const ClassDistribution& logits);

/// Per-pixel argmax (ties to the smallest index). The grid is carried over as
/// bookkeeping for the resulting map.
ClassMap argmax_classes(const ClassDistribution& d, const GridParams& grid, bool compacted = true);

}  // namespace ccq

#endif
