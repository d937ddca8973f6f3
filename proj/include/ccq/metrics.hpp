#ifndef CCQ_METRICS_HPP
#define CCQ_METRICS_HPP

#include <span>

#include "ccq/classgrid.hpp"

namespace ccq {

struct CcarResult {
    int raw = 0;          // activated class count
    double ratio = 0.0;   // raw / n_class
};

struct MsePsnr {
    double mse = 0.0;
    double psnr = 0.0;  // +inf when images are identical
};

/// Number of distinct class values present in the map.
int unique_classes(const ClassMap& m);

/// Chromatic number ratio: unique classes of pred over unique classes of
/// truth. Uniqueness is per image, so dimensions may differ. Rejects an empty
/// truth map.
double cnr(const ClassMap& pred, const ClassMap& truth);

/// Color class activation: how many of the n_class available classes the map
/// activates, raw and as a fraction.
CcarResult ccar(const ClassMap& pred, int n_class);

/// True activation ratio: mean over image pairs of the exact per-pixel class
/// match fraction. Reported x100 by default. Rejects mismatched dimensions,
/// unequal list lengths, and empty lists.
double tar(std::span<const ClassMap> preds, std::span<const ClassMap> truths, bool as_percent = true);

/// MSE over [0,1]-normalized channel values plus psnr = 10*log10(1/mse).
MsePsnr mse_psnr(const RgbImage& pred, const RgbImage& truth);

}  // namespace ccq

#endif
