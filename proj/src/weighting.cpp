#include "ccq/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ccq {

namespace {

constexpr double kProbFloor = 1e-12;

void check_shapes(const ClassDistribution& d, const ClassMap& truth, const WeightTable& w) {
    require(d.width == truth.width && d.height == truth.height,
            "weighted_ce: distribution and truth shapes disagree");
    require(static_cast<int>(w.weights.size()) == d.n_classes,
            "weighted_ce: weight table size disagrees with class count");
    for (std::uint16_t t : truth.values) {
        require(static_cast<int>(t) < d.n_classes, "weighted_ce: truth class out of range");
    }
}

}  // namespace

BatchStats make_batch_stats(std::span<const ClassMap> batch, int n_classes) {
    require(n_classes >= 1, "make_batch_stats: n_classes must be >= 1");
    BatchStats s;
    s.n_classes = n_classes;
    s.counts.assign(n_classes, 0);
    for (const ClassMap& m : batch) {
        for (std::uint16_t c : m.values) {
            require(c < s.counts.size(), "make_batch_stats: class index out of range");
            ++s.counts[c];
        }
        s.total += m.values.size();
    }
    return s;
}

WeightTable uniform_weights(int n_classes) {
    require(n_classes >= 1, "uniform_weights: n_classes must be >= 1");
    WeightTable t;
    t.weights.assign(n_classes, 1.0 / n_classes);
    return t;
}

WeightTable batch_weights(const BatchStats& s, double p_percent, std::optional<double> psi_override) {
    require(s.total > 0, "batch_weights: batch has zero samples");
    require(s.n_classes >= 1 && static_cast<int>(s.counts.size()) == s.n_classes,
            "batch_weights: malformed batch stats");

    double psi;
    if (psi_override) {
        psi = *psi_override;
    } else {
        require(p_percent > 0.0, "batch_weights: p_percent must be positive");
        psi = (static_cast<double>(s.total) / s.n_classes) * (p_percent / 100.0);
    }
    require(psi > 0.0, "batch_weights: threshold must be positive");

    const double total = static_cast<double>(s.total);
    const double max_count = static_cast<double>(*std::max_element(s.counts.begin(), s.counts.end()));
    const double slack = max_count / psi;

    WeightTable t;
    t.psi = psi;
    t.p_percent = psi_override ? 0.0 : p_percent;
    t.weights.resize(s.counts.size());
    for (std::size_t c = 0; c < s.counts.size(); ++c) {
        const double adj = std::max(static_cast<double>(s.counts[c]), psi);
        t.weights[c] = total / (adj + slack);
    }
    return t;
}

double weighted_ce_loss(const ClassDistribution& probs, const ClassMap& truth, const WeightTable& w,
                        Reduction reduction) {
    check_shapes(probs, truth, w);
    double loss = 0.0;
    const std::size_t n = probs.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t t = truth.values[i];
        const double p = std::max(probs.values[i * probs.n_classes + t], kProbFloor);
        loss -= w.weights[t] * std::log(p);
    }
    if (reduction == Reduction::Mean && n > 0) loss /= static_cast<double>(n);
    return loss;
}

ClassDistribution weighted_ce_grad_probs(const ClassDistribution& probs, const ClassMap& truth,
                                         const WeightTable& w, Reduction reduction) {
    check_shapes(probs, truth, w);
    ClassDistribution g(probs.width, probs.height, probs.n_classes);
    const std::size_t n = probs.pixel_count();
    const double scale = (reduction == Reduction::Mean && n > 0) ? 1.0 / static_cast<double>(n) : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t t = truth.values[i];
        const double p = std::max(probs.values[i * probs.n_classes + t], kProbFloor);
        g.values[i * probs.n_classes + t] = -scale * w.weights[t] / p;
    }
    return g;
}

ClassDistribution weighted_ce_grad_logits(const ClassDistribution& logits, const ClassMap& truth,
                                          const WeightTable& w, Reduction reduction) {
    check_shapes(logits, truth, w);
    const ClassDistribution probs = softmax(logits);
    ClassDistribution g(logits.width, logits.height, logits.n_classes);
    const std::size_t n = logits.pixel_count();
    const double scale = (reduction == Reduction::Mean && n > 0) ? 1.0 / static_cast<double>(n) : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t t = truth.values[i];
        const double wt = w.weights[t];
        for (int c = 0; c < logits.n_classes; ++c) {
            const double p = probs.values[i * logits.n_classes + c];
            g.values[i * logits.n_classes + c] = scale * wt * (p - (c == t ? 1.0 : 0.0));
        }
    }
    return g;
}

RegressionLosses regression_losses(const AbPlanes& pred, const AbPlanes& truth, double huber_delta) {
    require(pred.same_shape(truth), "regression_losses: shape mismatch");
    require(huber_delta > 0.0, "regression_losses: huber delta must be positive");

    RegressionLosses out;
    const std::vector<double>* preds[2] = {&pred.a, &pred.b};
    const std::vector<double>* truths[2] = {&truth.a, &truth.b};
    std::uint64_t n = 0;
    for (int ch = 0; ch < 2; ++ch) {
        for (std::size_t i = 0; i < preds[ch]->size(); ++i) {
            const double e = (*truths[ch])[i] - (*preds[ch])[i];
            const double ae = std::abs(e);
            out.l1 += ae;
            out.l2 += e * e;
            out.huber += ae < huber_delta ? 0.5 * e * e : huber_delta * (ae - 0.5 * huber_delta);
            // log(cosh(e)) = |e| + log1p(exp(-2|e|)) - log(2), stable for large |e|
            out.log_cosh += ae + std::log1p(std::exp(-2.0 * ae)) - std::numbers::ln2;
            ++n;
        }
    }
    if (n > 0) {
        const double inv = 1.0 / static_cast<double>(n);
        out.l1 *= inv;
        out.l2 *= inv;
        out.huber *= inv;
        out.log_cosh *= inv;
    }
    return out;
}

ClassDistribution softmax(const ClassDistribution& logits) {
    ClassDistribution out(logits.width, logits.height, logits.n_classes);
    const std::size_t n = logits.pixel_count();
    const int k = logits.n_classes;
    for (std::size_t i = 0; i < n; ++i) {
        const double* z = logits.values.data() + i * k;
        double* p = out.values.data() + i * k;
        const double zmax = *std::max_element(z, z + k);
        double sum = 0.0;
        for (int c = 0; c < k; ++c) {
            p[c] = std::exp(z[c] - zmax);
            sum += p[c];
        }
        for (int c = 0; c < k; ++c) p[c] /= sum;
    }
    return out;
}

ClassMap argmax_classes(const ClassDistribution& d, const GridParams& grid, bool compacted) {
    ClassMap m(d.width, d.height, grid);
    m.compacted = compacted;
    const std::size_t n = d.pixel_count();
    const int k = d.n_classes;
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = d.values.data() + i * k;
        int best = 0;
        for (int c = 1; c < k; ++c) {
            if (p[c] > p[best]) best = c;
        }
        m.values[i] = static_cast<std::uint16_t>(best);
    }
    return m;
}

}  // namespace ccq
