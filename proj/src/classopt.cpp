#include "ccq/classopt.hpp"

#include <cmath>
#include <limits>

namespace ccq {

void add_map(ClassHistogram& h, const ClassMap& m) {
    require(m.grid == h.grid, "add_map: grid mismatch");
    require(!m.compacted, "add_map: histogram accumulation expects full-grid maps");
    for (std::uint16_t c : m.values) {
        require(c < h.counts.size(), "add_map: class index out of range");
        ++h.counts[c];
    }
    h.total_samples += m.values.size();
}

ClassHistogram merge(const ClassHistogram& a, const ClassHistogram& b) {
    require(a.grid == b.grid, "merge: grid mismatch");
    ClassHistogram out = a;
    for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
    out.total_samples += b.total_samples;
    return out;
}

ClassHistogram accumulate_histogram(std::span<const ClassMap> maps, const GridParams& grid) {
    ClassHistogram h(grid);
    for (const ClassMap& m : maps) add_map(h, m);
    return h;
}

ApprovedClassSet select_classes(const ClassHistogram& h, std::uint64_t min_count) {
    require(min_count >= 1, "select_classes: min_count must be >= 1");
    const int n = h.grid.num_classes();
    require(static_cast<int>(h.counts.size()) == n, "select_classes: histogram size mismatch");

    ApprovedClassSet s;
    s.grid = h.grid;
    s.min_count_threshold = min_count;
    for (int c = 0; c < n; ++c) {
        if (h.counts[c] >= min_count) s.approved.push_back(static_cast<std::uint16_t>(c));
    }
    require(!s.approved.empty(), "select_classes: no class meets the threshold");

    // Nearest approved bin center per class. Centers sit on a uniform grid, so
    // Euclidean distance between centers is alpha times the (row, col) index
    // distance; comparing integer squared index distances is exact and makes
    // the smaller-index tie-break deterministic.
    const int delta = h.grid.delta;
    s.remap.resize(n);
    for (int c = 0; c < n; ++c) {
        if (h.counts[c] >= min_count) {
            s.remap[c] = static_cast<std::uint16_t>(c);
            continue;
        }
        const std::int64_t row = c / delta;
        const std::int64_t col = c % delta;
        std::int64_t best_d = std::numeric_limits<std::int64_t>::max();
        std::uint16_t best = s.approved.front();
        for (std::uint16_t a : s.approved) {
            const std::int64_t dr = row - a / delta;
            const std::int64_t dc = col - a % delta;
            const std::int64_t d = dr * dr + dc * dc;
            if (d < best_d) {
                best_d = d;
                best = a;
            }
        }
        s.remap[c] = best;
    }
    return s;
}

std::uint64_t threshold_from_percent(const ClassHistogram& h, double percent) {
    require(percent > 0.0, "threshold_from_percent: percent must be positive");
    const double count = std::ceil(percent / 100.0 * static_cast<double>(h.total_samples));
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(count));
}

ClassMap remap_map(const ClassMap& m, const ApprovedClassSet& s) {
    require(m.grid == s.grid, "remap_map: grid mismatch");
    require(!m.compacted, "remap_map: map is already compacted");
    ClassMap out = m;
    for (auto& v : out.values) {
        require(v < s.remap.size(), "remap_map: class index out of range");
        v = s.remap[v];
    }
    return out;
}

CompactIndex compact_index(const ApprovedClassSet& s) {
    CompactIndex idx;
    idx.dense_to_class = s.approved;
    idx.class_to_dense.assign(s.grid.num_classes(), -1);
    for (std::size_t i = 0; i < s.approved.size(); ++i) {
        idx.class_to_dense[s.approved[i]] = static_cast<std::int32_t>(i);
    }
    return idx;
}

ClassMap compact_map(const ClassMap& m, const ApprovedClassSet& s, const std::string& set_hash) {
    const ClassMap remapped = remap_map(m, s);
    const CompactIndex idx = compact_index(s);
    ClassMap out = remapped;
    out.compacted = true;
    out.approved_set_hash = set_hash;
    for (auto& v : out.values) v = static_cast<std::uint16_t>(idx.class_to_dense[v]);
    return out;
}

}  // namespace ccq
