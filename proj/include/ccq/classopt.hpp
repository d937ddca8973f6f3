#ifndef CCQ_CLASSOPT_HPP
#define CCQ_CLASSOPT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ccq/classgrid.hpp"

namespace ccq {

/// Per-class sample counts over a corpus of ClassMaps.
struct ClassHistogram {
    GridParams grid;
    std::vector<std::uint64_t> counts;
    std::uint64_t total_samples = 0;

    ClassHistogram() = default;
    explicit ClassHistogram(const GridParams& g) : grid(g), counts(g.num_classes(), 0) {}
};

/// The retained class subset plus a remap table sending every grid class to an
/// approved one (approved classes map to themselves).
struct ApprovedClassSet {
    GridParams grid;
    std::vector<std::uint16_t> approved;  // sorted ascending
    std::vector<std::uint16_t> remap;     // size delta^2
    std::uint64_t min_count_threshold = 0;

    std::size_t size() const { return approved.size(); }
};

/// Bidirectional approved-class <-> dense-index table. Dense indices are
/// assigned in ascending class order, so the mapping is order preserving.
struct CompactIndex {
    std::vector<std::uint16_t> dense_to_class;
    std::vector<std::int32_t> class_to_dense;  // -1 for non-approved classes

    std::size_t size() const { return dense_to_class.size(); }
};

/// Adds one map's pixels into the histogram. Rejects maps from a different
/// grid or compacted maps.
void add_map(ClassHistogram& h, const ClassMap& m);

/// Merges two partial histograms (associative, order independent).
ClassHistogram merge(const ClassHistogram& a, const ClassHistogram& b);

ClassHistogram accumulate_histogram(std::span<const ClassMap> maps, const GridParams& grid);

/// Retains classes with counts >= min_count and remaps every starved class to
/// the approved class whose bin center is nearest (Euclidean in a*b*, ties to
/// the smaller class index). Errors if no class meets the threshold.
ApprovedClassSet select_classes(const ClassHistogram& h, std::uint64_t min_count);

/// Threshold expressed as a percentage of total samples, e.g. 0.000455 (%)
/// of 109,885,440 samples rounds up to 500.
std::uint64_t threshold_from_percent(const ClassHistogram& h, double percent);

/// Replaces every pixel's class with its remap target. Approved classes pass
/// through unchanged, so the operation is idempotent.
ClassMap remap_map(const ClassMap& m, const ApprovedClassSet& s);

CompactIndex compact_index(const ApprovedClassSet& s);

/// Rewrites a full-grid map into dense approved-set indices (remapping starved
/// classes first). `set_hash` is recorded on the result for later consistency
/// checks.
ClassMap compact_map(const ClassMap& m, const ApprovedClassSet& s, const std::string& set_hash);

}  // namespace ccq

#endif
