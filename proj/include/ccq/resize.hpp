#ifndef CCQ_RESIZE_HPP
#define CCQ_RESIZE_HPP

#include <vector>

#include "ccq/classgrid.hpp"

namespace ccq {

/// Area-averaging (box) resample of one real plane. Exact overlap weighting,
/// so it handles non-integer scale factors.
std::vector<double> resize_area(const std::vector<double>& plane, int w, int h, int new_w, int new_h);

LabImage resize_area(const LabImage& img, int new_w, int new_h);

/// Nearest-neighbor resample; the only valid resampling for class indices.
ClassMap resize_nearest(const ClassMap& m, int new_w, int new_h);

}  // namespace ccq

#endif
