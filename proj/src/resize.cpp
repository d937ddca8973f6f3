#include "ccq/resize.hpp"

#include <algorithm>
#include <cmath>

namespace ccq {

std::vector<double> resize_area(const std::vector<double>& plane, int w, int h, int new_w, int new_h) {
    require(w > 0 && h > 0 && new_w > 0 && new_h > 0, "resize_area: dimensions must be positive");
    require(plane.size() == static_cast<std::size_t>(w) * h, "resize_area: plane size mismatch");

    std::vector<double> out(static_cast<std::size_t>(new_w) * new_h);
    const double sx = static_cast<double>(w) / new_w;
    const double sy = static_cast<double>(h) / new_h;

    for (int oy = 0; oy < new_h; ++oy) {
        const double y0 = oy * sy;
        const double y1 = (oy + 1) * sy;
        const int iy0 = static_cast<int>(std::floor(y0));
        const int iy1 = std::min(h, static_cast<int>(std::ceil(y1)));
        for (int ox = 0; ox < new_w; ++ox) {
            const double x0 = ox * sx;
            const double x1 = (ox + 1) * sx;
            const int ix0 = static_cast<int>(std::floor(x0));
            const int ix1 = std::min(w, static_cast<int>(std::ceil(x1)));

            double acc = 0.0;
            double area = 0.0;
            for (int iy = iy0; iy < iy1; ++iy) {
                const double wy = std::min<double>(iy + 1, y1) - std::max<double>(iy, y0);
                for (int ix = ix0; ix < ix1; ++ix) {
                    const double wx = std::min<double>(ix + 1, x1) - std::max<double>(ix, x0);
                    acc += plane[static_cast<std::size_t>(iy) * w + ix] * wx * wy;
                    area += wx * wy;
                }
            }
            out[static_cast<std::size_t>(oy) * new_w + ox] = acc / area;
        }
    }
    return out;
}

LabImage resize_area(const LabImage& img, int new_w, int new_h) {
    LabImage out(new_w, new_h);
    out.L = resize_area(img.L, img.width, img.height, new_w, new_h);
    out.a = resize_area(img.a, img.width, img.height, new_w, new_h);
    out.b = resize_area(img.b, img.width, img.height, new_w, new_h);
    return out;
}

ClassMap resize_nearest(const ClassMap& m, int new_w, int new_h) {
    require(new_w > 0 && new_h > 0, "resize_nearest: dimensions must be positive");
    ClassMap out(new_w, new_h, m.grid);
    out.compacted = m.compacted;
    out.approved_set_hash = m.approved_set_hash;
    for (int oy = 0; oy < new_h; ++oy) {
        const int iy = std::min(m.height - 1, static_cast<int>((oy + 0.5) * m.height / new_h));
        for (int ox = 0; ox < new_w; ++ox) {
            const int ix = std::min(m.width - 1, static_cast<int>((ox + 0.5) * m.width / new_w));
            out.values[static_cast<std::size_t>(oy) * new_w + ox] =
                m.values[static_cast<std::size_t>(iy) * m.width + ix];
        }
    }
    return out;
}

}  // namespace ccq
