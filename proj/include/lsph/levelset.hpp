#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lsph/errors.hpp"
#include "lsph/mask.hpp"

namespace lsph {

/// Arrival time of the outward-moving front at every grid vertex, in
/// cell-side units divided by the front speed. One vertex per mask cell,
/// placed at the cell center. Foreground vertices have value 0.
struct ScalarField {
    int width = 0;
    int height = 0;
    double speed = 1.0;
    std::vector<double> values; // row-major

    double at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * width + col];
    }

    double max_value() const {
        double m = 0.0;
        for (double v : values)
            if (v > m) m = v;
        return m;
    }
};

namespace detail {

// Exact squared Euclidean distance to the nearest foreground cell, by the
// two-pass per-dimension lower-envelope method. All arithmetic is integral,
// so the result is the exact squared distance between cell centers.
inline std::vector<std::int64_t> squared_distance_transform(const BinaryMask& mask) {
    const int w = mask.width();
    const int h = mask.height();
    // Larger than any achievable distance; its square stays well inside int64.
    const std::int64_t far = static_cast<std::int64_t>(w) + h + 1;

    // Pass 1: per column, distance (in rows) to the nearest foreground cell.
    std::vector<std::int64_t> g(static_cast<std::size_t>(w) * h);
    for (int c = 0; c < w; ++c) {
        g[c] = mask.at(0, c) ? 0 : far;
        for (int r = 1; r < h; ++r) {
            const std::size_t i = static_cast<std::size_t>(r) * w + c;
            g[i] = mask.at(r, c) ? 0 : std::min(g[i - w] + 1, far);
        }
        for (int r = h - 2; r >= 0; --r) {
            const std::size_t i = static_cast<std::size_t>(r) * w + c;
            g[i] = std::min(g[i], g[i + w] + 1);
        }
    }

    // Pass 2: per row, lower envelope of the parabolas (x - c')^2 + g(c')^2.
    std::vector<std::int64_t> d2(static_cast<std::size_t>(w) * h);
    std::vector<int> s(w), t(w);
    auto fval = [](std::int64_t x, std::int64_t i, std::int64_t gi) {
        return (x - i) * (x - i) + gi * gi;
    };
    for (int r = 0; r < h; ++r) {
        const std::int64_t* grow = &g[static_cast<std::size_t>(r) * w];
        int q = 0;
        s[0] = 0;
        t[0] = 0;
        for (int u = 1; u < w; ++u) {
            while (q >= 0 && fval(t[q], s[q], grow[s[q]]) > fval(t[q], u, grow[u]))
                --q;
            if (q < 0) {
                q = 0;
                s[0] = u;
            } else {
                // First x where parabola u beats parabola s[q] (integer floor div).
                const std::int64_t i = s[q];
                const std::int64_t sep =
                    (static_cast<std::int64_t>(u) * u - i * i + grow[u] * grow[u] -
                     grow[i] * grow[i]) /
                    (2 * (u - i));
                if (sep + 1 < w) {
                    ++q;
                    s[q] = u;
                    t[q] = static_cast<int>(sep) + 1;
                }
            }
        }
        for (int u = w - 1; u >= 0; --u) {
            d2[static_cast<std::size_t>(r) * w + u] = fval(u, s[q], grow[s[q]]);
            if (u == t[q]) --q;
        }
    }
    return d2;
}

} // namespace detail

/// Solves the constant-speed outward front propagation exactly: the arrival
/// time at a vertex is its Euclidean distance to the nearest foreground
/// vertex divided by the speed. Distances are between cell centers, in
/// cell-side units.
inline ScalarField arrival_time_field(const BinaryMask& mask, double speed = 1.0) {
    if (speed <= 0.0)
        throw input_error("front speed must be positive");
    if (mask.empty_foreground())
        throw empty_manifold_error();

    const std::vector<std::int64_t> d2 = detail::squared_distance_transform(mask);

    ScalarField field;
    field.width = mask.width();
    field.height = mask.height();
    field.speed = speed;
    field.values.resize(d2.size());
    for (std::size_t i = 0; i < d2.size(); ++i)
        field.values[i] = std::sqrt(static_cast<double>(d2[i])) / speed;
    return field;
}

/// Vertices the front has reached by time t (closed sublevel set f <= t).
/// At t = 0 this reproduces the initial mask exactly.
inline BinaryMask sublevel_manifold(const ScalarField& field, double t) {
    if (t < 0.0)
        throw input_error("sublevel time must be nonnegative");
    BinaryMask out(field.width, field.height);
    for (int r = 0; r < field.height; ++r)
        for (int c = 0; c < field.width; ++c)
            if (field.at(r, c) <= t)
                out.set(r, c, true);
    return out;
}

} // namespace lsph
