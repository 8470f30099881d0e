#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lsph/errors.hpp"
#include "lsph/mask.hpp"

namespace lsph {

/// One polygon ring in planar map units. Rings are stored closed: the first
/// vertex is repeated as the last, and a valid ring lists at least 4 vertices
/// (a triangle plus the closing repeat).
struct Ring {
    std::vector<std::array<double, 2>> points;
};

/// A polygon as a set of rings combined with the even-odd fill rule, so holes
/// are just additional rings.
struct PolygonShape {
    std::vector<Ring> rings;
};

/// A labeled map region: one or more polygons sharing a single attribute
/// value (e.g. a neighborhood with its cumulative case count).
struct Region {
    std::string id;
    double value = 0.0;
    std::vector<PolygonShape> polygons;
};

/// A collection of regions covering (part of) the plane.
struct RegionMap {
    std::vector<Region> regions;
};

/// How a region's value is compared against the threshold when selecting
/// foreground regions. "below" is strict (value < t), matching phrasing like
/// "fewer than 750"; "at_or_above" is its complement (value >= t).
enum class ThresholdDirection {
    below,
    at_or_above,
};

inline bool predicate_holds(double value, double threshold, ThresholdDirection direction) {
    return direction == ThresholdDirection::below ? value < threshold : value >= threshold;
}

inline const char* direction_name(ThresholdDirection direction) {
    return direction == ThresholdDirection::below ? "below" : "at-or-above";
}

namespace detail {

/// Twice the signed area of a ring (shoelace formula).
inline double ring_double_area(const Ring& ring) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < ring.points.size(); ++i) {
        const auto& a = ring.points[i];
        const auto& b = ring.points[i + 1];
        sum += a[0] * b[1] - b[0] * a[1];
    }
    return sum;
}

/// Even-odd containment test of a point against all rings of a polygon.
/// Standard ray cast towards +x; each ring contributes its crossings, so a
/// point inside an outer ring and inside a hole ring counts as outside.
inline bool point_in_polygon(const PolygonShape& polygon, double x, double y) {
    bool inside = false;
    for (const Ring& ring : polygon.rings) {
        for (std::size_t i = 0; i + 1 < ring.points.size(); ++i) {
            double x1 = ring.points[i][0], y1 = ring.points[i][1];
            double x2 = ring.points[i + 1][0], y2 = ring.points[i + 1][1];
            if ((y1 > y) != (y2 > y)) {
                double xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1);
                if (x < xc) inside = !inside;
            }
        }
    }
    return inside;
}

inline bool point_in_region(const Region& region, double x, double y) {
    for (const PolygonShape& polygon : region.polygons)
        if (point_in_polygon(polygon, x, y))
            return true;
    return false;
}

/// Checks ring closure, vertex counts, and non-degeneracy for every region.
inline void validate_region(const Region& region) {
    if (region.polygons.empty())
        throw input_error("region '" + region.id + "' has no polygons");
    for (const PolygonShape& polygon : region.polygons) {
        if (polygon.rings.empty())
            throw input_error("region '" + region.id + "' has a polygon with no rings");
        double total_area = 0.0;
        for (const Ring& ring : polygon.rings) {
            if (ring.points.size() < 4)
                throw input_error("region '" + region.id +
                                  "' has a ring with fewer than 4 vertices");
            if (ring.points.front() != ring.points.back())
                throw input_error("region '" + region.id + "' has an unclosed ring");
            total_area += std::abs(ring_double_area(ring));
        }
        if (total_area == 0.0)
            throw input_error("region '" + region.id + "' has a degenerate (zero-area) polygon");
    }
}

} // namespace detail

/// Rasterizes the union of regions whose value satisfies the threshold
/// predicate onto a cell grid with `resolution` cells per map unit. A cell is
/// foreground iff its center lies inside a selected region (even-odd rule).
/// The grid covers the bounding box of *all* regions, expanded outward to
/// whole cells, so masks for different thresholds of the same map are
/// directly comparable. Row 0 corresponds to the smallest y coordinate.
inline BinaryMask rasterize_regions(const RegionMap& map, double threshold,
                                    ThresholdDirection direction, double resolution) {
    if (map.regions.empty())
        throw input_error("region map has no regions");
    if (!(resolution > 0.0))
        throw input_error("resolution must be positive");
    for (const Region& region : map.regions)
        detail::validate_region(region);

    std::vector<const Region*> selected;
    for (const Region& region : map.regions)
        if (predicate_holds(region.value, threshold, direction))
            selected.push_back(&region);
    if (selected.empty())
        throw empty_manifold_error();

    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = max_x;
    for (const Region& region : map.regions)
        for (const PolygonShape& polygon : region.polygons)
            for (const Ring& ring : polygon.rings)
                for (const auto& p : ring.points) {
                    min_x = std::min(min_x, p[0]);
                    max_x = std::max(max_x, p[0]);
                    min_y = std::min(min_y, p[1]);
                    max_y = std::max(max_y, p[1]);
                }

    // Snap the bounding box outward to whole cells of side 1/resolution.
    long long col0 = static_cast<long long>(std::floor(min_x * resolution));
    long long row0 = static_cast<long long>(std::floor(min_y * resolution));
    long long col1 = static_cast<long long>(std::ceil(max_x * resolution));
    long long row1 = static_cast<long long>(std::ceil(max_y * resolution));
    int width = static_cast<int>(std::max(1ll, col1 - col0));
    int height = static_cast<int>(std::max(1ll, row1 - row0));
    if (static_cast<long long>(width) * height > 100'000'000ll)
        throw input_error("rasterization grid exceeds 100 million cells; lower the resolution");

    BinaryMask mask(width, height);
    bool any = false;
    for (int r = 0; r < height; ++r) {
        double y = (row0 + r + 0.5) / resolution;
        for (int c = 0; c < width; ++c) {
            double x = (col0 + c + 0.5) / resolution;
            for (const Region* region : selected)
                if (detail::point_in_region(*region, x, y)) {
                    mask.set(r, c, true);
                    any = true;
                    break;
                }
        }
    }
    // Regions can pass the predicate yet be so small that no cell center
    // falls inside them; the manifold is still empty in that case.
    if (!any)
        throw empty_manifold_error();
    return mask;
}

} // namespace lsph
