#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "lsph/errors.hpp"
#include "lsph/region_map.hpp"

#include "fixtures.hpp"

using lsph::BinaryMask;
using lsph::PolygonShape;
using lsph::Region;
using lsph::RegionMap;
using lsph::Ring;
using lsph::ThresholdDirection;

namespace {

Region square_region(std::string id, double value, double x, double y, double side = 1.0) {
    Region region;
    region.id = std::move(id);
    region.value = value;
    Ring ring;
    ring.points = {{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}, {x, y}};
    region.polygons.push_back(PolygonShape{{ring}});
    return region;
}

/// Independent containment oracle: winding number via signed crossings,
/// structured differently from the library's even-odd ray cast. For the
/// simple (non-self-intersecting, consistently wound) test shapes the two
/// must agree.
bool winding_inside(const PolygonShape& polygon, double x, double y) {
    int winding = 0;
    for (const Ring& ring : polygon.rings) {
        for (std::size_t i = 0; i + 1 < ring.points.size(); ++i) {
            double x1 = ring.points[i][0], y1 = ring.points[i][1];
            double x2 = ring.points[i + 1][0], y2 = ring.points[i + 1][1];
            double cross = (x2 - x1) * (y - y1) - (x - x1) * (y2 - y1);
            if (y1 <= y) {
                if (y2 > y && cross > 0) ++winding;
            } else {
                if (y2 <= y && cross < 0) --winding;
            }
        }
    }
    return winding != 0;
}

} // namespace

TEST_CASE("three squares in a row, strict 'below' predicate") {
    RegionMap map;
    map.regions.push_back(square_region("a", 100, 0, 0));
    map.regions.push_back(square_region("b", 800, 1, 0));
    map.regions.push_back(square_region("c", 200, 2, 0));

    BinaryMask mask = lsph::rasterize_regions(map, 750, ThresholdDirection::below, 10);
    REQUIRE(mask.width() == 30);
    REQUIRE(mask.height() == 10);
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 30; ++c) {
            bool expected = c < 10 || c >= 20; // squares a and c only
            REQUIRE(mask.at(r, c) == expected);
        }
}

TEST_CASE("strict inequality: value equal to the threshold is excluded") {
    RegionMap map;
    map.regions.push_back(square_region("only", 5000, 0, 0));
    REQUIRE_THROWS_AS(lsph::rasterize_regions(map, 5000, ThresholdDirection::below, 10),
                      lsph::empty_manifold_error);
}

TEST_CASE("at-or-above selects the complement") {
    RegionMap map = fixtures::nine_squares(1, 1); // center hot at 900
    BinaryMask mask = lsph::rasterize_regions(map, 750, ThresholdDirection::at_or_above, 4);
    // Only the center unit square is at or above 750; grid still covers all
    // nine squares.
    REQUIRE(mask.width() == 12);
    REQUIRE(mask.height() == 12);
    REQUIRE(mask.foreground_count() == 16);
    for (int r = 4; r < 8; ++r)
        for (int c = 4; c < 8; ++c)
            REQUIRE(mask.at(r, c));
}

TEST_CASE("center-hot map rasterizes to a one-square hole") {
    RegionMap map = fixtures::nine_squares(1, 1);
    double resolution = 4;
    BinaryMask mask = lsph::rasterize_regions(map, 750, ThresholdDirection::below, resolution);
    REQUIRE(mask.width() == 12);
    REQUIRE(mask.height() == 12);

    // Verify every cell against the independent winding-number oracle over
    // the selected (cold) regions.
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c) {
            double x = (c + 0.5) / resolution;
            double y = (r + 0.5) / resolution;
            bool expected = false;
            for (const Region& region : map.regions) {
                if (!(region.value < 750)) continue;
                for (const PolygonShape& polygon : region.polygons)
                    if (winding_inside(polygon, x, y)) expected = true;
            }
            REQUIRE(mask.at(r, c) == expected);
        }
    REQUIRE(mask.foreground_count() == 144 - 16); // all but the 4x4 hole
}

TEST_CASE("foreground is invariant under region reordering") {
    RegionMap map = fixtures::nine_squares(2, 0);
    BinaryMask reference = lsph::rasterize_regions(map, 750, ThresholdDirection::below, 3);

    std::mt19937_64 gen(1123);
    for (int trial = 0; trial < 5; ++trial) {
        RegionMap shuffled = map;
        std::shuffle(shuffled.regions.begin(), shuffled.regions.end(), gen);
        REQUIRE(lsph::rasterize_regions(shuffled, 750, ThresholdDirection::below, 3) ==
                reference);
    }
}

TEST_CASE("even-odd rule carves ring holes") {
    // Outer 4x4 square with a 2x2 inner ring: the inner ring is a hole.
    Region region;
    region.id = "donut";
    region.value = 1;
    Ring outer, inner;
    outer.points = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {0, 0}};
    inner.points = {{1, 1}, {3, 1}, {3, 3}, {1, 3}, {1, 1}};
    region.polygons.push_back(PolygonShape{{outer, inner}});
    RegionMap map;
    map.regions.push_back(region);

    BinaryMask mask = lsph::rasterize_regions(map, 10, ThresholdDirection::below, 2);
    REQUIRE(mask.width() == 8);
    REQUIRE(mask.height() == 8);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            bool in_hole = r >= 2 && r < 6 && c >= 2 && c < 6;
            REQUIRE(mask.at(r, c) == !in_hole);
        }
}

TEST_CASE("grid covers the bounding box of all regions, selected or not") {
    RegionMap map;
    map.regions.push_back(square_region("cold", 100, 0, 0));
    map.regions.push_back(square_region("hot", 900, 3, 0)); // excluded but stretches the bbox
    BinaryMask mask = lsph::rasterize_regions(map, 750, ThresholdDirection::below, 2);
    REQUIRE(mask.width() == 8); // x span [0,4] at 2 cells per unit
    REQUIRE(mask.height() == 2);
    REQUIRE(mask.foreground_count() == 4); // only the cold square
}

TEST_CASE("input validation") {
    SECTION("empty map") {
        REQUIRE_THROWS_AS(lsph::rasterize_regions(RegionMap{}, 1, ThresholdDirection::below, 1),
                          lsph::input_error);
    }

    SECTION("nonpositive resolution") {
        RegionMap map;
        map.regions.push_back(square_region("a", 0, 0, 0));
        REQUIRE_THROWS_AS(lsph::rasterize_regions(map, 1, ThresholdDirection::below, 0),
                          lsph::input_error);
        REQUIRE_THROWS_AS(lsph::rasterize_regions(map, 1, ThresholdDirection::below, -2),
                          lsph::input_error);
    }

    SECTION("unclosed ring") {
        Region region;
        region.id = "open";
        region.value = 0;
        Ring ring;
        ring.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; // missing closing vertex
        region.polygons.push_back(PolygonShape{{ring}});
        RegionMap map;
        map.regions.push_back(region);
        REQUIRE_THROWS_WITH(lsph::rasterize_regions(map, 1, ThresholdDirection::below, 1),
                            Catch::Matchers::ContainsSubstring("unclosed"));
    }

    SECTION("too few vertices") {
        Region region;
        region.id = "thin";
        region.value = 0;
        Ring ring;
        ring.points = {{0, 0}, {1, 1}, {0, 0}};
        region.polygons.push_back(PolygonShape{{ring}});
        RegionMap map;
        map.regions.push_back(region);
        REQUIRE_THROWS_WITH(lsph::rasterize_regions(map, 1, ThresholdDirection::below, 1),
                            Catch::Matchers::ContainsSubstring("fewer than 4"));
    }

    SECTION("zero-area polygon") {
        Region region;
        region.id = "flat";
        region.value = 0;
        Ring ring;
        ring.points = {{0, 0}, {1, 0}, {2, 0}, {0, 0}}; // collinear
        region.polygons.push_back(PolygonShape{{ring}});
        RegionMap map;
        map.regions.push_back(region);
        REQUIRE_THROWS_WITH(lsph::rasterize_regions(map, 1, ThresholdDirection::below, 1),
                            Catch::Matchers::ContainsSubstring("zero-area"));
    }
}
