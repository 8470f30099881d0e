#pragma once

// Shared synthetic fixtures for the test and acceptance suites. Every
// quantitative expectation frozen in the tests was pinned by the brute-force
// GF(2) rank oracle before being written down; see test_persistence.cpp.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

#include "lsph/mask.hpp"
#include "lsph/region_map.hpp"

namespace fixtures {

/// Mask from ASCII art rows: '#' = foreground, '.' = background.
inline lsph::BinaryMask mask_from_rows(const std::vector<std::string>& rows) {
    lsph::BinaryMask mask(static_cast<int>(rows.at(0).size()), static_cast<int>(rows.size()));
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c)
            mask.set(r, c, rows[r][c] == '#');
    return mask;
}

/// Synthetic street grid: n x n square blocks of side s separated by
/// one-cell-wide streets, streets also along the outer border. Every block
/// is a hole born at 0 that fills (dies) at s/2.
inline lsph::BinaryMask grid_city(int n, int s) {
    int side = n * s + (n + 1);
    lsph::BinaryMask mask(side, side);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if (r % (s + 1) == 0 || c % (s + 1) == 0)
                mask.set(r, c, true);
    return mask;
}

/// One bordered block of side s: the local geometry of a single grid-city
/// cell, small enough for the oracle at any s used in the tests.
inline lsph::BinaryMask single_block(int s) {
    lsph::BinaryMask mask(s + 2, s + 2);
    for (int r = 0; r < s + 2; ++r)
        for (int c = 0; c < s + 2; ++c)
            if (r == 0 || r == s + 1 || c == 0 || c == s + 1)
                mask.set(r, c, true);
    return mask;
}

/// Bordered 11x6 block with a dead-end street penetrating halfway from the
/// top border at column 7. The dead end pinches the block in two as the
/// front grows: a second 1D class is born at 2 and dies at sqrt(5).
/// (Oracle sweep: beta1 = 1 on [0,2), 2 on [2,sqrt5), 1 on [sqrt5,3), 0 at 3.)
inline lsph::BinaryMask pinched_block() {
    lsph::BinaryMask mask(13, 8);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 13; ++c)
            if (r == 0 || r == 7 || c == 0 || c == 12 || (c == 7 && r >= 1 && r <= 3))
                mask.set(r, c, true);
    return mask;
}

/// Chebyshev annulus: ring of foreground at max(|r-12|,|c-12|) in [6,10] on
/// a 25x25 grid. One hole born 0, dead at 6 (the inradius).
inline lsph::BinaryMask annulus() {
    lsph::BinaryMask mask(25, 25);
    for (int r = 0; r < 25; ++r)
        for (int c = 0; c < 25; ++c) {
            int d = std::max(std::abs(r - 12), std::abs(c - 12));
            if (d >= 6 && d <= 10)
                mask.set(r, c, true);
        }
    return mask;
}

/// Two seeds 6 cells apart on one row: two components at t=0 merging at 3.
inline lsph::BinaryMask two_seeds() {
    lsph::BinaryMask mask(9, 3);
    mask.set(1, 1, true);
    mask.set(1, 7, true);
    return mask;
}

/// 3x3 arrangement of unit-square regions on [0,3]^2, ids "r<row><col>",
/// all values 100 except the (hot_row, hot_col) region at 900. Pass (-1,-1)
/// for an all-cold map.
inline lsph::RegionMap nine_squares(int hot_row, int hot_col) {
    lsph::RegionMap map;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            lsph::Region region;
            region.id = "r" + std::to_string(j) + std::to_string(i);
            region.value = (j == hot_row && i == hot_col) ? 900.0 : 100.0;
            double x = i, y = j;
            lsph::Ring ring;
            ring.points = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}, {x, y}};
            region.polygons.push_back(lsph::PolygonShape{{ring}});
            map.regions.push_back(region);
        }
    return map;
}

/// Region map that rasterizes (at resolution 1) to exactly the given mask:
/// one unit-square region per cell, value 100 on foreground cells and 900 on
/// background cells, to be thresholded with "below 750".
inline lsph::RegionMap region_map_from_mask(const lsph::BinaryMask& mask) {
    lsph::RegionMap map;
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c) {
            lsph::Region region;
            region.id = "cell-" + std::to_string(r) + "-" + std::to_string(c);
            region.value = mask.at(r, c) ? 100.0 : 900.0;
            double x = c, y = r;
            lsph::Ring ring;
            ring.points = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}, {x, y}};
            region.polygons.push_back(lsph::PolygonShape{{ring}});
            map.regions.push_back(region);
        }
    return map;
}

/// Fresh scratch directory under the system temp dir, unique per call.
inline std::filesystem::path scratch_dir(const std::string& tag) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("lsph-tests-" + tag + "-" + std::to_string(++counter) + "-" +
                std::to_string(static_cast<unsigned>(::getpid())));
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace fixtures
