#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "lsph/errors.hpp"
#include "lsph/levelset.hpp"
#include "lsph/mask.hpp"

#include "fixtures.hpp"

using lsph::BinaryMask;
using lsph::ScalarField;

namespace {

/// Brute-force nearest-foreground-vertex distance, the independent reference
/// for the two-pass transform.
double nearest_site_distance(const BinaryMask& mask, int row, int col, double speed) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < mask.height(); ++r)
        for (int c = 0; c < mask.width(); ++c)
            if (mask.at(r, c)) {
                double dr = r - row, dc = c - col;
                best = std::min(best, std::sqrt(dr * dr + dc * dc));
            }
    return best / speed;
}

BinaryMask random_mask(std::mt19937_64& gen, int max_side) {
    int width = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_side));
    int height = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_side));
    BinaryMask mask(width, height);
    int density = 2 + static_cast<int>(gen() % 60);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            mask.set(r, c, static_cast<int>(gen() % 100) < density);
    if (mask.empty_foreground())
        mask.set(static_cast<int>(gen() % static_cast<std::uint64_t>(height)),
                 static_cast<int>(gen() % static_cast<std::uint64_t>(width)), true);
    return mask;
}

} // namespace

TEST_CASE("arrival time of a single seed") {
    BinaryMask mask(3, 3);
    mask.set(0, 0, true);
    ScalarField field = lsph::arrival_time_field(mask, 1.0);
    REQUIRE(field.at(0, 0) == 0.0);
    REQUIRE(field.at(0, 1) == 1.0);
    REQUIRE(field.at(1, 1) == std::sqrt(2.0));
    REQUIRE(field.at(2, 2) == std::sqrt(8.0));
}

TEST_CASE("all-foreground mask gives the zero field") {
    ScalarField field = lsph::arrival_time_field(BinaryMask(4, 3, true), 1.0);
    for (double v : field.values)
        REQUIRE(v == 0.0);
    REQUIRE(field.max_value() == 0.0);
}

TEST_CASE("speed divides the arrival time") {
    BinaryMask mask(5, 1);
    mask.set(0, 0, true);
    mask.set(0, 4, true);
    ScalarField field = lsph::arrival_time_field(mask, 2.0);
    REQUIRE(field.at(0, 2) == 1.0); // distance 2 at speed 2
}

TEST_CASE("arrival time rejects bad inputs") {
    REQUIRE_THROWS_AS(lsph::arrival_time_field(BinaryMask(3, 3), 1.0),
                      lsph::empty_manifold_error);
    BinaryMask seed(2, 2);
    seed.set(0, 0, true);
    REQUIRE_THROWS_AS(lsph::arrival_time_field(seed, 0.0), lsph::input_error);
    REQUIRE_THROWS_AS(lsph::arrival_time_field(seed, -1.0), lsph::input_error);
}

TEST_CASE("transform equals brute-force nearest-site distance") {
    std::mt19937_64 gen(918273);
    for (int trial = 0; trial < 8; ++trial) {
        BinaryMask mask = random_mask(gen, 64);
        ScalarField field = lsph::arrival_time_field(mask, 1.0);
        for (int r = 0; r < mask.height(); ++r)
            for (int c = 0; c < mask.width(); ++c) {
                double expected = nearest_site_distance(mask, r, c, 1.0);
                REQUIRE(std::abs(field.at(r, c) - expected) <= 1e-9);
            }
    }
}

TEST_CASE("speed scaling is exact, not approximate") {
    std::mt19937_64 gen(5550123);
    for (int trial = 0; trial < 5; ++trial) {
        BinaryMask mask = random_mask(gen, 32);
        ScalarField unit = lsph::arrival_time_field(mask, 1.0);
        for (double speed : {0.5, 2.0}) {
            ScalarField scaled = lsph::arrival_time_field(mask, speed);
            for (std::size_t i = 0; i < unit.values.size(); ++i)
                REQUIRE(scaled.values[i] == unit.values[i] / speed); // bitwise equality
        }
    }
}

TEST_CASE("field invariants: nonnegative, zero somewhere, 1-Lipschitz") {
    std::mt19937_64 gen(77);
    BinaryMask mask = random_mask(gen, 24);
    double speed = 2.0;
    ScalarField field = lsph::arrival_time_field(mask, speed);
    bool has_zero = false;
    for (double v : field.values) {
        REQUIRE(v >= 0.0);
        REQUIRE(std::isfinite(v));
        if (v == 0.0) has_zero = true;
    }
    REQUIRE(has_zero);
    // Lipschitz along grid edges implies it for all pairs.
    for (int r = 0; r < field.height; ++r)
        for (int c = 0; c < field.width; ++c) {
            if (c + 1 < field.width)
                REQUIRE(std::abs(field.at(r, c) - field.at(r, c + 1)) <= 1.0 / speed + 1e-12);
            if (r + 1 < field.height)
                REQUIRE(std::abs(field.at(r, c) - field.at(r + 1, c)) <= 1.0 / speed + 1e-12);
        }
}

TEST_CASE("sublevel_manifold thresholds the field") {
    BinaryMask mask(5, 5);
    mask.set(2, 2, true);
    ScalarField field = lsph::arrival_time_field(mask, 1.0);

    SECTION("t = 0 reproduces the original foreground") {
        REQUIRE(lsph::sublevel_manifold(field, 0.0) == mask);
    }

    SECTION("t = 1 adds exactly the four axis neighbors") {
        BinaryMask grown = lsph::sublevel_manifold(field, 1.0);
        REQUIRE(grown.foreground_count() == 5);
        REQUIRE(grown.at(2, 2));
        REQUIRE(grown.at(1, 2));
        REQUIRE(grown.at(3, 2));
        REQUIRE(grown.at(2, 1));
        REQUIRE(grown.at(2, 3));
        REQUIRE_FALSE(grown.at(1, 1)); // sqrt(2) > 1
    }

    SECTION("t >= max fills the grid") {
        BinaryMask full = lsph::sublevel_manifold(field, field.max_value());
        REQUIRE(full.foreground_count() == 25);
    }

    SECTION("negative t is rejected") {
        REQUIRE_THROWS_AS(lsph::sublevel_manifold(field, -0.5), lsph::input_error);
    }
}

TEST_CASE("sublevel manifolds are nested") {
    std::mt19937_64 gen(31337);
    BinaryMask mask = random_mask(gen, 20);
    ScalarField field = lsph::arrival_time_field(mask, 1.0);
    double max = field.max_value();
    BinaryMask previous = lsph::sublevel_manifold(field, 0.0);
    for (int step = 1; step <= 10; ++step) {
        BinaryMask current = lsph::sublevel_manifold(field, max * step / 10.0);
        for (int r = 0; r < mask.height(); ++r)
            for (int c = 0; c < mask.width(); ++c)
                if (previous.at(r, c))
                    REQUIRE(current.at(r, c));
        previous = current;
    }
}
