#include "hilbert_alloc/allocator.hpp"
#include "hilbert_alloc/error.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hilbert_alloc;

TEST_CASE("a single full request takes the whole square")
{
    Allocator a = Allocator::city(0);
    const Region& r = a.allocate_next({"all", ExactRational(1)});
    CHECK(r.cells.size() == 1);
    CHECK(r.total_distance == ExactRational(1, 3));
    CHECK(r.phi == doctest::Approx(2.0 / 3.0));
    CHECK(max_phi(a) == doctest::Approx(2.0 / 3.0));

    Allocator b = Allocator::city(3);
    b.allocate_next({"all", ExactRational(1)});
    CHECK(b.regions().front().total_distance == ExactRational(1, 3));
    CHECK(max_phi(b) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("four quarters are four squares")
{
    Allocator a = Allocator::city(1);
    for (int i = 0; i < 4; ++i) {
        const Region& r = a.allocate_next({std::to_string(i), ExactRational(1, 4)});
        CHECK(r.phi == doctest::Approx(2.0 / 3.0));
        // A square of side 1/2: c = (1/3) (1/2)^5.
        CHECK(r.total_distance == ExactRational(1, 96));
    }
    CHECK(a.cursor() == 4);
    CHECK_THROWS_WITH_AS(a.allocate_next({"x", ExactRational(1, 4)}), "capacity exceeded", Error);
}

TEST_CASE("town request follows the curve")
{
    Allocator a = Allocator::town(3);
    const Region& r = a.allocate_next({"j", ExactRational(5)});
    const CurveOrder order(3);
    const auto first = order.window(0, 5);
    CHECK(r.cells == first);
    const double expected = 2.0 * static_cast<double>(oracle::naive_town_distance(first)) / std::pow(5.0, 2.5);
    CHECK(r.phi == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("allocation errors")
{
    Allocator a = Allocator::city(1);
    a.allocate_next({"a", ExactRational(1, 4)});
    CHECK_THROWS_WITH_AS(a.allocate_next({"b", ExactRational(7, 8)}), "capacity exceeded", Error);
    CHECK_THROWS_WITH_AS(a.allocate_next({"b", ExactRational(1, 8)}), "size not representable", Error);
    CHECK_THROWS_WITH_AS(a.allocate_next({"b", ExactRational(0)}), "nonpositive size", Error);
    CHECK_THROWS_WITH_AS(a.allocate_next({"b", ExactRational(-1, 4)}), "nonpositive size", Error);
    // A rejected request leaves the state unchanged.
    CHECK(a.cursor() == 1);

    Allocator t = Allocator::town(1);
    CHECK_THROWS_WITH_AS(t.allocate_next({"b", ExactRational(5)}), "capacity exceeded", Error);
    CHECK_THROWS_WITH_AS(t.allocate_next({"b", ExactRational(3, 2)}), "size not representable", Error);
    CHECK_THROWS_WITH_AS(max_phi(t), "empty allocation", Error);
}

TEST_CASE("round up pads to the next pixel multiple")
{
    Allocator a = Allocator::city(1);
    const Region& r = a.allocate_next({"a", ExactRational(1, 3)}, true);
    CHECK(r.length() == 2);
    CHECK(r.padding == ExactRational(1, 6));
}

TEST_CASE("automatic resolution")
{
    const std::vector<ExactRational> sizes{ExactRational(1, 4), ExactRational(1, 8), ExactRational(1, 2)};
    CHECK(auto_resolution(sizes) == 2);
    const std::vector<ExactRational> one{ExactRational(1)};
    CHECK(auto_resolution(one) == 0);
    const std::vector<ExactRational> third{ExactRational(1, 3)};
    CHECK_THROWS_WITH_AS(auto_resolution(third), "size not representable", Error);
}

TEST_CASE("fractional pixels")
{
    Allocator a = Allocator::city(3);
    const Region& aligned = a.allocate_next({"a", ExactRational(16, 64)});
    CHECK(fractional_pixel_count(aligned, 1) == 0);
    CHECK(fractional_pixel_count(aligned, 3) == 0);
    const Region& three = a.allocate_next({"b", ExactRational(3, 64)});
    CHECK(fractional_pixel_count(three, 2) == 1);
    CHECK_THROWS_AS(fractional_pixel_count(three, 4), Error);
}

TEST_CASE("random sequences: partition, connectivity, fractional pixels")
{
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        const int resolution = std::uniform_int_distribution<int>(1, 5)(rng);
        Allocator a = Allocator::city(resolution);
        const std::int64_t slots = a.slots();
        for (std::int64_t pixels : oracle::random_sequence(rng, slots)) {
            a.allocate_next({"r", ExactRational(pixels, slots)});
        }
        std::int64_t expected_start = 0;
        for (const Region& r : a.regions()) {
            REQUIRE(r.start == expected_start);
            REQUIRE(r.end > r.start);
            expected_start = r.end;
            REQUIRE(is_edge_connected(r.cells));
            REQUIRE(r.phi <= 1.1764);
            for (int t = 0; t <= resolution; ++t) {
                REQUIRE(fractional_pixel_count(r, t) <= 2);
            }
        }
        REQUIRE(a.cursor() == expected_start);
    }
}

TEST_CASE("random town sequences stay under the town bound")
{
    std::mt19937_64 rng(777);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int grid_level = std::uniform_int_distribution<int>(2, 6)(rng);
        Allocator a = Allocator::town(grid_level);
        for (std::int64_t points : oracle::random_sequence(rng, a.slots())) {
            const Region& r = a.allocate_next({"t", ExactRational(points)});
            REQUIRE(is_edge_connected(r.cells));
            if (points >= 2) {
                REQUIRE(r.phi <= 1.1230);
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}
