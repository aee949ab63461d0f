#include "hilbert_alloc/error.hpp"
#include "hilbert_alloc/oracle.hpp"
#include "hilbert_alloc/worst_case.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace hilbert_alloc;

TEST_CASE("binomial")
{
    CHECK(binomial(36, 10) == 254186856ULL);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("default boxes")
{
    const auto boxes = default_boxes(4);
    CHECK(std::find(boxes.begin(), boxes.end(), Box{2, 2}) != boxes.end());
    for (const Box& b : boxes) {
        CHECK(b.width <= b.height);
        CHECK(b.width * b.height >= 4);
    }
}

TEST_CASE("brute force small cases")
{
    CHECK(optimal_town_bruteforce(1).total_distance == 0);
    const auto four = optimal_town_bruteforce(4, Box{4, 4});
    CHECK(four.total_distance == 8);
    const auto pts = four.witness.points();
    CHECK(oracle::naive_town_distance({pts.begin(), pts.end()}) == 8);
    CHECK(optimal_town_bruteforce(7, Box{4, 4}).total_distance == 38);
    CHECK(optimal_town_bruteforce(10, Box{5, 4}).total_distance == 96);
}

TEST_CASE("brute force agrees with the embedded table for n <= 8")
{
    const OptimalTable opt = OptimalTable::load(OptimalTable::default_dir());
    for (int n = 1; n <= 8; ++n) {
        CHECK(optimal_town_bruteforce(n).total_distance == opt.town_distance(n));
    }
}

TEST_CASE("guard")
{
    CHECK_THROWS_AS(optimal_town_bruteforce(10, Box{8, 8}), Error);
    const auto r = optimal_town_bruteforce(10);
    CHECK(!r.skipped.empty());
}

TEST_CASE("optimal tables")
{
    const OptimalTable opt = OptimalTable::load(OptimalTable::default_dir());
    CHECK(opt.town_distance(14) == 227);
    CHECK(opt.town_distance(2) == 1);
    for (int n = 65; n <= 80; ++n) {
        const double phi = opt.town_phi(n);
        CHECK(phi >= 0.6436);
        CHECK(phi <= 0.6456);
        // phi_opt(n) = 2k / n^2.5 for an integer k.
        const double k = phi * std::pow(n, 2.5) / 2.0;
        CHECK(std::abs(k - std::round(k)) < 0.5);
    }
    // Worst Hilbert towns are never better than the optimum.
    const WorstCaseTable town = WorstCaseTable::compute(Mode::town, 65, 4);
    const WorstCaseTable city = WorstCaseTable::compute(Mode::city, 65, 4);
    for (int n = 1; n <= 65; ++n) {
        CHECK(town.at(n).total_distance >= ExactRational(opt.town_distance(n)));
        CHECK(city.at(n).total_distance >= opt.city_distance(n));
    }
    CHECK(rho(2, town.at(2).total_distance, opt) == doctest::Approx(1.0));
    CHECK(rho(14, town.at(14).total_distance, opt) == doctest::Approx(301.0 / 227.0).epsilon(1e-4));
    CHECK(rho(56, town.at(56).total_distance, opt) == doctest::Approx(10136.0 / 7556.0).epsilon(1e-4));
    CHECK_THROWS_AS(rho(1, town.at(1).total_distance, opt), Error);
    CHECK_THROWS_AS(rho(65, town.at(65).total_distance, opt), Error);
    CHECK_THROWS_AS(OptimalTable::load("/nonexistent"), Error);
}
