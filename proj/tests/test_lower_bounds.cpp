#include "hilbert_alloc/lower_bounds.hpp"

#include <doctest.h>

#include <cmath>

using namespace hilbert_alloc;

namespace {

bool has_phi(const ScenarioReport& r, double value)
{
    for (const auto& b : r.branches) {
        for (const auto& [label, phi] : b.details) {
            if (std::abs(phi - value) <= 1e-6) {
                return true;
            }
        }
        if (std::abs(b.achieved_phi - value) <= 1e-6 || std::abs(b.optimal_phi - value) <= 1e-6) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("discrete 3x3 scenario")
{
    const auto r = discrete_3x3_scenario();
    CHECK(r.id == "discrete-3x3");
    CHECK(r.branches.size() == 4);
    for (double v : {0.715541, 0.625, 0.572433, 0.5}) {
        CHECK(has_phi(r, v));
    }
    CHECK(r.ratio == doctest::Approx(1.144866).epsilon(1e-6));
    CHECK(r.ratio == doctest::Approx(64.0 / std::pow(5.0, 2.5)));
    for (const auto& b : r.branches) {
        CHECK(b.ratio == doctest::Approx(b.achieved_phi / b.optimal_phi));
    }
    REQUIRE(r.exhaustive_ratio);
    CHECK(*r.exhaustive_ratio == doctest::Approx(1.125));
    CHECK(r.min_non_square_distance == 9);
    CHECK(r.exhaustive_witness.size() == 4);
    CHECK(r.exhaustive_witness_distance == 9);
}

TEST_CASE("continuous half scenario")
{
    const auto r = continuous_half_scenario();
    CHECK(r.id == "continuous-half");
    CHECK(has_phi(r, 0.895431));
    CHECK(r.ratio == doctest::Approx(1.06066).epsilon(1e-6));
    CHECK(r.ratio == doctest::Approx(0.75 * std::sqrt(2.0)));
    CHECK(!r.exhaustive_ratio);
}
