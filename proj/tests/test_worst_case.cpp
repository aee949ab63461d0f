#include "hilbert_alloc/error.hpp"
#include "hilbert_alloc/hilbert.hpp"
#include "hilbert_alloc/oracle.hpp"
#include "hilbert_alloc/worst_case.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace hilbert_alloc;

namespace {

const WorstCaseTable& city_table()
{
    static const WorstCaseTable t = WorstCaseTable::compute(Mode::city, 65, 4);
    return t;
}

const WorstCaseTable& town_table()
{
    static const WorstCaseTable t = WorstCaseTable::compute(Mode::town, 65, 4);
    return t;
}

} // namespace

TEST_CASE("worst shapes for small n")
{
    const auto w2 = enumerate_worst(2, Mode::city);
    CHECK(w2.total_distance == ExactRational(2));
    CHECK(w2.phi == doctest::Approx(0.7071).epsilon(1e-4));

    const auto w14 = enumerate_worst(14, Mode::city);
    CHECK(w14.total_distance == ExactRational(322));
    CHECK(w14.phi == doctest::Approx(0.8781).epsilon(1e-4));

    CHECK(enumerate_worst(16, Mode::town).total_distance == ExactRational(410));
    CHECK(enumerate_worst(16, Mode::city).total_distance == ExactRational::parse("1304/3"));
}

TEST_CASE("worst witness is canonical and matches its distance")
{
    for (int n : {5, 14, 23, 56}) {
        const auto rec = enumerate_worst(n, Mode::town);
        CHECK(rec.witness.size() == static_cast<std::size_t>(n));
        const Town shape(rec.witness);
        const Town canon = canonicalize(shape);
        CHECK(std::vector<Point>(canon.points().begin(), canon.points().end()) == rec.witness);
        CHECK(is_edge_connected(rec.witness));
        CHECK(ExactRational(oracle::naive_town_distance(rec.witness)) == rec.total_distance);

        const auto city = enumerate_worst(n, Mode::city);
        CHECK(oracle::naive_city_distance(city.witness) == city.total_distance);
    }
    // The same window maximizes both measures for these sizes.
    CHECK(enumerate_worst(14, Mode::city).witness == enumerate_worst(14, Mode::town).witness);
    CHECK(enumerate_worst(56, Mode::city).witness == enumerate_worst(56, Mode::town).witness);
}

TEST_CASE("worst distance does not change with a finer curve")
{
    for (int n = 1; n <= 20; ++n) {
        const int r = min_refinement_level(n);
        const auto base = enumerate_worst(n, Mode::city, r);
        const auto finer = enumerate_worst(n, Mode::city, r + 1);
        CHECK(base.total_distance == finer.total_distance);
    }
}

TEST_CASE("worst window dominates every window")
{
    for (int n : {3, 7, 12, 17}) {
        const auto worst = enumerate_worst(n, Mode::town);
        const CurveOrder order(min_refinement_level(n));
        for (std::int64_t s = 0; s + n <= order.size(); ++s) {
            const auto cells = order.window(s, n);
            REQUIRE(ExactRational(oracle::naive_town_distance(cells)) <= worst.total_distance);
        }
    }
}

TEST_CASE("enumeration errors")
{
    CHECK_THROWS_WITH_AS(enumerate_worst(0, Mode::city), "n out of range", Error);
    CHECK_THROWS_WITH_AS(enumerate_worst(66, Mode::city), "n out of range", Error);
    CHECK_NOTHROW(enumerate_worst(70, Mode::town, std::nullopt, 80));

    const WorstCaseTable small = WorstCaseTable::compute(Mode::city, 10);
    CHECK_THROWS_WITH_AS(small.at(11), "missing worst-shape data", Error);
    CHECK_THROWS_WITH_AS(small.upper_bound(2), "insufficient enumeration depth", Error);
}

TEST_CASE("blow-up bounds")
{
    const auto& city = city_table();
    const auto& town = town_table();
    CHECK(city.blowup_phi(16) == doctest::Approx(1.1764).epsilon(5e-5));
    CHECK(town.blowup_phi(16) == doctest::Approx(1.1230).epsilon(5e-5));
    CHECK(city.blowup_phi(63) == doctest::Approx(0.9175).epsilon(5e-5));
    CHECK(city.upper_bound(2) == doctest::Approx(1.1764).epsilon(5e-5));
    CHECK(city.upper_bound_argmax(2) == 16);
    CHECK(town.upper_bound(2) == doctest::Approx(1.1230).epsilon(5e-5));
    CHECK(city.upper_bound(1) == doctest::Approx(2.375).epsilon(1e-9));

    // Phi(W_l) >= phi(W_l) wherever both exist.
    for (int l = 1; l + 2 <= 65; ++l) {
        CHECK(city.blowup_phi(l) >= city.at(l).phi);
        CHECK(town.blowup_phi(l) >= town.at(l).phi);
    }
    // Worst distances grow with n.
    for (int n = 2; n <= 65; ++n) {
        CHECK(city.at(n).total_distance > city.at(n - 1).total_distance);
    }
}

TEST_CASE("lambda tail bound")
{
    CHECK(lambda_tail_bound(81) == doctest::Approx(0.0210333).epsilon(1e-6));
    CHECK(0.650245 - lambda_tail_bound(81) == doctest::Approx(0.6292).epsilon(1e-4));
    for (int n = 2; n < 500; ++n) {
        CHECK(lambda_tail_bound(n + 1) < lambda_tail_bound(n));
    }
    const auto refined = refined_lambda_tail_bound(81, town_table().upper_bound(2));
    CHECK(refined.printed == doctest::Approx(0.0137373));
    CHECK(refined.evaluated < refined.printed);
}

TEST_CASE("competitive factors")
{
    const OptimalTable opt = OptimalTable::load(OptimalTable::default_dir());
    const auto city = competitive_factor(city_table(), nullptr, 2);
    CHECK(city.factor == doctest::Approx(1.8092).epsilon(5e-4));
    CHECK(city.binding == "Phi(W_16)");

    const auto town = competitive_factor(town_table(), &opt, 2);
    CHECK(town.upper == doctest::Approx(1.1230).epsilon(5e-5));
    CHECK(town.lower == doctest::Approx(0.6292).epsilon(1e-4));
    CHECK(town.factor == doctest::Approx(1.7848).epsilon(5e-4));
    CHECK(town.binding == "n>=81");
    REQUIRE(town.small_n_factor);
    REQUIRE(town.tabulated_factor);
    CHECK(*town.small_n_factor < town.factor);
    CHECK(*town.tabulated_factor < town.factor);
    REQUIRE(town.conjectured_factor);
    CHECK(*town.conjectured_factor == doctest::Approx(1.7406).epsilon(1e-3));

    CHECK(hilbert_threshold(city_table()) == doctest::Approx(1.3504).epsilon(1e-3));

    const auto level1 = competitive_factor(city_table(), nullptr, 1);
    CHECK(level1.factor == doctest::Approx(3.6525).epsilon(1e-3));
}
