#pragma once

#include "hilbert_alloc/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbert_alloc {

/// One (player choice, adversary continuation) pair.
struct ScenarioBranch {
    std::string choice;
    std::string response;
    /// Worst phi among the player's regions in this branch.
    double achieved_phi = 0.0;
    /// Best max-phi an offline allocator gets for the same sequence.
    double optimal_phi = 0.0;
    double ratio = 0.0;
    /// Labelled phi values of individual regions, in allocation order.
    std::vector<std::pair<std::string, double>> details;
};

struct ScenarioReport {
    std::string id;
    std::vector<ScenarioBranch> branches;
    /// min over player choices of max over adversary responses of the
    /// branch ratio, over the choices listed in `branches`.
    double ratio = 0.0;

    /// Discrete scenario only: the same min-max taken over every 4-point
    /// first town in the 3x3 grid, against the same two responses.
    std::optional<double> exhaustive_ratio;
    std::vector<Point> exhaustive_witness;
    std::int64_t exhaustive_witness_distance = 0;
    /// Smallest total distance of a non-square first town.
    std::int64_t min_non_square_distance = 0;

    std::vector<std::string> notes;
};

/// 3x3 grid, n1 = 4; the adversary continues with n2 = 5 or with five
/// single points.
ScenarioReport discrete_3x3_scenario();

/// Unit square, n1 = 1/2; the adversary continues with n2 = 1/2 or with
/// many tiny squares.
ScenarioReport continuous_half_scenario();

} // namespace hilbert_alloc
