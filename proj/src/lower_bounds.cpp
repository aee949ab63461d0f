#include "hilbert_alloc/lower_bounds.hpp"

#include "hilbert_alloc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hilbert_alloc {

namespace {

double town_phi(const std::vector<Point>& pts)
{
    if (pts.size() < 2) {
        return 0.0;
    }
    return phi(town_total_distance(Town(pts)), ExactRational(static_cast<std::int64_t>(pts.size())));
}

std::int64_t town_distance(const std::vector<Point>& pts)
{
    return town_total_distance(Town(pts)).numerator().get_si();
}

std::vector<Point> grid3()
{
    std::vector<Point> cells;
    for (std::int64_t y = 0; y < 3; ++y) {
        for (std::int64_t x = 0; x < 3; ++x) {
            cells.push_back({x, y});
        }
    }
    return cells;
}

std::vector<Point> complement(const std::vector<Point>& all, const std::vector<Point>& taken)
{
    std::vector<Point> rest;
    for (const Point& p : all) {
        if (std::find(taken.begin(), taken.end(), p) == taken.end()) {
            rest.push_back(p);
        }
    }
    return rest;
}

std::vector<std::vector<Point>> four_subsets(const std::vector<Point>& cells)
{
    std::vector<std::vector<Point>> out;
    const std::size_t m = cells.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t c = b + 1; c < m; ++c) {
                for (std::size_t d = c + 1; d < m; ++d) {
                    out.push_back({cells[a], cells[b], cells[c], cells[d]});
                }
            }
        }
    }
    return out;
}

bool is_square(const std::vector<Point>& pts)
{
    return canonicalize(Town(pts)) == Town({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

double rectangle_phi(double width, double height)
{
    const StepFunction<double> fx{{0.0, width}, {height}};
    const StepFunction<double> fy{{0.0, height}, {width}};
    return rectilinear_phi(fx, fy, width * height);
}

std::string describe(const std::vector<Point>& pts)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i ? "," : "") << '(' << pts[i].x << ',' << pts[i].y << ')';
    }
    os << '}';
    return os.str();
}

// min over choices of max over responses, grouping branches by choice.
double minimax(const std::vector<ScenarioBranch>& branches)
{
    std::vector<std::pair<std::string, double>> worst;
    for (const auto& b : branches) {
        auto it = std::find_if(worst.begin(), worst.end(), [&](const auto& w) { return w.first == b.choice; });
        if (it == worst.end()) {
            worst.emplace_back(b.choice, b.ratio);
        } else {
            it->second = std::max(it->second, b.ratio);
        }
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : worst) {
        best = std::min(best, w.second);
    }
    return best;
}

} // namespace

ScenarioReport discrete_3x3_scenario()
{
    const std::vector<Point> grid = grid3();
    const auto firsts = four_subsets(grid);

    // Offline optima for the two continuations, by enumeration.
    double opt_four_five = std::numeric_limits<double>::infinity();
    double opt_four_singles = std::numeric_limits<double>::infinity();
    for (const auto& s : firsts) {
        opt_four_five = std::min(opt_four_five, std::max(town_phi(s), town_phi(complement(grid, s))));
        opt_four_singles = std::min(opt_four_singles, town_phi(s));
    }

    ScenarioReport report;
    report.id = "discrete-3x3";

    auto add_choice = [&](const std::string& label, const std::vector<Point>& first) {
        const auto rest = complement(grid, first);
        const double p1 = town_phi(first);
        const double p2 = town_phi(rest);

        ScenarioBranch five;
        five.choice = label;
        five.response = "n2=5";
        five.achieved_phi = std::max(p1, p2);
        five.optimal_phi = opt_four_five;
        five.ratio = five.achieved_phi / five.optimal_phi;
        five.details = {{"first town c=" + std::to_string(town_distance(first)), p1},
                        {"second town c=" + std::to_string(town_distance(rest)), p2}};
        report.branches.push_back(five);

        ScenarioBranch singles;
        singles.choice = label;
        singles.response = "n2..n6=1";
        singles.achieved_phi = p1;
        singles.optimal_phi = opt_four_singles;
        singles.ratio = singles.achieved_phi / singles.optimal_phi;
        singles.details = {{"first town c=" + std::to_string(town_distance(first)), p1},
                           {"offline 2x2 square", opt_four_singles}};
        report.branches.push_back(singles);
    };
    add_choice("2x2 square", {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    add_choice("L-tetromino", {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    report.ratio = minimax(report.branches);

    // Same two responses against every possible first town.
    double exhaustive = std::numeric_limits<double>::infinity();
    std::int64_t min_non_square = std::numeric_limits<std::int64_t>::max();
    for (const auto& s : firsts) {
        const double p1 = town_phi(s);
        const double worst = std::max(std::max(p1, town_phi(complement(grid, s))) / opt_four_five, p1 / opt_four_singles);
        if (worst < exhaustive) {
            exhaustive = worst;
            report.exhaustive_witness = s;
            report.exhaustive_witness_distance = town_distance(s);
        }
        if (!is_square(s)) {
            min_non_square = std::min(min_non_square, town_distance(s));
        }
    }
    report.exhaustive_ratio = exhaustive;
    report.min_non_square_distance = min_non_square;
    if (exhaustive < report.ratio) {
        report.notes.push_back("first town " + describe(report.exhaustive_witness) + " with c=" +
                               std::to_string(report.exhaustive_witness_distance) +
                               " keeps the ratio below the listed branches under both responses");
    }
    return report;
}

ScenarioReport continuous_half_scenario()
{
    const double side = std::sqrt(2.0) / 2.0;
    const double square = rectangle_phi(side, side);
    const double half_rect = rectangle_phi(1.0, 0.5);
    // Unit square minus a corner square of side sqrt(2)/2.
    const StepFunction<double> l_marginal{{0.0, side, 1.0}, {1.0 - side, 1.0}};
    const double l_shape = rectilinear_phi(l_marginal, l_marginal, 0.5);
    // Tiny squares: every region is a square.
    const double tiny = rectangle_phi(1.0, 1.0);

    ScenarioReport report;
    report.id = "continuous-half";
    auto branch = [](std::string choice, std::string response, double achieved, double optimal,
                     std::vector<std::pair<std::string, double>> details) {
        ScenarioBranch b;
        b.choice = std::move(choice);
        b.response = std::move(response);
        b.achieved_phi = achieved;
        b.optimal_phi = optimal;
        b.ratio = achieved / optimal;
        b.details = std::move(details);
        return b;
    };
    report.branches.push_back(branch("square sqrt(2)/2", "n2=1/2", std::max(square, l_shape), half_rect,
                                     {{"first square", square}, {"remaining L-shape", l_shape},
                                      {"offline two 1x1/2 rectangles", half_rect}}));
    report.branches.push_back(branch("square sqrt(2)/2", "n2=n3=...=eps", square, square,
                                     {{"first square", square}, {"offline squares", square}}));
    report.branches.push_back(branch("rectangle 1x1/2", "n2=1/2", half_rect, half_rect,
                                     {{"first rectangle", half_rect}, {"second rectangle", half_rect}}));
    report.branches.push_back(branch("rectangle 1x1/2", "n2=n3=...=eps", std::max(half_rect, tiny), square,
                                     {{"first rectangle", half_rect}, {"offline squares", square}}));
    report.ratio = minimax(report.branches);
    report.notes.push_back("delta > 0 exists; with the player limited to the two listed choices and the adversary to "
                           "the two listed responses the ratio is " +
                           std::to_string(report.ratio) + ", which is not claimed to be tight");
    return report;
}

} // namespace hilbert_alloc
