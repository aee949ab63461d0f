#pragma once

#include "hilbert_alloc/geometry.hpp"
#include "hilbert_alloc/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

namespace hilbert_alloc {

/// Published optimal values: c_town(n) and c_city(n) for n <= 65, and
/// phi of optimal n-towns for 65 <= n <= 80. Loaded from CSV files
/// (`n,value`) in a data directory.
struct OptimalTable {
    std::map<int, std::int64_t> c_town;
    std::map<int, ExactRational> c_city;
    std::map<int, double> phi_opt;

    static constexpr const char* town_file = "c_town_opt.csv";
    static constexpr const char* city_file = "c_city_opt.csv";
    static constexpr const char* phi_file = "phi_town_opt.csv";

    /// Throws Error on a missing file or malformed row.
    static OptimalTable load(const std::filesystem::path& dir);
    /// Directory of the checked-in tables, fixed at build time.
    static std::filesystem::path default_dir();

    bool has_town_distance(int n) const { return c_town.count(n) != 0; }
    std::int64_t town_distance(int n) const;
    const ExactRational& city_distance(int n) const;
    double town_phi(int n) const;
};

/// c(T_n) / c_town(n). Throws Error for n = 1 (optimal distance 0) and for
/// n outside 2..64.
double rho(int n, const ExactRational& worst_town_distance, const OptimalTable& table);

struct Box {
    int width = 0;
    int height = 0;
    friend bool operator==(const Box&, const Box&) = default;
};

inline constexpr std::uint64_t default_search_guard = 10'000'000;

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All w x h with w <= h <= ceil(sqrt n) + 2 and w * h >= n.
std::vector<Box> default_boxes(int n);

struct BruteForceResult {
    std::int64_t total_distance = 0;
    Town witness;
    std::vector<Box> searched;
    /// Default boxes left out because C(w h, n) exceeds the guard.
    std::vector<Box> skipped;
    std::uint64_t nodes = 0;
};

/// Minimum total pairwise L1 distance over n-point subsets of a box, by
/// exhaustive branch-and-bound. With no box given, every default box within
/// the guard is searched. An explicit box over the guard throws
/// Error("search too large; ...").
BruteForceResult optimal_town_bruteforce(int n, std::optional<Box> box = std::nullopt,
                                         std::uint64_t guard = default_search_guard);

} // namespace hilbert_alloc
