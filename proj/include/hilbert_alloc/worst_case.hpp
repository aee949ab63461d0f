#pragma once

#include "hilbert_alloc/allocator.hpp"
#include "hilbert_alloc/geometry.hpp"
#include "hilbert_alloc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbert_alloc {

struct OptimalTable;

/// Lower bound on phi of any city.
inline constexpr double city_phi_lower_bound = 0.650245;
inline constexpr int default_max_worst_n = 65;

/// Largest-distance window of n cells along the curve.
struct WorstShapeRecord {
    int n = 0;
    Mode mode = Mode::city;
    int level = 0;
    ExactRational total_distance;
    double phi = 0.0;
    /// Canonical form of the witness window.
    std::vector<Point> witness;
    std::int64_t witness_start = 0;
};

/// Slides every window of n cells over the level-`level` curve (default:
/// min_refinement_level(n)) and keeps the one with maximal total distance.
/// Ties go to the lexicographically smallest canonical shape.
/// Throws Error("n out of range") unless 1 <= n <= max_n.
WorstShapeRecord enumerate_worst(int n, Mode mode, std::optional<int> level = std::nullopt,
                                 int max_n = default_max_worst_n);

/// Worst shapes for n = 1..n_max, keyed by n.
class WorstCaseTable {
public:
    WorstCaseTable() = default;
    WorstCaseTable(Mode mode, std::vector<WorstShapeRecord> records);

    /// Enumerates n = 1..n_max using up to `threads` worker threads.
    static WorstCaseTable compute(Mode mode, int n_max, unsigned threads = 1);

    Mode mode() const { return mode_; }
    int n_max() const { return n_max_; }
    bool has(int n) const { return n >= 1 && n <= n_max_; }
    /// Throws Error("missing worst-shape data").
    const WorstShapeRecord& at(int n) const;

    /// phi(W_{l+2}) * ((l+2)/l)^(5/2).
    double blowup_phi(int l) const;

    /// max of phi(W_i), 1 <= i <= 4^k, and blowup_phi(l), 4^k <= l <= 4^(k+1) - 1.
    /// Throws Error("insufficient enumeration depth") unless n_max >= 4^(k+1) + 1.
    double upper_bound(int k) const;
    /// The l attaining the blow-up part of upper_bound(k).
    int upper_bound_argmax(int k) const;

private:
    Mode mode_ = Mode::city;
    int n_max_ = 0;
    std::vector<WorstShapeRecord> records_;
};

/// (2/3)(2/n + 5/n^1.5): bound on 2 Lambda(n) / n^2.5 for optimal n-towns.
double lambda_tail_bound(double n);

/// Variant that maximizes both profile sums jointly,
/// Lambda <= (1/6)(n(2 sqrt n + 5) + n^2 / (2 sqrt n + 5)). `evaluated` is
/// the formula itself; `printed` is the constant 0.0137373 quoted for
/// n = 81 alongside it, which the formula does not reproduce.
struct RefinedTailBound {
    double evaluated = 0.0;
    double printed = 0.0;
    double evaluated_factor = 0.0;
    double printed_factor = 0.0;
};
RefinedTailBound refined_lambda_tail_bound(double n, double town_upper);

/// phi(W_14) / 0.650245: no better factor is provable for Hilbert strategies.
double hilbert_threshold(const WorstCaseTable& city_table);

struct BoundRow {
    int n = 0;
    ExactRational total_distance;
    double phi = 0.0;
    std::optional<double> blowup;
    std::optional<double> rho;
};

struct BoundReport {
    Mode mode = Mode::city;
    int level = 2;
    double upper = 0.0;
    double lower = 0.0;
    double factor = 0.0;
    std::string binding;
    std::vector<BoundRow> rows;

    /// Town only: largest of each branch.
    std::optional<double> small_n_factor;      // rho(n), 2 <= n <= 64
    std::optional<double> tabulated_factor;    // upper / phi_opt(n), 65 <= n <= 80
    std::optional<double> asymptotic_factor;   // upper / (psi - tail(81)), n >= 81
    /// Factor obtained from the conjectured phi >= psi - 0.410 / n at n = 81.
    /// Not a proven bound.
    std::optional<double> conjectured_factor;
};

/// Competitive factor of the strategy at analysis level k, with the
/// per-n breakdown. Town mode needs the optimal-value tables.
BoundReport competitive_factor(const WorstCaseTable& table, const OptimalTable* optimal, int k = 2);

} // namespace hilbert_alloc
