#pragma once

#include "hilbert_alloc/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hilbert_alloc {

inline constexpr int default_max_level = 12;
/// Levels up to this one keep explicit forward/inverse tables.
inline constexpr int max_materialized_level = 8;

/// Moves over {u, r, d, l} produced by the rewriting
///   y_1 = urd,  y_r = h4(y_{r-1}) u y_{r-1} r y_{r-1} d h5(y_{r-1}),
/// where h4 maps u->r, d->l, r->u, l->d and h5 maps u->l, d->r, r->d, l->u.
/// Length is 4^r - 1. Throws Error("invalid level") for r < 1 and
/// Error("level too large") above max_level.
std::string generate_moves(int level, int max_level = default_max_level);

/// Same string, produced by the A/B/C/D block grammar
///   A -> CAAB, B -> DBBA, C -> ACCD, D -> BDDC
/// with A=urd, B=ldr, C=rul, D=dlu and connector moves taken from the
/// parent block's own shape. Independent route used to cross-check
/// generate_moves.
std::string generate_moves_by_blocks(int level, int max_level = default_max_level);

/// Cell ordering of the 2^r x 2^r grid induced by the move string, mirrored
/// vertically so that index 0 is the upper-left cell (0, 2^r - 1).
/// Consecutive indices are edge neighbours, and every aligned run of 4^t
/// indices starting at a multiple of 4^t fills one aligned 2^t x 2^t block.
class CurveOrder {
public:
    explicit CurveOrder(int level, int max_level = default_max_level);

    int level() const { return level_; }
    std::int64_t side() const { return std::int64_t{1} << level_; }
    std::int64_t size() const { return side() * side(); }

    /// Cell of curve index k. Throws Error("index out of range").
    Point cell(std::int64_t index) const;
    /// Curve index of a cell. Throws Error("cell out of range").
    std::int64_t index(Point cell) const;

    /// Cells of [start, start + count) in curve order.
    std::vector<Point> window(std::int64_t start, std::int64_t count) const;

    bool materialized() const { return !forward_.empty(); }

private:
    Point compute_cell(std::int64_t index) const;
    std::int64_t compute_index(Point cell) const;

    int level_;
    std::vector<Point> forward_;
    std::vector<std::int64_t> inverse_;
};

CurveOrder build_order(int level, int max_level = default_max_level);

/// Number of distinct aligned 2^t x 2^t blocks touched by the window
/// [start, start + count). Throws Error("window overflow").
std::int64_t subsquare_span(const CurveOrder& order, std::int64_t start, std::int64_t count, int coarse_levels);

/// ceil(log2(ceil(n/4) + 1)) + 2: the smallest level whose curve contains
/// every window shape of n cells.
int min_refinement_level(std::int64_t n);

} // namespace hilbert_alloc
