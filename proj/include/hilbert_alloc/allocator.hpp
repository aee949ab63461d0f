#pragma once

#include "hilbert_alloc/geometry.hpp"
#include "hilbert_alloc/hilbert.hpp"
#include "hilbert_alloc/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hilbert_alloc {

enum class Mode { city, town };

std::string to_string(Mode mode);
/// "city" or "town"; throws Error otherwise.
Mode parse_mode(std::string_view text);

struct AllocationRequest {
    std::string id;
    /// Area in (0, 1] for city mode, a positive integer point count for town mode.
    ExactRational size;
};

/// A contiguous run [start, end) of curve indices at `level`, plus its shape
/// and metrics. City distances are in unit-square units, town distances in
/// grid steps.
struct Region {
    std::string id;
    std::int64_t start = 0;
    std::int64_t end = 0;
    int level = 0;
    std::vector<Point> cells;
    ExactRational total_distance;
    double phi = 0.0;
    /// Area (city) or points (town) added by --round-up; zero otherwise.
    ExactRational padding;

    std::int64_t length() const { return end - start; }
};

/// Online Hilbert-curve allocator. Each request takes the next run of
/// pixels (city) or points (town) along the curve, starting in the upper
/// left corner. Regions are never released.
class Allocator {
public:
    /// Unit square split into 4^resolution pixels.
    static Allocator city(int resolution);
    /// N x N grid with N = 2^grid_level.
    static Allocator town(int grid_level);

    Mode mode() const { return mode_; }
    int level() const { return order_.level(); }
    std::int64_t cursor() const { return cursor_; }
    /// Curve positions in total (4^R or N^2).
    std::int64_t slots() const { return order_.size(); }
    const std::vector<Region>& regions() const { return regions_; }
    const CurveOrder& order() const { return order_; }

    /// Errors: "nonpositive size", "size not representable",
    /// "capacity exceeded". With round_up a city size is padded to the
    /// next multiple of 4^-R and the padding is recorded on the region.
    const Region& allocate_next(const AllocationRequest& request, bool round_up = false);

private:
    Allocator(Mode mode, int level);

    std::int64_t slots_for(const AllocationRequest& request, bool round_up, ExactRational& padding) const;

    Mode mode_;
    CurveOrder order_;
    std::int64_t cursor_ = 0;
    std::vector<Region> regions_;
};

/// Level-t pixels (blocks of 4^(level - t) cells) that the region touches
/// without covering them completely. Counted from the region's cells.
std::int64_t fractional_pixel_count(const Region& region, int coarse_level);

/// Largest phi over the allocated regions. Throws Error("empty allocation").
double max_phi(const Allocator& state);

/// Smallest R with every size a multiple of 4^-R. Throws
/// Error("size not representable") for non-4-adic sizes, or when R would
/// exceed max_level.
int auto_resolution(std::span<const ExactRational> sizes, int max_level = default_max_level);

} // namespace hilbert_alloc
