#pragma once

#include "hilbert_alloc/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hilbert_alloc {

/// Integer grid coordinate. For a town this is a point; for a pixel city it
/// names the unit square [x, x+1] x [y, y+1].
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

struct TownTag {};
struct CityTag {};

/// A finite set of grid points (town) or unit cells (pixel city). Points are
/// kept sorted and unique, so equality is set equality.
template <class Tag>
class GridShape {
public:
    GridShape() = default;
    /// Throws Error("duplicate point") if a point repeats.
    explicit GridShape(std::vector<Point> points);

    std::span<const Point> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// Shift so that min x = min y = 0.
    GridShape translated_to_origin() const;

    friend bool operator==(const GridShape&, const GridShape&) = default;
    friend auto operator<=>(const GridShape& a, const GridShape& b) { return a.points_ <=> b.points_; }

private:
    std::vector<Point> points_;
};

using Town = GridShape<TownTag>;
using PixelCity = GridShape<CityTag>;

/// The town made of the cell centers of a pixel city (same coordinates; the
/// half-cell offset is a translation and does not affect distances).
Town cell_centers(const PixelCity& city);
/// Each town point becomes a unit cell.
PixelCity as_pixels(const Town& town);

enum class Axis { column, row };

/// Occupancy counts per column (Axis::column) or per row, starting at
/// `origin`. Leading and trailing counts are nonzero for a nonempty shape.
struct Profile {
    Axis axis = Axis::column;
    std::int64_t origin = 0;
    std::vector<std::int64_t> counts;

    std::int64_t total() const;
    std::int64_t sum_of_squares() const;
};

Profile profile_of(std::span<const Point> points, Axis axis);

/// Piecewise-constant non-negative density on [breakpoints.front(), breakpoints.back()].
/// `values[i]` holds on [breakpoints[i], breakpoints[i+1]).
template <class Scalar>
struct StepFunction {
    std::vector<Scalar> breakpoints;
    std::vector<Scalar> values;

    /// Throws Error("malformed step function").
    void validate() const;
    Scalar mass() const;
};

/// Sum of pairwise L1 distances over unordered pairs of the 1-D marginal
/// distribution given by a profile. Linear in the profile length.
mpz_class profile_pair_distance(const Profile& profile);

/// c(T): sum of L1 distances over unordered pairs of points.
ExactRational town_total_distance(const Town& town);

/// Lambda = (sum c_i^2 + sum r_j^2) / 6 over the column and row profiles.
/// This is the exact gap between a pixel city and the town of its centers.
ExactRational lambda_correction(const PixelCity& city);

/// c(C) of the union of unit squares, computed as town distance of the cell
/// centers plus the Lambda correction.
ExactRational city_total_distance(const PixelCity& city);

/// Same quantity evaluated independently from the column/row marginal step
/// functions. Used to cross-check city_total_distance.
ExactRational city_total_distance_by_marginals(const PixelCity& city);

/// phi = 2c / n^(5/2). Throws Error("invalid size") for n <= 0.
double phi(const ExactRational& total, const ExactRational& n);
double phi(double total, double n);

/// Integral of |x - u| f(x) f(u) over the square of the support.
/// Closed form per pair of steps; exact for ExactRational.
template <class Scalar>
Scalar marginal_integral(const StepFunction<Scalar>& f);

/// phi of a rectilinear shape given its x and y marginals and its area.
/// Throws Error("inconsistent marginals") when the masses disagree.
double rectilinear_phi(const StepFunction<double>& fx, const StepFunction<double>& fy, double area);
double rectilinear_phi(const StepFunction<ExactRational>& fx, const StepFunction<ExactRational>& fy,
                       const ExactRational& area);

/// Lexicographically smallest image of the shape over the 8 symmetries of
/// the square, translated to the origin.
template <class Tag>
GridShape<Tag> canonicalize(const GridShape<Tag>& shape);

/// All 8 dihedral images (not translated).
template <class Tag>
std::vector<GridShape<Tag>> dihedral_images(const GridShape<Tag>& shape);

/// True when every cell can be reached from every other through edge neighbours.
bool is_edge_connected(std::span<const Point> points);

} // namespace hilbert_alloc
