#include "hilbert_alloc/geometry.hpp"

#include "hilbert_alloc/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <queue>
#include <set>

namespace hilbert_alloc {

template <class Tag>
GridShape<Tag>::GridShape(std::vector<Point> points) : points_(std::move(points))
{
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
        throw Error("duplicate point");
    }
}

template <class Tag>
GridShape<Tag> GridShape<Tag>::translated_to_origin() const
{
    if (points_.empty()) {
        return *this;
    }
    std::int64_t min_x = points_.front().x;
    std::int64_t min_y = points_.front().y;
    for (const Point& p : points_) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
    }
    std::vector<Point> shifted;
    shifted.reserve(points_.size());
    for (const Point& p : points_) {
        shifted.push_back({p.x - min_x, p.y - min_y});
    }
    return GridShape(std::move(shifted));
}

template class GridShape<TownTag>;
template class GridShape<CityTag>;

Town cell_centers(const PixelCity& city)
{
    return Town({city.points().begin(), city.points().end()});
}

PixelCity as_pixels(const Town& town)
{
    return PixelCity({town.points().begin(), town.points().end()});
}

std::int64_t Profile::total() const
{
    std::int64_t s = 0;
    for (auto c : counts) {
        s += c;
    }
    return s;
}

std::int64_t Profile::sum_of_squares() const
{
    std::int64_t s = 0;
    for (auto c : counts) {
        s += c * c;
    }
    return s;
}

Profile profile_of(std::span<const Point> points, Axis axis)
{
    Profile prof;
    prof.axis = axis;
    if (points.empty()) {
        return prof;
    }
    auto coord = [axis](const Point& p) { return axis == Axis::column ? p.x : p.y; };
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [&](const Point& a, const Point& b) { return coord(a) < coord(b); });
    prof.origin = coord(*lo);
    prof.counts.assign(static_cast<std::size_t>(coord(*hi) - prof.origin + 1), 0);
    for (const Point& p : points) {
        ++prof.counts[static_cast<std::size_t>(coord(p) - prof.origin)];
    }
    return prof;
}

template <class Scalar>
void StepFunction<Scalar>::validate() const
{
    if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size()) {
        throw Error("malformed step function");
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) {
            throw Error("malformed step function");
        }
    }
    for (const Scalar& v : values) {
        if (v < Scalar(0)) {
            throw Error("malformed step function");
        }
    }
}

template <class Scalar>
Scalar StepFunction<Scalar>::mass() const
{
    Scalar m(0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        m += values[i] * (breakpoints[i + 1] - breakpoints[i]);
    }
    return m;
}

template struct StepFunction<double>;
template struct StepFunction<ExactRational>;

mpz_class profile_pair_distance(const Profile& profile)
{
    // sum_j c_j * (j * N_{<j} - S_{<j}), with N and S the running count and
    // running coordinate sum of the earlier columns.
    mpz_class total = 0;
    std::int64_t seen = 0;
    std::int64_t seen_pos = 0;
    for (std::size_t j = 0; j < profile.counts.size(); ++j) {
        const std::int64_t c = profile.counts[j];
        if (c == 0) {
            continue;
        }
        const auto pos = static_cast<std::int64_t>(j);
        const std::int64_t gap = pos * seen - seen_pos;
        mpz_class term(std::to_string(gap), 10);
        term *= static_cast<long>(c);
        total += term;
        seen += c;
        seen_pos += pos * c;
    }
    return total;
}

namespace {

void require_nonempty(std::size_t n)
{
    if (n == 0) {
        throw Error("empty shape");
    }
}

} // namespace

ExactRational town_total_distance(const Town& town)
{
    require_nonempty(town.size());
    const mpz_class dx = profile_pair_distance(profile_of(town.points(), Axis::column));
    const mpz_class dy = profile_pair_distance(profile_of(town.points(), Axis::row));
    return ExactRational(mpz_class(dx + dy));
}

ExactRational lambda_correction(const PixelCity& city)
{
    require_nonempty(city.size());
    const std::int64_t squares = profile_of(city.points(), Axis::column).sum_of_squares() +
                                 profile_of(city.points(), Axis::row).sum_of_squares();
    return ExactRational(squares, 6);
}

ExactRational city_total_distance(const PixelCity& city)
{
    return town_total_distance(cell_centers(city)) + lambda_correction(city);
}

namespace {

StepFunction<ExactRational> marginal_of(const Profile& prof)
{
    StepFunction<ExactRational> f;
    f.breakpoints.reserve(prof.counts.size() + 1);
    for (std::size_t i = 0; i <= prof.counts.size(); ++i) {
        f.breakpoints.emplace_back(prof.origin + static_cast<std::int64_t>(i));
    }
    for (auto c : prof.counts) {
        f.values.emplace_back(c);
    }
    return f;
}

} // namespace

ExactRational city_total_distance_by_marginals(const PixelCity& city)
{
    require_nonempty(city.size());
    const auto fx = marginal_of(profile_of(city.points(), Axis::column));
    const auto fy = marginal_of(profile_of(city.points(), Axis::row));
    return (marginal_integral(fx) + marginal_integral(fy)) / ExactRational(2);
}

double phi(double total, double n)
{
    if (!(n > 0.0)) {
        throw Error("invalid size");
    }
    if (total < 0.0) {
        throw Error("negative total distance");
    }
    return 2.0 * total / std::pow(n, 2.5);
}

double phi(const ExactRational& total, const ExactRational& n)
{
    if (n.sign() <= 0) {
        throw Error("invalid size");
    }
    if (total.sign() < 0) {
        throw Error("negative total distance");
    }
    // 2c / n^2 / sqrt(n) keeps the exact part exact until the final root.
    const ExactRational scaled = ExactRational(2) * total / (n * n);
    return scaled.to_double() / std::sqrt(n.to_double());
}

template <class Scalar>
Scalar marginal_integral(const StepFunction<Scalar>& f)
{
    f.validate();
    // Same step: a^2 L^3 / 3. Distinct steps i < j: a_i a_j L_i L_j (m_j - m_i),
    // counted twice for the ordered pairs. Midpoints are taken relative to the
    // first breakpoint to limit cancellation in floating point.
    const Scalar origin = f.breakpoints.front();
    Scalar diagonal(0);
    Scalar cross(0);
    Scalar mass_before(0);
    Scalar moment_before(0);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Scalar len = f.breakpoints[i + 1] - f.breakpoints[i];
        const Scalar mid = (f.breakpoints[i] - origin) + len / Scalar(2);
        const Scalar mass = f.values[i] * len;
        diagonal += f.values[i] * f.values[i] * len * len * len / Scalar(3);
        cross += mass * (mid * mass_before - moment_before);
        mass_before += mass;
        moment_before += mass * mid;
    }
    return diagonal + Scalar(2) * cross;
}

template double marginal_integral<double>(const StepFunction<double>&);
template ExactRational marginal_integral<ExactRational>(const StepFunction<ExactRational>&);

double rectilinear_phi(const StepFunction<double>& fx, const StepFunction<double>& fy, double area)
{
    fx.validate();
    fy.validate();
    if (!(area > 0.0)) {
        throw Error("invalid size");
    }
    const double tol = 1e-9 * area;
    if (std::abs(fx.mass() - area) > tol || std::abs(fy.mass() - area) > tol) {
        throw Error("inconsistent marginals");
    }
    // c = (Ix + Iy) / 2 and phi = 2c / area^2.5.
    return (marginal_integral(fx) + marginal_integral(fy)) / std::pow(area, 2.5);
}

double rectilinear_phi(const StepFunction<ExactRational>& fx, const StepFunction<ExactRational>& fy,
                       const ExactRational& area)
{
    fx.validate();
    fy.validate();
    if (area.sign() <= 0) {
        throw Error("invalid size");
    }
    if (fx.mass() != area || fy.mass() != area) {
        throw Error("inconsistent marginals");
    }
    const ExactRational total = (marginal_integral(fx) + marginal_integral(fy)) / ExactRational(2);
    return phi(total, area);
}

template <class Tag>
std::vector<GridShape<Tag>> dihedral_images(const GridShape<Tag>& shape)
{
    using Map = Point (*)(Point);
    static constexpr std::array<Map, 8> maps = {
        [](Point p) { return Point{p.x, p.y}; },   [](Point p) { return Point{-p.y, p.x}; },
        [](Point p) { return Point{-p.x, -p.y}; }, [](Point p) { return Point{p.y, -p.x}; },
        [](Point p) { return Point{-p.x, p.y}; },  [](Point p) { return Point{p.x, -p.y}; },
        [](Point p) { return Point{p.y, p.x}; },   [](Point p) { return Point{-p.y, -p.x}; },
    };
    std::vector<GridShape<Tag>> images;
    images.reserve(maps.size());
    for (Map m : maps) {
        std::vector<Point> pts;
        pts.reserve(shape.size());
        for (const Point& p : shape.points()) {
            pts.push_back(m(p));
        }
        images.emplace_back(std::move(pts));
    }
    return images;
}

template <class Tag>
GridShape<Tag> canonicalize(const GridShape<Tag>& shape)
{
    require_nonempty(shape.size());
    std::optional<GridShape<Tag>> best;
    for (const auto& image : dihedral_images(shape)) {
        auto t = image.translated_to_origin();
        if (!best || t < *best) {
            best = std::move(t);
        }
    }
    return *best;
}

template std::vector<Town> dihedral_images(const Town&);
template std::vector<PixelCity> dihedral_images(const PixelCity&);
template Town canonicalize(const Town&);
template PixelCity canonicalize(const PixelCity&);

bool is_edge_connected(std::span<const Point> points)
{
    if (points.empty()) {
        return true;
    }
    const std::set<Point> cells(points.begin(), points.end());
    std::set<Point> seen{points.front()};
    std::queue<Point> frontier;
    frontier.push(points.front());
    while (!frontier.empty()) {
        const Point p = frontier.front();
        frontier.pop();
        for (const Point q : {Point{p.x + 1, p.y}, Point{p.x - 1, p.y}, Point{p.x, p.y + 1}, Point{p.x, p.y - 1}}) {
            if (cells.count(q) != 0 && seen.insert(q).second) {
                frontier.push(q);
            }
        }
    }
    return seen.size() == cells.size();
}

} // namespace hilbert_alloc
