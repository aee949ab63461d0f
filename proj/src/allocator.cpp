#include "hilbert_alloc/allocator.hpp"

#include "hilbert_alloc/error.hpp"

#include <algorithm>
#include <map>

namespace hilbert_alloc {

std::string to_string(Mode mode)
{
    return mode == Mode::city ? "city" : "town";
}

Mode parse_mode(std::string_view text)
{
    if (text == "city") {
        return Mode::city;
    }
    if (text == "town") {
        return Mode::town;
    }
    throw Error("unknown mode '" + std::string(text) + "'");
}

Allocator::Allocator(Mode mode, int level) : mode_(mode), order_(level) {}

Allocator Allocator::city(int resolution)
{
    return Allocator(Mode::city, resolution);
}

Allocator Allocator::town(int grid_level)
{
    return Allocator(Mode::town, grid_level);
}

std::int64_t Allocator::slots_for(const AllocationRequest& request, bool round_up, ExactRational& padding) const
{
    padding = ExactRational(0);
    if (request.size.sign() <= 0) {
        throw Error("nonpositive size");
    }
    if (mode_ == Mode::town) {
        if (!request.size.is_integer()) {
            throw Error("size not representable");
        }
        if (request.size > ExactRational(slots() - cursor_)) {
            throw Error("capacity exceeded");
        }
        return request.size.numerator().get_si();
    }
    const ExactRational pixels_left(slots() - cursor_);
    if (request.size * ExactRational(slots()) > pixels_left) {
        throw Error("capacity exceeded");
    }
    const ExactRational pixels = request.size * ExactRational(slots());
    if (pixels.is_integer()) {
        return pixels.numerator().get_si();
    }
    if (!round_up) {
        throw Error("size not representable");
    }
    mpz_class up;
    mpz_cdiv_q(up.get_mpz_t(), pixels.raw().get_num_mpz_t(), pixels.raw().get_den_mpz_t());
    padding = ExactRational(up) / ExactRational(slots()) - request.size;
    return up.get_si();
}

const Region& Allocator::allocate_next(const AllocationRequest& request, bool round_up)
{
    ExactRational padding;
    const std::int64_t count = slots_for(request, round_up, padding);
    if (count > slots() - cursor_) {
        throw Error("capacity exceeded");
    }
    Region region;
    region.id = request.id;
    region.start = cursor_;
    region.end = cursor_ + count;
    region.level = order_.level();
    region.cells = order_.window(region.start, count);
    region.padding = padding;
    if (mode_ == Mode::city) {
        const ExactRational c_pixels = city_total_distance(PixelCity(region.cells));
        region.phi = phi(c_pixels, ExactRational(count));
        // Lengths scale by 2^-R, so c scales by 2^-5R.
        const ExactRational unit(mpq_class(mpz_class(1), mpz_class(1) << (5 * order_.level())));
        region.total_distance = c_pixels * unit;
    } else {
        region.total_distance = town_total_distance(Town(region.cells));
        region.phi = phi(region.total_distance, ExactRational(count));
    }
    cursor_ = region.end;
    regions_.push_back(std::move(region));
    return regions_.back();
}

std::int64_t fractional_pixel_count(const Region& region, int coarse_level)
{
    if (coarse_level < 0 || coarse_level > region.level) {
        throw Error("invalid level");
    }
    const int shift = region.level - coarse_level;
    const std::int64_t full = std::int64_t{1} << (2 * shift);
    std::map<Point, std::int64_t> touched;
    for (const Point& p : region.cells) {
        ++touched[{p.x >> shift, p.y >> shift}];
    }
    return std::count_if(touched.begin(), touched.end(), [full](const auto& kv) { return kv.second < full; });
}

double max_phi(const Allocator& state)
{
    if (state.regions().empty()) {
        throw Error("empty allocation");
    }
    double best = 0.0;
    for (const Region& r : state.regions()) {
        best = std::max(best, r.phi);
    }
    return best;
}

int auto_resolution(std::span<const ExactRational> sizes, int max_level)
{
    int resolution = 0;
    for (const ExactRational& s : sizes) {
        if (s.sign() <= 0) {
            throw Error("nonpositive size");
        }
        mpz_class den = s.denominator();
        int twos = 0;
        while (mpz_even_p(den.get_mpz_t()) != 0) {
            den /= 2;
            ++twos;
        }
        if (den != 1) {
            throw Error("size not representable");
        }
        resolution = std::max(resolution, (twos + 1) / 2);
    }
    if (resolution > max_level) {
        throw Error("size not representable");
    }
    return resolution;
}

} // namespace hilbert_alloc
