#include "hilbert_alloc/svg.hpp"

#include "hilbert_alloc/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace hilbert_alloc {

namespace {

constexpr double canvas = 512.0;

std::uint32_t fnv1a(const std::string& s)
{
    std::uint32_t h = 2166136261U;
    for (unsigned char c : s) {
        h ^= c;
        h *= 16777619U;
    }
    return h;
}

std::string colour_for(const std::string& id)
{
    const std::uint32_t h = fnv1a(id);
    char buf[32];
    std::snprintf(buf, sizeof buf, "hsl(%u,%u%%,%u%%)", h % 360U, 55U + (h >> 9) % 30U, 45U + (h >> 17) % 20U);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v)
{
    return fixed(v, 3);
}

} // namespace

std::string render_allocation_svg(const Allocator& state)
{
    const auto side = static_cast<double>(state.order().side());
    const double cell = canvas / side;
    const double legend_width = 220.0;
    const double height = std::max(canvas, 20.0 * static_cast<double>(state.regions().size() + 1));

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(canvas + legend_width)
       << "\" height=\"" << num(height) << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(canvas) << "\" height=\"" << num(canvas)
       << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (const Region& r : state.regions()) {
        const std::string colour = colour_for(r.id);
        os << "<g fill=\"" << colour << "\" stroke=\"none\">\n";
        for (const Point& p : r.cells) {
            // Grid y points up; SVG y points down.
            const double x = static_cast<double>(p.x) * cell;
            const double y = (side - 1.0 - static_cast<double>(p.y)) * cell;
            os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(cell) << "\" height=\""
               << num(cell) << "\"/>\n";
        }
        os << "</g>\n";
    }
    double y = 20.0;
    for (const Region& r : state.regions()) {
        os << "<rect x=\"" << num(canvas + 10.0) << "\" y=\"" << num(y - 10.0)
           << "\" width=\"12\" height=\"12\" fill=\"" << colour_for(r.id) << "\"/>\n"
           << "<text x=\"" << num(canvas + 28.0) << "\" y=\"" << num(y) << "\" font-family=\"monospace\" font-size=\"12\">"
           << escape(r.id) << " phi=" << fixed(r.phi, 4) << "</text>\n";
        y += 20.0;
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_curve_svg(const CurveOrder& order)
{
    const auto side = static_cast<double>(order.side());
    const double cell = canvas / side;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(canvas) << "\" height=\""
       << num(canvas) << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(canvas) << "\" height=\"" << num(canvas)
       << "\" fill=\"white\" stroke=\"black\"/>\n"
       << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << num(std::max(0.5, cell / 8.0))
       << "\" points=\"";
    for (std::int64_t k = 0; k < order.size(); ++k) {
        const Point p = order.cell(k);
        os << (k ? " " : "") << num((static_cast<double>(p.x) + 0.5) * cell) << ','
           << num((side - 0.5 - static_cast<double>(p.y)) * cell);
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

} // namespace hilbert_alloc
