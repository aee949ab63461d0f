#include "hilbert_alloc/hilbert.hpp"

#include "hilbert_alloc/error.hpp"

#include <array>
#include <set>

namespace hilbert_alloc {

namespace {

void check_level(int level, int max_level, int min_level)
{
    if (level < min_level) {
        throw Error("invalid level");
    }
    if (level > max_level) {
        throw Error("level too large");
    }
}

char h4(char m)
{
    switch (m) {
    case 'u': return 'r';
    case 'd': return 'l';
    case 'r': return 'u';
    default: return 'd';
    }
}

char h5(char m)
{
    switch (m) {
    case 'u': return 'l';
    case 'd': return 'r';
    case 'r': return 'd';
    default: return 'u';
    }
}

// Block symbols A, B, C, D as indices 0..3.
constexpr std::array<const char*, 4> block_moves = {"urd", "ldr", "rul", "dlu"};
constexpr std::array<std::array<int, 4>, 4> productions = {{
    {2, 0, 0, 1}, // A -> CAAB
    {3, 1, 1, 0}, // B -> DBBA
    {0, 2, 2, 3}, // C -> ACCD
    {1, 3, 3, 2}, // D -> BDDC
}};
// Quadrant (x, y) visited k-th by each block's level-1 walk, y pointing up.
constexpr std::array<std::array<std::array<int, 2>, 4>, 4> quadrants = {{
    {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}},
    {{{1, 1}, {0, 1}, {0, 0}, {1, 0}}},
    {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}},
    {{{1, 1}, {1, 0}, {0, 0}, {0, 1}}},
}};

void append_block(std::string& out, int symbol, int level)
{
    const char* connect = block_moves[static_cast<std::size_t>(symbol)];
    if (level == 1) {
        out += connect;
        return;
    }
    const auto& children = productions[static_cast<std::size_t>(symbol)];
    for (std::size_t k = 0; k < 4; ++k) {
        append_block(out, children[k], level - 1);
        if (k < 3) {
            out += connect[k];
        }
    }
}

} // namespace

std::string generate_moves(int level, int max_level)
{
    check_level(level, max_level, 1);
    std::string moves = "urd";
    for (int r = 2; r <= level; ++r) {
        std::string next;
        next.reserve(4 * moves.size() + 3);
        for (char m : moves) {
            next += h4(m);
        }
        next += 'u';
        next += moves;
        next += 'r';
        next += moves;
        next += 'd';
        for (char m : moves) {
            next += h5(m);
        }
        moves = std::move(next);
    }
    return moves;
}

std::string generate_moves_by_blocks(int level, int max_level)
{
    check_level(level, max_level, 1);
    std::string out;
    out.reserve((std::size_t{1} << (2 * level)) - 1);
    append_block(out, 0, level);
    return out;
}

CurveOrder::CurveOrder(int level, int max_level) : level_(level)
{
    check_level(level, max_level, 0);
    if (level > max_materialized_level) {
        return;
    }
    const auto n = static_cast<std::size_t>(size());
    forward_.resize(n);
    inverse_.assign(n, -1);
    if (level == 0) {
        forward_[0] = {0, 0};
        inverse_[0] = 0;
        return;
    }
    // Walk the move string from the lower-left cell, then mirror vertically.
    const std::string moves = generate_moves(level, max_level);
    const std::int64_t top = side() - 1;
    Point p{0, 0};
    auto store = [&](std::size_t k) {
        const Point mirrored{p.x, top - p.y};
        if (p.x < 0 || p.y < 0 || p.x > top || p.y > top) {
            throw InvariantViolation("curve walk left the grid");
        }
        forward_[k] = mirrored;
        auto& slot = inverse_[static_cast<std::size_t>(mirrored.y * side() + mirrored.x)];
        if (slot != -1) {
            throw InvariantViolation("curve walk revisited a cell");
        }
        slot = static_cast<std::int64_t>(k);
    };
    store(0);
    for (std::size_t k = 0; k < moves.size(); ++k) {
        switch (moves[k]) {
        case 'u': ++p.y; break;
        case 'd': --p.y; break;
        case 'r': ++p.x; break;
        default: --p.x; break;
        }
        store(k + 1);
    }
}

Point CurveOrder::compute_cell(std::int64_t index) const
{
    Point p{0, 0};
    int symbol = 0;
    for (int l = level_; l >= 1; --l) {
        const auto digit = static_cast<std::size_t>((index >> (2 * (l - 1))) & 3);
        const auto& q = quadrants[static_cast<std::size_t>(symbol)][digit];
        p.x += std::int64_t{q[0]} << (l - 1);
        p.y += std::int64_t{q[1]} << (l - 1);
        symbol = productions[static_cast<std::size_t>(symbol)][digit];
    }
    return {p.x, side() - 1 - p.y};
}

std::int64_t CurveOrder::compute_index(Point cell) const
{
    const std::int64_t y = side() - 1 - cell.y;
    std::int64_t index = 0;
    int symbol = 0;
    for (int l = level_; l >= 1; --l) {
        const int qx = static_cast<int>((cell.x >> (l - 1)) & 1);
        const int qy = static_cast<int>((y >> (l - 1)) & 1);
        std::size_t digit = 0;
        while (quadrants[static_cast<std::size_t>(symbol)][digit][0] != qx ||
               quadrants[static_cast<std::size_t>(symbol)][digit][1] != qy) {
            ++digit;
        }
        index = (index << 2) | static_cast<std::int64_t>(digit);
        symbol = productions[static_cast<std::size_t>(symbol)][digit];
    }
    return index;
}

Point CurveOrder::cell(std::int64_t index) const
{
    if (index < 0 || index >= size()) {
        throw Error("index out of range");
    }
    if (materialized()) {
        return forward_[static_cast<std::size_t>(index)];
    }
    return compute_cell(index);
}

std::int64_t CurveOrder::index(Point cell) const
{
    if (cell.x < 0 || cell.y < 0 || cell.x >= side() || cell.y >= side()) {
        throw Error("cell out of range");
    }
    if (materialized()) {
        return inverse_[static_cast<std::size_t>(cell.y * side() + cell.x)];
    }
    return compute_index(cell);
}

std::vector<Point> CurveOrder::window(std::int64_t start, std::int64_t count) const
{
    if (start < 0 || count < 0 || start + count > size()) {
        throw Error("window overflow");
    }
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = start; k < start + count; ++k) {
        out.push_back(cell(k));
    }
    return out;
}

CurveOrder build_order(int level, int max_level)
{
    return CurveOrder(level, max_level);
}

std::int64_t subsquare_span(const CurveOrder& order, std::int64_t start, std::int64_t count, int coarse_levels)
{
    if (coarse_levels < 1 || coarse_levels > order.level()) {
        throw Error("invalid level");
    }
    if (start < 0 || count < 1 || start + count > order.size()) {
        throw Error("window overflow");
    }
    // Geometric count from the cells themselves, not from index arithmetic.
    std::set<Point> blocks;
    for (const Point& p : order.window(start, count)) {
        blocks.insert({p.x >> coarse_levels, p.y >> coarse_levels});
    }
    return static_cast<std::int64_t>(blocks.size());
}

int min_refinement_level(std::int64_t n)
{
    if (n < 1) {
        throw Error("invalid size");
    }
    const std::int64_t blocks = (n + 3) / 4 + 1;
    int log2_ceil = 0;
    while ((std::int64_t{1} << log2_ceil) < blocks) {
        ++log2_ceil;
    }
    return log2_ceil + 2;
}

} // namespace hilbert_alloc
