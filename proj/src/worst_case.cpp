#include "hilbert_alloc/worst_case.hpp"

#include "hilbert_alloc/error.hpp"
#include "hilbert_alloc/hilbert.hpp"
#include "hilbert_alloc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace hilbert_alloc {

namespace {

// Column and row occupancy of the current window, with running town
// distance and running sum of squared counts.
class SlidingWindow {
public:
    SlidingWindow(std::int64_t side, std::int64_t reach)
        : side_(side), reach_(reach), cols_(static_cast<std::size_t>(side), 0), rows_(static_cast<std::size_t>(side), 0)
    {
    }

    void add(Point p)
    {
        town_ += spread(cols_, p.x) + spread(rows_, p.y);
        squares_ += 2 * (cols_[idx(p.x)] + rows_[idx(p.y)]) + 2;
        ++cols_[idx(p.x)];
        ++rows_[idx(p.y)];
    }

    void remove(Point p)
    {
        --cols_[idx(p.x)];
        --rows_[idx(p.y)];
        squares_ -= 2 * (cols_[idx(p.x)] + rows_[idx(p.y)]) + 2;
        town_ -= spread(cols_, p.x) + spread(rows_, p.y);
    }

    std::int64_t town_distance() const { return town_; }
    std::int64_t profile_squares() const { return squares_; }

private:
    static std::size_t idx(std::int64_t v) { return static_cast<std::size_t>(v); }

    // Sum of |v - u| over the points in `counts`. Window cells lie within
    // `reach` of each other along either axis.
    std::int64_t spread(const std::vector<std::int64_t>& counts, std::int64_t v) const
    {
        const std::int64_t lo = std::max<std::int64_t>(0, v - reach_);
        const std::int64_t hi = std::min<std::int64_t>(side_ - 1, v + reach_);
        std::int64_t s = 0;
        for (std::int64_t u = lo; u <= hi; ++u) {
            s += counts[idx(u)] * std::abs(v - u);
        }
        return s;
    }

    std::int64_t side_;
    std::int64_t reach_;
    std::vector<std::int64_t> cols_;
    std::vector<std::int64_t> rows_;
    std::int64_t town_ = 0;
    std::int64_t squares_ = 0;
};

} // namespace

WorstShapeRecord enumerate_worst(int n, Mode mode, std::optional<int> level, int max_n)
{
    if (n < 1 || n > max_n) {
        throw Error("n out of range");
    }
    const int r = level.value_or(min_refinement_level(n));
    const CurveOrder order(r);
    if (order.size() < n) {
        throw Error("n out of range");
    }
    // city: 6c = 6 c_town + sum c_i^2 + sum r_j^2, kept integral.
    auto key = [mode](const SlidingWindow& w) {
        return mode == Mode::city ? 6 * w.town_distance() + w.profile_squares() : w.town_distance();
    };

    const std::vector<Point> cells = order.window(0, order.size());
    SlidingWindow window(order.side(), n - 1);
    for (int k = 0; k < n; ++k) {
        window.add(cells[static_cast<std::size_t>(k)]);
    }
    std::int64_t best = key(window);
    std::vector<std::int64_t> ties{0};
    for (std::int64_t start = 1; start + n <= order.size(); ++start) {
        window.remove(cells[static_cast<std::size_t>(start - 1)]);
        window.add(cells[static_cast<std::size_t>(start + n - 1)]);
        const std::int64_t k = key(window);
        if (k > best) {
            best = k;
            ties.assign(1, start);
        } else if (k == best) {
            ties.push_back(start);
        }
    }

    WorstShapeRecord rec;
    rec.n = n;
    rec.mode = mode;
    rec.level = r;
    rec.total_distance = mode == Mode::city ? ExactRational(best, 6) : ExactRational(best);
    rec.phi = phi(rec.total_distance, ExactRational(n));
    std::optional<PixelCity> best_shape;
    for (std::int64_t start : ties) {
        const auto first = cells.begin() + start;
        PixelCity shape = canonicalize(PixelCity({first, first + n}));
        if (!best_shape || shape < *best_shape) {
            best_shape = std::move(shape);
            rec.witness_start = start;
        }
    }
    rec.witness.assign(best_shape->points().begin(), best_shape->points().end());
    return rec;
}

WorstCaseTable::WorstCaseTable(Mode mode, std::vector<WorstShapeRecord> records)
    : mode_(mode), records_(std::move(records))
{
    std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    for (std::size_t i = 0; i < records_.size(); ++i) {
        if (records_[i].n != static_cast<int>(i) + 1 || records_[i].mode != mode) {
            throw Error("worst-case records must cover n = 1..n_max in one mode");
        }
    }
    n_max_ = static_cast<int>(records_.size());
}

WorstCaseTable WorstCaseTable::compute(Mode mode, int n_max, unsigned threads)
{
    if (n_max < 1) {
        throw Error("n out of range");
    }
    std::vector<WorstShapeRecord> records(static_cast<std::size_t>(n_max));
    std::atomic<int> next{1};
    auto work = [&] {
        for (int n = next++; n <= n_max; n = next++) {
            records[static_cast<std::size_t>(n - 1)] = enumerate_worst(n, mode, std::nullopt, n_max);
        }
    };
    threads = std::clamp(threads, 1U, static_cast<unsigned>(n_max));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work);
        }
    }
    return WorstCaseTable(mode, std::move(records));
}

const WorstShapeRecord& WorstCaseTable::at(int n) const
{
    if (!has(n)) {
        throw Error("missing worst-shape data");
    }
    return records_[static_cast<std::size_t>(n - 1)];
}

double WorstCaseTable::blowup_phi(int l) const
{
    if (l < 1) {
        throw Error("invalid size");
    }
    const double ratio = static_cast<double>(l + 2) / static_cast<double>(l);
    return at(l + 2).phi * std::pow(ratio, 2.5);
}

int WorstCaseTable::upper_bound_argmax(int k) const
{
    if (k < 1) {
        throw Error("invalid level");
    }
    const int lo = 1 << (2 * k);
    const int hi = (1 << (2 * (k + 1))) - 1;
    if (n_max_ < hi + 2) {
        throw Error("insufficient enumeration depth");
    }
    int arg = lo;
    for (int l = lo + 1; l <= hi; ++l) {
        if (blowup_phi(l) > blowup_phi(arg)) {
            arg = l;
        }
    }
    return arg;
}

double WorstCaseTable::upper_bound(int k) const
{
    const int arg = upper_bound_argmax(k);
    double best = blowup_phi(arg);
    for (int i = 1; i <= (1 << (2 * k)); ++i) {
        best = std::max(best, at(i).phi);
    }
    return best;
}

double lambda_tail_bound(double n)
{
    if (!(n >= 1.0)) {
        throw Error("invalid size");
    }
    return (2.0 / 3.0) * (2.0 / n + 5.0 / std::pow(n, 1.5));
}

RefinedTailBound refined_lambda_tail_bound(double n, double town_upper)
{
    if (!(n >= 1.0)) {
        throw Error("invalid size");
    }
    const double box = 2.0 * std::sqrt(n) + 5.0;
    const double lambda = (n * box + n * n / box) / 6.0;
    RefinedTailBound out;
    out.evaluated = 2.0 * lambda / std::pow(n, 2.5);
    out.printed = 0.0137373;
    out.evaluated_factor = town_upper / (city_phi_lower_bound - out.evaluated);
    out.printed_factor = town_upper / (city_phi_lower_bound - out.printed);
    return out;
}

double hilbert_threshold(const WorstCaseTable& city_table)
{
    if (city_table.mode() != Mode::city) {
        throw Error("threshold needs the city table");
    }
    return city_table.at(14).phi / city_phi_lower_bound;
}

BoundReport competitive_factor(const WorstCaseTable& table, const OptimalTable* optimal, int k)
{
    BoundReport report;
    report.mode = table.mode();
    report.level = k;
    report.upper = table.upper_bound(k);
    for (int n = 1; n <= table.n_max(); ++n) {
        const auto& rec = table.at(n);
        BoundRow row;
        row.n = n;
        row.total_distance = rec.total_distance;
        row.phi = rec.phi;
        if (table.has(n + 2)) {
            row.blowup = table.blowup_phi(n);
        }
        if (table.mode() == Mode::town && optimal != nullptr && n >= 2 && n <= 64 && optimal->has_town_distance(n)) {
            row.rho = rho(n, rec.total_distance, *optimal);
        }
        report.rows.push_back(std::move(row));
    }

    if (table.mode() == Mode::city) {
        report.lower = city_phi_lower_bound;
        report.factor = report.upper / report.lower;
        report.binding = "Phi(W_" + std::to_string(table.upper_bound_argmax(k)) + ")";
        return report;
    }

    if (optimal == nullptr) {
        throw Error("missing tables");
    }
    double small = 0.0;
    int small_arg = 0;
    for (int n = 2; n <= std::min(64, table.n_max()); ++n) {
        if (!optimal->has_town_distance(n)) {
            throw Error("missing tables");
        }
        const double r = rho(n, table.at(n).total_distance, *optimal);
        if (r > small) {
            small = r;
            small_arg = n;
        }
    }
    double tabulated = 0.0;
    for (int n = 65; n <= 80; ++n) {
        tabulated = std::max(tabulated, report.upper / optimal->town_phi(n));
    }
    const double asymptotic_lower = city_phi_lower_bound - lambda_tail_bound(81);
    const double asymptotic = report.upper / asymptotic_lower;

    report.small_n_factor = small;
    report.tabulated_factor = tabulated;
    report.asymptotic_factor = asymptotic;
    report.conjectured_factor = report.upper / (city_phi_lower_bound - 0.410 / 81.0);
    report.lower = asymptotic_lower;
    report.factor = std::max({small, tabulated, asymptotic});
    if (report.factor == asymptotic) {
        report.binding = "n>=81";
    } else if (report.factor == tabulated) {
        report.binding = "65<=n<=80";
    } else {
        report.binding = "n=" + std::to_string(small_arg);
    }
    return report;
}

} // namespace hilbert_alloc
