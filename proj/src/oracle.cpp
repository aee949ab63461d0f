#include "hilbert_alloc/oracle.hpp"

#include "hilbert_alloc/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#ifndef HILBERT_ALLOC_DATA_DIR
#define HILBERT_ALLOC_DATA_DIR "data"
#endif

namespace hilbert_alloc {

namespace {

std::vector<std::pair<int, std::string>> read_table(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) {
        throw Error("cannot open table " + file.string());
    }
    std::vector<std::pair<int, std::string>> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (header) {
            if (line != "n,value") {
                throw Error("bad header in " + file.string());
            }
            header = false;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw Error("malformed row in " + file.string() + ": " + line);
        }
        try {
            std::size_t used = 0;
            const int n = std::stoi(line.substr(0, comma), &used);
            if (used != comma) {
                throw Error("");
            }
            rows.emplace_back(n, line.substr(comma + 1));
        } catch (const std::exception&) {
            throw Error("malformed row in " + file.string() + ": " + line);
        }
    }
    return rows;
}

} // namespace

OptimalTable OptimalTable::load(const std::filesystem::path& dir)
{
    OptimalTable t;
    for (const auto& [n, v] : read_table(dir / town_file)) {
        const ExactRational r = ExactRational::parse(v);
        if (!r.is_integer()) {
            throw Error("non-integer town distance for n=" + std::to_string(n));
        }
        t.c_town[n] = r.numerator().get_si();
    }
    for (const auto& [n, v] : read_table(dir / city_file)) {
        t.c_city[n] = ExactRational::parse(v);
    }
    for (const auto& [n, v] : read_table(dir / phi_file)) {
        try {
            t.phi_opt[n] = std::stod(v);
        } catch (const std::exception&) {
            throw Error("malformed phi for n=" + std::to_string(n));
        }
    }
    return t;
}

std::filesystem::path OptimalTable::default_dir()
{
    return HILBERT_ALLOC_DATA_DIR;
}

std::int64_t OptimalTable::town_distance(int n) const
{
    const auto it = c_town.find(n);
    if (it == c_town.end()) {
        throw Error("n out of table");
    }
    return it->second;
}

const ExactRational& OptimalTable::city_distance(int n) const
{
    const auto it = c_city.find(n);
    if (it == c_city.end()) {
        throw Error("n out of table");
    }
    return it->second;
}

double OptimalTable::town_phi(int n) const
{
    const auto it = phi_opt.find(n);
    if (it == phi_opt.end()) {
        throw Error("n out of table");
    }
    return it->second;
}

double rho(int n, const ExactRational& worst_town_distance, const OptimalTable& table)
{
    if (n == 1) {
        throw Error("undefined (optimal distance 0)");
    }
    if (n < 2 || n > 64) {
        throw Error("n out of table");
    }
    return (worst_town_distance / ExactRational(table.town_distance(n))).to_double();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // Exact in 128 bits while the running value stays below 2^64 * k.
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<Box> default_boxes(int n)
{
    const int limit = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) + 2;
    std::vector<Box> boxes;
    for (int h = 1; h <= limit; ++h) {
        for (int w = 1; w <= h; ++w) {
            if (w * h >= n) {
                boxes.push_back({w, h});
            }
        }
    }
    return boxes;
}

namespace {

class SubsetSearch {
public:
    SubsetSearch(int n, Box box) : n_(n), box_(box)
    {
        for (int y = 0; y < box.height; ++y) {
            for (int x = 0; x < box.width; ++x) {
                cells_.push_back({x, y});
            }
        }
    }

    void run(std::int64_t& best, std::vector<Point>& best_set, std::uint64_t& nodes)
    {
        best_ = &best;
        best_set_ = &best_set;
        nodes_ = &nodes;
        // Translation representatives: the first chosen cell (row-major) sits
        // in row 0, and some chosen cell sits in column 0.
        for (std::size_t i = 0; i < cells_.size() && cells_[i].y == 0; ++i) {
            chosen_.push_back(cells_[i]);
            descend(i + 1, 0, cells_[i].x == 0);
            chosen_.pop_back();
        }
    }

private:
    void descend(std::size_t next, std::int64_t partial, bool touches_left)
    {
        ++*nodes_;
        if (partial >= *best_) {
            return;
        }
        if (static_cast<int>(chosen_.size()) == n_) {
            if (touches_left) {
                *best_ = partial;
                *best_set_ = chosen_;
            }
            return;
        }
        const auto need = static_cast<std::size_t>(n_) - chosen_.size();
        for (std::size_t i = next; i + need <= cells_.size(); ++i) {
            const Point p = cells_[i];
            std::int64_t added = 0;
            for (const Point& q : chosen_) {
                added += std::abs(p.x - q.x) + std::abs(p.y - q.y);
            }
            chosen_.push_back(p);
            descend(i + 1, partial + added, touches_left || p.x == 0);
            chosen_.pop_back();
        }
    }

    int n_;
    Box box_;
    std::vector<Point> cells_;
    std::vector<Point> chosen_;
    std::int64_t* best_ = nullptr;
    std::vector<Point>* best_set_ = nullptr;
    std::uint64_t* nodes_ = nullptr;
};

} // namespace

BruteForceResult optimal_town_bruteforce(int n, std::optional<Box> box, std::uint64_t guard)
{
    if (n < 1) {
        throw Error("invalid size");
    }
    BruteForceResult result;
    std::vector<Box> candidates;
    if (box) {
        if (box->width < 1 || box->height < 1 || box->width * box->height < n) {
            throw Error("box too small");
        }
        if (binomial(static_cast<std::uint64_t>(box->width * box->height), static_cast<std::uint64_t>(n)) > guard) {
            throw Error("search too large; widen via profile search or use embedded table");
        }
        candidates.push_back(*box);
    } else {
        for (const Box& b : default_boxes(n)) {
            if (binomial(static_cast<std::uint64_t>(b.width * b.height), static_cast<std::uint64_t>(n)) > guard) {
                result.skipped.push_back(b);
            } else {
                candidates.push_back(b);
            }
        }
        if (candidates.empty()) {
            throw Error("search too large; widen via profile search or use embedded table");
        }
    }

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<Point> best_set;
    for (const Box& b : candidates) {
        SubsetSearch(n, b).run(best, best_set, result.nodes);
        result.searched.push_back(b);
    }
    result.total_distance = best;
    result.witness = canonicalize(Town(std::move(best_set)));
    return result;
}

} // namespace hilbert_alloc
