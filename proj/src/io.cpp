#include "hilbert_alloc/io.hpp"

#include "hilbert_alloc/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace hilbert_alloc {

using nlohmann::json;

namespace {

ExactRational read_size(const json& v, Mode mode)
{
    if (mode == Mode::town) {
        if (!v.is_number_integer()) {
            throw Error("town sizes must be integers");
        }
        return ExactRational(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        return ExactRational::parse(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return ExactRational(v.get<std::int64_t>());
    }
    throw Error("city sizes must be exact rational strings such as \"1/4\"");
}

ExactRational read_rational(const json& v, const char* field)
{
    if (v.is_string()) {
        return ExactRational::parse(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return ExactRational(v.get<std::int64_t>());
    }
    throw Error(std::string("field '") + field + "' must be an exact rational");
}

const json& field(const json& obj, const char* name)
{
    if (!obj.is_object() || !obj.contains(name)) {
        throw Error(std::string("missing field '") + name + "'");
    }
    return obj.at(name);
}

json header_json(const SequenceFile& seq)
{
    json doc;
    doc["mode"] = to_string(seq.mode);
    if (seq.mode == Mode::city) {
        if (seq.resolution) {
            doc["resolution"] = *seq.resolution;
        }
        doc["capacity"] = seq.capacity().to_string();
    } else {
        doc["grid"] = *seq.grid;
        doc["capacity"] = *seq.grid * *seq.grid;
    }
    json reqs = json::array();
    for (const auto& r : seq.requests) {
        json item;
        item["id"] = r.id;
        if (seq.mode == Mode::city) {
            item["size"] = r.size.to_string();
        } else {
            item["size"] = r.size.numerator().get_si();
        }
        reqs.push_back(item);
    }
    doc["requests"] = reqs;
    return doc;
}

} // namespace

ExactRational SequenceFile::capacity() const
{
    if (mode == Mode::city) {
        return ExactRational(1);
    }
    return ExactRational(grid.value_or(0) * grid.value_or(0));
}

SequenceFile parse_sequence(const json& doc)
{
    if (!doc.is_object()) {
        throw Error("sequence file must be a JSON object");
    }
    SequenceFile seq;
    const json& mode = field(doc, "mode");
    if (!mode.is_string()) {
        throw Error("field 'mode' must be a string");
    }
    seq.mode = parse_mode(mode.get<std::string>());
    if (seq.mode == Mode::city) {
        if (doc.contains("resolution")) {
            if (!doc["resolution"].is_number_integer() || doc["resolution"].get<int>() < 0) {
                throw Error("field 'resolution' must be a non-negative integer");
            }
            seq.resolution = doc["resolution"].get<int>();
        }
    } else {
        const json& grid = field(doc, "grid");
        if (!grid.is_number_integer() || grid.get<std::int64_t>() < 1) {
            throw Error("field 'grid' must be a positive integer");
        }
        const auto n = grid.get<std::int64_t>();
        if ((n & (n - 1)) != 0) {
            throw Error("field 'grid' must be a power of two");
        }
        seq.grid = n;
    }
    if (doc.contains("capacity") && read_rational(doc["capacity"], "capacity") != seq.capacity()) {
        throw Error("field 'capacity' must be " + seq.capacity().to_string());
    }
    const json& reqs = field(doc, "requests");
    if (!reqs.is_array()) {
        throw Error("field 'requests' must be an array");
    }
    ExactRational total(0);
    for (std::size_t i = 0; i < reqs.size(); ++i) {
        const json& r = reqs[i];
        AllocationRequest req;
        if (r.is_object() && r.contains("id")) {
            req.id = r["id"].is_string() ? r["id"].get<std::string>() : r["id"].dump();
        } else {
            req.id = std::to_string(i + 1);
        }
        req.size = read_size(field(r, "size"), seq.mode);
        if (req.size.sign() <= 0) {
            throw Error("nonpositive size");
        }
        total += req.size;
        seq.requests.push_back(std::move(req));
    }
    if (total > seq.capacity()) {
        throw Error("capacity exceeded");
    }
    return seq;
}

SequenceFile read_sequence_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    try {
        return parse_sequence(json::parse(in));
    } catch (const json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

Allocator run_sequence(const SequenceFile& seq, bool round_up)
{
    if (seq.mode == Mode::town) {
        int level = 0;
        while ((std::int64_t{1} << level) < *seq.grid) {
            ++level;
        }
        Allocator state = Allocator::town(level);
        for (const auto& r : seq.requests) {
            state.allocate_next(r);
        }
        return state;
    }
    int resolution = 0;
    if (seq.resolution) {
        resolution = *seq.resolution;
    } else {
        std::vector<ExactRational> sizes;
        for (const auto& r : seq.requests) {
            sizes.push_back(r.size);
        }
        try {
            resolution = auto_resolution(sizes);
        } catch (const Error&) {
            if (round_up) {
                throw Error("--round-up needs an explicit 'resolution'");
            }
            throw;
        }
    }
    Allocator state = Allocator::city(resolution);
    for (const auto& r : seq.requests) {
        state.allocate_next(r, round_up);
    }
    return state;
}

double round_to(double value, int decimals)
{
    const double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

std::string fixed(double value, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

AllocationFile make_allocation_file(const SequenceFile& seq, const Allocator& state)
{
    AllocationFile file;
    file.header = seq;
    if (seq.mode == Mode::city) {
        file.header.resolution = state.level();
    }
    for (const Region& r : state.regions()) {
        file.regions.push_back({r.id, r.start, r.end, r.level, r.total_distance, round_to(r.phi, 9), r.padding});
    }
    file.max_phi = file.regions.empty() ? 0.0 : round_to(max_phi(state), 9);
    return file;
}

json to_json(const AllocationFile& file)
{
    json doc = header_json(file.header);
    json regions = json::array();
    for (const auto& r : file.regions) {
        json item;
        item["id"] = r.id;
        item["interval"] = {r.start, r.end};
        item["level"] = r.level;
        item["c"] = r.total_distance.to_string();
        item["phi"] = r.phi;
        if (!r.padding.is_zero()) {
            item["padding"] = r.padding.to_string();
        }
        regions.push_back(item);
    }
    doc["regions"] = regions;
    doc["max_phi"] = file.max_phi;
    return doc;
}

AllocationFile parse_allocation(const json& doc)
{
    AllocationFile file;
    file.header = parse_sequence(doc);
    const json& regions = field(doc, "regions");
    if (!regions.is_array()) {
        throw Error("field 'regions' must be an array");
    }
    std::int64_t expected = 0;
    double max_seen = 0.0;
    for (const json& r : regions) {
        RegionRecord rec;
        rec.id = field(r, "id").get<std::string>();
        const json& interval = field(r, "interval");
        if (!interval.is_array() || interval.size() != 2) {
            throw Error("field 'interval' must be [start, end]");
        }
        rec.start = interval[0].get<std::int64_t>();
        rec.end = interval[1].get<std::int64_t>();
        if (rec.start != expected || rec.end <= rec.start) {
            throw Error("region intervals must be contiguous from 0");
        }
        expected = rec.end;
        rec.level = field(r, "level").get<int>();
        rec.total_distance = read_rational(field(r, "c"), "c");
        rec.phi = field(r, "phi").get<double>();
        if (r.contains("padding")) {
            rec.padding = read_rational(r["padding"], "padding");
        }
        max_seen = std::max(max_seen, rec.phi);
        file.regions.push_back(std::move(rec));
    }
    file.max_phi = field(doc, "max_phi").get<double>();
    if (file.max_phi != max_seen) {
        throw Error("max_phi does not match the regions");
    }
    return file;
}

void write_worst_csv(std::ostream& out, const WorstCaseTable& table)
{
    out << "n,c_exact,phi,Phi\n";
    for (int n = 1; n <= table.n_max(); ++n) {
        const auto& rec = table.at(n);
        out << n << ',' << rec.total_distance.to_string() << ',' << fixed(rec.phi, 4) << ',';
        if (table.has(n + 2)) {
            out << fixed(table.blowup_phi(n), 4);
        }
        out << '\n';
    }
}

} // namespace hilbert_alloc
