#pragma once

#include "hilbert_alloc/allocator.hpp"
#include "hilbert_alloc/worst_case.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

namespace hilbert_alloc {

/// Input of `alloc`:
///   {"mode": "city", "resolution": 2, "capacity": "1",
///    "requests": [{"id": "a", "size": "1/4"}, ...]}
///   {"mode": "town", "grid": 8, "capacity": 64,
///    "requests": [{"id": "a", "size": 5}, ...]}
/// City sizes are exact rational strings; `resolution` is optional (the
/// smallest one that represents every size is used). Town sizes are
/// integers and `grid` must be a power of two.
struct SequenceFile {
    Mode mode = Mode::city;
    std::optional<int> resolution;
    std::optional<std::int64_t> grid;
    std::vector<AllocationRequest> requests;

    /// 1 for city mode, grid^2 for town mode.
    ExactRational capacity() const;
};

/// Throws Error with the schema violation.
SequenceFile parse_sequence(const nlohmann::json& doc);
SequenceFile read_sequence_file(const std::filesystem::path& path);

/// Runs the allocator over the whole sequence.
Allocator run_sequence(const SequenceFile& seq, bool round_up);

struct RegionRecord {
    std::string id;
    std::int64_t start = 0;
    std::int64_t end = 0;
    int level = 0;
    ExactRational total_distance;
    double phi = 0.0;
    ExactRational padding;
};

/// Output of `alloc`: the input header plus one record per region, with
/// c as an exact "p/q" string and phi rounded to 9 decimals.
struct AllocationFile {
    SequenceFile header;
    std::vector<RegionRecord> regions;
    double max_phi = 0.0;
};

AllocationFile make_allocation_file(const SequenceFile& seq, const Allocator& state);
nlohmann::json to_json(const AllocationFile& file);
/// Checks that intervals are contiguous from 0 and max_phi matches.
AllocationFile parse_allocation(const nlohmann::json& doc);

/// `n,c_exact,phi,Phi` with phi and Phi at 4 decimals; Phi is empty when
/// W_{n+2} is not in the table.
void write_worst_csv(std::ostream& out, const WorstCaseTable& table);

double round_to(double value, int decimals);
std::string fixed(double value, int decimals);

} // namespace hilbert_alloc
