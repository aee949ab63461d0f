#include "hilbert_alloc/cli.hpp"

#include "hilbert_alloc/error.hpp"
#include "hilbert_alloc/hilbert.hpp"
#include "hilbert_alloc/io.hpp"
#include "hilbert_alloc/lower_bounds.hpp"
#include "hilbert_alloc/oracle.hpp"
#include "hilbert_alloc/svg.hpp"
#include "hilbert_alloc/worst_case.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace hilbert_alloc {

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << content;
}

struct AllocOptions {
    std::string input;
    std::string output;
    std::string svg;
    bool round_up = false;
};

int cmd_alloc(const AllocOptions& opt, std::ostream& out)
{
    const SequenceFile seq = read_sequence_file(opt.input);
    const Allocator state = run_sequence(seq, opt.round_up);
    for (const Region& r : state.regions()) {
        if (!is_edge_connected(r.cells)) {
            throw InvariantViolation("region " + r.id + " is not connected");
        }
    }
    const std::string doc = to_json(make_allocation_file(seq, state)).dump(2) + "\n";
    if (opt.output.empty()) {
        out << doc;
    } else {
        write_file(opt.output, doc);
    }
    if (!opt.svg.empty()) {
        write_file(opt.svg, render_allocation_svg(state));
    }
    return 0;
}

struct WorstOptions {
    std::string mode = "city";
    int n_max = default_max_worst_n;
    std::string csv;
    unsigned threads = 1;
};

int cmd_worst(const WorstOptions& opt, std::ostream& out)
{
    const WorstCaseTable table = WorstCaseTable::compute(parse_mode(opt.mode), opt.n_max, opt.threads);
    if (opt.csv.empty()) {
        write_worst_csv(out, table);
    } else {
        std::ostringstream csv;
        write_worst_csv(csv, table);
        write_file(opt.csv, csv.str());
    }
    return 0;
}

struct BoundsOptions {
    std::string mode = "city";
    int level = 2;
    bool as_json = false;
    std::string data_dir;
    unsigned threads = 1;
};

json report_json(const BoundReport& r)
{
    json doc;
    doc["mode"] = to_string(r.mode);
    doc["level"] = r.level;
    doc["upper"] = r.upper;
    doc["lower"] = r.lower;
    doc["factor"] = r.factor;
    doc["binding"] = r.binding;
    if (r.small_n_factor) {
        doc["branches"] = {{"rho_max_n_le_64", *r.small_n_factor},
                           {"table_65_to_80", *r.tabulated_factor},
                           {"n_ge_81", *r.asymptotic_factor}};
        doc["conjectured_factor"] = *r.conjectured_factor;
        doc["conjectured_factor_note"] = "conjecture, not a proven bound";
    }
    json rows = json::array();
    for (const auto& row : r.rows) {
        json item;
        item["n"] = row.n;
        item["c"] = row.total_distance.to_string();
        item["phi"] = round_to(row.phi, 9);
        if (row.blowup) {
            item["Phi"] = round_to(*row.blowup, 9);
        }
        if (row.rho) {
            item["rho"] = round_to(*row.rho, 9);
        }
        rows.push_back(item);
    }
    doc["rows"] = rows;
    return doc;
}

int cmd_bounds(const BoundsOptions& opt, std::ostream& out)
{
    const Mode mode = parse_mode(opt.mode);
    if (opt.level < 1) {
        throw Error("invalid level");
    }
    const int n_max = (1 << (2 * (opt.level + 1))) + 1;
    const WorstCaseTable table = WorstCaseTable::compute(mode, n_max, opt.threads);
    std::optional<OptimalTable> optimal;
    if (mode == Mode::town) {
        optimal = OptimalTable::load(opt.data_dir.empty() ? OptimalTable::default_dir() : std::filesystem::path(opt.data_dir));
    }
    const BoundReport report = competitive_factor(table, optimal ? &*optimal : nullptr, opt.level);
    if (opt.as_json) {
        json doc = report_json(report);
        if (mode == Mode::city) {
            doc["hilbert_threshold"] = hilbert_threshold(table);
        } else {
            const RefinedTailBound refined = refined_lambda_tail_bound(81, report.upper);
            doc["lambda_tail_bound_81"] = lambda_tail_bound(81);
            doc["refined_tail_bound_81"] = {{"evaluated", refined.evaluated},
                                            {"printed", refined.printed},
                                            {"evaluated_factor", refined.evaluated_factor},
                                            {"printed_factor", refined.printed_factor},
                                            {"status", "disputed: evaluated and printed values differ"}};
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "upper=" << fixed(report.upper, 4) << " lower=" << fixed(report.lower, 4)
        << " factor=" << fixed(report.factor, 4) << "\n";
    out << "binding=" << report.binding << "\n";
    if (mode == Mode::city) {
        out << "hilbert_threshold=" << fixed(hilbert_threshold(table), 4) << "\n";
    } else {
        out << "branch rho(n<=64)=" << fixed(*report.small_n_factor, 4)
            << " branch table(65..80)=" << fixed(*report.tabulated_factor, 4)
            << " branch n>=81=" << fixed(*report.asymptotic_factor, 4) << "\n";
        out << "conjectured_factor=" << fixed(*report.conjectured_factor, 4) << " (conjecture, not a proven bound)\n";
    }
    return 0;
}

json scenario_json(const ScenarioReport& r)
{
    json doc;
    doc["id"] = r.id;
    doc["ratio"] = r.ratio;
    json branches = json::array();
    for (const auto& b : r.branches) {
        json item;
        item["choice"] = b.choice;
        item["response"] = b.response;
        item["achieved_phi"] = b.achieved_phi;
        item["optimal_phi"] = b.optimal_phi;
        item["ratio"] = b.ratio;
        json details = json::array();
        for (const auto& [label, value] : b.details) {
            details.push_back({{"label", label}, {"phi", value}});
        }
        item["details"] = details;
        branches.push_back(item);
    }
    doc["branches"] = branches;
    if (r.exhaustive_ratio) {
        doc["exhaustive_ratio"] = *r.exhaustive_ratio;
        json witness = json::array();
        for (const Point& p : r.exhaustive_witness) {
            witness.push_back({p.x, p.y});
        }
        doc["exhaustive_witness"] = witness;
        doc["exhaustive_witness_c"] = r.exhaustive_witness_distance;
        doc["min_non_square_c"] = r.min_non_square_distance;
    }
    doc["notes"] = r.notes;
    return doc;
}

int cmd_scenario(const std::string& which, bool as_json, std::ostream& out)
{
    ScenarioReport report;
    if (which == "discrete-3x3") {
        report = discrete_3x3_scenario();
    } else if (which == "continuous-half") {
        report = continuous_half_scenario();
    } else {
        throw Error("unknown scenario '" + which + "'");
    }
    if (as_json) {
        out << scenario_json(report).dump(2) << "\n";
        return 0;
    }
    out << "scenario " << report.id << "\n";
    for (const auto& b : report.branches) {
        out << "  choice=" << b.choice << " response=" << b.response << " achieved=" << fixed(b.achieved_phi, 6)
            << " optimal=" << fixed(b.optimal_phi, 6) << " ratio=" << fixed(b.ratio, 6) << "\n";
        for (const auto& [label, value] : b.details) {
            out << "    " << label << ": phi=" << fixed(value, 6) << "\n";
        }
    }
    out << "ratio=" << fixed(report.ratio, 6) << "\n";
    if (report.exhaustive_ratio) {
        out << "exhaustive_ratio=" << fixed(*report.exhaustive_ratio, 6)
            << " min_non_square_c=" << report.min_non_square_distance << "\n";
    }
    for (const auto& note : report.notes) {
        out << "note: " << note << "\n";
    }
    return 0;
}

Box parse_box(const std::string& text)
{
    const auto x = text.find_first_of("xX");
    try {
        if (x == std::string::npos) {
            throw Error("");
        }
        std::size_t used_w = 0;
        std::size_t used_h = 0;
        const int w = std::stoi(text.substr(0, x), &used_w);
        const int h = std::stoi(text.substr(x + 1), &used_h);
        if (used_w != x || used_h != text.size() - x - 1) {
            throw Error("");
        }
        return {w, h};
    } catch (const std::exception&) {
        throw Error("box must look like WxH");
    }
}

int cmd_oracle(int n, const std::string& box, const std::string& data_dir, std::ostream& out)
{
    std::optional<Box> b;
    if (!box.empty()) {
        b = parse_box(box);
    }
    const BruteForceResult result = optimal_town_bruteforce(n, b);
    out << "n=" << n << " c=" << result.total_distance << "\n";
    out << "boxes searched:";
    for (const Box& s : result.searched) {
        out << ' ' << s.width << 'x' << s.height;
    }
    out << "\n";
    if (!result.skipped.empty()) {
        out << "boxes skipped (over search guard):";
        for (const Box& s : result.skipped) {
            out << ' ' << s.width << 'x' << s.height;
        }
        out << "\n";
    }
    out << "witness:";
    for (const Point& p : result.witness.points()) {
        out << " (" << p.x << ',' << p.y << ')';
    }
    out << "\n";
    const OptimalTable table = OptimalTable::load(data_dir.empty() ? OptimalTable::default_dir() : std::filesystem::path(data_dir));
    if (!table.has_town_distance(n)) {
        out << "table: no entry\n";
        return 0;
    }
    const std::int64_t expected = table.town_distance(n);
    out << "table=" << expected << " match=" << (expected == result.total_distance ? "true" : "false") << "\n";
    if (expected != result.total_distance && !b) {
        throw InvariantViolation("brute force disagrees with the embedded table");
    }
    return 0;
}

int cmd_hilbert(int level, const std::string& format, const std::string& output, std::ostream& out)
{
    std::ostringstream text;
    if (format == "moves") {
        text << generate_moves(level) << "\n";
    } else if (format == "coords") {
        const CurveOrder order(level);
        text << "index,x,y\n";
        for (std::int64_t k = 0; k < order.size(); ++k) {
            const Point p = order.cell(k);
            text << k << ',' << p.x << ',' << p.y << "\n";
        }
    } else if (format == "svg") {
        text << render_curve_svg(CurveOrder(level));
    } else {
        throw Error("unknown format '" + format + "'");
    }
    if (output.empty()) {
        out << text.str();
    } else {
        write_file(output, text.str());
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hilbert-curve online shape allocation and its competitive analysis", "hilbert-alloc"};
    app.require_subcommand(1);

    AllocOptions alloc_opt;
    auto* alloc = app.add_subcommand("alloc", "Allocate a request sequence along the Hilbert curve");
    alloc->add_option("--input", alloc_opt.input, "Sequence JSON file")->required();
    alloc->add_option("--output", alloc_opt.output, "Allocation JSON file (default: stdout)");
    alloc->add_option("--svg", alloc_opt.svg, "Write an SVG picture of the allocation");
    alloc->add_flag("--round-up", alloc_opt.round_up, "Pad city sizes to the next multiple of 4^-R");

    WorstOptions worst_opt;
    auto* worst = app.add_subcommand("worst", "Enumerate worst windows W_n / T_n");
    worst->add_option("--mode", worst_opt.mode)->check(CLI::IsMember({"city", "town"}));
    worst->add_option("--n-max", worst_opt.n_max)->check(CLI::Range(1, 1 << 12));
    worst->add_option("--csv", worst_opt.csv, "CSV output file (default: stdout)");
    worst->add_option("--threads", worst_opt.threads)->check(CLI::Range(1, 256));

    BoundsOptions bounds_opt;
    auto* bounds = app.add_subcommand("bounds", "Upper bound and competitive factor");
    bounds->add_option("--mode", bounds_opt.mode)->check(CLI::IsMember({"city", "town"}));
    bounds->add_option("--level", bounds_opt.level, "Analysis level k")->check(CLI::Range(1, 4));
    bounds->add_flag("--json", bounds_opt.as_json);
    bounds->add_option("--data-dir", bounds_opt.data_dir, "Directory with the optimal-value CSV tables");
    bounds->add_option("--threads", bounds_opt.threads)->check(CLI::Range(1, 256));

    std::string scenario_id;
    bool scenario_json_flag = false;
    auto* scenario = app.add_subcommand("scenario", "Evaluate an adversary scenario");
    scenario->add_option("name", scenario_id)->required()->check(CLI::IsMember({"discrete-3x3", "continuous-half"}));
    scenario->add_flag("--json", scenario_json_flag);

    int oracle_n = 0;
    std::string oracle_box;
    std::string oracle_data;
    auto* oracle = app.add_subcommand("oracle", "Brute-force optimal n-town and compare with the table");
    oracle->add_option("--n", oracle_n)->required()->check(CLI::Range(1, 64));
    oracle->add_option("--box", oracle_box, "Search box WxH");
    oracle->add_option("--data-dir", oracle_data);

    int hilbert_level = 1;
    std::string hilbert_format = "moves";
    std::string hilbert_output;
    auto* hilbert = app.add_subcommand("hilbert", "Emit the Hilbert curve");
    hilbert->add_option("--level", hilbert_level)->required();
    hilbert->add_option("--format", hilbert_format)->check(CLI::IsMember({"moves", "coords", "svg"}));
    hilbert->add_option("--output", hilbert_output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (*alloc) {
            return cmd_alloc(alloc_opt, out);
        }
        if (*worst) {
            return cmd_worst(worst_opt, out);
        }
        if (*bounds) {
            return cmd_bounds(bounds_opt, out);
        }
        if (*scenario) {
            return cmd_scenario(scenario_id, scenario_json_flag, out);
        }
        if (*oracle) {
            return cmd_oracle(oracle_n, oracle_box, oracle_data, out);
        }
        if (*hilbert) {
            return cmd_hilbert(hilbert_level, hilbert_format, hilbert_output, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace hilbert_alloc
