#include "ipmkit/dataio.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "ipmkit/errors.hpp"

namespace ipmkit::dataio {

namespace {

constexpr std::array<std::string_view, 11> kColumns = {
    "project_id",     "total_hours",        "function_points", "phase",
    "total_defects",  "defects_inspection", "defects_testing", "inspection_time",
    "prep_time",      "inspectors",         "experience_years"};

constexpr std::string_view kFormatPrefix = "ipmkit-dataset/";

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_double(std::string_view text, std::size_t line, std::string_view column) {
    const std::string_view t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value))
        throw ParseError("'" + std::string(t) + "' is not a number", line, std::string(column));
    return value;
}

int parse_int(std::string_view text, std::size_t line, std::string_view column) {
    const std::string_view t = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError("'" + std::string(t) + "' is not an integer", line, std::string(column));
    return value;
}

std::string decimal(double value) {
    std::array<char, 32> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

struct PendingProject {
    ProjectRecord record;
    std::array<bool, 3> phase_seen{};
    std::size_t first_line = 0;
};

void check_record(const PhaseRecord& record, const std::string& project_id, bool strict,
                  std::vector<std::string>& warnings, std::size_t line) {
    const std::string where =
        "project " + project_id + ", " + std::string(to_string(record.phase));
    auto fail = [&](const std::string& message, const char* field) {
        throw ParseError(where + ": " + message, line, field);
    };
    if (record.total_defects < 0) fail("total defect count is negative", "total_defects");
    if (record.defects_inspection < 0)
        fail("inspection defect count is negative", "defects_inspection");
    if (record.defects_testing < 0) fail("testing defect count is negative", "defects_testing");
    if (record.inspection_time < 0) fail("inspection time is negative", "inspection_time");
    if (record.preparation_time < 0) fail("preparation time is negative", "prep_time");
    if (record.inspector_count < 1) fail("inspector count must be at least 1", "inspectors");
    if (record.experience_years < 0) fail("experience years are negative", "experience_years");

    // Bookkeeping identities: warn by default, reject in strict mode.
    auto soft = [&](const std::string& message, const char* field) {
        if (strict) throw ParseError(where + ": " + message, line, field);
        warnings.push_back("line " + std::to_string(line) + ": " + where + ": " + message);
    };
    if (record.defects_inspection > record.total_defects)
        soft("inspection defects exceed total defects", "defects_inspection");
    else if (record.defects_inspection + record.defects_testing != record.total_defects)
        soft("defect counts do not add up (inspection + testing != total)", "total_defects");
}

}  // namespace

DatasetDocument parse_dataset(std::istream& in, const ParseOptions& options) {
    DatasetDocument document;
    std::map<std::string, std::size_t> project_index;  // id -> position in pending
    std::vector<PendingProject> pending;

    std::vector<std::size_t> column_of;  // header position -> kColumns index
    char delimiter = ',';
    bool header_seen = false;

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (view.front() == '#') {
            const std::string_view body = trim(view.substr(1));
            if (body.rfind("format:", 0) == 0) {
                std::string_view value = trim(body.substr(7));
                if (value.rfind(kFormatPrefix, 0) == 0) value.remove_prefix(kFormatPrefix.size());
                document.format_version = std::string(value);
            } else if (body.rfind("provenance:", 0) == 0) {
                document.provenance = std::string(trim(body.substr(11)));
            }
            continue;
        }

        if (!header_seen) {
            delimiter = view.find('\t') != std::string_view::npos ? '\t' : ',';
            const auto names = split(view, delimiter);
            std::array<bool, kColumns.size()> found{};
            for (const std::string_view raw : names) {
                const std::string_view name = trim(raw);
                const auto it = std::find(kColumns.begin(), kColumns.end(), name);
                if (it == kColumns.end())
                    throw ParseError("unknown column '" + std::string(name) + "'", line_number);
                const auto index = static_cast<std::size_t>(it - kColumns.begin());
                if (found[index])
                    throw ParseError("duplicate column '" + std::string(name) + "'", line_number);
                found[index] = true;
                column_of.push_back(index);
            }
            for (std::size_t i = 0; i < kColumns.size(); ++i)
                if (!found[i])
                    throw ParseError("missing column '" + std::string(kColumns[i]) + "'",
                                     line_number);
            header_seen = true;
            continue;
        }

        const auto fields = split(view, delimiter);
        if (fields.size() != column_of.size())
            throw ParseError("expected " + std::to_string(column_of.size()) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_number);

        std::array<std::string_view, kColumns.size()> cell;
        for (std::size_t i = 0; i < fields.size(); ++i) cell[column_of[i]] = trim(fields[i]);

        const std::string id{cell[0]};
        if (id.empty()) throw ParseError("empty project id", line_number, "project_id");

        const auto phase = phase_from_string(cell[3]);
        if (!phase)
            throw ParseError("unknown phase '" + std::string(cell[3]) + "'", line_number, "phase");

        PhaseRecord record;
        record.phase = *phase;
        record.total_defects = parse_int(cell[4], line_number, kColumns[4]);
        record.defects_inspection = parse_int(cell[5], line_number, kColumns[5]);
        record.defects_testing = parse_int(cell[6], line_number, kColumns[6]);
        record.inspection_time = parse_double(cell[7], line_number, kColumns[7]);
        record.preparation_time = parse_double(cell[8], line_number, kColumns[8]);
        record.inspector_count = parse_int(cell[9], line_number, kColumns[9]);
        record.experience_years = parse_double(cell[10], line_number, kColumns[10]);
        check_record(record, id, options.strict, document.warnings, line_number);

        const double total_hours = parse_double(cell[1], line_number, kColumns[1]);
        if (!(total_hours > 0.0))
            throw ParseError("project " + id + ": total hours must be positive", line_number,
                             "total_hours");
        std::optional<int> function_points;
        if (!cell[2].empty()) {
            function_points = parse_int(cell[2], line_number, kColumns[2]);
            if (*function_points < 1)
                throw ParseError("project " + id + ": function points must be at least 1",
                                 line_number, "function_points");
        }

        auto [it, inserted] = project_index.try_emplace(id, pending.size());
        if (inserted) {
            PendingProject fresh;
            fresh.record.id = id;
            fresh.record.total_hours = total_hours;
            fresh.record.function_points = function_points;
            fresh.first_line = line_number;
            pending.push_back(std::move(fresh));
        }
        PendingProject& project = pending[it->second];
        if (!inserted) {
            if (project.record.total_hours != total_hours)
                throw ParseError("project " + id + ": total_hours differs between rows",
                                 line_number, "total_hours");
            if (project.record.function_points != function_points)
                throw ParseError("project " + id + ": function_points differ between rows",
                                 line_number, "function_points");
        }
        const auto slot = static_cast<std::size_t>(*phase);
        if (project.phase_seen[slot])
            throw ParseError("project " + id + ": duplicate " + std::string(to_string(*phase)) +
                                 " row",
                             line_number, "phase");
        project.phase_seen[slot] = true;
        project.record.phases[slot] = record;
    }

    if (!header_seen) throw ParseError("no records");
    if (pending.empty()) throw ParseError("no records");

    for (PendingProject& project : pending) {
        for (Phase phase : kAllPhases) {
            if (!project.phase_seen[static_cast<std::size_t>(phase)])
                throw ParseError("project " + project.record.id + ": missing " +
                                     std::string(to_string(phase)) + " row",
                                 project.first_line, "phase");
        }
        document.projects.push_back(std::move(project.record));
    }
    return document;
}

DatasetDocument parse_dataset_text(std::string_view text, const ParseOptions& options) {
    std::istringstream in{std::string(text)};
    return parse_dataset(in, options);
}

DatasetDocument load_dataset_file(const std::filesystem::path& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read dataset file: " + path.string());
    return parse_dataset(in, options);
}

std::string serialize_dataset(const DatasetDocument& document) {
    std::string out = "# format: " + std::string(kFormatPrefix) + document.format_version + "\n";
    if (!document.provenance.empty()) out += "# provenance: " + document.provenance + "\n";
    for (std::size_t i = 0; i + 1 < kColumns.size(); ++i) out += std::string(kColumns[i]) + ",";
    out += std::string(kColumns.back()) + "\n";
    for (const ProjectRecord& project : document.projects) {
        for (Phase phase : kAllPhases) {
            const PhaseRecord& record = project.phase(phase);
            out += project.id + ",";
            out += decimal(project.total_hours) + ",";
            out += (project.function_points ? std::to_string(*project.function_points) : "") + ",";
            out += std::string(to_string(phase)) + ",";
            out += std::to_string(record.total_defects) + ",";
            out += std::to_string(record.defects_inspection) + ",";
            out += std::to_string(record.defects_testing) + ",";
            out += decimal(record.inspection_time) + ",";
            out += decimal(record.preparation_time) + ",";
            out += std::to_string(record.inspector_count) + ",";
            out += decimal(record.experience_years) + "\n";
        }
    }
    return out;
}

void save_dataset_file(const DatasetDocument& document, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write dataset file: " + path.string());
    out << serialize_dataset(document);
    out.flush();
    if (!out) throw IoError("failed writing dataset file: " + path.string());
}

}  // namespace ipmkit::dataio
