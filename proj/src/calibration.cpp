#include "ipmkit/calibration.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ipmkit/errors.hpp"

namespace ipmkit::calibration {

using nlohmann::json;

std::string to_string(const Stratum& stratum) {
    return std::string(ipmkit::to_string(stratum.phase)) + "/" +
           std::string(ipmkit::to_string(stratum.size));
}

std::string_view to_string(FitTarget target) {
    return target == FitTarget::Ipm ? "ipm" : "di";
}

std::optional<FitTarget> fit_target_from_string(std::string_view text) {
    if (text == "ipm" || text == "IPM") return FitTarget::Ipm;
    if (text == "di" || text == "DI") return FitTarget::Di;
    return std::nullopt;
}

std::size_t coefficient_count(FitTarget target) {
    return target == FitTarget::Ipm ? kParameterCount + 1 : kParameterCount;
}

const std::vector<double>* CoefficientTable::find(const Stratum& stratum) const {
    const auto it = strata.find(stratum);
    return it == strata.end() ? nullptr : &it->second;
}

regression::FitReport calibrate_stratum(std::span<const ProjectRecord> projects,
                                        const Stratum& stratum, IpmMode mode, FitTarget target) {
    std::vector<std::vector<double>> rows;
    std::vector<double> targets;
    for (const ProjectRecord& project : projects) {
        if (classify_size(project.total_hours) != stratum.size) continue;
        const PhaseRecord& record = project.phase(stratum.phase);
        const FeatureVector features = derive_features(record, project);
        if (target == FitTarget::Ipm) {
            const auto f = features.to_array();
            rows.emplace_back(f.begin(), f.end());
            targets.push_back(inspection_performance(record.defects_inspection,
                                                     record.inspection_time,
                                                     record.preparation_time,
                                                     record.inspector_count, mode));
        } else {
            // DI model: regressors x1..x4, no complexity term.
            rows.push_back({features.inspection_time, features.preparation_time,
                            features.inspector_count, features.experience_years});
            targets.push_back(
                depth_of_inspection(record.defects_inspection, record.total_defects));
        }
    }

    if (rows.empty())
        throw ValidationError("stratum " + to_string(stratum) + " has no projects");
    const std::size_t wanted = coefficient_count(target);
    if (rows.size() < wanted)
        throw ValidationError("stratum " + to_string(stratum) + " is underdetermined: " +
                              std::to_string(rows.size()) + " observations for " +
                              std::to_string(wanted) + " coefficients");

    return regression::fit_least_squares(regression::build_design_matrix(rows), targets);
}

CalibrationResult calibrate_all(std::span<const ProjectRecord> projects, IpmMode mode,
                                FitTarget target, std::string dataset_id) {
    if (projects.empty()) throw ValidationError("dataset has no projects");

    CalibrationResult result;
    result.table.dataset_id = std::move(dataset_id);
    result.table.mode = mode;
    result.table.target = target;

    for (Phase phase : kAllPhases) {
        for (SizeClass size : kAllSizeClasses) {
            const Stratum stratum{phase, size};
            std::size_t count = 0;
            for (const ProjectRecord& project : projects)
                if (classify_size(project.total_hours) == size) ++count;
            if (count == 0) continue;  // absent stratum, not a failure
            try {
                regression::FitReport report = calibrate_stratum(projects, stratum, mode, target);
                result.table.strata[stratum] = report.coefficients;
                result.fits.push_back({stratum, count, std::move(report)});
            } catch (const Error& error) {
                result.failures.push_back({stratum, count, error.what()});
            }
        }
    }
    return result;
}

namespace {

constexpr const char* kDocumentFormat = "ipmkit-coefficients";
constexpr int kDocumentVersion = 1;

const json& require_field(const json& object, const char* key) {
    const auto it = object.find(key);
    if (it == object.end())
        throw ParseError("coefficient document is missing field", 0, key);
    return *it;
}

}  // namespace

void save_table(const CoefficientTable& table, std::ostream& out) {
    json doc;
    doc["format"] = kDocumentFormat;
    doc["version"] = kDocumentVersion;
    doc["dataset_id"] = table.dataset_id;
    doc["fitted_at"] = table.fitted_at;
    doc["mode"] = std::string(ipmkit::to_string(table.mode));
    doc["target"] = std::string(to_string(table.target));
    doc["feature_convention"] = table.feature_convention;
    json strata = json::array();
    for (const auto& [stratum, beta] : table.strata) {
        json entry;
        entry["phase"] = std::string(ipmkit::to_string(stratum.phase));
        entry["size"] = std::string(ipmkit::to_string(stratum.size));
        entry["beta"] = beta;
        strata.push_back(std::move(entry));
    }
    doc["strata"] = std::move(strata);
    out << doc.dump(2) << '\n';
}

void save_table_file(const CoefficientTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write coefficient file: " + path.string());
    save_table(table, out);
    out.flush();
    if (!out) throw IoError("failed writing coefficient file: " + path.string());
}

CoefficientTable load_table(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& error) {
        throw ParseError(std::string("coefficient document: ") + error.what());
    }
    if (!doc.is_object()) throw ParseError("coefficient document is not an object");
    if (require_field(doc, "format").get<std::string>() != kDocumentFormat)
        throw ParseError("not a coefficient document", 0, "format");
    if (require_field(doc, "version").get<int>() != kDocumentVersion)
        throw ParseError("unsupported document version", 0, "version");

    CoefficientTable table;
    table.dataset_id = require_field(doc, "dataset_id").get<std::string>();
    table.fitted_at = require_field(doc, "fitted_at").get<std::string>();

    const std::string mode_text = require_field(doc, "mode").get<std::string>();
    const auto mode = ipm_mode_from_string(mode_text);
    if (!mode) throw ParseError("unknown mode '" + mode_text + "'", 0, "mode");
    table.mode = *mode;

    const std::string target_text = require_field(doc, "target").get<std::string>();
    const auto target = fit_target_from_string(target_text);
    if (!target) throw ParseError("unknown target '" + target_text + "'", 0, "target");
    table.target = *target;

    table.feature_convention = require_field(doc, "feature_convention").get<std::string>();

    const json& strata = require_field(doc, "strata");
    if (!strata.is_array()) throw ParseError("expected an array", 0, "strata");
    const std::size_t wanted = coefficient_count(table.target);
    for (const json& entry : strata) {
        const std::string phase_text = require_field(entry, "phase").get<std::string>();
        const auto phase = phase_from_string(phase_text);
        if (!phase) throw ParseError("unknown phase '" + phase_text + "'", 0, "phase");
        const std::string size_text = require_field(entry, "size").get<std::string>();
        const auto size = size_class_from_string(size_text);
        if (!size) throw ParseError("unknown size class '" + size_text + "'", 0, "size");
        const Stratum stratum{*phase, *size};

        const json& beta_node = require_field(entry, "beta");
        if (!beta_node.is_array()) throw ParseError("expected an array", 0, "beta");
        std::vector<double> beta;
        for (const json& value : beta_node) {
            if (!value.is_number())
                throw ParseError("stratum " + to_string(stratum) + ": non-numeric coefficient",
                                 0, "beta");
            beta.push_back(value.get<double>());
            if (!std::isfinite(beta.back()))
                throw ParseError("stratum " + to_string(stratum) + ": non-finite coefficient",
                                 0, "beta");
        }
        if (beta.size() != wanted)
            throw ParseError("stratum " + to_string(stratum) + ": expected " +
                                 std::to_string(wanted) + " coefficients, got " +
                                 std::to_string(beta.size()),
                             0, "beta");
        if (!table.strata.emplace(stratum, std::move(beta)).second)
            throw ParseError("duplicate stratum " + to_string(stratum), 0, "strata");
    }
    return table;
}

CoefficientTable load_table_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read coefficient file: " + path.string());
    return load_table(in);
}

}  // namespace ipmkit::calibration
