#include "ipmkit/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipmkit/analysis.hpp"
#include "ipmkit/calibration.hpp"
#include "ipmkit/dataio.hpp"
#include "ipmkit/domain.hpp"
#include "ipmkit/errors.hpp"

namespace ipmkit::cli {

namespace {

namespace fs = std::filesystem;

// Shortest decimal form that parses back to the same double.
std::string full(double value) {
    std::array<char, 32> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

// Display rounding; exports keep full precision.
std::string fixed4(double value) {
    std::array<char, 40> buffer{};
    std::snprintf(buffer.data(), buffer.size(), "%.4f", value);
    return std::string(buffer.data());
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buffer{};
    std::strftime(buffer.data(), buffer.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buffer.data());
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size())
                out << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size()) out << ',';
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
}

void emit_report(std::ostream& out, const std::string& format,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& table_rows,
                 const std::vector<std::vector<std::string>>& csv_rows) {
    if (format == "csv")
        write_csv(out, header, csv_rows);
    else
        write_table(out, header, table_rows);
}

// Dataset arguments accept @calibration / @verification; coefficient
// arguments accept @reference.
dataio::DatasetDocument resolve_dataset(const std::string& path, bool strict,
                                        std::ostream& err) {
    dataio::DatasetDocument document;
    if (path == "@calibration")
        document = dataio::bundled_calibration_dataset();
    else if (path == "@verification")
        document = dataio::bundled_verification_dataset();
    else if (!path.empty() && path.front() == '@')
        throw ValidationError("unknown bundled dataset '" + path +
                              "' (expected @calibration or @verification)");
    else
        document = dataio::load_dataset_file(path, {.strict = strict});
    for (const std::string& warning : document.warnings)
        err << "ipmkit: warning: " << warning << '\n';
    return document;
}

calibration::CoefficientTable resolve_coefficients(const std::string& path) {
    if (path == "@reference") return dataio::bundled_reference_coefficients();
    if (!path.empty() && path.front() == '@')
        throw ValidationError("unknown bundled coefficients '" + path + "' (expected @reference)");
    return calibration::load_table_file(path);
}

IpmMode parse_mode(const std::string& text) {
    const auto mode = ipm_mode_from_string(text);
    if (!mode) throw ValidationError("unknown mode '" + text + "'");
    return *mode;
}

struct StratumFlags {
    std::string phase;
    std::string size;

    calibration::Stratum resolve() const {
        const auto p = phase_from_string(phase);
        if (!p) throw ValidationError("unknown phase '" + phase + "'");
        const auto s = size_class_from_string(size);
        if (!s) throw ValidationError("unknown size class '" + size + "'");
        return {*p, *s};
    }
};

struct FeatureFlags {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;
    double x5 = -1.0;  // unset
    int fp = 0;        // unset

    FeatureVector resolve() const {
        FeatureVector features;
        features.inspection_time = x1;
        features.preparation_time = x2;
        features.inspector_count = x3;
        features.experience_years = x4;
        if (fp > 0 && x5 >= 0.0)
            throw ValidationError("give either --x5 or --fp, not both");
        if (fp > 0)
            features.complexity = complexity_from_function_points(fp);
        else if (x5 >= 0.0)
            features.complexity = x5;
        else
            throw ValidationError("complexity is required: pass --x5 or --fp");
        return features;
    }
};

void add_feature_flags(CLI::App* cmd, FeatureFlags& flags) {
    cmd->add_option("--x1,--inspection-time", flags.x1, "baseline inspection time (hours)")
        ->required();
    cmd->add_option("--x2,--prep-time", flags.x2, "baseline preparation time (hours)")->required();
    cmd->add_option("--x3,--inspectors", flags.x3, "baseline inspector count")->required();
    cmd->add_option("--x4,--experience", flags.x4, "baseline experience (years)")->required();
    cmd->add_option("--x5,--complexity", flags.x5, "baseline complexity in [0,1]");
    cmd->add_option("--fp,--function-points", flags.fp,
                    "derive complexity from function points instead of --x5");
}

const std::vector<double>& stratum_coefficients(const calibration::CoefficientTable& table,
                                                const calibration::Stratum& stratum) {
    const std::vector<double>* beta = table.find(stratum);
    if (!beta)
        throw ValidationError("coefficients do not cover stratum " +
                              calibration::to_string(stratum));
    if (table.target != calibration::FitTarget::Ipm)
        throw ValidationError("coefficient table was fitted for DI, not IPM");
    return *beta;
}

// ---- subcommand option bags -------------------------------------------------

struct MetricsOptions {
    std::string dataset;
    std::string mode = "teamtime";
    std::string format = "table";
    bool strict = false;
};

struct CalibrateOptions {
    std::string dataset;
    std::string out_path;
    std::string mode = "teamtime";
    std::string target = "ipm";
    std::string dataset_id;
    std::string format = "table";
    bool strict = false;
};

struct VerifyOptions {
    std::string dataset;
    std::string coefficients;
    double band = 0.10;
    std::string format = "table";
    bool strict = false;
};

struct SensitivityOptions {
    std::string coefficients;
    StratumFlags stratum;
    FeatureFlags features;
    double pct = 0.10;
    std::vector<std::string> overrides;
    std::string format = "table";
};

struct TuneOptions {
    std::string coefficients;
    StratumFlags stratum;
    FeatureFlags features;
    double target = 0.0;
    std::string free_parameter;
    std::string format = "table";
};

struct DatasetsOptions {
    std::string export_dir;
};

// ---- command implementations ------------------------------------------------

int run_metrics(const MetricsOptions& options, std::ostream& out, std::ostream& err) {
    const dataio::DatasetDocument document = resolve_dataset(options.dataset, options.strict, err);
    const IpmMode mode = parse_mode(options.mode);

    std::vector<std::vector<std::string>> table_rows;
    std::vector<std::vector<std::string>> csv_rows;
    for (const ProjectRecord& project : document.projects) {
        const SizeClass size = classify_size(project.total_hours);
        const double x5 = complexity_from_function_points(function_points_of(project));
        for (Phase phase : kAllPhases) {
            const PhaseRecord& record = project.phase(phase);
            const double di = depth_of_inspection(record.defects_inspection, record.total_defects);
            const double ipm =
                inspection_performance(record.defects_inspection, record.inspection_time,
                                       record.preparation_time, record.inspector_count, mode);
            table_rows.push_back({project.id, std::string(to_string(phase)),
                                  std::string(to_string(size)), fixed4(di), fixed4(ipm),
                                  fixed4(x5)});
            csv_rows.push_back({project.id, std::string(to_string(phase)),
                                std::string(to_string(size)), full(di), full(ipm), full(x5)});
        }
    }
    emit_report(out, options.format, {"project_id", "phase", "size", "di", "ipm", "x5"},
                table_rows, csv_rows);
    return 0;
}

int run_calibrate(const CalibrateOptions& options, std::ostream& out, std::ostream& err) {
    const dataio::DatasetDocument document = resolve_dataset(options.dataset, options.strict, err);
    const IpmMode mode = parse_mode(options.mode);
    const auto target = calibration::fit_target_from_string(options.target);
    if (!target) throw ValidationError("unknown target '" + options.target + "'");

    const std::string dataset_id =
        options.dataset_id.empty() ? options.dataset : options.dataset_id;
    calibration::CalibrationResult result =
        calibration::calibrate_all(document.projects, mode, *target, dataset_id);
    result.table.fitted_at = utc_timestamp();
    calibration::save_table_file(result.table, options.out_path);

    std::vector<std::vector<std::string>> table_rows;
    std::vector<std::vector<std::string>> csv_rows;
    auto push = [&](const std::string& stratum, std::size_t n, const std::string& status,
                    const std::string& ssr_t, const std::string& r2_t, const std::string& interp,
                    const std::string& cond, const std::string& note, const std::string& ssr_c,
                    const std::string& r2_c) {
        table_rows.push_back({stratum, std::to_string(n), status, ssr_t, r2_t, interp, cond, note});
        csv_rows.push_back({stratum, std::to_string(n), status, ssr_c, r2_c, interp, cond, note});
    };
    for (const calibration::StratumFit& fit : result.fits) {
        std::array<char, 32> ssr{};
        std::snprintf(ssr.data(), ssr.size(), "%.3e", fit.report.sum_squared_residuals);
        push(calibration::to_string(fit.stratum), fit.observation_count, "ok", ssr.data(),
             fit.report.r_squared ? fixed4(*fit.report.r_squared) : "n/a",
             fit.report.exact_interpolation ? "yes" : "no",
             fit.report.condition_warning ? "warn" : "ok", "",
             full(fit.report.sum_squared_residuals),
             fit.report.r_squared ? full(*fit.report.r_squared) : "");
    }
    for (const calibration::StratumFailure& failure : result.failures)
        push(calibration::to_string(failure.stratum), failure.observation_count, "failed", "-",
             "-", "-", "-", failure.message, "", "");

    emit_report(out, options.format,
                {"stratum", "n", "status", "ssr", "r2", "interp", "cond", "note"}, table_rows,
                csv_rows);
    out << "wrote " << result.table.strata.size() << " strata to " << options.out_path << '\n';

    if (!result.failures.empty() && options.strict) {
        err << "ipmkit: " << result.failures.size() << " stratum fit(s) failed; first: "
            << result.failures.front().message << '\n';
        return 2;
    }
    return 0;
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    const dataio::DatasetDocument document = resolve_dataset(options.dataset, options.strict, err);
    const calibration::CoefficientTable table = resolve_coefficients(options.coefficients);
    if (table.target != calibration::FitTarget::Ipm)
        throw ValidationError("coefficient table was fitted for DI, not IPM");
    if (!(options.band >= 0.0)) throw ValidationError("band must be non-negative");

    std::vector<std::vector<std::string>> table_rows;
    std::vector<std::vector<std::string>> csv_rows;
    std::size_t compared = 0;
    std::size_t within = 0;
    std::size_t skipped = 0;
    for (const ProjectRecord& project : document.projects) {
        const SizeClass size = classify_size(project.total_hours);
        for (Phase phase : kAllPhases) {
            const PhaseRecord& record = project.phase(phase);
            const calibration::Stratum stratum{phase, size};
            const std::vector<double>* beta = table.find(stratum);
            if (!beta) {
                ++skipped;
                const std::string note =
                    "no coefficients for stratum " + calibration::to_string(stratum);
                table_rows.push_back({project.id, std::string(to_string(phase)), "-", "-", "-",
                                      "-", note});
                csv_rows.push_back(
                    {project.id, std::string(to_string(phase)), "", "", "", "", note});
                continue;
            }
            const analysis::Comparison comparison =
                analysis::compare(record, project, *beta, table.mode, options.band);
            ++compared;
            if (comparison.within_band) ++within;
            std::string note = comparison.negative_prediction ? "negative prediction" : "";
            table_rows.push_back(
                {project.id, std::string(to_string(phase)), fixed4(comparison.ipm_dc),
                 fixed4(comparison.ipm_tc),
                 comparison.relative_deviation ? fixed4(*comparison.relative_deviation) : "n/a",
                 comparison.relative_deviation ? (comparison.within_band ? "yes" : "no") : "-",
                 note});
            csv_rows.push_back(
                {project.id, std::string(to_string(phase)), full(comparison.ipm_dc),
                 full(comparison.ipm_tc),
                 comparison.relative_deviation ? full(*comparison.relative_deviation) : "",
                 comparison.relative_deviation ? (comparison.within_band ? "true" : "false") : "",
                 note});
        }
    }
    emit_report(out, options.format,
                {"project_id", "phase", "ipm_dc", "ipm_tc", "deviation", "within", "note"},
                table_rows, csv_rows);
    out << "within band: " << within << "/" << compared << " (band " << fixed4(options.band)
        << "), skipped " << skipped << '\n';
    return 0;
}

int run_sensitivity(const SensitivityOptions& options, std::ostream& out, std::ostream&) {
    const calibration::CoefficientTable table = resolve_coefficients(options.coefficients);
    const std::vector<double>& beta = stratum_coefficients(table, options.stratum.resolve());
    const FeatureVector baseline = options.features.resolve();

    std::vector<analysis::Perturbation> perturbations = analysis::default_scan(options.pct);
    for (const std::string& text : options.overrides) {
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ValidationError("override '" + text + "' is not of the form parameter=value");
        const auto parameter = parameter_from_string(text.substr(0, eq));
        if (!parameter)
            throw ValidationError("unknown parameter '" + text.substr(0, eq) + "'");
        double value = 0.0;
        const std::string value_text = text.substr(eq + 1);
        const auto [ptr, ec] =
            std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
        if (ec != std::errc{} || ptr != value_text.data() + value_text.size())
            throw ValidationError("override value '" + value_text + "' is not a number");
        perturbations.push_back({*parameter, analysis::Perturbation::Kind::Absolute, value});
    }

    const std::vector<analysis::SensitivityRow> rows =
        analysis::sensitivity_scan(beta, baseline, perturbations);

    std::vector<std::vector<std::string>> table_rows;
    std::vector<std::vector<std::string>> csv_rows;
    for (const analysis::SensitivityRow& row : rows) {
        const std::string name{to_string(row.parameter)};
        table_rows.push_back({name, fixed4(row.baseline_value), fixed4(row.perturbed_value),
                              fixed4(row.perturbed_ipm), fixed4(row.delta),
                              row.feasible ? "yes" : "no", row.note});
        csv_rows.push_back({name, full(row.baseline_value), full(row.perturbed_value),
                            full(row.perturbed_ipm), full(row.delta),
                            row.feasible ? "true" : "false", row.note});
    }
    if (options.format != "csv" && !rows.empty())
        out << "baseline ipm: " << fixed4(rows.front().baseline_ipm) << '\n';
    emit_report(out, options.format,
                {"parameter", "baseline", "perturbed", "ipm", "delta", "feasible", "note"},
                table_rows, csv_rows);
    return 0;
}

int run_tune(const TuneOptions& options, std::ostream& out, std::ostream&) {
    const calibration::CoefficientTable table = resolve_coefficients(options.coefficients);
    const std::vector<double>& beta = stratum_coefficients(table, options.stratum.resolve());
    const FeatureVector baseline = options.features.resolve();
    const auto parameter = parameter_from_string(options.free_parameter);
    if (!parameter)
        throw ValidationError("unknown parameter '" + options.free_parameter + "'");

    const analysis::TuningSolution solution =
        analysis::tune_parameter(beta, baseline, options.target, *parameter);

    std::string candidates;
    for (const analysis::IntegerCandidate& candidate : solution.integer_candidates) {
        if (!candidates.empty()) candidates += ";";
        candidates += std::to_string(candidate.inspector_count) + ":" +
                      full(candidate.achieved_ipm);
    }
    if (options.format == "csv") {
        write_csv(out,
                  {"free_parameter", "solved_value", "achieved_ipm", "feasible", "note",
                   "integer_candidates"},
                  {{std::string(to_string(solution.free_parameter)), full(solution.solved_value),
                    full(solution.achieved_ipm), solution.feasible ? "true" : "false",
                    solution.feasibility_note, candidates}});
    } else {
        out << "free parameter : " << to_string(solution.free_parameter) << " ("
            << parameter_label(solution.free_parameter) << ")\n";
        out << "solved value   : " << fixed4(solution.solved_value) << '\n';
        out << "achieved ipm   : " << fixed4(solution.achieved_ipm) << '\n';
        out << "feasible       : " << (solution.feasible ? "yes" : "no") << '\n';
        if (!solution.feasibility_note.empty())
            out << "note           : " << solution.feasibility_note << '\n';
        for (const analysis::IntegerCandidate& candidate : solution.integer_candidates)
            out << "with " << candidate.inspector_count
                << " inspector(s): ipm = " << fixed4(candidate.achieved_ipm) << '\n';
    }
    return 0;
}

int run_datasets(const DatasetsOptions& options, std::ostream& out, std::ostream&) {
    const dataio::DatasetDocument& calibration_data = dataio::bundled_calibration_dataset();
    const dataio::DatasetDocument& verification_data = dataio::bundled_verification_dataset();
    const calibration::CoefficientTable& reference = dataio::bundled_reference_coefficients();

    write_table(out, {"name", "kind", "contents", "provenance"},
                {{"@calibration", "dataset",
                  std::to_string(calibration_data.projects.size()) + " projects / " +
                      std::to_string(3 * calibration_data.projects.size()) + " phase records",
                  calibration_data.provenance},
                 {"@verification", "dataset",
                  std::to_string(verification_data.projects.size()) + " projects / " +
                      std::to_string(3 * verification_data.projects.size()) + " phase records",
                  verification_data.provenance},
                 {"@reference", "coefficients",
                  std::to_string(reference.strata.size()) + " strata",
                  "published team coefficients; feature convention " +
                      reference.feature_convention}});

    if (!options.export_dir.empty()) {
        const fs::path dir{options.export_dir};
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create directory: " + dir.string());
        dataio::save_dataset_file(calibration_data, dir / "calibration.csv");
        dataio::save_dataset_file(verification_data, dir / "verification.csv");
        calibration::save_table_file(reference, dir / "reference-coefficients.json");
        out << "exported to " << (dir / "calibration.csv").string() << ", "
            << (dir / "verification.csv").string() << ", "
            << (dir / "reference-coefficients.json").string() << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"software inspection metrics toolkit (DI / IPM)"};
    app.require_subcommand(1);

    const auto mode_check = CLI::IsMember({"eq2", "teamtime"});
    const auto format_check = CLI::IsMember({"table", "csv"});
    const auto phase_check = CLI::IsMember({"requirements", "design", "implementation"});
    const auto size_check = CLI::IsMember({"small", "medium", "large"});

    MetricsOptions metrics_options;
    CLI::App* metrics = app.add_subcommand("metrics", "per-record DI and IPM for a dataset");
    metrics->add_option("dataset", metrics_options.dataset,
                        "dataset file, @calibration, or @verification")->required();
    metrics->add_option("--mode", metrics_options.mode, "IPM effort convention")->check(mode_check);
    metrics->add_option("--format", metrics_options.format, "output format")->check(format_check);
    metrics->add_flag("--strict", metrics_options.strict, "reject bookkeeping inconsistencies");

    CalibrateOptions calibrate_options;
    CLI::App* calibrate =
        app.add_subcommand("calibrate", "fit per-stratum team coefficients by least squares");
    calibrate->add_option("dataset", calibrate_options.dataset,
                          "dataset file, @calibration, or @verification")->required();
    calibrate->add_option("--out", calibrate_options.out_path, "coefficient file to write")
        ->required();
    calibrate->add_option("--mode", calibrate_options.mode, "IPM effort convention")
        ->check(mode_check);
    calibrate->add_option("--target", calibrate_options.target, "fit target")
        ->check(CLI::IsMember({"ipm", "di"}));
    calibrate->add_option("--dataset-id", calibrate_options.dataset_id,
                          "dataset id recorded in the document");
    calibrate->add_option("--format", calibrate_options.format, "output format")
        ->check(format_check);
    calibrate->add_flag("--strict", calibrate_options.strict,
                        "strict parsing; failed strata exit with status 2");

    VerifyOptions verify_options;
    CLI::App* verify = app.add_subcommand(
        "verify", "compare observed IPM against coefficient-table predictions");
    verify->add_option("dataset", verify_options.dataset,
                       "dataset file, @calibration, or @verification")->required();
    verify->add_option("coefficients", verify_options.coefficients,
                       "coefficient file or @reference")->required();
    verify->add_option("--band", verify_options.band, "acceptance band as a fraction");
    verify->add_option("--format", verify_options.format, "output format")->check(format_check);
    verify->add_flag("--strict", verify_options.strict, "reject bookkeeping inconsistencies");

    SensitivityOptions sensitivity_options;
    CLI::App* sensitivity =
        app.add_subcommand("sensitivity", "one-at-a-time perturbation scan of the IPM model");
    sensitivity->add_option("coefficients", sensitivity_options.coefficients,
                            "coefficient file or @reference")->required();
    sensitivity->add_option("--phase", sensitivity_options.stratum.phase, "stratum phase")
        ->required()
        ->check(phase_check);
    sensitivity->add_option("--size", sensitivity_options.stratum.size, "stratum size class")
        ->required()
        ->check(size_check);
    add_feature_flags(sensitivity, sensitivity_options.features);
    sensitivity->add_option("--pct", sensitivity_options.pct,
                            "perturbation fraction for the +/- scan");
    sensitivity->add_option("--override", sensitivity_options.overrides,
                            "extra absolute perturbation, e.g. x2=6.5 (repeatable)");
    sensitivity->add_option("--format", sensitivity_options.format, "output format")
        ->check(format_check);

    TuneOptions tune_options;
    CLI::App* tune =
        app.add_subcommand("tune", "solve one inspection parameter for a target IPM");
    tune->add_option("coefficients", tune_options.coefficients, "coefficient file or @reference")
        ->required();
    tune->add_option("--phase", tune_options.stratum.phase, "stratum phase")
        ->required()
        ->check(phase_check);
    tune->add_option("--size", tune_options.stratum.size, "stratum size class")
        ->required()
        ->check(size_check);
    add_feature_flags(tune, tune_options.features);
    tune->add_option("--target", tune_options.target, "IPM value to hit")->required();
    tune->add_option("--free", tune_options.free_parameter, "parameter to solve for (x1..x5)")
        ->required();
    tune->add_option("--format", tune_options.format, "output format")->check(format_check);

    DatasetsOptions datasets_options;
    CLI::App* datasets = app.add_subcommand("datasets", "list or export the bundled data");
    datasets->add_option("--export", datasets_options.export_dir,
                         "write bundled files into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& error) {
        err << "ipmkit: " << error.what() << '\n';
        return 1;
    }

    try {
        if (metrics->parsed()) return run_metrics(metrics_options, out, err);
        if (calibrate->parsed()) return run_calibrate(calibrate_options, out, err);
        if (verify->parsed()) return run_verify(verify_options, out, err);
        if (sensitivity->parsed()) return run_sensitivity(sensitivity_options, out, err);
        if (tune->parsed()) return run_tune(tune_options, out, err);
        if (datasets->parsed()) return run_datasets(datasets_options, out, err);
    } catch (const IoError& error) {
        err << "ipmkit: " << error.what() << '\n';
        return 3;
    } catch (const NumericalError& error) {
        err << "ipmkit: " << error.what() << '\n';
        return 2;
    } catch (const ValidationError& error) {
        err << "ipmkit: " << error.what() << '\n';
        return 1;
    } catch (const std::exception& error) {
        err << "ipmkit: " << error.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace ipmkit::cli
