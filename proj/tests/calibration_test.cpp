#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "ipmkit/calibration.hpp"
#include "ipmkit/dataio.hpp"
#include "ipmkit/errors.hpp"

using namespace ipmkit;
using namespace ipmkit::calibration;

namespace {

bool is_rank_deficient_small_stratum(const Stratum& stratum) {
    // The bundled small-project cohort has a constant inspector count in the
    // requirements and implementation phases, which is collinear with the
    // intercept.
    return stratum.size == SizeClass::Small &&
           (stratum.phase == Phase::Requirements || stratum.phase == Phase::Implementation);
}

double max_abs(const std::vector<double>& values) {
    double out = 0.0;
    for (double v : values) out = std::max(out, std::fabs(v));
    return out;
}

}  // namespace

TEST_CASE("stratum calibration on the bundled projects") {
    const auto& projects = dataio::bundled_calibration_dataset().projects;
    for (Phase phase : kAllPhases) {
        for (SizeClass size : kAllSizeClasses) {
            const Stratum stratum{phase, size};
            if (is_rank_deficient_small_stratum(stratum)) {
                CHECK_THROWS_AS(
                    calibrate_stratum(projects, stratum, IpmMode::TeamTime, FitTarget::Ipm),
                    SingularSystemError);
                continue;
            }
            const regression::FitReport report =
                calibrate_stratum(projects, stratum, IpmMode::TeamTime, FitTarget::Ipm);
            CHECK(report.coefficients.size() == 6);
            CHECK(report.residuals.size() == 6);
            CHECK(report.exact_interpolation);

            // six observations, six coefficients: the fit interpolates
            std::vector<double> targets;
            for (const ProjectRecord& project : projects) {
                if (classify_size(project.total_hours) != size) continue;
                const PhaseRecord& record = project.phase(phase);
                targets.push_back(inspection_performance(
                    record.defects_inspection, record.inspection_time, record.preparation_time,
                    record.inspector_count, IpmMode::TeamTime));
            }
            const double bound = 1e-8 * max_abs(targets);
            for (double r : report.residuals) CHECK(std::fabs(r) <= bound);
        }
    }
}

TEST_CASE("stratum calibration matches a hand-wired fit") {
    const auto& projects = dataio::bundled_calibration_dataset().projects;
    const Stratum stratum{Phase::Design, SizeClass::Medium};

    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    for (const ProjectRecord& project : projects) {
        if (classify_size(project.total_hours) != SizeClass::Medium) continue;
        const PhaseRecord& record = project.phase(Phase::Design);
        const FeatureVector f = derive_features(record, project);
        rows.push_back({f.inspection_time, f.preparation_time, f.inspector_count,
                        f.experience_years, f.complexity});
        y.push_back(inspection_performance(record.defects_inspection, record.inspection_time,
                                           record.preparation_time, record.inspector_count,
                                           IpmMode::TeamTime));
    }
    const regression::FitReport direct =
        regression::fit_least_squares(regression::build_design_matrix(rows), y);
    const regression::FitReport via_stratum =
        calibrate_stratum(projects, stratum, IpmMode::TeamTime, FitTarget::Ipm);
    CHECK(via_stratum.coefficients == direct.coefficients);
    CHECK(via_stratum.residuals == direct.residuals);
}

TEST_CASE("stratum calibration respects mode and target") {
    const auto& projects = dataio::bundled_calibration_dataset().projects;

    const regression::FitReport person_hours = calibrate_stratum(
        projects, {Phase::Design, SizeClass::Medium}, IpmMode::PersonHours, FitTarget::Ipm);
    CHECK(person_hours.exact_interpolation);
    CHECK(person_hours.coefficients.size() == 6);

    // DI model: four regressors, six observations, so residuals may be nonzero
    const regression::FitReport di = calibrate_stratum(
        projects, {Phase::Design, SizeClass::Medium}, IpmMode::TeamTime, FitTarget::Di);
    CHECK(di.coefficients.size() == 5);
    CHECK_FALSE(di.exact_interpolation);
}

TEST_CASE("stratum calibration error paths") {
    const auto& projects = dataio::bundled_calibration_dataset().projects;

    std::vector<ProjectRecord> small_only;
    for (const ProjectRecord& p : projects)
        if (classify_size(p.total_hours) == SizeClass::Small) small_only.push_back(p);

    CHECK_THROWS_AS(calibrate_stratum(small_only, {Phase::Design, SizeClass::Medium},
                                      IpmMode::TeamTime, FitTarget::Ipm),
                    ValidationError);

    // two observations cannot pin six coefficients
    const std::vector<ProjectRecord> two(small_only.begin(), small_only.begin() + 2);
    CHECK_THROWS_AS(calibrate_stratum(two, {Phase::Design, SizeClass::Small}, IpmMode::TeamTime,
                                      FitTarget::Ipm),
                    ValidationError);
}

TEST_CASE("calibrate_all over the bundled dataset") {
    const auto& projects = dataio::bundled_calibration_dataset().projects;
    const CalibrationResult result =
        calibrate_all(projects, IpmMode::TeamTime, FitTarget::Ipm, "bundled-calibration");

    CHECK(result.fits.size() == 7);
    CHECK(result.failures.size() == 2);
    CHECK(result.table.strata.size() == 7);
    for (const StratumFailure& failure : result.failures) {
        CHECK(is_rank_deficient_small_stratum(failure.stratum));
        CHECK(failure.message.find("singular") != std::string::npos);
        CHECK(failure.observation_count == 6);
    }
    CHECK(result.table.dataset_id == "bundled-calibration");
    CHECK(result.table.mode == IpmMode::TeamTime);
    CHECK(result.table.target == FitTarget::Ipm);

    // determinism
    const CalibrationResult again =
        calibrate_all(projects, IpmMode::TeamTime, FitTarget::Ipm, "bundled-calibration");
    CHECK(again.table == result.table);
}

TEST_CASE("calibrate_all with partial coverage") {
    const auto& projects = dataio::bundled_calibration_dataset().projects;
    std::vector<ProjectRecord> small_only;
    for (const ProjectRecord& p : projects)
        if (classify_size(p.total_hours) == SizeClass::Small) small_only.push_back(p);

    const CalibrationResult result = calibrate_all(small_only);
    CHECK(result.fits.size() + result.failures.size() == 3);  // medium/large strata absent
    CHECK(result.fits.size() == 1);                           // only design/small is full rank
    CHECK(result.fits.front().stratum == Stratum{Phase::Design, SizeClass::Small});

    CHECK_THROWS_AS(calibrate_all({}), ValidationError);
}

TEST_CASE("duplicated observations surface as a recorded failure") {
    auto projects = dataio::bundled_calibration_dataset().projects;
    // clone P7's design row (and hours, hence complexity) into P8
    auto p7 = std::find_if(projects.begin(), projects.end(),
                           [](const ProjectRecord& p) { return p.id == "P7"; });
    auto p8 = std::find_if(projects.begin(), projects.end(),
                           [](const ProjectRecord& p) { return p.id == "P8"; });
    REQUIRE(p7 != projects.end());
    REQUIRE(p8 != projects.end());
    p8->total_hours = p7->total_hours;
    p8->phase(Phase::Design) = p7->phase(Phase::Design);

    const CalibrationResult result = calibrate_all(projects);
    bool found = false;
    for (const StratumFailure& failure : result.failures)
        found = found || failure.stratum == Stratum{Phase::Design, SizeClass::Medium};
    CHECK(found);
    CHECK(result.fits.size() + result.failures.size() == 9);
}

TEST_CASE("coefficient table lookup") {
    const CoefficientTable& reference = dataio::bundled_reference_coefficients();
    REQUIRE(reference.find({Phase::Design, SizeClass::Large}) != nullptr);
    CHECK(*reference.find({Phase::Design, SizeClass::Large}) ==
          std::vector<double>{0.5904, 1.2494, 1.6164, -0.0314, 0.0609, -0.8328});
    CHECK(reference.find({Phase::Design, SizeClass::Large}) != nullptr);

    CoefficientTable empty;
    CHECK(empty.find({Phase::Design, SizeClass::Large}) == nullptr);
}

TEST_CASE("coefficient documents round-trip exactly") {
    const auto& projects = dataio::bundled_calibration_dataset().projects;
    CalibrationResult result = calibrate_all(projects, IpmMode::TeamTime, FitTarget::Ipm, "rt");
    result.table.fitted_at = "2026-01-01T00:00:00Z";

    std::stringstream stream;
    save_table(result.table, stream);
    const CoefficientTable loaded = load_table(stream);
    CHECK(loaded == result.table);

    // file round-trip
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "ipmkit_rt_test.json";
    save_table_file(result.table, path);
    CHECK(load_table_file(path) == result.table);
    std::filesystem::remove(path);

    // reference table too
    std::stringstream reference_stream;
    save_table(dataio::bundled_reference_coefficients(), reference_stream);
    CHECK(load_table(reference_stream) == dataio::bundled_reference_coefficients());

    // empty table is a valid document
    CoefficientTable empty;
    std::stringstream empty_stream;
    save_table(empty, empty_stream);
    CHECK(load_table(empty_stream) == empty);
}

TEST_CASE("coefficient document parse errors name the problem") {
    auto load_text = [](const std::string& text) {
        std::stringstream stream(text);
        return load_table(stream);
    };

    CHECK_THROWS_AS(load_text("not json at all"), ParseError);
    CHECK_THROWS_AS(load_text("[1,2,3]"), ParseError);

    try {
        load_text(R"({"format":"ipmkit-coefficients","version":1,"dataset_id":"x",
                      "fitted_at":"","target":"ipm","feature_convention":"raw","strata":[]})");
        FAIL("expected ParseError");
    } catch (const ParseError& error) {
        CHECK(error.field() == "mode");
        CHECK(std::string(error.what()).find("mode") != std::string::npos);
    }

    // wrong coefficient count for the declared target
    CHECK_THROWS_AS(load_text(R"({"format":"ipmkit-coefficients","version":1,"dataset_id":"x",
        "fitted_at":"","mode":"teamtime","target":"ipm","feature_convention":"raw",
        "strata":[{"phase":"design","size":"large","beta":[1,2,3]}]})"),
                    ParseError);

    // duplicate stratum
    CHECK_THROWS_AS(load_text(R"({"format":"ipmkit-coefficients","version":1,"dataset_id":"x",
        "fitted_at":"","mode":"teamtime","target":"ipm","feature_convention":"raw",
        "strata":[{"phase":"design","size":"large","beta":[1,2,3,4,5,6]},
                  {"phase":"design","size":"large","beta":[1,2,3,4,5,6]}]})"),
                    ParseError);

    // unknown enum text
    CHECK_THROWS_AS(load_text(R"({"format":"ipmkit-coefficients","version":1,"dataset_id":"x",
        "fitted_at":"","mode":"teamtime","target":"ipm","feature_convention":"raw",
        "strata":[{"phase":"coding","size":"large","beta":[1,2,3,4,5,6]}]})"),
                    ParseError);
}
