#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipmkit/domain.hpp"
#include "ipmkit/regression.hpp"

namespace ipmkit::calibration {

// One (phase, size) cell of the coefficient table.
struct Stratum {
    Phase phase = Phase::Requirements;
    SizeClass size = SizeClass::Small;

    auto operator<=>(const Stratum&) const = default;
};

std::string to_string(const Stratum& stratum);  // "requirements/small"

enum class FitTarget { Ipm, Di };

std::string_view to_string(FitTarget target);
std::optional<FitTarget> fit_target_from_string(std::string_view text);

// Number of fitted coefficients (intercept included) for a target: the IPM
// model uses regressors x1..x5, the DI model x1..x4.
std::size_t coefficient_count(FitTarget target);

// Fitted coefficient vectors per stratum plus the conventions they were
// fitted under. Missing strata are simply absent.
struct CoefficientTable {
    std::map<Stratum, std::vector<double>> strata;
    std::string dataset_id;
    std::string fitted_at;  // informational timestamp; empty when unknown
    IpmMode mode = IpmMode::TeamTime;
    FitTarget target = FitTarget::Ipm;
    std::string feature_convention = "raw";

    const std::vector<double>* find(const Stratum& stratum) const;

    bool operator==(const CoefficientTable&) const = default;
};

// Least-squares fit for a single stratum. The target vector is IPM (in the
// given mode) or DI per record; regressors come from derive_features. Throws
// ValidationError when the stratum is empty or has fewer observations than
// coefficients, SingularSystemError when the normal equations are singular.
regression::FitReport calibrate_stratum(std::span<const ProjectRecord> projects,
                                        const Stratum& stratum, IpmMode mode, FitTarget target);

struct StratumFit {
    Stratum stratum;
    std::size_t observation_count = 0;
    regression::FitReport report;
};

struct StratumFailure {
    Stratum stratum;
    std::size_t observation_count = 0;
    std::string message;
};

struct CalibrationResult {
    CoefficientTable table;
    std::vector<StratumFit> fits;
    std::vector<StratumFailure> failures;
};

// Fits every populated stratum; failures are collected, not fatal.
CalibrationResult calibrate_all(std::span<const ProjectRecord> projects,
                                IpmMode mode = IpmMode::TeamTime,
                                FitTarget target = FitTarget::Ipm,
                                std::string dataset_id = {});

// Coefficient documents are JSON; values round-trip bit-exactly.
void save_table(const CoefficientTable& table, std::ostream& out);
void save_table_file(const CoefficientTable& table, const std::filesystem::path& path);
CoefficientTable load_table(std::istream& in);
CoefficientTable load_table_file(const std::filesystem::path& path);

}  // namespace ipmkit::calibration
