#include "ipmkit/analysis.hpp"

#include <cmath>
#include <string>

#include "ipmkit/errors.hpp"

namespace ipmkit::analysis {

namespace {

void require_model(std::span<const double> beta) {
    if (beta.size() != kParameterCount + 1)
        throw ValidationError("expected " + std::to_string(kParameterCount + 1) +
                              " coefficients, got " + std::to_string(beta.size()));
    for (double b : beta)
        if (!std::isfinite(b)) throw ValidationError("coefficient vector has a non-finite entry");
}

long double accumulate_prediction(std::span<const double> beta, const FeatureVector& x) {
    long double acc = beta[0];
    const auto values = x.to_array();
    for (std::size_t i = 0; i < kParameterCount; ++i)
        acc += static_cast<long double>(beta[i + 1]) * values[i];
    return acc;
}

void require_baseline_in_domain(const FeatureVector& baseline) {
    for (Parameter p : kAllParameters) {
        if (!parameter_in_domain(p, baseline[p]))
            throw ValidationError("baseline " + std::string(to_string(p)) + " out of domain: " +
                                  parameter_domain_note(p));
    }
}

}  // namespace

double predict_ipm(std::span<const double> beta, const FeatureVector& x) {
    require_model(beta);
    return static_cast<double>(accumulate_prediction(beta, x));
}

Comparison compare(const PhaseRecord& record, const ProjectRecord& project,
                   std::span<const double> beta, IpmMode mode, double band) {
    if (!(band >= 0.0)) throw ValidationError("band must be non-negative");
    Comparison result;
    result.band = band;
    result.ipm_dc = inspection_performance(record.defects_inspection, record.inspection_time,
                                           record.preparation_time, record.inspector_count, mode);
    result.ipm_tc = predict_ipm(beta, derive_features(record, project));
    result.negative_prediction = result.ipm_tc < 0.0;
    if (result.ipm_dc != 0.0) {
        result.relative_deviation =
            std::fabs(result.ipm_dc - result.ipm_tc) / std::fabs(result.ipm_dc);
        result.within_band = *result.relative_deviation <= band;
    }
    return result;
}

std::vector<Perturbation> default_scan(double fraction) {
    if (!(fraction >= 0.0) || !std::isfinite(fraction))
        throw ValidationError("scan fraction must be non-negative");
    std::vector<Perturbation> scan;
    scan.reserve(2 * kParameterCount);
    for (Parameter p : kAllParameters) {
        scan.push_back({p, Perturbation::Kind::Relative, fraction});
        scan.push_back({p, Perturbation::Kind::Relative, -fraction});
    }
    return scan;
}

std::vector<SensitivityRow> sensitivity_scan(std::span<const double> beta,
                                             const FeatureVector& baseline,
                                             std::span<const Perturbation> perturbations) {
    require_model(beta);
    require_baseline_in_domain(baseline);

    const double baseline_ipm = predict_ipm(beta, baseline);
    std::vector<SensitivityRow> rows;
    rows.reserve(perturbations.size());
    for (const Perturbation& perturbation : perturbations) {
        SensitivityRow row;
        row.parameter = perturbation.parameter;
        row.baseline_value = baseline[perturbation.parameter];
        row.perturbed_value = perturbation.kind == Perturbation::Kind::Relative
                                  ? row.baseline_value * (1.0 + perturbation.amount)
                                  : perturbation.amount;
        row.baseline_ipm = baseline_ipm;

        FeatureVector perturbed = baseline;
        perturbed.set(perturbation.parameter, row.perturbed_value);
        row.perturbed_ipm = predict_ipm(beta, perturbed);
        row.delta = row.perturbed_ipm - row.baseline_ipm;

        if (!parameter_in_domain(perturbation.parameter, row.perturbed_value)) {
            row.feasible = false;
            row.note = parameter_domain_note(perturbation.parameter);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

TuningSolution tune_parameter(std::span<const double> beta, const FeatureVector& baseline,
                              double target_ipm, Parameter free_parameter) {
    require_model(beta);
    if (!std::isfinite(target_ipm)) throw ValidationError("target IPM must be finite");

    const double leverage = beta[static_cast<std::size_t>(free_parameter) + 1];
    if (std::fabs(leverage) <= kZeroLeverage)
        throw NoLeverageError("parameter " + std::string(to_string(free_parameter)) +
                              " does not influence IPM under these coefficients");

    long double numerator = static_cast<long double>(target_ipm) - beta[0];
    const auto values = baseline.to_array();
    for (std::size_t i = 0; i < kParameterCount; ++i) {
        if (static_cast<Parameter>(i) == free_parameter) continue;
        numerator -= static_cast<long double>(beta[i + 1]) * values[i];
    }

    TuningSolution solution;
    solution.free_parameter = free_parameter;
    solution.solved_value = static_cast<double>(numerator / leverage);

    FeatureVector solved = baseline;
    solved.set(free_parameter, solution.solved_value);
    solution.achieved_ipm = predict_ipm(beta, solved);

    solution.feasible = parameter_in_domain(free_parameter, solution.solved_value);
    if (!solution.feasible)
        solution.feasibility_note =
            "solved value " + std::to_string(solution.solved_value) + " is out of domain: " +
            parameter_domain_note(free_parameter);

    if (free_parameter == Parameter::InspectorCount && std::isfinite(solution.solved_value)) {
        // Whole-team candidates around the continuous solution, never below 1.
        const double lo = std::max(1.0, std::floor(solution.solved_value));
        const double hi = std::max(1.0, std::ceil(solution.solved_value));
        for (double candidate : {lo, hi}) {
            if (!solution.integer_candidates.empty() &&
                solution.integer_candidates.back().inspector_count == static_cast<int>(candidate))
                continue;
            FeatureVector with_count = baseline;
            with_count.set(free_parameter, candidate);
            solution.integer_candidates.push_back(
                {static_cast<int>(candidate), predict_ipm(beta, with_count)});
        }
    }
    return solution;
}

}  // namespace ipmkit::analysis
