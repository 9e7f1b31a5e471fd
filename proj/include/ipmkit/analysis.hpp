#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipmkit/domain.hpp"

namespace ipmkit::analysis {

// Coefficients smaller than this have no usable leverage for tuning.
inline constexpr double kZeroLeverage = 1e-12;

// Linear model value beta0 + beta1*x1 + ... + beta5*x5. May be negative;
// callers decide how to report that.
double predict_ipm(std::span<const double> beta, const FeatureVector& x);

// Observed IPM (from defect counts) against the model prediction.
struct Comparison {
    double ipm_dc = 0.0;  // from defect count
    double ipm_tc = 0.0;  // from team coefficients
    std::optional<double> relative_deviation;  // |dc - tc| / |dc|; empty when dc == 0
    double band = 0.0;
    bool within_band = false;
    bool negative_prediction = false;  // model produced a negative IPM
};

Comparison compare(const PhaseRecord& record, const ProjectRecord& project,
                   std::span<const double> beta, IpmMode mode, double band = 0.10);

struct Perturbation {
    enum class Kind { Relative, Absolute };

    Parameter parameter = Parameter::InspectionTime;
    Kind kind = Kind::Relative;
    double amount = 0.0;  // signed fraction for Relative, replacement value for Absolute
};

// The standard one-at-a-time scan: +fraction and -fraction on each parameter.
std::vector<Perturbation> default_scan(double fraction = 0.10);

struct SensitivityRow {
    Parameter parameter = Parameter::InspectionTime;
    double baseline_value = 0.0;
    double perturbed_value = 0.0;
    double baseline_ipm = 0.0;
    double perturbed_ipm = 0.0;
    double delta = 0.0;  // perturbed_ipm - baseline_ipm
    bool feasible = true;
    std::string note;
};

// One row per perturbation; rows whose perturbed value leaves the parameter's
// admissible domain are marked infeasible but still evaluated.
std::vector<SensitivityRow> sensitivity_scan(std::span<const double> beta,
                                             const FeatureVector& baseline,
                                             std::span<const Perturbation> perturbations);

struct IntegerCandidate {
    int inspector_count = 0;
    double achieved_ipm = 0.0;
};

struct TuningSolution {
    Parameter free_parameter = Parameter::InspectionTime;
    double solved_value = 0.0;
    double achieved_ipm = 0.0;  // model value with solved_value substituted
    bool feasible = false;
    std::string feasibility_note;
    // For inspector count: nearest whole-number team sizes and their IPMs.
    std::vector<IntegerCandidate> integer_candidates;
};

// Inverts the linear model for one parameter so the prediction hits
// target_ipm. Throws NoLeverageError when that parameter's coefficient is
// numerically zero.
TuningSolution tune_parameter(std::span<const double> beta, const FeatureVector& baseline,
                              double target_ipm, Parameter free_parameter);

}  // namespace ipmkit::analysis
