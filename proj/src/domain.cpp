#include "ipmkit/domain.hpp"

#include <cmath>

#include "ipmkit/errors.hpp"

namespace ipmkit {

namespace {

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

}  // namespace

std::string_view to_string(Phase phase) {
    switch (phase) {
        case Phase::Requirements: return "requirements";
        case Phase::Design: return "design";
        case Phase::Implementation: return "implementation";
    }
    return "?";
}

std::optional<Phase> phase_from_string(std::string_view text) {
    const std::string t = ascii_lower(text);
    if (t == "requirements") return Phase::Requirements;
    if (t == "design") return Phase::Design;
    if (t == "implementation") return Phase::Implementation;
    return std::nullopt;
}

std::string_view to_string(SizeClass size) {
    switch (size) {
        case SizeClass::Small: return "small";
        case SizeClass::Medium: return "medium";
        case SizeClass::Large: return "large";
    }
    return "?";
}

std::optional<SizeClass> size_class_from_string(std::string_view text) {
    const std::string t = ascii_lower(text);
    if (t == "small") return SizeClass::Small;
    if (t == "medium") return SizeClass::Medium;
    if (t == "large") return SizeClass::Large;
    return std::nullopt;
}

std::string_view to_string(ExperienceBand band) {
    switch (band) {
        case ExperienceBand::Novice: return "novice";
        case ExperienceBand::Average: return "average";
        case ExperienceBand::Experienced: return "experienced";
    }
    return "?";
}

std::string_view to_string(IpmMode mode) {
    return mode == IpmMode::PersonHours ? "eq2" : "teamtime";
}

std::optional<IpmMode> ipm_mode_from_string(std::string_view text) {
    const std::string t = ascii_lower(text);
    if (t == "eq2") return IpmMode::PersonHours;
    if (t == "teamtime") return IpmMode::TeamTime;
    return std::nullopt;
}

std::string_view to_string(Parameter parameter) {
    switch (parameter) {
        case Parameter::InspectionTime: return "x1";
        case Parameter::PreparationTime: return "x2";
        case Parameter::InspectorCount: return "x3";
        case Parameter::ExperienceYears: return "x4";
        case Parameter::Complexity: return "x5";
    }
    return "?";
}

std::string_view parameter_label(Parameter parameter) {
    switch (parameter) {
        case Parameter::InspectionTime: return "inspection_time";
        case Parameter::PreparationTime: return "prep_time";
        case Parameter::InspectorCount: return "inspectors";
        case Parameter::ExperienceYears: return "experience_years";
        case Parameter::Complexity: return "complexity";
    }
    return "?";
}

std::optional<Parameter> parameter_from_string(std::string_view text) {
    const std::string t = ascii_lower(text);
    for (Parameter p : kAllParameters) {
        if (t == to_string(p) || t == parameter_label(p)) return p;
    }
    if (t == "inspector_count" || t == "inspector-count") return Parameter::InspectorCount;
    if (t == "preparation_time" || t == "prep-time") return Parameter::PreparationTime;
    if (t == "inspection-time") return Parameter::InspectionTime;
    if (t == "experience" || t == "experience-years") return Parameter::ExperienceYears;
    return std::nullopt;
}

bool parameter_in_domain(Parameter parameter, double value) {
    if (!std::isfinite(value)) return false;
    switch (parameter) {
        case Parameter::InspectorCount: return value >= 1.0;
        case Parameter::Complexity: return value >= 0.0 && value <= 1.0;
        default: return value >= 0.0;
    }
}

std::string parameter_domain_note(Parameter parameter) {
    switch (parameter) {
        case Parameter::InspectorCount: return "inspector count must be at least 1";
        case Parameter::Complexity: return "complexity must lie in [0, 1]";
        default:
            return std::string(parameter_label(parameter)) + " must be non-negative";
    }
}

double FeatureVector::operator[](Parameter parameter) const {
    switch (parameter) {
        case Parameter::InspectionTime: return inspection_time;
        case Parameter::PreparationTime: return preparation_time;
        case Parameter::InspectorCount: return inspector_count;
        case Parameter::ExperienceYears: return experience_years;
        case Parameter::Complexity: return complexity;
    }
    return 0.0;
}

void FeatureVector::set(Parameter parameter, double value) {
    switch (parameter) {
        case Parameter::InspectionTime: inspection_time = value; return;
        case Parameter::PreparationTime: preparation_time = value; return;
        case Parameter::InspectorCount: inspector_count = value; return;
        case Parameter::ExperienceYears: experience_years = value; return;
        case Parameter::Complexity: complexity = value; return;
    }
}

std::array<double, kParameterCount> FeatureVector::to_array() const {
    return {inspection_time, preparation_time, inspector_count, experience_years, complexity};
}

double depth_of_inspection(int defects_inspection, int total_defects) {
    if (total_defects == 0) throw ValidationError("no defects observed");
    if (total_defects < 0) throw ValidationError("total defect count is negative");
    if (defects_inspection < 0) throw ValidationError("inspection defect count is negative");
    if (defects_inspection > total_defects)
        throw ValidationError("inspection defects exceed total defects");
    return static_cast<double>(defects_inspection) / static_cast<double>(total_defects);
}

double inspection_performance(int defects_inspection, double inspection_time,
                              double preparation_time, int inspector_count, IpmMode mode) {
    if (defects_inspection < 0) throw ValidationError("inspection defect count is negative");
    if (inspection_time < 0 || preparation_time < 0)
        throw ValidationError("inspection and preparation time must be non-negative");
    const double team_time = inspection_time + preparation_time;
    if (team_time <= 0.0) throw ValidationError("zero inspection time");
    const double per_team_time = static_cast<double>(defects_inspection) / team_time;
    if (mode == IpmMode::PersonHours) {
        if (inspector_count < 1) throw ValidationError("inspector count must be at least 1");
        // Dividing the team-time value keeps the two modes related by exactly 1/N.
        return per_team_time / inspector_count;
    }
    return per_team_time;
}

double complexity_from_function_points(int function_points) {
    if (function_points < 1)
        throw ValidationError("function points must be at least 1");
    return std::log10(static_cast<double>(function_points)) / 4.0;
}

int estimate_function_points(double total_hours) {
    if (!(total_hours > 0.0)) throw ValidationError("total hours must be positive");
    const long fp = std::lround(total_hours / 5.0);
    return fp < 1 ? 1 : static_cast<int>(fp);
}

int function_points_of(const ProjectRecord& project) {
    if (project.function_points) {
        if (*project.function_points < 1)
            throw ValidationError("project '" + project.id + "': function points must be at least 1");
        return *project.function_points;
    }
    return estimate_function_points(project.total_hours);
}

SizeClass classify_size(double total_hours) {
    if (!(total_hours > 0.0)) throw ValidationError("total hours must be positive");
    if (total_hours < 1000.0) return SizeClass::Small;
    if (total_hours <= 5000.0) return SizeClass::Medium;
    return SizeClass::Large;
}

ExperienceBand band_experience(double years) {
    if (years < 0.0) throw ValidationError("experience years must be non-negative");
    if (years < 2.0) return ExperienceBand::Novice;
    if (years <= 4.0) return ExperienceBand::Average;
    return ExperienceBand::Experienced;
}

FeatureVector derive_features(const PhaseRecord& record, const ProjectRecord& project) {
    FeatureVector features;
    features.inspection_time = record.inspection_time;
    features.preparation_time = record.preparation_time;
    features.inspector_count = static_cast<double>(record.inspector_count);
    features.experience_years = record.experience_years;
    features.complexity = complexity_from_function_points(function_points_of(project));
    return features;
}

}  // namespace ipmkit
