#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ipmkit {

enum class Phase { Requirements, Design, Implementation };

inline constexpr std::array<Phase, 3> kAllPhases = {Phase::Requirements, Phase::Design,
                                                    Phase::Implementation};

std::string_view to_string(Phase phase);
std::optional<Phase> phase_from_string(std::string_view text);

// Project size by total development effort: < 1000 person-hours is small,
// 1000..5000 medium, above 5000 large.
enum class SizeClass { Small, Medium, Large };

inline constexpr std::array<SizeClass, 3> kAllSizeClasses = {SizeClass::Small, SizeClass::Medium,
                                                             SizeClass::Large};

std::string_view to_string(SizeClass size);
std::optional<SizeClass> size_class_from_string(std::string_view text);

// Inspector experience bands: [0,2) novice, [2,4] average, (4,inf) experienced.
enum class ExperienceBand { Novice, Average, Experienced };

std::string_view to_string(ExperienceBand band);

// The inspection-effort denominator of IPM. Two conventions are in use:
//   PersonHours ("eq2"):   effort = inspectors * (inspection + preparation) time
//   TeamTime ("teamtime"): effort = inspection + preparation time
// TeamTime is the default everywhere; it is the convention the bundled
// verification data was recorded under.
enum class IpmMode { PersonHours, TeamTime };

std::string_view to_string(IpmMode mode);
std::optional<IpmMode> ipm_mode_from_string(std::string_view text);

// One project-phase observation of inspection work and its defect yield.
struct PhaseRecord {
    Phase phase = Phase::Requirements;
    int total_defects = 0;       // found by inspection plus testing
    int defects_inspection = 0;  // found by inspection
    int defects_testing = 0;     // found by testing
    double inspection_time = 0.0;   // hours
    double preparation_time = 0.0;  // hours
    int inspector_count = 1;
    double experience_years = 0.0;  // team experience figure

    bool operator==(const PhaseRecord&) const = default;
};

// A project with exactly one PhaseRecord per development phase.
struct ProjectRecord {
    std::string id;
    double total_hours = 0.0;  // person-hours for the whole project
    std::optional<int> function_points;
    std::array<PhaseRecord, 3> phases{};  // indexed by Phase

    const PhaseRecord& phase(Phase p) const { return phases[static_cast<std::size_t>(p)]; }
    PhaseRecord& phase(Phase p) { return phases[static_cast<std::size_t>(p)]; }

    bool operator==(const ProjectRecord&) const = default;
};

// Regressors of the linear IPM model, in slot order x1..x5.
enum class Parameter {
    InspectionTime,   // x1
    PreparationTime,  // x2
    InspectorCount,   // x3
    ExperienceYears,  // x4
    Complexity,       // x5
};

inline constexpr std::size_t kParameterCount = 5;
inline constexpr std::array<Parameter, kParameterCount> kAllParameters = {
    Parameter::InspectionTime, Parameter::PreparationTime, Parameter::InspectorCount,
    Parameter::ExperienceYears, Parameter::Complexity};

std::string_view to_string(Parameter parameter);       // "x1".."x5"
std::string_view parameter_label(Parameter parameter); // e.g. "inspection_time"
// Accepts both spellings ("x3", "inspectors", "inspector_count").
std::optional<Parameter> parameter_from_string(std::string_view text);

// Admissible values: x3 >= 1, x5 in [0,1], the rest >= 0. All must be finite.
bool parameter_in_domain(Parameter parameter, double value);
std::string parameter_domain_note(Parameter parameter);

// Model inputs for one observation.
struct FeatureVector {
    double inspection_time = 0.0;   // x1
    double preparation_time = 0.0;  // x2
    double inspector_count = 0.0;   // x3
    double experience_years = 0.0;  // x4
    double complexity = 0.0;        // x5 in [0,1]

    double operator[](Parameter parameter) const;
    void set(Parameter parameter, double value);
    std::array<double, kParameterCount> to_array() const;

    bool operator==(const FeatureVector&) const = default;
};

// Fraction of all defects that inspection caught: Ni / Td.
double depth_of_inspection(int defects_inspection, int total_defects);

// Defects caught per unit of inspection effort; the denominator depends on mode.
double inspection_performance(int defects_inspection, double inspection_time,
                              double preparation_time, int inspector_count, IpmMode mode);

// Complexity regressor on a logarithmic scale: log10(fp) / 4, so 1 function
// point maps to 0 and 10000 function points map to 1.
double complexity_from_function_points(int function_points);

// Rule of thumb: one function point per five person-hours, never below 1.
int estimate_function_points(double total_hours);

// Explicit function points when recorded, otherwise estimated from hours.
int function_points_of(const ProjectRecord& project);

SizeClass classify_size(double total_hours);

ExperienceBand band_experience(double years);

// Regressors x1..x5 for one phase record; the project supplies size/complexity.
FeatureVector derive_features(const PhaseRecord& record, const ProjectRecord& project);

}  // namespace ipmkit
