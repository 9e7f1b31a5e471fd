#include "ipmkit/dataio.hpp"

namespace ipmkit::dataio {

namespace {

// Eighteen calibration projects, one row per (project, phase). Function
// points are left blank; they derive from total hours at five hours per point.
constexpr const char* kCalibrationCsv = R"(# format: ipmkit-dataset/1
# provenance: bundled sample of industrial inspection records, six projects per size cohort
# note: large-cohort ids renumbered P13-P18; the source sheets reused P11/P12
project_id,total_hours,function_points,phase,total_defects,defects_inspection,defects_testing,inspection_time,prep_time,inspectors,experience_years
P1,250,,requirements,30,16,14,3,0.5,3,1
P1,250,,design,10,5,5,6,1,3,2
P1,250,,implementation,8,4,4,3,1,3,2
P2,263,,requirements,35,17,18,3,0.15,3,1
P2,263,,design,8,3,5,4,0.5,3,2
P2,263,,implementation,14,8,6,3,1.5,3,2
P3,300,,requirements,46,31,15,4,0.5,3,1
P3,300,,design,13,6,7,5,1,4,2
P3,300,,implementation,16,7,9,3,2,3,2
P4,507,,requirements,77,40,37,6,1,3,2
P4,507,,design,26,14,12,11,1,4,3
P4,507,,implementation,17,9,8,3,2,3,3
P5,800,,requirements,64,31,33,24,2,3,2
P5,800,,design,25,13,12,30,3,4,2
P5,800,,implementation,36,16,20,25,2.5,3,3
P6,869,,requirements,58,19,39,6,1,3,5
P6,869,,design,38,16,22,16,2,3,5
P6,869,,implementation,19,7,12,3,2,3,5
P7,1806,,requirements,58,28,30,7,2,3,5
P7,1806,,design,38,19,19,20,2,3,5
P7,1806,,implementation,38,8,30,42,2,3,5
P8,2110,,requirements,139,69,70,48,7,4,3
P8,2110,,design,55,24,31,48,7,5,4
P8,2110,,implementation,36,14,22,95,15,5,5
P9,3000,,requirements,130,60,70,101,12,4,4
P9,3000,,design,42,22,20,156,24,5,5
P9,3000,,implementation,50,28,22,80,8,5,4
P10,4248,,requirements,175,80,95,107,15,5,5
P10,4248,,design,70,34,36,143,25,3,6
P10,4248,,implementation,47,24,23,105,14,5,6
P11,4586,,requirements,200,77,123,200,16,3,2
P11,4586,,design,75,33,42,128,25,4,6
P11,4586,,implementation,53,27,26,91,16,5,6
P12,4644,,requirements,150,40,110,36,3,3,5
P12,4644,,design,70,28,42,16,2,3,6
P12,4644,,implementation,15,6,9,16,3,3,5
P13,6944,,requirements,254,112,142,281,42,7,7
P13,6944,,design,120,77,43,156,33,4,6
P13,6944,,implementation,67,37,30,156,32,3,7
P14,7087,,requirements,400,175,225,225,40,4,6
P14,7087,,design,175,80,95,100,50,4,6
P14,7087,,implementation,120,60,60,100,20,4,6
P15,7416,,requirements,320,156,164,235,69,3,3
P15,7416,,design,150,86,64,116,61,3,4
P15,7416,,implementation,70,32,38,116,45,6,4
P16,8940,,requirements,450,200,250,234,40,4,6
P16,8940,,design,200,90,110,250,60,4,6
P16,8940,,implementation,150,70,80,250,40,4,6
P17,9220,,requirements,375,175,200,250,42.12,5,3
P17,9220,,design,182,78,104,264,123,6,4
P17,9220,,implementation,98,48,50,264,141,4,5
P18,12000,,requirements,410,250,160,450,60,5,6
P18,12000,,design,200,140,60,480,96,5,6
P18,12000,,implementation,115,77,38,750,150,5,4
)";

constexpr const char* kVerificationCsv = R"(# format: ipmkit-dataset/1
# provenance: bundled verification projects with per-phase inspection outcomes
# note: P3 total_hours (10600) restored from its companion what-if sheet; the summary omits it
project_id,total_hours,function_points,phase,total_defects,defects_inspection,defects_testing,inspection_time,prep_time,inspectors,experience_years
P1,1000,,requirements,46,21,25,16.5,1.5,3,3
P1,1000,,design,54,28,26,27.5,2.5,4,4
P1,1000,,implementation,25,16,9,44,4,4,4
P2,3500,,requirements,115,55,60,94,10,4,4
P2,3500,,design,60,25,35,64,11,4,4
P2,3500,,implementation,45,23,22,100,10,4,6
P3,10600,,requirements,200,124,76,223,32,5,8
P3,10600,,design,150,92,58,345,80,5,6
P3,10600,,implementation,225,96,129,509,85,5,5
)";

calibration::CoefficientTable make_reference_table() {
    using calibration::Stratum;
    calibration::CoefficientTable table;
    table.dataset_id = "bundled-reference";
    table.mode = IpmMode::TeamTime;
    table.target = calibration::FitTarget::Ipm;
    // The normalization behind these published values is not recorded, so
    // they are not comparable with fits on raw-unit features.
    table.feature_convention = "unknown";
    table.strata[{Phase::Requirements, SizeClass::Small}] =
        {0.0, -379.8835, -255.4827, 23.5850, -3.9719, -23.2132};
    table.strata[{Phase::Requirements, SizeClass::Medium}] =
        {4.4683, -19.7096, 108.3653, -0.3135, 0.0933, -3.0703};
    table.strata[{Phase::Requirements, SizeClass::Large}] =
        {0.8698, -1.3141, -22.3141, -0.1130, 0.0030, 0.9589};
    table.strata[{Phase::Design, SizeClass::Small}] =
        {1.0748, 8.3533, -28.0972, 0.6315, 0.3499, -8.0960};
    table.strata[{Phase::Design, SizeClass::Medium}] =
        {-3.2532, 5.6946, -227.1285, 0.2357, -0.1879, 9.9915};
    table.strata[{Phase::Design, SizeClass::Large}] =
        {0.5904, 1.2494, 1.6164, -0.0314, 0.0609, -0.8328};
    table.strata[{Phase::Implementation, SizeClass::Small}] =
        {0.0, -6.5943, 40.3309, -0.0797, -0.1705, 2.9149};
    table.strata[{Phase::Implementation, SizeClass::Medium}] =
        {0.3796, -4.9077, 9.1943, 0.0205, -0.0499, 0.6252};
    table.strata[{Phase::Implementation, SizeClass::Large}] =
        {13.7607, -14.0781, -14.0568, -0.4536, -0.5835, -7.7391};
    return table;
}

}  // namespace

const DatasetDocument& bundled_calibration_dataset() {
    static const DatasetDocument document = [] {
        DatasetDocument d = parse_dataset_text(kCalibrationCsv, {.strict = true});
        return d;
    }();
    return document;
}

const DatasetDocument& bundled_verification_dataset() {
    static const DatasetDocument document = [] {
        DatasetDocument d = parse_dataset_text(kVerificationCsv, {.strict = true});
        return d;
    }();
    return document;
}

const calibration::CoefficientTable& bundled_reference_coefficients() {
    static const calibration::CoefficientTable table = make_reference_table();
    return table;
}

}  // namespace ipmkit::dataio
