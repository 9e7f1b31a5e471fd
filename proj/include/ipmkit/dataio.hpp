#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ipmkit/calibration.hpp"
#include "ipmkit/domain.hpp"

namespace ipmkit::dataio {

// Dataset files are delimited text, one row per (project, phase), with a
// mandatory header naming these columns (any order):
//   project_id, total_hours, function_points, phase, total_defects,
//   defects_inspection, defects_testing, inspection_time, prep_time,
//   inspectors, experience_years
// Comma or tab delimited, '.' decimal separator, '#' starts a comment line.
// The function_points cell may be empty.
struct DatasetDocument {
    std::string format_version = "1";
    std::string provenance;
    std::vector<ProjectRecord> projects;
    // Lenient-mode diagnostics gathered while parsing; not serialized.
    std::vector<std::string> warnings;

    bool operator==(const DatasetDocument&) const = default;
};

struct ParseOptions {
    // Strict mode turns bookkeeping warnings (Ni + Nt != Td, Ni > Td) into errors.
    bool strict = false;
};

DatasetDocument parse_dataset(std::istream& in, const ParseOptions& options = {});
DatasetDocument parse_dataset_text(std::string_view text, const ParseOptions& options = {});
DatasetDocument load_dataset_file(const std::filesystem::path& path,
                                  const ParseOptions& options = {});

std::string serialize_dataset(const DatasetDocument& document);
void save_dataset_file(const DatasetDocument& document, const std::filesystem::path& path);

// Bundled data shipped with the toolkit. Eighteen calibration projects (six
// per size class) and three verification projects, plus the published
// reference coefficient table that pairs with them. The reference table's
// feature convention is unknown, so treat its predictions as informational.
const DatasetDocument& bundled_calibration_dataset();
const DatasetDocument& bundled_verification_dataset();
const calibration::CoefficientTable& bundled_reference_coefficients();

}  // namespace ipmkit::dataio
