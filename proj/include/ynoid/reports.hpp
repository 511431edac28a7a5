#pragma once

#include <string>
#include <vector>

#include "ynoid/oracle.hpp"

namespace ynoid {

// All machine-readable output is emitted at 12 significant digits; round12
// snaps a value onto that grid so parse/re-serialize cycles are stable.
double round12(double value);
std::string format12(double value);

// JSON renderers (schema_version 1, two-space indent, trailing newline).
std::string index_report_json(const IndexReport& report);
std::string sweep_json(const std::vector<IndexReport>& rows);
std::string spectrum_json(const YNoidGeometry& geometry, const std::vector<SteklovMode>& table);
std::string verification_json(const YNoidGeometry& geometry, const VerificationReport& report);

// CSV renderers (header row, LF line endings, 12 significant digits).
std::string index_report_csv(const IndexReport& report);
std::string sweep_csv(const std::vector<IndexReport>& rows);
std::string spectrum_csv(const YNoidGeometry& geometry, const std::vector<SteklovMode>& table);
std::string verification_csv(const YNoidGeometry& geometry, const VerificationReport& report);

// Human-readable tables.
std::string index_report_table(const IndexReport& report);
std::string sweep_table(const std::vector<IndexReport>& rows);
std::string spectrum_text_table(const YNoidGeometry& geometry,
                                const std::vector<SteklovMode>& table);
std::string verification_table(const YNoidGeometry& geometry, const VerificationReport& report);

}  // namespace ynoid
