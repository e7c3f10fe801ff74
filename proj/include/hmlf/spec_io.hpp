#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hmlf/analysis.hpp"
#include "hmlf/series.hpp"

namespace hmlf::io {

/// Spec file format: {"upper":[...],"lower":[...],"alpha":x,"beta":y}.
/// Doubles are written in shortest round-trip form, so parse(serialize(s)) == s.
std::string spec_to_json(const HmlfSpec& spec);

/// Throws Error(InvalidArgument) on malformed JSON or missing/mistyped fields.
/// upper and lower default to empty lists.
HmlfSpec spec_from_json(std::string_view text);

HmlfSpec load_spec_file(const std::filesystem::path& path);
void save_spec_file(const std::filesystem::path& path, const HmlfSpec& spec);

/// %.17g: enough digits to round-trip any double.
std::string format_double(double x);

/// Header `u,value,status`, one row per sample.
void write_grid_csv(std::ostream& out, const std::vector<GridSample>& samples);

/// {"spec": {...}, "samples": [{"u":..,"value":..,"status":..}, ...]}; NaN values become null.
void write_grid_json(std::ostream& out, const HmlfSpec& spec,
                     const std::vector<GridSample>& samples);

void write_zero_report_json(std::ostream& out, const HmlfSpec& spec, const ZeroReport& report);

}  // namespace hmlf::io
