#include "hmlf/spec_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hmlf/error.hpp"

namespace hmlf::io {
namespace {

using nlohmann::json;

json spec_object(const HmlfSpec& spec) {
  return json{{"upper", spec.upper}, {"lower", spec.lower}, {"alpha", spec.alpha},
              {"beta", spec.beta}};
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<double> number_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number()) {
      throw Error(ErrorCode::InvalidArgument, std::string(key) + " entries must be numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw Error(ErrorCode::InvalidArgument, std::string("spec needs numeric field ") + key);
  }
  return j.at(key).get<double>();
}

}  // namespace

std::string spec_to_json(const HmlfSpec& spec) { return spec_object(spec).dump(); }

HmlfSpec spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("spec JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "spec JSON must be an object");
  HmlfSpec spec;
  spec.upper = number_list(j, "upper");
  spec.lower = number_list(j, "lower");
  spec.alpha = number_field(j, "alpha");
  spec.beta = number_field(j, "beta");
  return spec;
}

HmlfSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return spec_from_json(buf.str());
}

void save_spec_file(const std::filesystem::path& path, const HmlfSpec& spec) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write spec file " + path.string());
  out << spec_to_json(spec) << '\n';
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_grid_csv(std::ostream& out, const std::vector<GridSample>& samples) {
  out << "u,value,status\n";
  for (const GridSample& s : samples) {
    out << format_double(s.u) << ',' << format_double(s.value) << ',' << to_string(s.status)
        << '\n';
  }
}

void write_grid_json(std::ostream& out, const HmlfSpec& spec,
                     const std::vector<GridSample>& samples) {
  json rows = json::array();
  for (const GridSample& s : samples) {
    rows.push_back({{"u", s.u}, {"value", number_or_null(s.value)},
                    {"status", std::string(to_string(s.status))}});
  }
  out << json{{"spec", spec_object(spec)}, {"samples", rows}}.dump(2) << '\n';
}

void write_zero_report_json(std::ostream& out, const HmlfSpec& spec, const ZeroReport& report) {
  json zeros = json::array();
  for (const RealZero& z : report.zeros) {
    zeros.push_back({{"location", z.location},
                     {"bracket", {z.lo, z.hi}},
                     {"residual", z.residual}});
  }
  out << json{{"spec", spec_object(spec)},
              {"scan_range", {report.scan_min, report.scan_max}},
              {"scan_points", report.scan_points},
              {"zeros", zeros}}
             .dump(2)
      << '\n';
}

}  // namespace hmlf::io
