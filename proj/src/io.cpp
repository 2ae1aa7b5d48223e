#include "aqt/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace aqt {
namespace {

namespace fs = std::filesystem;

void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_double(v);
    first = false;
  }
  out += '\n';
}

nlohmann::json extrema_to_json(const std::vector<RefinedExtremum>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : v) {
    arr.push_back({{"x", e.x}, {"infidelity", e.infidelity}});
  }
  return arr;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void atomic_write_text(const std::string& path, const std::string& text) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open for writing: " + tmp.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place: " + path);
  }
}

std::string series_to_csv(const ScanSeries& series) {
  // Fixed schema; the closed-form column travels in the JSON format only.
  std::string out = "x,infidelity,fidelity\n";
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    append_row(out, {series.x[i], series.infidelity[i], series.fidelity[i]});
  }
  return out;
}

nlohmann::json series_to_json(const ScanSeries& series) {
  nlohmann::json j;
  j["coupling"] = {{"name", coupling_name(series.coupling)},
                   {"gamma", series.coupling.gamma}};
  j["schedule"] = schedule_name(series.schedule);
  j["x"] = series.x;
  j["fidelity"] = series.fidelity;
  j["infidelity"] = series.infidelity;
  if (!series.analytic_fidelity.empty()) {
    j["analytic_fidelity"] = series.analytic_fidelity;
  }
  j["metadata"] = {{"points", series.x.size()},
                   {"x_min", series.x.empty() ? 0.0 : series.x.front()},
                   {"x_max", series.x.empty() ? 0.0 : series.x.back()},
                   {"steps_override", series.steps_override},
                   {"clamped_points", series.clamped_points},
                   {"max_clamp", series.max_clamp}};
  return j;
}

ScanSeries series_from_json(const nlohmann::json& j) {
  ScanSeries series;
  series.coupling = make_coupling(j.at("coupling").at("gamma").get<double>());
  const auto kind = schedule_from_name(j.at("schedule").get<std::string>());
  if (!kind) {
    throw std::invalid_argument("unknown schedule name in series JSON");
  }
  series.schedule = *kind;
  series.x = j.at("x").get<std::vector<double>>();
  series.fidelity = j.at("fidelity").get<std::vector<double>>();
  series.infidelity = j.at("infidelity").get<std::vector<double>>();
  if (j.contains("analytic_fidelity")) {
    series.analytic_fidelity =
        j.at("analytic_fidelity").get<std::vector<double>>();
  }
  const auto& meta = j.at("metadata");
  series.steps_override = meta.at("steps_override").get<int>();
  series.clamped_points = meta.at("clamped_points").get<int>();
  series.max_clamp = meta.at("max_clamp").get<double>();
  if (series.fidelity.size() != series.x.size() ||
      series.infidelity.size() != series.x.size()) {
    throw std::invalid_argument("series JSON columns disagree in length");
  }
  return series;
}

nlohmann::json report_to_json(const ResonanceReport& report,
                              const ScanSeries& series) {
  nlohmann::json j;
  j["coupling"] = {{"name", coupling_name(series.coupling)},
                   {"gamma", series.coupling.gamma}};
  j["schedule"] = schedule_name(series.schedule);
  j["threshold"] = report.threshold;
  j["minima"] = extrema_to_json(report.minima);
  j["resonances"] = extrema_to_json(report.resonances);
  j["envelope"] = extrema_to_json(report.envelope);
  if (report.power_law_exponent) {
    j["power_law_exponent"] = *report.power_law_exponent;
  } else {
    j["power_law_exponent"] = nullptr;
  }
  return j;
}

std::string report_to_csv(const ResonanceReport& report) {
  std::string out = "kind,x,infidelity\n";
  auto rows = [&out](const char* kind, const std::vector<RefinedExtremum>& v) {
    for (const auto& e : v) {
      out += kind;
      out += ',';
      out += format_double(e.x);
      out += ',';
      out += format_double(e.infidelity);
      out += '\n';
    }
  };
  rows("minimum", report.minima);
  rows("resonance", report.resonances);
  rows("envelope", report.envelope);
  return out;
}

}  // namespace aqt
