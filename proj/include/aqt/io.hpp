#ifndef AQT_IO_HPP
#define AQT_IO_HPP

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "aqt/scan.hpp"

namespace aqt {

// Filesystem failure (unwritable path, failed rename); message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal round-trip representation: %.17g, C locale.
std::string format_double(double value);

// Write via a temporary file in the same directory plus rename, so readers
// never observe a partial file. Throws IoError.
void atomic_write_text(const std::string& path, const std::string& text);

// CSV with the fixed header "x,infidelity,fidelity", one row per grid
// point, LF newlines. The closed-form column appears only in JSON.
std::string series_to_csv(const ScanSeries& series);

// JSON mirrors of ScanSeries; doubles survive the round trip bitwise.
nlohmann::json series_to_json(const ScanSeries& series);
ScanSeries series_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ResonanceReport& report,
                              const ScanSeries& series);
std::string report_to_csv(const ResonanceReport& report);

}  // namespace aqt

#endif
