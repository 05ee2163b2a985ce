#pragma once

#include <string>
#include <vector>

namespace currentlab {

// Round-trippable double formatting: '.' decimal separator, 17 significant
// digits, no thousands separators.
std::string format_double(double value);

std::string sha256_hex(const std::string& data);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Minimal log-scale decay plot (W(t) and bound rhs vs t) as standalone SVG.
struct SvgSeries {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};
std::string render_loglog_svg(const std::string& title, const std::vector<SvgSeries>& series);

}  // namespace currentlab
