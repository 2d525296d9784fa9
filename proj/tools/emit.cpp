#include "emit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace emit {

namespace {

constexpr double kMargin = 0.5;
constexpr double kXMin = -kMargin;
constexpr double kXMax = 3.0 + kMargin;
constexpr double kYMax = 1.6;
constexpr double kScale = 300.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

double to_px_x(double x) { return (x - kXMin) * kScale; }
double to_px_y(double y) { return (kYMax - y) * kScale; }

void marker(std::ostringstream& out, double x, double y, const char* name,
            int precision) {
  out << "<circle cx=\"" << fmt_num(to_px_x(x), precision) << "\" cy=\""
      << fmt_num(to_px_y(y), precision) << "\" r=\"4\" fill=\"#333333\"/>\n";
  out << "<text x=\"" << fmt_num(to_px_x(x) + 8.0, precision) << "\" y=\""
      << fmt_num(to_px_y(y) - 8.0, precision)
      << "\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#333333\">"
      << name << "</text>\n";
}

}  // namespace

std::string fmt_num(double value, int precision) {
  const int p = std::clamp(precision, 6, 17);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", p, value);
  return buf;
}

std::string trace_csv(const std::vector<TraceRow>& rows, int precision) {
  std::ostringstream out;
  out << "R,theta,x,y,branch\n";
  for (const TraceRow& row : rows) {
    out << fmt_num(row.R, precision) << ',' << fmt_num(row.theta, precision)
        << ',' << fmt_num(row.x, precision) << ','
        << fmt_num(row.y, precision) << ',' << row.branch << '\n';
  }
  return out.str();
}

std::string traces_svg(const std::vector<TracePath>& paths, int precision) {
  const int width = static_cast<int>((kXMax - kXMin) * kScale);
  const int height = static_cast<int>(2.0 * kYMax * kScale);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";

  // Euler line from the circumcenter to the orthocenter.
  out << "<line x1=\"" << fmt_num(to_px_x(0.0), precision) << "\" y1=\""
      << fmt_num(to_px_y(0.0), precision) << "\" x2=\""
      << fmt_num(to_px_x(3.0), precision) << "\" y2=\""
      << fmt_num(to_px_y(0.0), precision)
      << "\" stroke=\"#bbbbbb\" stroke-width=\"2\"/>\n";

  // Orthocentroidal circle.
  out << "<circle cx=\"" << fmt_num(to_px_x(2.0), precision) << "\" cy=\""
      << fmt_num(to_px_y(0.0), precision) << "\" r=\""
      << fmt_num(kScale, precision)
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"2\" "
         "stroke-dasharray=\"8 6\"/>\n";

  marker(out, 0.0, 0.0, "O", precision);
  marker(out, 1.0, 0.0, "G", precision);
  marker(out, 1.5, 0.0, "N", precision);
  marker(out, 3.0, 0.0, "H", precision);

  int color_index = 0;
  int legend_row = 0;
  for (const TracePath& path : paths) {
    const char* color = kPalette[color_index % kPaletteSize];
    ++color_index;

    std::vector<std::vector<const TraceRow*>> chains;
    for (const TraceRow& row : path.rows) {
      const bool fresh =
          chains.empty() ||
          (path.gap_break > 0.0 &&
           row.theta - chains.back().back()->theta > path.gap_break);
      if (fresh) chains.emplace_back();
      chains.back().push_back(&row);
    }
    for (const auto& chain : chains) {
      if (chain.size() < 2) continue;
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\" points=\"";
      bool first = true;
      for (const TraceRow* row : chain) {
        if (!first) out << ' ';
        first = false;
        out << fmt_num(to_px_x(row->x), precision) << ','
            << fmt_num(to_px_y(row->y), precision);
      }
      out << "\"/>\n";
    }

    if (!path.label.empty()) {
      out << "<text x=\"20\" y=\"" << 30 + 24 * legend_row
          << "\" font-family=\"sans-serif\" font-size=\"18\" fill=\"" << color
          << "\">" << path.label << "</text>\n";
      ++legend_row;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace emit
