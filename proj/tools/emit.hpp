#pragma once

#include <string>
#include <vector>

namespace emit {

struct TraceRow {
  double R = 0.0;
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;
  int branch = 1;
};

// %.{precision}g with a C-locale decimal point; precision clamped to [6,17].
std::string fmt_num(double value, int precision);

// "R,theta,x,y,branch" header plus one row per point, trailing newline.
std::string trace_csv(const std::vector<TraceRow>& rows, int precision);

struct TracePath {
  std::vector<TraceRow> rows;  // theta ascending
  double gap_break = 0.0;      // split the polyline on larger theta jumps
  std::string label;
};

// Standalone SVG of the Euler-line frame: the segment from the circumcenter
// to the orthocenter, the orthocentroidal circle, the four marked points and
// one polyline chain per path. Byte deterministic for identical input.
std::string traces_svg(const std::vector<TracePath>& paths, int precision);

}  // namespace emit
