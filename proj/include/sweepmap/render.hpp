#pragma once

// Drawings of path diagrams: an SVG drawing in the lattice convention (levels
// increase upward) and a one-character-per-cell ASCII grid. Both carry the
// row counts at the right margin. Output is a pure function of the input.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>

#include "sweepmap/core.hpp"

namespace sweepmap {

namespace detail {

struct DiagramExtent {
  Rank low = 0;   // lowest level touched
  Rank high = 0;  // highest level touched
};

inline DiagramExtent extent(const PathDiagram& d) {
  DiagramExtent e{0, 0};
  if (d.empty()) return e;
  e.low = e.high = d.rank(0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    e.low = std::min({e.low, d.rank(i), d.end_rank(i)});
    e.high = std::max({e.high, d.rank(i), d.end_rank(i)});
  }
  return e;
}

inline const char* arrow_colour(ArrowColor c) {
  switch (c) {
    case ArrowColor::red: return "#d62728";
    case ArrowColor::blue: return "#1f77b4";
    case ArrowColor::purple: return "#9467bd";
  }
  return "#000000";
}

inline const char* arrow_class(ArrowColor c) {
  switch (c) {
    case ArrowColor::red: return "red";
    case ArrowColor::blue: return "blue";
    case ArrowColor::purple: return "purple";
  }
  return "";
}

}  // namespace detail

// Rows top to bottom: "<row> |<cells>| <count>". R and B mark red and blue
// segments; '_' marks a purple arrow lying on the row's lower line.
inline std::string render_ascii(const PathDiagram& d) {
  if (d.empty()) return "(empty diagram)\n";
  const auto e = detail::extent(d);
  const auto counts = row_counts(d);
  Rank top_row = e.low;
  for (std::size_t i = 0; i < d.size(); ++i) {
    top_row = std::max(top_row, d.color(i) == ArrowColor::purple ? d.rank(i)
                                                                  : std::max(d.rank(i), d.end_rank(i)) - 1);
  }

  std::size_t width = 1;
  for (Rank j : {e.low, top_row}) width = std::max(width, std::to_string(j).size());

  std::ostringstream os;
  for (Rank j = top_row; j >= e.low; --j) {
    const auto label = std::to_string(j);
    os << std::string(width - label.size(), ' ') << label << " |";
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Rank lo = std::min(d.rank(i), d.end_rank(i));
      const Rank hi = std::max(d.rank(i), d.end_rank(i));
      char cell = '.';
      switch (d.color(i)) {
        case ArrowColor::red: cell = lo <= j && j < hi ? 'R' : '.'; break;
        case ArrowColor::blue: cell = lo <= j && j < hi ? 'B' : '.'; break;
        case ArrowColor::purple: cell = d.rank(i) == j ? '_' : '.'; break;
      }
      os << cell;
    }
    os << "| " << counts.count(j) << '\n';
  }
  return os.str();
}

inline std::string render_svg(const PathDiagram& d) {
  constexpr long U = 40;  // pixels per lattice unit
  const auto e = detail::extent(d);
  const Rank low = e.low;
  const Rank high = std::max(e.high, e.low + 1);
  const long n = static_cast<long>(d.size());
  const auto counts = row_counts(d);

  // Lattice x runs over [1, n+1]; one unit of margin on the left for level
  // labels and two on the right for row counts.
  const long x0 = 0;
  const long x1 = n + 3;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 * U << ' ' << -(high + 1) * U << ' '
     << (x1 - x0) * U << ' ' << (high - low + 2) * U << "\" width=\"" << (x1 - x0) * U << "\" height=\""
     << (high - low + 2) * U << "\">\n";
  os << "<defs>\n";
  for (auto c : {ArrowColor::red, ArrowColor::blue, ArrowColor::purple}) {
    os << "<marker id=\"head-" << detail::arrow_class(c)
       << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"4\" markerHeight=\"4\" "
          "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\""
       << detail::arrow_colour(c) << "\"/></marker>\n";
  }
  os << "</defs>\n";

  // Lattice coordinates, y up.
  os << "<g transform=\"scale(" << U << ',' << -U << ")\">\n";
  os << "<g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"0.02\">\n";
  for (Rank y = low; y <= high; ++y) {
    os << "<line x1=\"1\" y1=\"" << y << "\" x2=\"" << n + 1 << "\" y2=\"" << y << "\"/>\n";
  }
  for (long x = 1; x <= n + 1; ++x) {
    os << "<line x1=\"" << x << "\" y1=\"" << low << "\" x2=\"" << x << "\" y2=\"" << high << "\"/>\n";
  }
  os << "</g>\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto c = d.color(i);
    os << "<line class=\"arrow " << detail::arrow_class(c) << "\" data-column=\"" << i + 1 << "\" x1=\"" << i + 1
       << "\" y1=\"" << d.rank(i) << "\" x2=\"" << i + 2 << "\" y2=\"" << d.end_rank(i) << "\" stroke=\""
       << detail::arrow_colour(c) << "\" stroke-width=\"0.08\" marker-end=\"url(#head-" << detail::arrow_class(c)
       << ")\"/>\n";
  }
  os << "</g>\n";

  // Text is placed in screen coordinates so glyphs are not mirrored.
  os << "<g font-family=\"sans-serif\" font-size=\"" << U / 3 << "\">\n";
  for (Rank y = low; y <= high; ++y) {
    os << "<text class=\"level\" x=\"" << U / 2 << "\" y=\"" << -y * U + U / 8 << "\" text-anchor=\"middle\">" << y
       << "</text>\n";
  }
  for (Rank j = low; j < high; ++j) {
    os << "<text class=\"row-count\" data-row=\"" << j << "\" x=\"" << (n + 2) * U << "\" y=\""
       << -j * U - U / 2 + U / 8 << "\" text-anchor=\"middle\">" << counts.count(j) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace sweepmap
