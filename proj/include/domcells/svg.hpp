#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "domcells/cells.hpp"

namespace domcells {

namespace detail {

inline const char* svg_fill(CellColor c) {
  constexpr std::array<const char*, 8> fills = {"#0000ff", "#00ff00", "#ffff66", "#ff6600",
                                                "#ff0000", "#f40099", "#993300", "#ffffff"};
  return fills[static_cast<std::size_t>(c)];
}

}  // namespace detail

// One grid block per z-layer, z_1 at the bottom. Rows are partition indices,
// columns are Y vertices. D-vertices are drawn as labeled dots inside their
// cell; white cells get a dashed outline.
inline std::string render_svg(const CellColoring& c) {
  constexpr int cell_w = 84;
  constexpr int line_h = 15;
  constexpr int margin = 40;
  constexpr int gap = 36;
  const int cols = static_cast<int>(c.ny());
  const int rows = static_cast<int>(c.k());
  const int layers = static_cast<int>(c.nz());
  std::vector<std::vector<Vertex>> members(c.cell_count());
  c.dset().for_each([&](Vertex v) { members[c.cell_id(c.cell_of(v))].push_back(v); });
  std::size_t most = 1;
  for (const auto& m : members) most = std::max(most, m.size());
  const int cell_h = std::max(56, static_cast<int>(most) * line_h + 12);
  const int block_h = rows * cell_h;
  const int width = 2 * margin + cols * cell_w;
  const int height = 2 * margin + layers * block_h + (layers - 1) * gap;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int layer = 0; layer < layers; ++layer) {
    const int top = margin + (layers - 1 - layer) * (block_h + gap);
    out << "  <g class=\"layer\" data-z=\"" << layer << "\">\n"
        << "    <text x=\"" << margin << "\" y=\"" << top - 8 << "\">z" << layer + 1 << "</text>\n";
    for (int row = 0; row < rows; ++row) {
      for (int col = 0; col < cols; ++col) {
        const CellIndex at{static_cast<std::size_t>(row), static_cast<Vertex>(col), static_cast<Vertex>(layer)};
        const CellColor color = c.color(at);
        const int x0 = margin + col * cell_w;
        const int y0 = top + (rows - 1 - row) * cell_h;
        out << "    <rect class=\"cell\" data-i=\"" << row << "\" data-y=\"" << col << "\" data-z=\"" << layer
            << "\" data-color=\"" << color_name(color) << "\" x=\"" << x0 << "\" y=\"" << y0
            << "\" width=\"" << cell_w << "\" height=\"" << cell_h << "\" fill=\""
            << detail::svg_fill(color) << "\" stroke=\"#000000\"";
        if (color == CellColor::White) out << " stroke-dasharray=\"4 3\"";
        out << "/>\n";
        const auto& dots = members[c.cell_id(at)];
        const bool dark = color == CellColor::Blue || color == CellColor::Maroon;
        for (std::size_t d = 0; d < dots.size(); ++d) {
          const Coord3 p = c.product().to_coord(dots[d]);
          const int cx = x0 + 10;
          const int cy = y0 + 12 + static_cast<int>(d) * line_h;
          out << "    <circle class=\"dvertex\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\""
              << (dark ? "#ffffff" : "#000000") << "\"/>\n"
              << "    <text x=\"" << cx + 8 << "\" y=\"" << cy + 4 << "\" fill=\"" << (dark ? "#ffffff" : "#000000")
              << "\">x" << p.x + 1 << ",y" << p.y + 1 << ",z" << p.z + 1 << "</text>\n";
        }
      }
    }
    for (int row = 0; row < rows; ++row)
      out << "    <text x=\"" << margin - 28 << "\" y=\"" << top + (rows - 1 - row) * cell_h + cell_h / 2
          << "\">pi" << row + 1 << "</text>\n";
    for (int col = 0; col < cols; ++col)
      out << "    <text x=\"" << margin + col * cell_w + cell_w / 2 - 6 << "\" y=\"" << top + block_h + 12
          << "\">y" << col + 1 << "</text>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace domcells
