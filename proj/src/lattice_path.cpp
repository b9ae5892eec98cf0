#include "graphfp/lattice_path.hpp"

#include <algorithm>

namespace graphfp {

LatticePath lattice_path(const DirectedGraph& g, const std::vector<Letter>& letters) {
  LatticePath out;
  // Emptiness must delegate to the rebalancing fold (the reduction word-level
  // expectations use), not the plain product: a word like
  // L_{e1}L_{e1}* L_{e2}L_{e2}* multiplies to zero outright yet rebalances to a
  // vertex projection, and the axis criterion has to see that word as alive for
  // "nonzero expectation implies star axis" to hold.
  out.is_empty = letters_product(g, letters, true).is_zero();
  int x = 0;
  int y = 0;
  out.points.emplace_back(x, y);
  for (const auto& l : letters) {
    if (l.word.is_vertex()) {
      ++y;
      ++out.vertex_letter_count;
    } else {
      x += l.word.length();
      y += letter_height(l);
    }
    out.points.emplace_back(x, y);
  }
  out.star_axis = !out.is_empty && out.points.back().second == out.vertex_letter_count;
  return out;
}

std::string render_lattice(const LatticePath& p) {
  int min_y = 0;
  int max_y = 0;
  int max_x = 0;
  for (const auto& [x, y] : p.points) {
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
    max_x = std::max(max_x, x);
  }
  int rows = max_y - min_y + 1;
  int cols = max_x + 1;
  std::vector<std::string> grid(rows, std::string(cols, ' '));
  auto cell = [&](int x, int y) -> char& { return grid[max_y - y][x]; };

  // Interpolate between consecutive points; steps are diagonal or vertical.
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i) {
    auto [x0, y0] = p.points[i];
    auto [x1, y1] = p.points[i + 1];
    int steps = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
    int dx = (x1 > x0) - (x1 < x0);
    int dy = (y1 > y0) - (y1 < y0);
    for (int s = 1; s < steps; ++s) {
      cell(x0 + s * dx, y0 + s * dy) = dy * dx > 0 ? '/' : (dx == 0 ? '|' : '\\');
    }
  }
  for (const auto& [x, y] : p.points) {
    cell(x, y) = 'o';
  }
  // Mark the zero axis where nothing else is drawn.
  for (int x = 0; x < cols; ++x) {
    if (cell(x, 0) == ' ') {
      cell(x, 0) = '-';
    }
  }
  std::string out;
  for (const auto& row : grid) {
    std::string trimmed = row;
    while (!trimmed.empty() && trimmed.back() == ' ') {
      trimmed.pop_back();
    }
    out += trimmed;
    out += '\n';
  }
  return out;
}

}  // namespace graphfp
