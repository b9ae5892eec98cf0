#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphfp/element.hpp"

namespace graphfp {

// Height profile of a letter sequence. Creation letters step (+|w|, +|w|),
// annihilation letters (+|w|, -|w|), vertex letters (0, +1). The path is
// empty when the rebalancing fold of the letters (letters_product with
// collapse at every step) is the zero element.
struct LatticePath {
  bool is_empty = false;
  std::vector<std::pair<int, int>> points;  // starts at (0, 0), one more point per letter
  int vertex_letter_count = 0;
  // Nonempty and the final height is exactly the number of vertex letters,
  // i.e. creation and annihilation lengths cancel.
  bool star_axis = false;
};

LatticePath lattice_path(const DirectedGraph& g, const std::vector<Letter>& letters);

// Fixed-width character plot of the points, highest row first.
std::string render_lattice(const LatticePath& p);

}  // namespace graphfp
