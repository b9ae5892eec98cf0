#pragma once

#include <map>
#include <vector>

#include "graphfp/element.hpp"

namespace graphfp {

// Path space of a graph cut off at a maximum length: one basis vector per
// vertex (the empty path there) and one per admissible path up to max_len.
class TruncatedFockSpace {
 public:
  TruncatedFockSpace(const DirectedGraph& g, int max_len);

  const DirectedGraph& graph() const { return g_; }
  int max_len() const { return max_len_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Word& basis(int i) const { return basis_.at(i); }
  int index(const Word& w) const;  // -1 when absent

 private:
  const DirectedGraph& g_;
  int max_len_;
  std::vector<Word> basis_;
  std::map<Word, int> lookup_;
};

// Image of a basis vector under an element. Throws ValidationError when a
// creation would leave the truncated space; results are never cut silently.
std::map<int, Coeff> apply_element(const TruncatedFockSpace& f, const Element& a, int basis_index);

// Per-vertex vacuum expectation of a letter word, computed against the path
// space directly. Requires the total creation length to fit the truncation.
DiagonalElement oracle_expectation(const TruncatedFockSpace& f, const std::vector<Letter>& letters);

}  // namespace graphfp
