#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphfp/graph.hpp"

namespace graphfp {

// An element of the path category of a directed graph: either a vertex
// (the empty path at that vertex) or a nonempty admissible sequence of edge
// indices e_1 e_2 ... e_k with dst(e_i) == src(e_{i+1}). Reading order is
// left to right: the word acts on paths by appending on the left, so
// source(w) = src(e_1) and range(w) = dst(e_k).
class Word {
 public:
  static Word vertex(int v);
  static Word path(const DirectedGraph& g, std::vector<int> edges);
  static Word from_json(const DirectedGraph& g, const nlohmann::json& j);

  bool is_vertex() const { return vertex_ >= 0; }
  int vertex_index() const { return vertex_; }
  const std::vector<int>& edges() const { return edges_; }
  int length() const { return static_cast<int>(edges_.size()); }

  int source(const DirectedGraph& g) const;
  int range(const DirectedGraph& g) const;

  nlohmann::json to_json(const DirectedGraph& g) const;

  bool operator==(const Word& o) const = default;
  // Length, then edge sequence, then vertex index: a total order usable as a
  // map key with short words first.
  bool operator<(const Word& o) const;

 private:
  int vertex_ = -1;
  std::vector<int> edges_;
};

// Concatenation w1 * w2 is defined only when range(w1) == source(w2).
std::optional<Word> concat(const DirectedGraph& g, const Word& w1, const Word& w2);

// If w == concat(p, h) for some h, return h; otherwise nullopt.
std::optional<Word> strip_prefix(const DirectedGraph& g, const Word& p, const Word& w);

// "v:NAME" for vertices, edge ids joined by '.' for paths.
std::string word_to_string(const DirectedGraph& g, const Word& w);

// Parse the word_to_string format. Edge paths also accept a single edge id
// with no dot.
Word word_from_string(const DirectedGraph& g, const std::string& text);

// Loop structure of a word: a path is a loop when source == range, and every
// loop is root^multiplicity for a unique primitive (aperiodic) root.
struct LoopClass {
  bool is_loop = false;
  Word root;            // the word itself when not a loop
  int multiplicity = 1; // 1 when not a loop or already primitive
};

LoopClass classify_loop(const DirectedGraph& g, const Word& w);

// All admissible edge paths of length 1..max_len, ordered by (length, edge
// sequence). Vertex words are not included.
std::vector<Word> enumerate_paths(const DirectedGraph& g, int max_len);

}  // namespace graphfp
