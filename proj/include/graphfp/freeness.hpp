#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphfp/cumulant.hpp"
#include "graphfp/element.hpp"

namespace graphfp {

// Structural criterion for two path words: loops must have distinct primitive
// roots, non-loops must differ, and a loop is always distinct from a non-loop.
bool diagram_distinct(const DirectedGraph& g, const Word& w1, const Word& w2);
bool generators_free(const DirectedGraph& g, const Word& w1, const Word& w2);

// Conservative sufficient condition: every pair of support words across the
// two elements is diagram-distinct.
bool supports_free_sufficient(const DirectedGraph& g, const Element& a, const Element& b);

// Labeled probe set for one side: the element, its adjoint, and self-adjoint
// powers of every support word up to the closure degree.
std::vector<std::pair<std::string, Element>> w_star_closure(const DirectedGraph& g,
                                                            const Element& a,
                                                            const std::string& tag,
                                                            int closure_degree);

struct FreenessOptions {
  int max_order = 4;
  int closure_degree = 3;
  bool stop_on_first = false;
  std::size_t max_witnesses = 16;
};

struct MixedWitness {
  int order = 0;
  std::vector<std::string> labels;           // probe label per position
  std::vector<std::string> forced_vertices;  // vertex ids the letters attach to
  nlohmann::json value;                      // nonzero diagonal cumulant
};

struct MixedCumulantReport {
  bool all_vanishing = true;
  int max_order = 0;
  long long tuples_evaluated = 0;
  std::vector<MixedWitness> witnesses;
};

// Evaluates every mixed cumulant of probes from the two closures, orders 2 up
// to max_order, and records nonvanishing ones.
MixedCumulantReport mixed_cumulant_report(const DirectedGraph& g, const Element& a,
                                          const Element& b, EMode mode,
                                          const FreenessOptions& opts = {});

}  // namespace graphfp
