#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graphfp/element.hpp"
#include "graphfp/noncrossing.hpp"

namespace graphfp {

// Partitioned expectation of a letter word: blocks are evaluated innermost
// first, a nested block's diagonal value gates the gap of its parent, and the
// outermost block values multiply pointwise.
DiagonalElement nested_expectation(const DirectedGraph& g, const NoncrossingPartition& pi,
                                   const std::vector<Letter>& letters, EMode mode);

// Prepares the partition lattice of a fixed order once, for repeated cumulant
// evaluations on different letter words.
class CumulantEvaluator {
 public:
  CumulantEvaluator(const DirectedGraph& g, int n, EMode mode, int bound = -1);

  int order() const { return n_; }

  // Moebius-weighted sum of partitioned expectations. When the optional
  // counters are given they receive the number of partitions with a nonzero
  // value and their total Moebius weight.
  DiagonalElement evaluate(const std::vector<Letter>& letters, int* contributing = nullptr,
                           std::int64_t* mu_sum = nullptr) const;

 private:
  const DirectedGraph& g_;
  int n_;
  EMode mode_;
  std::vector<NoncrossingPartition> parts_;
  std::vector<std::int64_t> mu_;
  std::vector<NestingForest> forests_;
};

struct LetterCumulant {
  DiagonalElement value;
  int contributing = 0;     // partitions with nonzero partitioned expectation
  std::int64_t mu_sum = 0;  // their total Moebius weight to the full partition
};

// Cumulant of one letter word in factored form: the Moebius weight of its
// connected partitions times the expectation of the full word. Equals the
// nested Moebius sum whenever the word expectation is nonzero.
LetterCumulant cumulant_letters(const DirectedGraph& g, const std::vector<Letter>& letters,
                                EMode mode, int bound = -1);

// Multilinear cumulant of elements that are linear combinations of letters.
DiagonalElement cumulant(const DirectedGraph& g, const std::vector<Element>& args, EMode mode,
                         int bound = -1);

// Plain moment: multiply out, then take the expectation.
DiagonalElement moment(const DirectedGraph& g, const std::vector<Element>& args, EMode mode);

// Sum over noncrossing partitions whose block sizes carry a value, of the
// product of those values.
Coeff moments_from_cumulants(const std::map<int, Coeff>& block_values, int n, int bound = -1);

// Weight of the order-n alternating pattern: the Moebius sum over noncrossing
// partitions all of whose blocks hold as many odd as even positions.
struct MuCoefficient {
  std::int64_t mu = 0;
  int connected_set_size = 0;
};

MuCoefficient mu_coefficient(int n, int bound = -1);

// The common value when the diagonal is a multiple of the identity (zero
// counts as central), nullopt otherwise.
std::optional<Coeff> central_scalar(const DirectedGraph& g, const DiagonalElement& d);

}  // namespace graphfp
