#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphfp/coeff.hpp"

namespace graphfp {

// Partition of {1..n} with no crossing pair of blocks. Blocks are stored with
// ascending members and sorted by their minimum.
class NoncrossingPartition {
 public:
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks);

  static NoncrossingPartition discrete(int n);  // all singletons
  static NoncrossingPartition full(int n);      // one block
  static NoncrossingPartition from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  std::string to_string() const;  // e.g. {1,3}{2}{4}

  bool operator==(const NoncrossingPartition&) const = default;
  bool operator<(const NoncrossingPartition& o) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Refinement order: every block of p lies inside a block of q.
bool leq(const NoncrossingPartition& p, const NoncrossingPartition& q);

enum class NcFilter { All, Pairings, EvenBlocks };

// Enumeration guard: n may not exceed the effective bound. A nonnegative
// explicit bound wins, then the process-wide override, then the
// GRAPHFP_MAX_NC environment variable, then 12.
int effective_nc_bound(int explicit_bound = -1);
void set_nc_bound_override(int bound);  // pass -1 to clear

std::vector<NoncrossingPartition> enumerate_nc(int n, NcFilter filter = NcFilter::All,
                                               int bound = -1);
// Only blocks whose size lies in `allowed` are used.
std::vector<NoncrossingPartition> enumerate_nc_sizes(int n, const std::set<int>& allowed,
                                                     int bound = -1);

// Moebius function of the noncrossing partition lattice on n points,
// memoized per n. Zero when p is not below q.
std::int64_t mobius(const NoncrossingPartition& p, const NoncrossingPartition& q, int bound = -1);

// mu(pi, full partition) for every pi in enumerate_nc(n) order.
std::vector<std::int64_t> mu_to_top(int n, int bound = -1);

BigInt catalan(int k);

// Nesting structure of the blocks: a block's parent is the innermost block
// strictly enclosing it; `slot` names the gap of the parent (between
// consecutive parent members) that holds it.
struct NestingForest {
  std::vector<int> parent;  // -1 for outermost blocks
  std::vector<int> slot;    // gap index within the parent, -1 for outermost
  // children_by_gap[b][i]: blocks nested between member i and member i+1 of b
  std::vector<std::vector<std::vector<int>>> children_by_gap;
  std::vector<int> roots;
};

NestingForest build_nesting(const NoncrossingPartition& pi);

}  // namespace graphfp
