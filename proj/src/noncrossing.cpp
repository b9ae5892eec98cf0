#include "graphfp/noncrossing.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>

#include "graphfp/errors.hpp"

namespace graphfp {

namespace {

using Blocks = std::vector<std::vector<int>>;

// Checks whether two sorted blocks cross: merge them and count tag runs.
// Nested or disjoint pairs produce at most 3 runs, crossing pairs at least 4.
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  int runs = 0;
  int last = -1;
  while (i < a.size() || j < b.size()) {
    int tag;
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      tag = 0;
      ++i;
    } else {
      tag = 1;
      ++j;
    }
    if (tag != last) {
      ++runs;
      last = tag;
    }
  }
  return runs >= 4;
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 1) {
    throw ValidationError("partition size must be at least 1");
  }
  std::vector<bool> seen(n + 1, false);
  for (auto& b : blocks) {
    if (b.empty()) {
      throw ValidationError("partition blocks must be nonempty");
    }
    std::sort(b.begin(), b.end());
    for (int p : b) {
      if (p < 1 || p > n) {
        throw ValidationError("partition member " + std::to_string(p) + " is out of range");
      }
      if (seen[p]) {
        throw ValidationError("partition member " + std::to_string(p) + " appears twice");
      }
      seen[p] = true;
    }
  }
  for (int p = 1; p <= n; ++p) {
    if (!seen[p]) {
      throw ValidationError("partition misses member " + std::to_string(p));
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks_cross(blocks[i], blocks[j])) {
        throw ValidationError("blocks cross: " + std::to_string(blocks[i].front()) + "... and " +
                              std::to_string(blocks[j].front()) + "...");
      }
    }
  }
  blocks_ = std::move(blocks);
}

NoncrossingPartition NoncrossingPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  for (int p = 1; p <= n; ++p) {
    blocks.push_back({p});
  }
  return NoncrossingPartition(n, std::move(blocks));
}

NoncrossingPartition NoncrossingPartition::full(int n) {
  std::vector<int> block;
  for (int p = 1; p <= n; ++p) {
    block.push_back(p);
  }
  return NoncrossingPartition(n, {block});
}

NoncrossingPartition NoncrossingPartition::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks")) {
    throw ValidationError("partition json must be an object with 'n' and 'blocks'");
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j.at("blocks")) {
    blocks.push_back(b.get<std::vector<int>>());
  }
  return NoncrossingPartition(j.at("n").get<int>(), std::move(blocks));
}

nlohmann::json NoncrossingPartition::to_json() const {
  return {{"n", n_}, {"blocks", blocks_}};
}

std::string NoncrossingPartition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

bool NoncrossingPartition::operator<(const NoncrossingPartition& o) const {
  if (n_ != o.n_) {
    return n_ < o.n_;
  }
  return blocks_ < o.blocks_;
}

bool leq(const NoncrossingPartition& p, const NoncrossingPartition& q) {
  if (p.n() != q.n()) {
    return false;
  }
  std::vector<int> owner(q.n() + 1, -1);
  for (std::size_t b = 0; b < q.blocks().size(); ++b) {
    for (int x : q.blocks()[b]) {
      owner[x] = static_cast<int>(b);
    }
  }
  for (const auto& b : p.blocks()) {
    int o = owner[b.front()];
    for (int x : b) {
      if (owner[x] != o) {
        return false;
      }
    }
  }
  return true;
}

namespace {

int g_bound_override = -1;

int env_bound() {
  if (const char* s = std::getenv("GRAPHFP_MAX_NC")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1) {
      return static_cast<int>(v);
    }
  }
  return 12;
}

// Enumerates noncrossing partitions of a contiguous segment by choosing the
// block of the first position and splitting the rest into independent gaps.
// Partitions are memoized per segment length within one enumeration.
class SegmentEnumerator {
 public:
  SegmentEnumerator(int max_len, std::function<bool(int)> allowed)
      : allowed_(std::move(allowed)), memo_(max_len + 1) {}

  const std::vector<Blocks>& get(int len) {
    if (memo_[len]) {
      return *memo_[len];
    }
    std::vector<Blocks> result;
    if (len == 0) {
      result.emplace_back();
    } else {
      std::vector<int> members{1};
      dfs(len, members, result);
    }
    memo_[len] = std::move(result);
    return *memo_[len];
  }

 private:
  void dfs(int len, std::vector<int>& members, std::vector<Blocks>& result) {
    if (allowed_(static_cast<int>(members.size()))) {
      close(len, members, result);
    }
    int last = members.back();
    for (int m = last + 1; m <= len; ++m) {
      members.push_back(m);
      dfs(len, members, result);
      members.pop_back();
    }
  }

  void close(int len, const std::vector<int>& members, std::vector<Blocks>& result) {
    // Gap i sits between members i and i+1; the tail follows the last member.
    std::vector<std::pair<int, int>> gaps;  // (offset, length)
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      gaps.emplace_back(members[i], members[i + 1] - members[i] - 1);
    }
    gaps.emplace_back(members.back(), len - members.back());

    std::vector<const std::vector<Blocks>*> sub;
    for (const auto& [offset, glen] : gaps) {
      sub.push_back(&get(glen));
      if (sub.back()->empty()) {
        return;  // a gap admits no partition under the size predicate
      }
    }
    std::vector<std::size_t> pick(gaps.size(), 0);
    while (true) {
      Blocks assembled{members};
      for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
        for (const auto& block : (*sub[gi])[pick[gi]]) {
          std::vector<int> shifted;
          shifted.reserve(block.size());
          for (int x : block) {
            shifted.push_back(x + gaps[gi].first);
          }
          assembled.push_back(std::move(shifted));
        }
      }
      result.push_back(std::move(assembled));
      std::size_t gi = 0;
      while (gi < pick.size()) {
        if (++pick[gi] < sub[gi]->size()) {
          break;
        }
        pick[gi] = 0;
        ++gi;
      }
      if (gi == pick.size()) {
        break;
      }
    }
  }

  std::function<bool(int)> allowed_;
  std::vector<std::optional<std::vector<Blocks>>> memo_;
};

void check_nc_bound(int n, int bound) {
  int limit = effective_nc_bound(bound);
  if (n > limit) {
    throw ResourceGuardError("noncrossing enumeration at n=" + std::to_string(n) +
                             " exceeds the bound " + std::to_string(limit) +
                             " (raise GRAPHFP_MAX_NC or pass an explicit bound)");
  }
}

std::vector<NoncrossingPartition> enumerate_impl(int n, const std::function<bool(int)>& allowed,
                                                 int bound) {
  if (n < 1) {
    throw ValidationError("enumeration size must be at least 1");
  }
  check_nc_bound(n, bound);
  SegmentEnumerator se(n, allowed);
  std::vector<NoncrossingPartition> out;
  for (const auto& blocks : se.get(n)) {
    out.emplace_back(n, blocks);
  }
  return out;
}

// Per-n Moebius cache; single-threaded use is all the CLI and tests need.
struct LatticeCache {
  std::vector<NoncrossingPartition> parts;
  std::map<std::string, int> index;
  std::map<std::pair<int, int>, std::int64_t> mu;
  std::vector<std::int64_t> to_top;
};

std::map<int, LatticeCache>& lattice_caches() {
  thread_local std::map<int, LatticeCache> caches;
  return caches;
}

LatticeCache& lattice_cache(int n, int bound) {
  // The guard applies per call, not per enumeration: whether the lattice
  // happens to be cached from an earlier call must not change the outcome.
  check_nc_bound(n, bound);
  auto& caches = lattice_caches();
  auto it = caches.find(n);
  if (it != caches.end()) {
    return it->second;
  }
  LatticeCache c;
  c.parts = enumerate_impl(n, [](int) { return true; }, bound);
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    c.index[c.parts[i].to_string()] = static_cast<int>(i);
  }
  return caches.emplace(n, std::move(c)).first->second;
}

std::int64_t mobius_memo(LatticeCache& c, int pi, int qi) {
  if (pi == qi) {
    return 1;
  }
  auto key = std::make_pair(pi, qi);
  auto it = c.mu.find(key);
  if (it != c.mu.end()) {
    return it->second;
  }
  // Defining recursion: the interval [p, q] sums to zero.
  std::int64_t sum = 0;
  const auto& p = c.parts[pi];
  const auto& q = c.parts[qi];
  for (std::size_t ri = 0; ri < c.parts.size(); ++ri) {
    if (static_cast<int>(ri) == qi) {
      continue;
    }
    const auto& r = c.parts[ri];
    if (leq(p, r) && leq(r, q)) {
      sum += mobius_memo(c, pi, static_cast<int>(ri));
    }
  }
  std::int64_t value = -sum;
  c.mu[key] = value;
  return value;
}

}  // namespace

int effective_nc_bound(int explicit_bound) {
  if (explicit_bound >= 0) {
    return explicit_bound;
  }
  if (g_bound_override >= 0) {
    return g_bound_override;
  }
  return env_bound();
}

void set_nc_bound_override(int bound) { g_bound_override = bound < 0 ? -1 : bound; }

std::vector<NoncrossingPartition> enumerate_nc(int n, NcFilter filter, int bound) {
  switch (filter) {
    case NcFilter::Pairings:
      return enumerate_impl(n, [](int s) { return s == 2; }, bound);
    case NcFilter::EvenBlocks:
      return enumerate_impl(n, [](int s) { return s % 2 == 0; }, bound);
    case NcFilter::All:
    default:
      return enumerate_impl(n, [](int) { return true; }, bound);
  }
}

std::vector<NoncrossingPartition> enumerate_nc_sizes(int n, const std::set<int>& allowed,
                                                     int bound) {
  return enumerate_impl(n, [&allowed](int s) { return allowed.count(s) > 0; }, bound);
}

std::int64_t mobius(const NoncrossingPartition& p, const NoncrossingPartition& q, int bound) {
  if (p.n() != q.n()) {
    throw ValidationError("mobius arguments must partition the same set");
  }
  if (!leq(p, q)) {
    return 0;
  }
  auto& c = lattice_cache(p.n(), bound);
  auto pit = c.index.find(p.to_string());
  auto qit = c.index.find(q.to_string());
  if (pit == c.index.end() || qit == c.index.end()) {
    throw ValidationError("partition is not in the cached lattice");
  }
  return mobius_memo(c, pit->second, qit->second);
}

std::vector<std::int64_t> mu_to_top(int n, int bound) {
  auto& c = lattice_cache(n, bound);
  if (!c.to_top.empty()) {
    return c.to_top;
  }
  std::size_t count = c.parts.size();
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) {
    order[i] = i;
  }
  // Strictly coarser partitions have strictly fewer blocks, so values above
  // any pi are already known when pi is reached.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.parts[a].block_count() < c.parts[b].block_count();
  });
  std::vector<std::int64_t> mu(count, 0);
  for (std::size_t oi = 0; oi < count; ++oi) {
    std::size_t i = order[oi];
    if (c.parts[i].block_count() == 1) {
      mu[i] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t r = 0; r < count; ++r) {
      if (r != i && c.parts[r].block_count() < c.parts[i].block_count() &&
          leq(c.parts[i], c.parts[r])) {
        sum += mu[r];
      }
    }
    mu[i] = -sum;
  }
  c.to_top = mu;
  return mu;
}

BigInt catalan(int k) {
  if (k < 0) {
    throw ValidationError("catalan index must be nonnegative");
  }
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= 2 * (2 * i - 1);
    c /= i + 1;
  }
  return c;
}

NestingForest build_nesting(const NoncrossingPartition& pi) {
  int nb = pi.block_count();
  NestingForest f;
  f.parent.assign(nb, -1);
  f.slot.assign(nb, -1);
  f.children_by_gap.resize(nb);
  for (int b = 0; b < nb; ++b) {
    std::size_t gaps = pi.blocks()[b].size() - 1;
    f.children_by_gap[b].assign(gaps, {});
  }
  std::vector<int> owner(pi.n() + 1, -1);
  for (int b = 0; b < nb; ++b) {
    for (int p : pi.blocks()[b]) {
      owner[p] = b;
    }
  }
  std::vector<int> stack;
  for (int p = 1; p <= pi.n(); ++p) {
    int b = owner[p];
    const auto& mem = pi.blocks()[b];
    if (p == mem.front()) {
      if (stack.empty()) {
        f.roots.push_back(b);
      } else {
        int par = stack.back();
        const auto& pm = pi.blocks()[par];
        int gap = static_cast<int>(std::upper_bound(pm.begin(), pm.end(), p) - pm.begin()) - 1;
        f.parent[b] = par;
        f.slot[b] = gap;
        f.children_by_gap[par][gap].push_back(b);
      }
      stack.push_back(b);
    }
    if (p == mem.back()) {
      stack.pop_back();
    }
  }
  return f;
}

}  // namespace graphfp
