#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "graphfp/errors.hpp"
#include "graphfp/noncrossing.hpp"

using namespace graphfp;

namespace {

using Nc = NoncrossingPartition;

// Independent Moebius oracle from the defining recursion
//   mu(p, p) = 1,   mu(p, q) = -sum_{p <= r < q} mu(p, r)   for p < q,
// evaluated over an explicit enumeration of the interval.
std::int64_t mobius_oracle(const Nc& p, const Nc& q,
                           const std::vector<Nc>& all,
                           std::map<std::pair<Nc, Nc>, std::int64_t>& memo) {
  if (p == q) {
    return 1;
  }
  if (!leq(p, q)) {
    return 0;
  }
  auto key = std::make_pair(p, q);
  auto it = memo.find(key);
  if (it != memo.end()) {
    return it->second;
  }
  std::int64_t acc = 0;
  for (const auto& r : all) {
    if (leq(p, r) && leq(r, q) && !(r == q)) {
      acc += mobius_oracle(p, r, all, memo);
    }
  }
  memo[key] = -acc;
  return -acc;
}

}  // namespace

TEST_CASE("catalan numbers") {
  const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int k = 0; k <= 10; ++k) {
    CHECK(catalan(k) == BigInt(expected[k]));
  }
}

TEST_CASE("constructor normalizes and validates") {
  Nc p(4, {{3, 1}, {2}, {4}});
  CHECK(p.to_string() == "{1,3}{2}{4}");
  CHECK(p.block_count() == 3);

  CHECK_THROWS_AS(Nc(4, {{1, 3}, {2, 4}}), ValidationError);     // crossing
  CHECK_THROWS_AS(Nc(4, {{1, 2}, {3}}), ValidationError);        // misses 4
  CHECK_THROWS_AS(Nc(4, {{1, 2}, {2, 3}, {4}}), ValidationError);  // repeats 2
  CHECK_THROWS_AS(Nc(4, {{1, 2}, {3, 4, 5}}), ValidationError);  // out of range
  CHECK_THROWS_AS(Nc(0, {}), ValidationError);

  CHECK(Nc::discrete(3).to_string() == "{1}{2}{3}");
  CHECK(Nc::full(3).to_string() == "{1,2,3}");
}

TEST_CASE("refinement order") {
  Nc bottom = Nc::discrete(4);
  Nc top = Nc::full(4);
  Nc mid(4, {{1, 4}, {2, 3}});
  CHECK(leq(bottom, mid));
  CHECK(leq(mid, top));
  CHECK(leq(mid, mid));
  CHECK_FALSE(leq(top, mid));
  CHECK_FALSE(leq(Nc(4, {{1, 2}, {3, 4}}), mid));
}

TEST_CASE("enumeration counts match catalan numbers") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_nc(n).size() == static_cast<std::size_t>(catalan(n).convert_to<long long>()));
  }
  for (int k = 1; k <= 5; ++k) {
    CHECK(enumerate_nc(2 * k, NcFilter::Pairings).size() ==
          static_cast<std::size_t>(catalan(k).convert_to<long long>()));
    CHECK(enumerate_nc(2 * k - 1, NcFilter::Pairings).empty());
  }
  // the even-blocks filter agrees with the size-restricted enumeration
  for (int n = 2; n <= 6; ++n) {
    CHECK(enumerate_nc(n, NcFilter::EvenBlocks) == enumerate_nc_sizes(n, {2, 4, 6}));
  }
  CHECK(enumerate_nc_sizes(4, {2}) == enumerate_nc(4, NcFilter::Pairings));
  CHECK(enumerate_nc_sizes(4, {4}).size() == 1);
  CHECK(enumerate_nc_sizes(4, {1, 3}).size() == 5);
  // enumeration has no duplicates
  auto all4 = enumerate_nc(4);
  std::set<Nc> distinct(all4.begin(), all4.end());
  CHECK(distinct.size() == all4.size());
}

TEST_CASE("moebius between bottom and top") {
  const long long expected[] = {0, 1, -1, 2, -5, 14, -42, 132};
  for (int n = 1; n <= 7; ++n) {
    CHECK(mobius(Nc::discrete(n), Nc::full(n)) == expected[n]);
  }
}

TEST_CASE("moebius agrees with the recursion oracle on all intervals") {
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate_nc(n);
    std::map<std::pair<Nc, Nc>, std::int64_t> memo;
    for (const auto& p : all) {
      for (const auto& q : all) {
        CHECK(mobius(p, q) == mobius_oracle(p, q, all, memo));
      }
    }
  }
  // spot pairs in NC(5)
  auto all5 = enumerate_nc(5);
  std::map<std::pair<Nc, Nc>, std::int64_t> memo5;
  Nc mid(5, {{1, 5}, {2, 3, 4}});
  CHECK(mobius(mid, Nc::full(5)) == mobius_oracle(mid, Nc::full(5), all5, memo5));
  CHECK(mobius(Nc::discrete(5), mid) == mobius_oracle(Nc::discrete(5), mid, all5, memo5));
}

TEST_CASE("moebius vanishes outside the order and sums to zero on proper intervals") {
  CHECK(mobius(Nc(4, {{1, 2}, {3, 4}}), Nc(4, {{1, 4}, {2, 3}})) == 0);
  for (int n = 2; n <= 5; ++n) {
    auto all = enumerate_nc(n);
    for (const auto& p : all) {
      for (const auto& q : all) {
        if (p == q || !leq(p, q)) {
          continue;
        }
        std::int64_t acc = 0;
        for (const auto& r : all) {
          if (leq(p, r) && leq(r, q)) {
            acc += mobius(r, q);
          }
        }
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("mu_to_top aligns with the enumeration order") {
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_nc(n);
    auto mu = mu_to_top(n);
    REQUIRE(mu.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(mu[i] == mobius(all[i], Nc::full(n)));
    }
  }
}

TEST_CASE("nesting forest places inner blocks in parent gaps") {
  Nc pi(6, {{1, 6}, {2, 3}, {4, 5}});
  NestingForest f = build_nesting(pi);
  REQUIRE(f.parent.size() == 3);
  CHECK(f.parent[0] == -1);
  CHECK(f.parent[1] == 0);
  CHECK(f.parent[2] == 0);
  CHECK(f.slot[1] == 0);
  CHECK(f.slot[2] == 0);
  CHECK(f.roots == std::vector<int>{0});
  REQUIRE(f.children_by_gap[0].size() == 1);
  CHECK(f.children_by_gap[0][0] == std::vector<int>{1, 2});

  Nc deep(6, {{1, 6}, {2, 5}, {3, 4}});
  NestingForest fd = build_nesting(deep);
  CHECK(fd.parent == std::vector<int>{-1, 0, 1});
  CHECK(fd.slot == std::vector<int>{-1, 0, 0});

  Nc flat(4, {{1, 2}, {3, 4}});
  NestingForest ff = build_nesting(flat);
  CHECK(ff.parent == std::vector<int>{-1, -1});
  CHECK(ff.roots == std::vector<int>{0, 1});

  Nc multi(5, {{1, 3, 5}, {2}, {4}});
  NestingForest fm = build_nesting(multi);
  CHECK(fm.parent == std::vector<int>{-1, 0, 0});
  CHECK(fm.slot == std::vector<int>{-1, 0, 1});
  REQUIRE(fm.children_by_gap[0].size() == 2);
  CHECK(fm.children_by_gap[0][0] == std::vector<int>{1});
  CHECK(fm.children_by_gap[0][1] == std::vector<int>{2});
}

TEST_CASE("json round trip") {
  Nc pi(4, {{1, 4}, {2, 3}});
  CHECK(Nc::from_json(pi.to_json()) == pi);
  CHECK_THROWS_AS(Nc::from_json(nlohmann::json{{"n", 4}}), ValidationError);
}

TEST_CASE("enumeration bound guards resource use") {
  CHECK_THROWS_AS(enumerate_nc(7, NcFilter::All, 6), ResourceGuardError);
  CHECK_THROWS_AS(mu_to_top(7, 6), ResourceGuardError);
  CHECK_NOTHROW(enumerate_nc(6, NcFilter::All, 6));

  set_nc_bound_override(4);
  CHECK(effective_nc_bound() == 4);
  CHECK_THROWS_AS(enumerate_nc(5), ResourceGuardError);
  CHECK(effective_nc_bound(9) == 9);  // explicit bound wins
  set_nc_bound_override(-1);
  CHECK_NOTHROW(enumerate_nc(5));
}
