// Acceptance gate: eight end-to-end criteria, one pass/fail line each.
// Exit code is the number of failed criteria. All numeric comparisons are
// exact (tolerance zero); each criterion also carries a wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphfp/cumulant.hpp"
#include "graphfp/element.hpp"
#include "graphfp/fock.hpp"
#include "graphfp/freeness.hpp"
#include "graphfp/graph.hpp"
#include "graphfp/lattice_path.hpp"
#include "graphfp/noncrossing.hpp"
#include "graphfp/word.hpp"

using namespace graphfp;

namespace {

using Nc = NoncrossingPartition;

DirectedGraph lollipop() {
  return DirectedGraph({"u", "v"}, {{"a", "u", "v"}, {"l", "v", "v"}});
}

DirectedGraph shared_range() {
  return DirectedGraph({"u", "v", "w"}, {{"e1", "u", "w"}, {"e2", "v", "w"}});
}

DirectedGraph single_edge() {
  return DirectedGraph({"x", "y"}, {{"e1", "x", "y"}});
}

DiagonalElement scalar_diag(const DirectedGraph& g, long long c) {
  return DiagonalElement::identity(g).scaled(Coeff(c));
}

// Depth-first walk over every all-path letter word with total length at most
// max_total; visit is called once per nonempty word.
void for_each_letter_word(const DirectedGraph& g, int max_total,
                          const std::function<void(const std::vector<Letter>&)>& visit) {
  std::vector<Letter> alphabet;
  for (const auto& path : enumerate_paths(g, max_total)) {
    alphabet.push_back({path, Exp::One});
    alphabet.push_back({path, Exp::Star});
  }
  std::vector<Letter> cur;
  std::function<void(int)> rec = [&](int budget) {
    if (!cur.empty()) {
      visit(cur);
    }
    for (const auto& l : alphabet) {
      int len = l.word.length();
      if (len > budget) {
        continue;
      }
      cur.push_back(l);
      rec(budget - len);
      cur.pop_back();
    }
  };
  rec(max_total);
}

// Moebius value of the bottom-to-top interval computed from nothing but the
// defining recursion, memoized over the upper argument.
std::int64_t bottom_mobius_oracle(const std::vector<Nc>& all, std::size_t qi,
                                  std::vector<std::int64_t>& memo,
                                  std::vector<char>& known) {
  if (known[qi]) {
    return memo[qi];
  }
  const Nc& q = all[qi];
  std::int64_t value;
  if (q.block_count() == q.n()) {
    value = 1;  // mu(bottom, bottom)
  } else {
    std::int64_t acc = 0;
    for (std::size_t ri = 0; ri < all.size(); ++ri) {
      if (ri != qi && leq(all[ri], q)) {
        acc += bottom_mobius_oracle(all, ri, memo, known);
      }
    }
    value = -acc;
  }
  memo[qi] = value;
  known[qi] = 1;
  return value;
}

struct Criterion {
  int index;
  std::string text;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "moment chain from a pure second cumulant matches the catalan closed form",
                      5.0, [](std::string& note) {
    bool ok = true;
    for (long long n = 1; n <= 3; ++n) {
      std::map<int, Coeff> k{{2, Coeff(2 * n)}};
      for (int order = 2; order <= 12; order += 2) {
        BigInt expect = catalan(order / 2);
        for (int i = 0; i < order / 2; ++i) {
          expect *= 2 * n;
        }
        ok = ok && moments_from_cumulants(k, order) == Coeff(Rational(expect));
      }
      for (int order = 1; order <= 11; order += 2) {
        ok = ok && moments_from_cumulants(k, order) == Coeff(0);
      }
    }
    note = "N in {1,2,3}, even orders to 12, odd to 11";
    return ok;
  }});

  criteria.push_back({2, "second cumulant of the generating operator is twice the loop count",
                      1.0, [](std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      DirectedGraph g = make_one_vertex_loops(n);
      Element t = generating_operator(g);
      ok = ok && cumulant(g, {t, t}, EMode::Paper) == scalar_diag(g, 2 * n);
      ok = ok && cumulant(g, {t}, EMode::Paper).is_zero();
      ok = ok && cumulant(g, {t, t, t}, EMode::Paper).is_zero();
    }
    note = "orders 1 and 3 vanish";
    return ok;
  }});

  criteria.push_back({3, "loop powers: k2 of the sixth power is 2, overlapping spans flagged at order 2",
                      1.0, [](std::string& note) {
    DirectedGraph g = make_one_vertex_loops(1);
    Word l6 = word_from_string(g, "e1.e1.e1.e1.e1.e1");
    Element x = letter_element(g, Letter{l6, Exp::One});
    x += letter_element(g, Letter{l6, Exp::Star});
    bool ok = cumulant(g, {x, x}, EMode::Paper) == scalar_diag(g, 2);

    Element a = letter_element(g, Letter{word_from_string(g, "e1.e1"), Exp::One});
    Element b = letter_element(g, Letter{word_from_string(g, "e1.e1.e1"), Exp::One});
    MixedCumulantReport report = mixed_cumulant_report(g, a, b, EMode::Paper);
    ok = ok && !report.all_vanishing;
    bool order2 = false;
    for (const auto& w : report.witnesses) {
      order2 = order2 || w.order == 2;
    }
    ok = ok && order2;
    note = "witnesses found: " + std::to_string(report.witnesses.size());
    return ok;
  }});

  criteria.push_back({4, "structural freeness agrees with mixed-cumulant probes on the small-graph corpus",
                      60.0, [](std::string& note) {
    std::vector<DirectedGraph> corpus{make_one_vertex_loops(1), make_one_vertex_loops(2),
                                      lollipop(), shared_range(), make_circulant(3),
                                      single_edge()};
    int pairs = 0;
    int disagreements = 0;
    int inconclusive_free = 0;
    for (const auto& g : corpus) {
      auto words = enumerate_paths(g, 3);
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
          bool structural = generators_free(g, words[i], words[j]);
          Element a = letter_element(g, Letter{words[i], Exp::One});
          Element b = letter_element(g, Letter{words[j], Exp::One});
          MixedCumulantReport report = mixed_cumulant_report(g, a, b, EMode::Paper);
          ++pairs;
          if (structural != report.all_vanishing) {
            ++disagreements;
          }
          if (report.all_vanishing) {
            // finite-order probes cannot certify freeness, only fail to refute
            ++inconclusive_free;
          }
        }
      }
    }
    note = std::to_string(pairs) + " pairs, " + std::to_string(disagreements) +
           " disagreements, " + std::to_string(inconclusive_free) +
           " vanishing through order 4 (consistent, not conclusive)";
    return disagreements == 0 && pairs > 0;
  }});

  criteria.push_back({5, "noncrossing lattice counts and moebius values match the recursion oracle",
                      30.0, [](std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
      ok = ok && BigInt(enumerate_nc(n).size()) == catalan(n);
    }
    for (int k = 1; k <= 5; ++k) {
      ok = ok && BigInt(enumerate_nc(2 * k, NcFilter::Pairings).size()) == catalan(k);
    }
    for (int n = 1; n <= 7; ++n) {
      auto all = enumerate_nc(n);
      std::size_t bottom = all.size();
      std::size_t top = all.size();
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].block_count() == n) {
          bottom = i;
        }
        if (all[i].block_count() == 1) {
          top = i;
        }
      }
      std::vector<std::int64_t> memo(all.size(), 0);
      std::vector<char> known(all.size(), 0);
      std::int64_t oracle = bottom_mobius_oracle(all, top, memo, known);
      std::int64_t closed = (n % 2 == 1 ? 1 : -1) * catalan(n - 1).convert_to<std::int64_t>();
      ok = ok && oracle == closed;
      ok = ok && mobius(all[bottom], all[top]) == closed;
    }
    // the recursion must telescope to zero across every proper interval
    for (int n = 2; n <= 6; ++n) {
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
          ok = ok && acc == 0;
        }
      }
    }
    note = "counts to n=10, pairings to 2k=10, oracle to n=7, intervals to n=6";
    return ok;
  }});

  std::vector<DirectedGraph> word_corpus{make_one_vertex_loops(1), make_one_vertex_loops(2),
                                         make_circulant(2), make_circulant(3), make_circulant(4)};

  criteria.push_back({6, "fock-mode expectations match the truncated-space oracle for short words",
                      120.0, [&word_corpus](std::string& note) {
    bool ok = true;
    long long words = 0;
    for (const auto& g : word_corpus) {
      TruncatedFockSpace f(g, 6);
      for_each_letter_word(g, 5, [&](const std::vector<Letter>& w) {
        ++words;
        if (!(word_expectation(g, w, EMode::Fock) == oracle_expectation(f, w))) {
          ok = false;
        }
      });
    }
    note = std::to_string(words) + " words over 5 graphs, truncation 6";
    return ok && words > 0;
  }});

  criteria.push_back({7, "nonzero word expectations imply axis-returning paths; converse failures counted",
                      120.0, [&word_corpus](std::string& note) {
    bool ok = true;
    long long words = 0;
    long long nonzero = 0;
    long long converse_failures = 0;
    for (const auto& g : word_corpus) {
      for_each_letter_word(g, 6, [&](const std::vector<Letter>& w) {
        ++words;
        bool zero = word_expectation(g, w, EMode::Paper).is_zero();
        bool axis = lattice_path(g, w).star_axis;
        if (!zero) {
          ++nonzero;
          if (!axis) {
            ok = false;  // necessity must never fail
          }
        } else if (axis) {
          ++converse_failures;  // axis-returning but vanishing: allowed, counted
        }
      });
    }
    note = std::to_string(words) + " words, " + std::to_string(nonzero) + " nonzero, " +
           std::to_string(converse_failures) + " converse failures";
    return ok && converse_failures > 0;
  }});

  criteria.push_back({8, "cycle cumulants: odd orders vanish, even orders are central and reconstruct per edge",
                      60.0, [](std::string& note) {
    bool ok = true;
    ok = ok && mu_coefficient(2).mu == 1;
    ok = ok && mu_coefficient(4).mu == -1;
    for (int cycle : {3, 4}) {
      DirectedGraph g = make_circulant(cycle);
      Element t = generating_operator(g);
      for (int order : {1, 3, 5}) {
        ok = ok && cumulant(g, std::vector<Element>(order, t), EMode::Paper).is_zero();
      }
      for (int order : {2, 4}) {
        DiagonalElement k = cumulant(g, std::vector<Element>(order, t), EMode::Paper);
        std::int64_t mu = mu_coefficient(order).mu;
        auto central = central_scalar(g, k);
        ok = ok && central.has_value() && *central == Coeff(2 * mu);
        DiagonalElement recon;
        for (int e = 0; e < g.edge_count(); ++e) {
          recon.add(g.edge_src(e), Coeff(Rational(mu)));
          recon.add(g.edge_dst(e), Coeff(Rational(mu)));
        }
        ok = ok && k == recon;
      }
    }
    note = "cycles of length 3 and 4, orders 1..5";
    return ok;
  }});

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.budget_seconds) {
      ok = false;
      note += " [over budget of " + std::to_string(c.budget_seconds) + "s]";
    }
    std::printf("[%s] criterion %d: %s [%s] (%.2fs)\n", ok ? "PASS" : "FAIL", c.index,
                c.text.c_str(), note.c_str(), dt);
    if (!ok) {
      ++failures;
    }
  }
  return failures;
}
