#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "graphfp/element.hpp"
#include "graphfp/errors.hpp"
#include "graphfp/fock.hpp"
#include "graphfp/graph.hpp"
#include "graphfp/word.hpp"

using namespace graphfp;

namespace {

DirectedGraph lollipop() {
  return DirectedGraph({"u", "v"}, {{"a", "u", "v"}, {"l", "v", "v"}});
}

Word w(const DirectedGraph& g, const std::string& text) { return word_from_string(g, text); }

using Vec = std::map<int, Coeff>;

Vec apply_to_vec(const TruncatedFockSpace& f, const Element& a, const Vec& x) {
  Vec out;
  for (const auto& [idx, c] : x) {
    for (const auto& [t, d] : apply_element(f, a, idx)) {
      Coeff& slot = out[t];
      slot += d * c;
      if (slot.is_zero()) {
        out.erase(t);
      }
    }
  }
  return out;
}

// every all-letter word over paths with the given total length budget
std::vector<std::vector<Letter>> letter_words(const DirectedGraph& g, int max_total) {
  std::vector<Letter> alphabet;
  for (const auto& path : enumerate_paths(g, max_total)) {
    alphabet.push_back({path, Exp::One});
    alphabet.push_back({path, Exp::Star});
  }
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, int budget) -> void {
    if (!cur.empty()) {
      out.push_back(cur);
    }
    for (const auto& l : alphabet) {
      int len = l.word.length();
      if (len > budget) {
        continue;
      }
      cur.push_back(l);
      self(self, budget - len);
      cur.pop_back();
    }
  };
  rec(rec, max_total);
  return out;
}

}  // namespace

TEST_CASE("basis grows vertices first, then paths by length") {
  DirectedGraph g3 = make_one_vertex_loops(3);
  TruncatedFockSpace f(g3, 6);
  CHECK(f.dim() == 1093);  // 1 vertex plus 3 + 9 + ... + 729 paths
  CHECK(f.max_len() == 6);
  CHECK(f.basis(0) == Word::vertex(0));
  CHECK(f.basis(1) == w(g3, "e1"));
  CHECK(f.basis(2) == w(g3, "e2"));
  CHECK(f.basis(3) == w(g3, "e3"));
  CHECK(f.basis(4) == w(g3, "e1.e1"));

  DirectedGraph h = lollipop();
  TruncatedFockSpace fh(h, 2);
  // u, v, a, l, a.l, l.l
  CHECK(fh.dim() == 6);
  CHECK(fh.basis(0) == Word::vertex(0));
  CHECK(fh.basis(1) == Word::vertex(1));
  CHECK(fh.basis(2) == w(h, "a"));

  TruncatedFockSpace tiny(h, 0);
  CHECK(tiny.dim() == 2);  // only the vertex vectors survive
}

TEST_CASE("index inverts basis") {
  DirectedGraph h = lollipop();
  TruncatedFockSpace f(h, 3);
  for (int i = 0; i < f.dim(); ++i) {
    CHECK(f.index(f.basis(i)) == i);
  }
  CHECK(f.index(w(h, "a.l.l.l")) == -1);  // beyond the truncation
}

TEST_CASE("applying elements matches the algebra product") {
  DirectedGraph h = lollipop();
  TruncatedFockSpace f(h, 6);
  Element x = letter_element(h, Letter{w(h, "a"), Exp::One}) +
              letter_element(h, Letter{w(h, "l"), Exp::Star}).scaled(Coeff(2));
  Element y = letter_element(h, Letter{w(h, "l"), Exp::One}) + vertex_projection(1);
  Element xy = multiply(h, x, y);
  for (int idx = 0; idx < f.dim(); ++idx) {
    if (f.basis(idx).length() > 2) {
      continue;  // keep headroom so neither route overflows
    }
    Vec start{{idx, Coeff(1)}};
    CHECK(apply_to_vec(f, x, apply_to_vec(f, y, start)) == apply_to_vec(f, xy, start));
  }
}

TEST_CASE("creation and annihilation act as expected on the vacuum") {
  DirectedGraph h = lollipop();
  TruncatedFockSpace f(h, 3);
  // L_a prepends a to paths starting at range(a) = v, so the live vacuum
  // for the edge a: u -> v is the one at v (vertex index 1).
  int vac_v = f.index(Word::vertex(1));
  Element la = letter_element(h, Letter{w(h, "a"), Exp::One});
  Vec one_step = apply_element(f, la, vac_v);
  REQUIRE(one_step.size() == 1);
  CHECK(one_step.begin()->first == f.index(w(h, "a")));
  CHECK(one_step.begin()->second == Coeff(1));
  // L_a vanishes on the vacuum at the wrong vertex
  CHECK(apply_element(f, la, f.index(Word::vertex(0))).empty());
  // annihilation returns to the vacuum
  Element la_star = letter_element(h, Letter{w(h, "a"), Exp::Star});
  Vec back = apply_element(f, la_star, f.index(w(h, "a")));
  REQUIRE(back.size() == 1);
  CHECK(back.begin()->first == vac_v);
}

TEST_CASE("the oracle agrees with the fock-mode expectation") {
  for (const DirectedGraph& g : {make_one_vertex_loops(2), lollipop(), make_circulant(3)}) {
    TruncatedFockSpace f(g, 4);
    for (const auto& word : letter_words(g, 3)) {
      DiagonalElement lhs = oracle_expectation(f, word);
      DiagonalElement rhs = word_expectation(g, word, EMode::Fock);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("vacuum moments of the generating operator on two loops") {
  DirectedGraph g2 = make_one_vertex_loops(2);
  TruncatedFockSpace f(g2, 4);
  Element t = generating_operator(g2);
  Vec vec{{f.index(Word::vertex(0)), Coeff(1)}};
  std::vector<Coeff> moments;
  for (int step = 1; step <= 4; ++step) {
    vec = apply_to_vec(f, t, vec);
    auto it = vec.find(f.index(Word::vertex(0)));
    moments.push_back(it == vec.end() ? Coeff(0) : it->second);
  }
  CHECK(moments[0] == Coeff(0));
  CHECK(moments[1] == Coeff(2));  // variance is the loop count
  CHECK(moments[2] == Coeff(0));
  CHECK(moments[3] == Coeff(8));  // catalan(2) * 2^2
}

TEST_CASE("leaving the truncated space is refused, never silent") {
  DirectedGraph g1 = make_one_vertex_loops(1);
  TruncatedFockSpace f(g1, 2);
  Element le = letter_element(g1, Letter{w(g1, "e1"), Exp::One});
  CHECK_THROWS_AS(apply_element(f, le, f.index(w(g1, "e1.e1"))), ValidationError);

  std::vector<Letter> too_long{{w(g1, "e1.e1"), Exp::One}, {w(g1, "e1"), Exp::One}};
  CHECK_THROWS_AS(oracle_expectation(f, too_long), ValidationError);
  CHECK_THROWS_AS(TruncatedFockSpace(g1, -1), ValidationError);
}

TEST_CASE("the dimension guard fires before materializing a huge basis") {
  DirectedGraph g3 = make_one_vertex_loops(3);
  CHECK_THROWS_AS(TruncatedFockSpace(g3, 12), ResourceGuardError);
}
