#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "graphfp/coeff.hpp"
#include "graphfp/graph.hpp"
#include "graphfp/word.hpp"

namespace graphfp {

// Exponent of a generator letter: L_w or L_w^*.
enum class Exp { One, Star };

// Expectation semantics. Fock reads off the vertex-projection component of a
// fully multiplied element (vacuum matrix entries). Paper assigns every
// balanced term L_a L_a^* its source projection, and word-level evaluation
// additionally rebalances after every letter (see letters_product).
enum class EMode { Fock, Paper };

struct Letter {
  Word word;
  Exp exp = Exp::One;

  bool operator==(const Letter&) const = default;
  bool operator<(const Letter& o) const {
    if (!(word == o.word)) {
      return word < o.word;
    }
    return exp < o.exp;
  }
};

// Reduced generator monomial L_alpha L_beta^* with range(alpha) == range(beta).
// Vertex projections are (v, v); a creation letter L_w is (w, range(w)); an
// annihilation letter L_w^* is (range(w), w).
struct CanonicalTerm {
  Word alpha;
  Word beta;

  bool operator==(const CanonicalTerm&) const = default;
  bool operator<(const CanonicalTerm& o) const {
    if (!(alpha == o.alpha)) {
      return alpha < o.alpha;
    }
    return beta < o.beta;
  }
};

CanonicalTerm make_term(const DirectedGraph& g, Word alpha, Word beta);

// Finite linear combination of canonical terms with Gaussian rational
// coefficients. Terms with zero coefficient are never stored.
class Element {
 public:
  Element() = default;

  const std::map<CanonicalTerm, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const CanonicalTerm& t, const Coeff& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const Coeff& c) const;

  bool operator==(const Element&) const = default;

 private:
  std::map<CanonicalTerm, Coeff> terms_;
};

Element vertex_projection(int v);
Element letter_element(const DirectedGraph& g, const Letter& l);
Element identity_element(const DirectedGraph& g);

// Product of two canonical terms is zero or a single canonical term.
std::optional<CanonicalTerm> term_product(const DirectedGraph& g, const CanonicalTerm& t1,
                                          const CanonicalTerm& t2);

Element multiply(const DirectedGraph& g, const Element& a, const Element& b);
Element adjoint(const Element& a);

// Rewrite every balanced term (a, a) as its source projection.
Element collapse_balanced(const DirectedGraph& g, const Element& a);

// Diagonal element: a coefficient per vertex projection.
class DiagonalElement {
 public:
  DiagonalElement() = default;

  static DiagonalElement identity(const DirectedGraph& g);

  const std::map<int, Coeff>& values() const { return values_; }
  Coeff at(int v) const;
  void add(int v, const Coeff& c);
  bool is_zero() const { return values_.empty(); }

  DiagonalElement& operator+=(const DiagonalElement& o);
  DiagonalElement& operator-=(const DiagonalElement& o);
  DiagonalElement scaled(const Coeff& c) const;
  DiagonalElement pointwise(const DiagonalElement& o) const;
  Element embed() const;

  bool operator==(const DiagonalElement&) const = default;

 private:
  std::map<int, Coeff> values_;
};

DiagonalElement expectation(const DirectedGraph& g, const Element& a, EMode mode);

// A term is a letter when one side is a vertex word.
std::optional<Letter> as_letter(const DirectedGraph& g, const CanonicalTerm& t);

// Split an element into letters; throws ValidationError when some term is a
// genuine product L_a L_b^* with both sides nontrivial.
std::vector<std::pair<Letter, Coeff>> decompose_letters(const DirectedGraph& g, const Element& a);

// All non-vertex words appearing on either side of a term.
std::set<Word> path_support(const Element& a);

// Signed edge length: 0 for vertex letters, +|w| for L_w, -|w| for L_w^*.
int letter_height(const Letter& l);

// The vertex a letter's expectation values attach to: source for creation,
// range for annihilation, the vertex itself for vertex letters.
int forced_vertex(const DirectedGraph& g, const Letter& l);

// Fold letters left to right with the plain product; in rebalancing mode every
// intermediate product is passed through collapse_balanced.
Element letters_product(const DirectedGraph& g, const std::vector<Letter>& letters,
                        bool collapse_each_step);

// Word-level expectation of a letter sequence. Paper mode rebalances at every
// step; Fock mode multiplies out fully and keeps vertex terms.
DiagonalElement word_expectation(const DirectedGraph& g, const std::vector<Letter>& letters,
                                 EMode mode);

// Sum of L_e + L_e^* over all edges.
Element generating_operator(const DirectedGraph& g);

}  // namespace graphfp
