#include "graphfp/element.hpp"

#include "graphfp/errors.hpp"

namespace graphfp {

CanonicalTerm make_term(const DirectedGraph& g, Word alpha, Word beta) {
  if (alpha.range(g) != beta.range(g)) {
    throw ValidationError("term sides must share a range: '" + word_to_string(g, alpha) +
                          "' ends at '" + g.vertex_id(alpha.range(g)) + "', '" +
                          word_to_string(g, beta) + "' ends at '" + g.vertex_id(beta.range(g)) +
                          "'");
  }
  return CanonicalTerm{std::move(alpha), std::move(beta)};
}

void Element::add_term(const CanonicalTerm& t, const Coeff& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [t, c] : o.terms_) {
    add_term(t, c);
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [t, c] : o.terms_) {
    add_term(t, -c);
  }
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element out = *this;
  out += o;
  return out;
}

Element Element::operator-(const Element& o) const {
  Element out = *this;
  out -= o;
  return out;
}

Element Element::operator-() const {
  Element out;
  for (const auto& [t, c] : terms_) {
    out.terms_.emplace(t, -c);
  }
  return out;
}

Element Element::scaled(const Coeff& c) const {
  Element out;
  if (c.is_zero()) {
    return out;
  }
  for (const auto& [t, k] : terms_) {
    out.add_term(t, k * c);
  }
  return out;
}

Element vertex_projection(int v) {
  Element out;
  out.add_term(CanonicalTerm{Word::vertex(v), Word::vertex(v)}, Coeff(1));
  return out;
}

Element letter_element(const DirectedGraph& g, const Letter& l) {
  Element out;
  if (l.word.is_vertex()) {
    return vertex_projection(l.word.vertex_index());
  }
  Word r = Word::vertex(l.word.range(g));
  if (l.exp == Exp::One) {
    out.add_term(CanonicalTerm{l.word, r}, Coeff(1));
  } else {
    out.add_term(CanonicalTerm{r, l.word}, Coeff(1));
  }
  return out;
}

Element identity_element(const DirectedGraph& g) {
  Element out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.add_term(CanonicalTerm{Word::vertex(v), Word::vertex(v)}, Coeff(1));
  }
  return out;
}

std::optional<CanonicalTerm> term_product(const DirectedGraph& g, const CanonicalTerm& t1,
                                          const CanonicalTerm& t2) {
  // L_a L_b^* L_c L_d^*: the middle L_b^* L_c survives only when one of b, c
  // extends the other.
  if (auto h = strip_prefix(g, t1.beta, t2.alpha)) {
    return CanonicalTerm{*concat(g, t1.alpha, *h), t2.beta};
  }
  if (auto h = strip_prefix(g, t2.alpha, t1.beta)) {
    return CanonicalTerm{t1.alpha, *concat(g, t2.beta, *h)};
  }
  return std::nullopt;
}

Element multiply(const DirectedGraph& g, const Element& a, const Element& b) {
  Element out;
  for (const auto& [t1, c1] : a.terms()) {
    for (const auto& [t2, c2] : b.terms()) {
      if (auto t = term_product(g, t1, t2)) {
        out.add_term(*t, c1 * c2);
      }
    }
  }
  return out;
}

Element adjoint(const Element& a) {
  Element out;
  for (const auto& [t, c] : a.terms()) {
    out.add_term(CanonicalTerm{t.beta, t.alpha}, c.conjugate());
  }
  return out;
}

Element collapse_balanced(const DirectedGraph& g, const Element& a) {
  Element out;
  for (const auto& [t, c] : a.terms()) {
    if (t.alpha == t.beta) {
      int s = t.alpha.source(g);
      out.add_term(CanonicalTerm{Word::vertex(s), Word::vertex(s)}, c);
    } else {
      out.add_term(t, c);
    }
  }
  return out;
}

DiagonalElement DiagonalElement::identity(const DirectedGraph& g) {
  DiagonalElement out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.add(v, Coeff(1));
  }
  return out;
}

Coeff DiagonalElement::at(int v) const {
  auto it = values_.find(v);
  return it == values_.end() ? Coeff() : it->second;
}

void DiagonalElement::add(int v, const Coeff& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = values_.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      values_.erase(it);
    }
  }
}

DiagonalElement& DiagonalElement::operator+=(const DiagonalElement& o) {
  for (const auto& [v, c] : o.values_) {
    add(v, c);
  }
  return *this;
}

DiagonalElement& DiagonalElement::operator-=(const DiagonalElement& o) {
  for (const auto& [v, c] : o.values_) {
    add(v, -c);
  }
  return *this;
}

DiagonalElement DiagonalElement::scaled(const Coeff& c) const {
  DiagonalElement out;
  if (c.is_zero()) {
    return out;
  }
  for (const auto& [v, k] : values_) {
    out.add(v, k * c);
  }
  return out;
}

DiagonalElement DiagonalElement::pointwise(const DiagonalElement& o) const {
  DiagonalElement out;
  for (const auto& [v, c] : values_) {
    auto it = o.values_.find(v);
    if (it != o.values_.end()) {
      out.add(v, c * it->second);
    }
  }
  return out;
}

Element DiagonalElement::embed() const {
  Element out;
  for (const auto& [v, c] : values_) {
    out.add_term(CanonicalTerm{Word::vertex(v), Word::vertex(v)}, c);
  }
  return out;
}

DiagonalElement expectation(const DirectedGraph& g, const Element& a, EMode mode) {
  DiagonalElement out;
  for (const auto& [t, c] : a.terms()) {
    if (mode == EMode::Fock) {
      if (t.alpha.is_vertex() && t.beta.is_vertex()) {
        out.add(t.alpha.vertex_index(), c);
      }
    } else if (t.alpha == t.beta) {
      out.add(t.alpha.source(g), c);
    }
  }
  return out;
}

std::optional<Letter> as_letter(const DirectedGraph& g, const CanonicalTerm& t) {
  (void)g;
  if (t.alpha.is_vertex() && t.beta.is_vertex()) {
    return Letter{t.alpha, Exp::One};
  }
  if (t.beta.is_vertex()) {
    return Letter{t.alpha, Exp::One};
  }
  if (t.alpha.is_vertex()) {
    return Letter{t.beta, Exp::Star};
  }
  return std::nullopt;
}

std::vector<std::pair<Letter, Coeff>> decompose_letters(const DirectedGraph& g, const Element& a) {
  std::vector<std::pair<Letter, Coeff>> out;
  for (const auto& [t, c] : a.terms()) {
    auto l = as_letter(g, t);
    if (!l) {
      throw ValidationError("element is not a linear combination of letters: term L[" +
                            word_to_string(g, t.alpha) + "] L*[" + word_to_string(g, t.beta) +
                            "]");
    }
    out.emplace_back(*l, c);
  }
  return out;
}

std::set<Word> path_support(const Element& a) {
  std::set<Word> out;
  for (const auto& [t, c] : a.terms()) {
    if (!t.alpha.is_vertex()) {
      out.insert(t.alpha);
    }
    if (!t.beta.is_vertex()) {
      out.insert(t.beta);
    }
  }
  return out;
}

int letter_height(const Letter& l) {
  if (l.word.is_vertex()) {
    return 0;
  }
  return l.exp == Exp::One ? l.word.length() : -l.word.length();
}

int forced_vertex(const DirectedGraph& g, const Letter& l) {
  if (l.word.is_vertex()) {
    return l.word.vertex_index();
  }
  return l.exp == Exp::One ? l.word.source(g) : l.word.range(g);
}

Element letters_product(const DirectedGraph& g, const std::vector<Letter>& letters,
                        bool collapse_each_step) {
  if (letters.empty()) {
    return identity_element(g);
  }
  Element acc = letter_element(g, letters.front());
  if (collapse_each_step) {
    acc = collapse_balanced(g, acc);
  }
  for (std::size_t i = 1; i < letters.size(); ++i) {
    acc = multiply(g, acc, letter_element(g, letters[i]));
    if (collapse_each_step) {
      acc = collapse_balanced(g, acc);
    }
  }
  return acc;
}

DiagonalElement word_expectation(const DirectedGraph& g, const std::vector<Letter>& letters,
                                 EMode mode) {
  bool rebalance = mode == EMode::Paper;
  return expectation(g, letters_product(g, letters, rebalance), mode);
}

Element generating_operator(const DirectedGraph& g) {
  Element out;
  for (int e = 0; e < g.edge_count(); ++e) {
    Word w = Word::path(g, {e});
    out += letter_element(g, Letter{w, Exp::One});
    out += letter_element(g, Letter{w, Exp::Star});
  }
  return out;
}

}  // namespace graphfp
