#include "graphfp/freeness.hpp"

#include <algorithm>
#include <cmath>

#include "graphfp/errors.hpp"
#include "graphfp/serialization.hpp"

namespace graphfp {

bool diagram_distinct(const DirectedGraph& g, const Word& w1, const Word& w2) {
  if (w1.is_vertex() || w2.is_vertex()) {
    throw ValidationError("diagram comparison needs path words");
  }
  LoopClass c1 = classify_loop(g, w1);
  LoopClass c2 = classify_loop(g, w2);
  if (c1.is_loop && c2.is_loop) {
    return !(c1.root == c2.root);
  }
  if (!c1.is_loop && !c2.is_loop) {
    return !(w1 == w2);
  }
  return true;
}

bool generators_free(const DirectedGraph& g, const Word& w1, const Word& w2) {
  return diagram_distinct(g, w1, w2);
}

bool supports_free_sufficient(const DirectedGraph& g, const Element& a, const Element& b) {
  for (const auto& w1 : path_support(a)) {
    for (const auto& w2 : path_support(b)) {
      if (!diagram_distinct(g, w1, w2)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<std::string, Element>> w_star_closure(const DirectedGraph& g,
                                                            const Element& a,
                                                            const std::string& tag,
                                                            int closure_degree) {
  if (a.is_zero()) {
    throw ValidationError("closure of the zero element is empty");
  }
  std::vector<std::pair<std::string, Element>> out;
  auto push_unique = [&out](std::string label, Element e) {
    for (const auto& [l, existing] : out) {
      if (existing == e) {
        return;
      }
    }
    out.emplace_back(std::move(label), std::move(e));
  };
  push_unique(tag + ":base", a);
  push_unique(tag + ":adjoint", adjoint(a));
  for (const auto& w : path_support(a)) {
    Word power = w;
    for (int k = 2; k <= closure_degree; ++k) {
      auto next = concat(g, power, w);
      if (!next) {
        break;  // only loops have admissible powers
      }
      power = *next;
      Element probe = letter_element(g, Letter{power, Exp::One});
      probe += letter_element(g, Letter{power, Exp::Star});
      push_unique(tag + ":pow(" + word_to_string(g, w) + "^" + std::to_string(k) + ")",
                  std::move(probe));
    }
  }
  return out;
}

namespace {

std::string letter_key(const Letter& l) {
  std::string key;
  if (l.word.is_vertex()) {
    key = "v" + std::to_string(l.word.vertex_index());
  } else {
    key = "p";
    for (int e : l.word.edges()) {
      key += std::to_string(e);
      key += '.';
    }
  }
  key += l.exp == Exp::One ? "^1" : "^*";
  return key;
}

}  // namespace

MixedCumulantReport mixed_cumulant_report(const DirectedGraph& g, const Element& a,
                                          const Element& b, EMode mode,
                                          const FreenessOptions& opts) {
  if (opts.max_order < 2) {
    throw ValidationError("mixed cumulants start at order 2");
  }
  auto side_a = w_star_closure(g, a, "a", opts.closure_degree);
  auto side_b = w_star_closure(g, b, "b", opts.closure_degree);

  std::vector<std::vector<std::pair<Letter, Coeff>>> dec_a;
  std::vector<std::vector<std::pair<Letter, Coeff>>> dec_b;
  for (const auto& [label, e] : side_a) {
    dec_a.push_back(decompose_letters(g, e));
  }
  for (const auto& [label, e] : side_b) {
    dec_b.push_back(decompose_letters(g, e));
  }

  double probes = static_cast<double>(side_a.size() + side_b.size());
  double tuple_space = std::pow(probes, opts.max_order);
  if (tuple_space > 2e6) {
    throw ResourceGuardError("mixed-cumulant probe space is too large (about " +
                             std::to_string(static_cast<long long>(tuple_space)) +
                             " tuples at order " + std::to_string(opts.max_order) + ")");
  }

  MixedCumulantReport report;
  report.max_order = opts.max_order;
  std::map<std::string, DiagonalElement> cache;

  for (int n = 2; n <= opts.max_order; ++n) {
    CumulantEvaluator eval(g, n, mode);
    // Side pattern: bit set means the position draws from side b. Patterns
    // using only one side are skipped, mixed cumulants need both.
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<std::size_t> limit(n);
      for (int i = 0; i < n; ++i) {
        limit[i] = (mask >> i) & 1u ? side_b.size() : side_a.size();
      }
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        ++report.tuples_evaluated;
        // Multilinear expansion of the chosen probes into letters.
        DiagonalElement total;
        std::vector<std::size_t> lpick(n, 0);
        std::vector<Letter> letters(n);
        while (true) {
          Coeff weight(1);
          std::string key;
          for (int i = 0; i < n; ++i) {
            const auto& letter_list = (mask >> i) & 1u ? dec_b[pick[i]] : dec_a[pick[i]];
            const auto& [l, c] = letter_list[lpick[i]];
            letters[i] = l;
            weight = weight * c;
          }
          int h = 0;
          for (const auto& l : letters) {
            h += letter_height(l);
          }
          if (h == 0) {
            key.clear();
            for (const auto& l : letters) {
              key += letter_key(l);
              key += '|';
            }
            auto it = cache.find(key);
            if (it == cache.end()) {
              // Letter-word cumulant in factored form: connected-partition mu
              // sum times the word expectation. Words with zero expectation
              // contribute nothing and skip the partition enumeration.
              DiagonalElement factored;
              DiagonalElement ew = word_expectation(g, letters, mode);
              if (!ew.is_zero()) {
                std::int64_t mu = 0;
                eval.evaluate(letters, nullptr, &mu);
                factored = ew.scaled(Coeff(Rational(mu)));
              }
              it = cache.emplace(key, std::move(factored)).first;
            }
            if (!it->second.is_zero()) {
              total += it->second.scaled(weight);
            }
          }
          int i = 0;
          while (i < n) {
            const auto& letter_list = (mask >> i) & 1u ? dec_b[pick[i]] : dec_a[pick[i]];
            if (++lpick[i] < letter_list.size()) {
              break;
            }
            lpick[i] = 0;
            ++i;
          }
          if (i == n) {
            break;
          }
        }

        if (!total.is_zero()) {
          report.all_vanishing = false;
          if (report.witnesses.size() < opts.max_witnesses) {
            MixedWitness w;
            w.order = n;
            for (int i = 0; i < n; ++i) {
              bool from_b = (mask >> i) & 1u;
              const auto& side = from_b ? side_b : side_a;
              const auto& letter_list = from_b ? dec_b[pick[i]] : dec_a[pick[i]];
              w.labels.push_back(side[pick[i]].first);
              std::set<std::string> verts;
              for (const auto& [l, c] : letter_list) {
                verts.insert(g.vertex_id(forced_vertex(g, l)));
              }
              std::string joined;
              for (const auto& v : verts) {
                if (!joined.empty()) {
                  joined += ',';
                }
                joined += v;
              }
              w.forced_vertices.push_back(joined);
            }
            w.value = diagonal_to_json(g, total);
            report.witnesses.push_back(std::move(w));
          }
          if (opts.stop_on_first) {
            return report;
          }
        }

        int i = 0;
        while (i < n) {
          if (++pick[i] < limit[i]) {
            break;
          }
          pick[i] = 0;
          ++i;
        }
        if (i == n) {
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace graphfp
