#include "graphfp/fock.hpp"

#include "graphfp/errors.hpp"

namespace graphfp {

namespace {

constexpr std::size_t kDimGuard = 200000;

}  // namespace

TruncatedFockSpace::TruncatedFockSpace(const DirectedGraph& g, int max_len)
    : g_(g), max_len_(max_len) {
  if (max_len < 0) {
    throw ValidationError("truncation length must be nonnegative");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    basis_.push_back(Word::vertex(v));
  }
  // Grow paths length by length so the dimension guard fires before the
  // basis is materialized beyond it.
  std::vector<Word> frontier;
  for (int e = 0; e < g.edge_count(); ++e) {
    frontier.push_back(Word::path(g, {e}));
  }
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    if (basis_.size() + frontier.size() > kDimGuard) {
      throw ResourceGuardError("truncated path space exceeds " + std::to_string(kDimGuard) +
                               " basis vectors");
    }
    std::vector<Word> next;
    for (const auto& w : frontier) {
      if (len < max_len) {
        for (int e : g.edges_from(w.range(g))) {
          std::vector<int> edges = w.edges();
          edges.push_back(e);
          next.push_back(Word::path(g, std::move(edges)));
        }
      }
      basis_.push_back(w);
    }
    frontier = std::move(next);
  }
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    lookup_[basis_[i]] = i;
  }
}

int TruncatedFockSpace::index(const Word& w) const {
  auto it = lookup_.find(w);
  return it == lookup_.end() ? -1 : it->second;
}

std::map<int, Coeff> apply_element(const TruncatedFockSpace& f, const Element& a,
                                   int basis_index) {
  const DirectedGraph& g = f.graph();
  const Word& u = f.basis(basis_index);
  std::map<int, Coeff> out;
  for (const auto& [t, c] : a.terms()) {
    auto y = strip_prefix(g, t.beta, u);
    if (!y) {
      continue;
    }
    auto target = concat(g, t.alpha, *y);
    // The shared-range invariant makes the concatenation admissible.
    if (target->length() > f.max_len()) {
      throw ValidationError("application leaves the truncated space: length " +
                            std::to_string(target->length()) + " exceeds " +
                            std::to_string(f.max_len()));
    }
    int idx = f.index(*target);
    auto [it, inserted] = out.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        out.erase(it);
      }
    }
  }
  return out;
}

DiagonalElement oracle_expectation(const TruncatedFockSpace& f,
                                   const std::vector<Letter>& letters) {
  const DirectedGraph& g = f.graph();
  int creation_total = 0;
  for (const auto& l : letters) {
    if (!l.word.is_vertex() && l.exp == Exp::One) {
      creation_total += l.word.length();
    }
  }
  if (creation_total > f.max_len()) {
    throw ValidationError("total creation length " + std::to_string(creation_total) +
                          " exceeds the truncation " + std::to_string(f.max_len()) +
                          "; the oracle refuses to truncate");
  }
  DiagonalElement out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Word cur = Word::vertex(v);
    bool alive = true;
    // Operator words act on the right argument first.
    for (auto it = letters.rbegin(); it != letters.rend() && alive; ++it) {
      if (it->word.is_vertex()) {
        alive = cur.source(g) == it->word.vertex_index();
        continue;
      }
      if (it->exp == Exp::One) {
        auto next = concat(g, it->word, cur);
        if (!next) {
          alive = false;
        } else {
          cur = *next;
        }
      } else {
        auto next = strip_prefix(g, it->word, cur);
        if (!next) {
          alive = false;
        } else {
          cur = *next;
        }
      }
    }
    if (alive && cur.is_vertex() && cur.vertex_index() == v) {
      out.add(v, Coeff(1));
    }
  }
  return out;
}

}  // namespace graphfp
