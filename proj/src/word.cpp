#include "graphfp/word.hpp"

#include <algorithm>

#include "graphfp/errors.hpp"

namespace graphfp {

Word Word::vertex(int v) {
  if (v < 0) {
    throw ValidationError("vertex index must be nonnegative");
  }
  Word w;
  w.vertex_ = v;
  return w;
}

Word Word::path(const DirectedGraph& g, std::vector<int> edges) {
  if (edges.empty()) {
    throw ValidationError("edge path must be nonempty; use Word::vertex for empty paths");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] < 0 || edges[i] >= g.edge_count()) {
      throw ValidationError("edge index out of range");
    }
    if (i + 1 < edges.size() && g.edge_dst(edges[i]) != g.edge_src(edges[i + 1])) {
      throw ValidationError("path is not admissible: '" + g.edge(edges[i]).id + "' ends at '" +
                            g.vertex_id(g.edge_dst(edges[i])) + "' but '" +
                            g.edge(edges[i + 1]).id + "' starts at '" +
                            g.vertex_id(g.edge_src(edges[i + 1])) + "'");
    }
  }
  Word w;
  w.edges_ = std::move(edges);
  return w;
}

Word Word::from_json(const DirectedGraph& g, const nlohmann::json& j) {
  if (j.is_string()) {
    return word_from_string(g, j.get<std::string>());
  }
  if (j.is_object() && j.contains("vertex")) {
    int v = g.vertex_index(j.at("vertex").get<std::string>());
    if (v < 0) {
      throw ValidationError("unknown vertex '" + j.at("vertex").get<std::string>() + "'");
    }
    return Word::vertex(v);
  }
  if (j.is_object() && j.contains("edges")) {
    std::vector<int> edges;
    for (const auto& e : j.at("edges")) {
      int idx = g.edge_index(e.get<std::string>());
      if (idx < 0) {
        throw ValidationError("unknown edge '" + e.get<std::string>() + "'");
      }
      edges.push_back(idx);
    }
    return Word::path(g, std::move(edges));
  }
  throw ValidationError(
      "word json must be a word string, {\"vertex\": id} or {\"edges\": [ids]}");
}

int Word::source(const DirectedGraph& g) const {
  return is_vertex() ? vertex_ : g.edge_src(edges_.front());
}

int Word::range(const DirectedGraph& g) const {
  return is_vertex() ? vertex_ : g.edge_dst(edges_.back());
}

nlohmann::json Word::to_json(const DirectedGraph& g) const {
  if (is_vertex()) {
    return {{"vertex", g.vertex_id(vertex_)}};
  }
  nlohmann::json arr = nlohmann::json::array();
  for (int e : edges_) {
    arr.push_back(g.edge(e).id);
  }
  return {{"edges", arr}};
}

bool Word::operator<(const Word& o) const {
  if (edges_.size() != o.edges_.size()) {
    return edges_.size() < o.edges_.size();
  }
  if (edges_ != o.edges_) {
    return edges_ < o.edges_;
  }
  return vertex_ < o.vertex_;
}

std::optional<Word> concat(const DirectedGraph& g, const Word& w1, const Word& w2) {
  if (w1.range(g) != w2.source(g)) {
    return std::nullopt;
  }
  if (w1.is_vertex()) {
    return w2;
  }
  if (w2.is_vertex()) {
    return w1;
  }
  std::vector<int> edges = w1.edges();
  edges.insert(edges.end(), w2.edges().begin(), w2.edges().end());
  return Word::path(g, std::move(edges));
}

std::optional<Word> strip_prefix(const DirectedGraph& g, const Word& p, const Word& w) {
  if (p.is_vertex()) {
    return p.vertex_index() == w.source(g) ? std::optional<Word>(w) : std::nullopt;
  }
  if (p.length() > w.length()) {
    return std::nullopt;
  }
  if (!std::equal(p.edges().begin(), p.edges().end(), w.edges().begin())) {
    return std::nullopt;
  }
  if (p.length() == w.length()) {
    return Word::vertex(w.range(g));
  }
  return Word::path(g, std::vector<int>(w.edges().begin() + p.length(), w.edges().end()));
}

std::string word_to_string(const DirectedGraph& g, const Word& w) {
  if (w.is_vertex()) {
    return "v:" + g.vertex_id(w.vertex_index());
  }
  std::string out;
  for (std::size_t i = 0; i < w.edges().size(); ++i) {
    if (i) {
      out += '.';
    }
    out += g.edge(w.edges()[i]).id;
  }
  return out;
}

Word word_from_string(const DirectedGraph& g, const std::string& text) {
  if (text.empty()) {
    throw ValidationError("empty word literal");
  }
  if (text.rfind("v:", 0) == 0) {
    std::string name = text.substr(2);
    int v = g.vertex_index(name);
    if (v < 0) {
      throw ValidationError("unknown vertex '" + name + "'");
    }
    return Word::vertex(v);
  }
  std::vector<int> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string token =
        dot == std::string::npos ? text.substr(start) : text.substr(start, dot - start);
    int e = g.edge_index(token);
    if (e < 0) {
      throw ValidationError("unknown edge '" + token + "'");
    }
    edges.push_back(e);
    if (dot == std::string::npos) {
      break;
    }
    start = dot + 1;
  }
  return Word::path(g, std::move(edges));
}

LoopClass classify_loop(const DirectedGraph& g, const Word& w) {
  LoopClass out;
  out.root = w;
  if (w.is_vertex() || w.source(g) != w.range(g)) {
    return out;
  }
  out.is_loop = true;
  const auto& e = w.edges();
  int n = static_cast<int>(e.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool periodic = true;
    for (int i = p; i < n && periodic; ++i) {
      periodic = e[i] == e[i % p];
    }
    // A period prefix is a valid root only if it is itself a loop; for
    // admissible words e[p-1] feeding back into e[0] guarantees that.
    if (periodic && g.edge_dst(e[p - 1]) == g.edge_src(e[0])) {
      out.root = Word::path(g, std::vector<int>(e.begin(), e.begin() + p));
      out.multiplicity = n / p;
      return out;
    }
  }
  return out;
}

std::vector<Word> enumerate_paths(const DirectedGraph& g, int max_len) {
  std::vector<Word> out;
  if (max_len < 1) {
    return out;
  }
  std::vector<std::vector<int>> frontier;
  for (int e = 0; e < g.edge_count(); ++e) {
    frontier.push_back({e});
  }
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (auto& seq : frontier) {
      for (int e : g.edges_from(g.edge_dst(seq.back()))) {
        auto ext = seq;
        ext.push_back(e);
        next.push_back(std::move(ext));
      }
      out.push_back(Word::path(g, std::move(seq)));
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphfp
