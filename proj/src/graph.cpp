#include "graphfp/graph.hpp"

#include <algorithm>
#include <set>

#include "graphfp/errors.hpp"

namespace graphfp {

DirectedGraph::DirectedGraph(
    std::vector<std::string> vertex_ids,
    std::vector<std::tuple<std::string, std::string, std::string>> edge_triples) {
  if (vertex_ids.empty()) {
    throw ValidationError("graph must have at least one vertex");
  }
  std::sort(vertex_ids.begin(), vertex_ids.end());
  for (std::size_t i = 0; i + 1 < vertex_ids.size(); ++i) {
    if (vertex_ids[i] == vertex_ids[i + 1]) {
      throw ValidationError("duplicate vertex id '" + vertex_ids[i] + "'");
    }
  }
  vertex_ids_ = std::move(vertex_ids);
  for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i) {
    if (vertex_ids_[i].empty()) {
      throw ValidationError("empty vertex id");
    }
    vertex_lookup_[vertex_ids_[i]] = i;
  }

  std::sort(edge_triples.begin(), edge_triples.end(),
            [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  out_edges_.assign(vertex_ids_.size(), {});
  for (const auto& [id, src, dst] : edge_triples) {
    if (id.empty()) {
      throw ValidationError("empty edge id");
    }
    if (edge_lookup_.count(id)) {
      throw ValidationError("duplicate edge id '" + id + "'");
    }
    auto s = vertex_lookup_.find(src);
    if (s == vertex_lookup_.end()) {
      throw ValidationError("edge '" + id + "': source vertex '" + src + "' is not declared");
    }
    auto d = vertex_lookup_.find(dst);
    if (d == vertex_lookup_.end()) {
      throw ValidationError("edge '" + id + "': target vertex '" + dst + "' is not declared");
    }
    int e = static_cast<int>(edges_.size());
    edges_.push_back(Edge{id, s->second, d->second});
    edge_lookup_[id] = e;
    out_edges_[s->second].push_back(e);
  }
}

DirectedGraph DirectedGraph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ValidationError("graph json must be an object with 'vertices' and 'edges'");
  }
  std::vector<std::string> verts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) {
      throw ValidationError("graph vertices must be strings");
    }
    verts.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("id") || !e.contains("src") || !e.contains("dst")) {
      throw ValidationError("graph edges must be objects with 'id', 'src', 'dst'");
    }
    edges.emplace_back(e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                       e.at("dst").get<std::string>());
  }
  return DirectedGraph(std::move(verts), std::move(edges));
}

nlohmann::json DirectedGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertex_ids_;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges_) {
    j["edges"].push_back({{"id", e.id}, {"src", vertex_ids_[e.src]}, {"dst", vertex_ids_[e.dst]}});
  }
  return j;
}

int DirectedGraph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int DirectedGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  return it == edge_lookup_.end() ? -1 : it->second;
}

const std::vector<int>& DirectedGraph::edges_from(int v) const { return out_edges_.at(v); }

DirectedGraph make_one_vertex_loops(int n) {
  if (n < 1) {
    throw ValidationError("loop count must be at least 1");
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back("e" + std::to_string(i), "v", "v");
  }
  return DirectedGraph({"v"}, std::move(edges));
}

DirectedGraph make_circulant(int n) {
  if (n < 1) {
    throw ValidationError("circulant size must be at least 1");
  }
  std::vector<std::string> verts;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    verts.push_back("v" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i) {
    int next = (i % n) + 1;
    edges.emplace_back("e" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string(next));
  }
  return DirectedGraph(std::move(verts), std::move(edges));
}

}  // namespace graphfp
