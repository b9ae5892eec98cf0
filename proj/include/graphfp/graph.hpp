#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace graphfp {

// Finite directed graph. Multiple edges and loops are allowed; every edge has
// a string id unique among edges, every vertex a string id unique among
// vertices. Vertices and edges are stored sorted by id, so an index order is
// also the lexicographic id order.
class DirectedGraph {
 public:
  struct Edge {
    std::string id;
    int src = -1;
    int dst = -1;
  };

  DirectedGraph(std::vector<std::string> vertex_ids,
                std::vector<std::tuple<std::string, std::string, std::string>> edge_triples);

  static DirectedGraph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }

  int vertex_index(const std::string& id) const;  // -1 when absent
  int edge_index(const std::string& id) const;    // -1 when absent

  int edge_src(int e) const { return edges_.at(e).src; }
  int edge_dst(int e) const { return edges_.at(e).dst; }

  // Edges leaving v, as indices sorted by edge id.
  const std::vector<int>& edges_from(int v) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::map<std::string, int> vertex_lookup_;
  std::map<std::string, int> edge_lookup_;
  std::vector<std::vector<int>> out_edges_;
};

// N loops e1..eN on a single vertex v.
DirectedGraph make_one_vertex_loops(int n);

// Cycle v1 -> v2 -> ... -> vN -> v1 with edges e1..eN, ej : vj -> v(j mod N)+1.
DirectedGraph make_circulant(int n);

}  // namespace graphfp
