#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chaingeo/projective_line.hpp"

namespace chaingeo {

/// Largest graphs handed to graph_isomorphic.
inline constexpr int kGraphIsomorphismBudget = 64;

/// Undirected loop-free graph on the points of a projective line.
class DistantGraph {
 public:
  DistantGraph(std::vector<ProjPoint> vertices, std::vector<std::uint8_t> adjacency);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<ProjPoint>& vertices() const { return vertices_; }
  bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i) * size() + j] != 0; }
  std::vector<int> neighbors(int i) const;
  int degree(int i) const;
  int edge_count() const;

 private:
  std::vector<ProjPoint> vertices_;
  std::vector<std::uint8_t> adj_;
};

DistantGraph distant_graph(const ProjectiveLine& line);
DistantGraph distant_graph(const FiniteRing& ring);

struct GraphStats {
  int vertices = 0;
  int edges = 0;
  std::vector<int> degrees;    // non-increasing
  std::vector<int> diameters;  // one per component, ordered by least vertex
  int components = 0;
  bool complete = false;
};

GraphStats graph_stats(const DistantGraph& g);

/// Colour refinement followed by backtracking. SizeError above
/// kGraphIsomorphismBudget vertices.
bool graph_isomorphic(const DistantGraph& g, const DistantGraph& h);

/// Points whose distant neighbourhood equals that of R(1,0).
std::vector<ProjPoint> radical_points(const ProjectiveLine& line, const DistantGraph& g);
std::vector<ProjPoint> radical_points(const FiniteRing& ring);

std::string to_dot(const FiniteRing& ring, const DistantGraph& g);
nlohmann::json to_json(const FiniteRing& ring, const DistantGraph& g);
nlohmann::json to_json(const GraphStats& s);

}  // namespace chaingeo
