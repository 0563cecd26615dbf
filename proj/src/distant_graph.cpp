#include "chaingeo/distant_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace chaingeo {

DistantGraph::DistantGraph(std::vector<ProjPoint> vertices, std::vector<std::uint8_t> adjacency)
    : vertices_(std::move(vertices)), adj_(std::move(adjacency)) {
  const int n = size();
  if (adj_.size() != static_cast<std::size_t>(n) * n) throw Error(ErrorKind::Domain, "adjacency size mismatch");
  for (int i = 0; i < n; ++i) {
    if (adjacent(i, i)) throw Error(ErrorKind::Domain, "distant graphs have no loops");
    for (int j = 0; j < i; ++j) {
      if (adjacent(i, j) != adjacent(j, i)) throw Error(ErrorKind::Domain, "adjacency is not symmetric");
    }
  }
}

std::vector<int> DistantGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

int DistantGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < size(); ++j) d += adjacent(i, j);
  return d;
}

int DistantGraph::edge_count() const {
  int e = 0;
  for (int i = 0; i < size(); ++i) e += degree(i);
  return e / 2;
}

DistantGraph distant_graph(const ProjectiveLine& line) {
  const FiniteRing& R = line.ring();
  const int n = line.size();
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool d = distant(R, line.point(i), line.point(j));
      adj[static_cast<std::size_t>(i) * n + j] = adj[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  return DistantGraph(line.points(), std::move(adj));
}

DistantGraph distant_graph(const FiniteRing& ring) { return distant_graph(ProjectiveLine(ring)); }

GraphStats graph_stats(const DistantGraph& g) {
  GraphStats s;
  const int n = g.size();
  s.vertices = n;
  s.edges = g.edge_count();
  for (int i = 0; i < n; ++i) s.degrees.push_back(g.degree(i));
  std::sort(s.degrees.rbegin(), s.degrees.rend());
  s.complete = s.edges == n * (n - 1) / 2;

  std::vector<int> component(n, -1);
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = s.components++;
    std::vector<int> members;
    std::deque<int> queue{start};
    component[start] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (int w : g.neighbors(v)) {
        if (component[w] < 0) {
          component[w] = id;
          queue.push_back(w);
        }
      }
    }
    int diameter = 0;
    for (int src : members) {
      std::vector<int> dist(n, -1);
      dist[src] = 0;
      std::deque<int> q{src};
      while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        diameter = std::max(diameter, dist[v]);
        for (int w : g.neighbors(v)) {
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            q.push_back(w);
          }
        }
      }
    }
    s.diameters.push_back(diameter);
  }
  return s;
}

namespace {

// Stable colour refinement; colours are canonical across both graphs because
// signatures are mapped through one shared dictionary.
std::pair<std::vector<int>, std::vector<int>> refine(const DistantGraph& g, const DistantGraph& h) {
  std::vector<int> cg(g.size()), ch(h.size());
  for (int i = 0; i < g.size(); ++i) cg[i] = g.degree(i);
  for (int i = 0; i < h.size(); ++i) ch[i] = h.degree(i);
  for (int round = 0; round < g.size() + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    const auto sig = [](const DistantGraph& x, const std::vector<int>& c, int v) {
      std::vector<int> nb;
      for (int w : x.neighbors(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], nb);
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (int i = 0; i < g.size(); ++i) sg.push_back(sig(g, cg, i));
    for (int i = 0; i < h.size(); ++i) sh.push_back(sig(h, ch, i));
    for (const auto& s : sg) dict.emplace(s, 0);
    for (const auto& s : sh) dict.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : dict) v = next++;
    std::vector<int> ng(g.size()), nh(h.size());
    for (int i = 0; i < g.size(); ++i) ng[i] = dict[sg[i]];
    for (int i = 0; i < h.size(); ++i) nh[i] = dict[sh[i]];
    const auto classes = [](const std::vector<int>& c) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      return std::unique(s.begin(), s.end()) - s.begin();
    };
    const bool stable = classes(ng) == classes(cg) && classes(nh) == classes(ch);
    cg = std::move(ng);
    ch = std::move(nh);
    if (stable) break;
  }
  return {cg, ch};
}

bool extend(const DistantGraph& g, const DistantGraph& h, const std::vector<int>& cg, const std::vector<int>& ch,
            std::vector<int>& map, std::vector<bool>& used, int v) {
  const int n = g.size();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || cg[v] != ch[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == h.adjacent(map[u], w);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(g, h, cg, ch, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool graph_isomorphic(const DistantGraph& g, const DistantGraph& h) {
  if (g.size() > kGraphIsomorphismBudget || h.size() > kGraphIsomorphismBudget) {
    throw Error(ErrorKind::Size, "graph isomorphism testing is limited to 64 vertices");
  }
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  const auto [cg, ch] = refine(g, h);
  auto sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  std::vector<int> map(g.size(), -1);
  std::vector<bool> used(g.size(), false);
  return extend(g, h, cg, ch, map, used, 0);
}

std::vector<ProjPoint> radical_points(const ProjectiveLine& line, const DistantGraph& g) {
  const FiniteRing& R = line.ring();
  const auto base = line.index_of_pair(R.one(), R.zero());
  if (!base) throw Error(ErrorKind::Internal, "R(1,0) missing from the point list");
  std::vector<ProjPoint> out;
  for (int q = 0; q < g.size(); ++q) {
    bool same = true;
    for (int x = 0; x < g.size() && same; ++x) same = g.adjacent(x, *base) == g.adjacent(x, q);
    if (same) out.push_back(g.vertices()[q]);
  }
  return out;
}

std::vector<ProjPoint> radical_points(const FiniteRing& ring) {
  const ProjectiveLine line(ring);
  return radical_points(line, distant_graph(line));
}

std::string to_dot(const FiniteRing& R, const DistantGraph& g) {
  std::ostringstream os;
  os << "graph \"P(" << R.name() << ")\" {\n";
  for (int i = 0; i < g.size(); ++i) {
    os << "  " << i << " [label=\"(" << R.label(g.vertices()[i].a) << "," << R.label(g.vertices()[i].b) << ")\"];\n";
  }
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (g.adjacent(i, j)) os << "  " << i << " -- " << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const GraphStats& s) {
  return {{"vertices", s.vertices}, {"edges", s.edges},           {"degrees", s.degrees},
          {"diameters", s.diameters}, {"components", s.components}, {"complete", s.complete}};
}

nlohmann::json to_json(const FiniteRing& R, const DistantGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& p : g.vertices()) vertices.push_back({R.label(p.a), R.label(p.b)});
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (g.adjacent(i, j)) edges.push_back({i, j});
    }
  }
  return {{"ring", R.name()}, {"vertices", vertices}, {"edges", edges}, {"stats", to_json(graph_stats(g))}};
}

}  // namespace chaingeo
