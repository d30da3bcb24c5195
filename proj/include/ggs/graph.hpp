// Copyright 2026 The ggstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "ggs/core.hpp"

namespace ggs {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1. Edges are stored as sorted
/// (u, v) pairs with u < v, in lexicographic order, without duplicates.
class Graph {
 public:
  Graph() = default;

  static Graph build(int n, std::vector<Edge> edges) {
    if (n < 1) throw Error(ErrorCode::BadSize, "graph needs n >= 1");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n = " +
                        std::to_string(n));
      }
      if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    return g;
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// star(n): centre 0 joined to 1..n-1. line(n): path 0-1-..-(n-1).
/// cycle(n): line plus (0, n-1). complete(n): all pairs. triangle: complete(3).
inline Graph family(const std::string& name, int n) {
  std::vector<Edge> e;
  if (name == "triangle") {
    if (n != 3) throw Error(ErrorCode::BadSize, "triangle has n = 3");
    return Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  }
  if (name == "star") {
    if (n < 1) throw Error(ErrorCode::BadSize, "star needs n >= 1");
    for (int j = 1; j < n; ++j) e.emplace_back(0, j);
  } else if (name == "line") {
    if (n < 1) throw Error(ErrorCode::BadSize, "line needs n >= 1");
    for (int j = 0; j + 1 < n; ++j) e.emplace_back(j, j + 1);
  } else if (name == "cycle") {
    if (n < 3) throw Error(ErrorCode::BadSize, "cycle needs n >= 3");
    for (int j = 0; j + 1 < n; ++j) e.emplace_back(j, j + 1);
    e.emplace_back(0, n - 1);
  } else if (name == "complete") {
    if (n < 1) throw Error(ErrorCode::BadSize, "complete needs n >= 1");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  } else if (name == "empty") {
    if (n < 1) throw Error(ErrorCode::BadSize, "empty needs n >= 1");
  } else {
    throw Error(ErrorCode::UnknownName, "no graph family named '" + name + "'");
  }
  return Graph::build(n, std::move(e));
}

struct Bipartition {
  std::vector<int> first;   // contains the lowest vertex of every component
  std::vector<int> second;
};

/// BFS two-colouring; nullopt when the graph has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int root = 0; root < g.n(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

}  // namespace ggs
