// Copyright 2026 The inpd Authors.
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


#include "inpd/network.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace inpd {

Graph::Graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges)
    : adjacency_(n), edges_(edges.size()) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edges_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph grid(int rows, int cols, Neighborhood neighborhood, bool wrap) {
  if (rows < 3 || cols < 3) throw std::invalid_argument("grid needs at least 3 rows and 3 columns");
  std::set<std::pair<NodeId, NodeId>> edges;
  auto index = [cols](int r, int c) { return static_cast<NodeId>(r * cols + c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          if (neighborhood == Neighborhood::Four && dr != 0 && dc != 0) continue;
          int rr = r + dr;
          int cc = c + dc;
          if (wrap) {
            rr = (rr + rows) % rows;
            cc = (cc + cols) % cols;
          } else if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) {
            continue;
          }
          NodeId u = index(r, c);
          NodeId v = index(rr, cc);
          edges.emplace(std::min(u, v), std::max(u, v));
        }
      }
    }
  }
  std::vector<std::pair<NodeId, NodeId>> list(edges.begin(), edges.end());
  return Graph(static_cast<std::size_t>(rows) * cols, list);
}

Graph erdos_renyi(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > max_edges) {
    throw std::invalid_argument("cannot place " + std::to_string(m) + " edges on " +
                                std::to_string(n) + " nodes");
  }
  std::set<std::pair<NodeId, NodeId>> chosen;
  std::vector<std::pair<NodeId, NodeId>> order;
  order.reserve(m);
  while (order.size() < m) {
    auto u = static_cast<NodeId>(uniform_index(rng, n));
    auto v = static_cast<NodeId>(uniform_index(rng, n));
    if (u == v) continue;
    std::pair<NodeId, NodeId> e{std::min(u, v), std::max(u, v)};
    if (chosen.insert(e).second) order.push_back(e);
  }
  return Graph(n, order);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.size() == 0) return s;
  s.min = g.degree(0);
  std::size_t total = 0;
  for (NodeId v = 0; v < g.size(); ++v) {
    std::size_t d = g.degree(v);
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
    total += d;
    if (d == 0) ++s.isolated;
  }
  s.mean = static_cast<double>(total) / static_cast<double>(g.size());
  return s;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ',' << v << '\n';
}

}  // namespace inpd
