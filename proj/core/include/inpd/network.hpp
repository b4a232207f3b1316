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


#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "inpd/rng.hpp"

namespace inpd {

using NodeId = std::uint32_t;

/// Undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  /// Builds from an edge list; throws std::invalid_argument on self-loops,
  /// duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edges_ = 0;
};

enum class Neighborhood { Four, Eight };

/// Square lattice; node (r, c) has index r * cols + c. Throws
/// std::invalid_argument if rows or cols is below 3.
Graph grid(int rows, int cols, Neighborhood neighborhood, bool wrap);

/// G(n, m): exactly m distinct edges drawn uniformly, duplicates rejected.
/// Throws std::invalid_argument if m exceeds n(n-1)/2.
Graph erdos_renyi(std::size_t n, std::size_t m, Rng& rng);

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
  std::size_t isolated = 0;
};

DegreeStats degree_stats(const Graph& g);

/// "u,v" per line with u < v.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace inpd
