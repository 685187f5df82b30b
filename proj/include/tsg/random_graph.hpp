#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsg/mixed_graph.hpp"
#include "tsg/rng.hpp"

namespace tsg::graph {

// Random mixed graph with 2..max_vertices vertices labelled "1", "2", ... and
// up to max_edges edges, roughly 60% directed and 40% undirected.  Loops are
// skipped and duplicates collapse, so the realized edge count may be smaller.
inline MixedGraph random_mixed_graph(Rng& rng, int max_vertices = 5,
                                     int max_edges = 10) {
  const int n = rng.uniform_int(2, max_vertices);
  std::vector<std::string> labels;
  for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  std::vector<std::pair<std::string, std::string>> dir, und;
  const int n_edges = rng.uniform_int(0, max_edges);
  for (int e = 0; e < n_edges; ++e) {
    const int a = rng.uniform_int(0, n - 1);
    const int b = rng.uniform_int(0, n - 1);
    const bool directed = rng.uniform01() < 0.6;
    if (a == b) continue;
    if (directed) {
      dir.emplace_back(labels[a], labels[b]);
    } else {
      und.emplace_back(labels[a], labels[b]);
    }
  }
  return MixedGraph(std::move(labels), dir, und);
}

}  // namespace tsg::graph
