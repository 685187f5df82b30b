#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tsg/errors.hpp"

namespace tsg::graph {

// Set of vertex ids over a fixed universe [0, universe()).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(universe, false) {}

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(int v) const {
    return v >= 0 && v < universe() && bits_[v];
  }
  void insert(int v);
  void erase(int v);
  bool empty() const;
  int count() const;
  std::vector<int> members() const;  // ascending ids

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool operator==(const VertexSet&) const = default;

 private:
  void check(int v) const;
  void check_same_universe(const VertexSet& other) const;
  std::vector<bool> bits_;
};

// Mixed graph over labelled vertices: directed edges a -> b and undirected
// edges a -- b may coexist on the same pair.  Directed self-loops are accepted
// on input but stripped before anything is computed; undirected self-loops are
// rejected.  Instances are immutable after construction, so they are safe to
// share across threads and query concurrently.
class MixedGraph {
 public:
  MixedGraph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& directed,
             const std::vector<std::pair<std::string, std::string>>& undirected);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const;
  int index_of(const std::string& label) const;  // query_error if unknown
  std::optional<int> find(const std::string& label) const;

  bool has_directed(int from, int to) const;
  bool has_undirected(int a, int b) const;
  const std::vector<int>& parents_of(int v) const;
  const std::vector<int>& children_of(int v) const;
  const std::vector<int>& neighbours_of(int v) const;
  // Directed pairs (from, to); undirected pairs with first < second.  Sorted.
  const std::vector<std::pair<int, int>>& directed_edges() const {
    return directed_;
  }
  const std::vector<std::pair<int, int>>& undirected_edges() const {
    return undirected_;
  }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet full_set() const;
  VertexSet set_of(const std::vector<int>& vs) const;
  VertexSet set_of_labels(const std::vector<std::string>& ls) const;
  std::vector<std::string> labels_of(const VertexSet& s) const;  // id order

  bool operator==(const MixedGraph& other) const;

 private:
  int check_vertex(int v) const;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> directed_;
  std::vector<std::pair<int, int>> undirected_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> neighbours_;
};

// Derived-set operations.  All of them require the argument set to live in
// the graph's universe and throw query_error otherwise.
VertexSet parents(const MixedGraph& g, const VertexSet& A);
VertexSet neighbours(const MixedGraph& g, const VertexSet& A);
VertexSet children(const MixedGraph& g, const VertexSet& A);
// Smallest superset of A closed under adding parents (contains A itself).
VertexSet ancestors(const MixedGraph& g, const VertexSet& A);
MixedGraph induced_subgraph(const MixedGraph& g, const VertexSet& A);
// Graph on the ancestral closure of U: the induced subgraph plus an
// undirected edge for every pair joined by an undirected path whose
// intermediate vertices all lie outside the closure.
MixedGraph marginal_ancestral_graph(const MixedGraph& g, const VertexSet& U);
MixedGraph undirected_skeleton(const MixedGraph& g);

// Line-oriented graph text format (.mg): '#' comment lines and blank lines
// are ignored, 'vertices: a b c' declares vertices, 'a -> b' and 'a -- b'
// declare edges.  Duplicate declarations are idempotent.
MixedGraph parse_mg(const std::string& text);
MixedGraph load_mg(const std::string& path);
std::string to_mg(const MixedGraph& g);
std::string to_dot(const MixedGraph& g);

}  // namespace tsg::graph
