#include "tsg/mixed_graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace tsg::graph {

namespace {

bool valid_label(const std::string& s) {
  if (s.empty() || s == "->" || s == "--" || s.front() == '#') return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' ||
        c == '}') {
      return false;
    }
  }
  return true;
}

}  // namespace

void VertexSet::check(int v) const {
  if (v < 0 || v >= universe()) {
    throw query_error("vertex id out of range for this set");
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe() != other.universe()) {
    throw std::invalid_argument("vertex sets over different universes");
  }
}

void VertexSet::insert(int v) {
  check(v);
  bits_[v] = true;
}

void VertexSet::erase(int v) {
  check(v);
  bits_[v] = false;
}

bool VertexSet::empty() const {
  return std::find(bits_.begin(), bits_.end(), true) == bits_.end();
}

int VertexSet::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 0; v < universe(); ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (int v = 0; v < universe(); ++v) {
    if (bits_[v] && other.bits_[v]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (int v = 0; v < universe(); ++v) {
    if (bits_[v] && !other.bits_[v]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (int v = 0; v < universe(); ++v) {
    if (other.bits_[v]) bits_[v] = true;
  }
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (int v = 0; v < universe(); ++v) {
    if (!other.bits_[v]) bits_[v] = false;
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (int v = 0; v < universe(); ++v) {
    if (other.bits_[v]) bits_[v] = false;
  }
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe());
  for (int v = 0; v < universe(); ++v) out.bits_[v] = !bits_[v];
  return out;
}

MixedGraph::MixedGraph(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& directed,
    const std::vector<std::pair<std::string, std::string>>& undirected)
    : labels_(std::move(labels)) {
  for (int v = 0; v < vertex_count(); ++v) {
    if (!valid_label(labels_[v])) {
      throw std::invalid_argument("invalid vertex label '" + labels_[v] + "'");
    }
    if (!index_.emplace(labels_[v], v).second) {
      throw std::invalid_argument("duplicate vertex label '" + labels_[v] +
                                  "'");
    }
  }
  std::set<std::pair<int, int>> dir, und;
  for (const auto& [from, to] : directed) {
    const int a = index_of(from);
    const int b = index_of(to);
    if (a == b) continue;  // directed self-loops are stripped
    dir.emplace(a, b);
  }
  for (const auto& [x, y] : undirected) {
    const int a = index_of(x);
    const int b = index_of(y);
    if (a == b) {
      throw std::invalid_argument("undirected self-loop at '" + x + "'");
    }
    und.emplace(std::min(a, b), std::max(a, b));
  }
  directed_.assign(dir.begin(), dir.end());
  undirected_.assign(und.begin(), und.end());
  parents_.resize(vertex_count());
  children_.resize(vertex_count());
  neighbours_.resize(vertex_count());
  for (const auto& [a, b] : directed_) {
    parents_[b].push_back(a);
    children_[a].push_back(b);
  }
  for (const auto& [a, b] : undirected_) {
    neighbours_[a].push_back(b);
    neighbours_[b].push_back(a);
  }
  for (auto& v : parents_) std::sort(v.begin(), v.end());
  for (auto& v : children_) std::sort(v.begin(), v.end());
  for (auto& v : neighbours_) std::sort(v.begin(), v.end());
}

int MixedGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw query_error("vertex id out of range");
  }
  return v;
}

const std::string& MixedGraph::label(int v) const {
  return labels_[check_vertex(v)];
}

int MixedGraph::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) {
    throw query_error("unknown vertex label '" + label + "'");
  }
  return it->second;
}

std::optional<int> MixedGraph::find(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MixedGraph::has_directed(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  return std::binary_search(directed_.begin(), directed_.end(),
                            std::make_pair(from, to));
}

bool MixedGraph::has_undirected(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return std::binary_search(undirected_.begin(), undirected_.end(),
                            std::make_pair(std::min(a, b), std::max(a, b)));
}

const std::vector<int>& MixedGraph::parents_of(int v) const {
  return parents_[check_vertex(v)];
}

const std::vector<int>& MixedGraph::children_of(int v) const {
  return children_[check_vertex(v)];
}

const std::vector<int>& MixedGraph::neighbours_of(int v) const {
  return neighbours_[check_vertex(v)];
}

VertexSet MixedGraph::full_set() const {
  VertexSet s(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) s.insert(v);
  return s;
}

VertexSet MixedGraph::set_of(const std::vector<int>& vs) const {
  VertexSet s(vertex_count());
  for (int v : vs) {
    check_vertex(v);
    s.insert(v);
  }
  return s;
}

VertexSet MixedGraph::set_of_labels(const std::vector<std::string>& ls) const {
  VertexSet s(vertex_count());
  for (const auto& l : ls) s.insert(index_of(l));
  return s;
}

std::vector<std::string> MixedGraph::labels_of(const VertexSet& s) const {
  if (s.universe() != vertex_count()) {
    throw query_error("vertex set does not belong to this graph");
  }
  std::vector<std::string> out;
  for (int v : s.members()) out.push_back(labels_[v]);
  return out;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
  return labels_ == other.labels_ && directed_ == other.directed_ &&
         undirected_ == other.undirected_;
}

namespace {

const VertexSet& check_set(const MixedGraph& g, const VertexSet& A) {
  if (A.universe() != g.vertex_count()) {
    throw query_error("vertex set does not belong to this graph");
  }
  return A;
}

}  // namespace

VertexSet parents(const MixedGraph& g, const VertexSet& A) {
  check_set(g, A);
  VertexSet out(g.vertex_count());
  for (int a : A.members()) {
    for (int p : g.parents_of(a)) out.insert(p);
  }
  out -= A;
  return out;
}

VertexSet neighbours(const MixedGraph& g, const VertexSet& A) {
  check_set(g, A);
  VertexSet out(g.vertex_count());
  for (int a : A.members()) {
    for (int w : g.neighbours_of(a)) out.insert(w);
  }
  out -= A;
  return out;
}

VertexSet children(const MixedGraph& g, const VertexSet& A) {
  check_set(g, A);
  VertexSet out(g.vertex_count());
  for (int a : A.members()) {
    for (int c : g.children_of(a)) out.insert(c);
  }
  out -= A;
  return out;
}

VertexSet ancestors(const MixedGraph& g, const VertexSet& A) {
  check_set(g, A);
  VertexSet out = A;
  std::vector<int> stack = A.members();
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int p : g.parents_of(v)) {
      if (!out.contains(p)) {
        out.insert(p);
        stack.push_back(p);
      }
    }
  }
  return out;
}

MixedGraph induced_subgraph(const MixedGraph& g, const VertexSet& A) {
  check_set(g, A);
  std::vector<std::string> labels;
  for (int v : A.members()) labels.push_back(g.label(v));
  std::vector<std::pair<std::string, std::string>> dir, und;
  for (const auto& [a, b] : g.directed_edges()) {
    if (A.contains(a) && A.contains(b)) dir.emplace_back(g.label(a), g.label(b));
  }
  for (const auto& [a, b] : g.undirected_edges()) {
    if (A.contains(a) && A.contains(b)) und.emplace_back(g.label(a), g.label(b));
  }
  return MixedGraph(std::move(labels), dir, und);
}

MixedGraph marginal_ancestral_graph(const MixedGraph& g, const VertexSet& U) {
  const VertexSet A = ancestors(g, U);
  std::vector<std::string> labels;
  for (int v : A.members()) labels.push_back(g.label(v));
  std::vector<std::pair<std::string, std::string>> dir;
  std::set<std::pair<int, int>> und;
  for (const auto& [a, b] : g.directed_edges()) {
    if (A.contains(a) && A.contains(b)) dir.emplace_back(g.label(a), g.label(b));
  }
  for (const auto& [a, b] : g.undirected_edges()) {
    if (A.contains(a) && A.contains(b)) und.emplace(a, b);
  }
  // Undirected paths whose intermediate vertices all avoid the closure are
  // summarized by an edge between the closure vertices they join.  Each
  // connected component of the skeleton restricted to the complement of A
  // links every pair of closure vertices adjacent to it.
  std::vector<int> comp(g.vertex_count(), -1);
  int n_comp = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (A.contains(v) || comp[v] >= 0) continue;
    const int c = n_comp++;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbours_of(u)) {
        if (!A.contains(w) && comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<std::set<int>> boundary(n_comp);
  for (int a : A.members()) {
    for (int w : g.neighbours_of(a)) {
      if (!A.contains(w)) boundary[comp[w]].insert(a);
    }
  }
  for (const auto& vs : boundary) {
    for (auto it = vs.begin(); it != vs.end(); ++it) {
      for (auto jt = std::next(it); jt != vs.end(); ++jt) {
        und.emplace(*it, *jt);
      }
    }
  }
  std::vector<std::pair<std::string, std::string>> und_labels;
  for (const auto& [a, b] : und) und_labels.emplace_back(g.label(a), g.label(b));
  return MixedGraph(std::move(labels), dir, und_labels);
}

MixedGraph undirected_skeleton(const MixedGraph& g) {
  std::vector<std::pair<std::string, std::string>> und;
  for (const auto& [a, b] : g.undirected_edges()) {
    und.emplace_back(g.label(a), g.label(b));
  }
  return MixedGraph(g.labels(), {}, und);
}

MixedGraph parse_mg(const std::string& text) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  const auto add_vertex = [&](const std::string& l) {
    if (seen.insert(l).second) labels.push_back(l);
  };
  std::vector<std::pair<std::string, std::string>> dir, und;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tokens[0] == "vertices:") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_label(tokens[i])) {
          throw parse_error(where + "invalid vertex label '" + tokens[i] + "'");
        }
        add_vertex(tokens[i]);
      }
      continue;
    }
    if (tokens.size() != 3) {
      throw parse_error(where + "expected 'a -> b', 'a -- b' or 'vertices: ...'");
    }
    if (!valid_label(tokens[0]) || !valid_label(tokens[2])) {
      throw parse_error(where + "invalid vertex label");
    }
    add_vertex(tokens[0]);
    add_vertex(tokens[2]);
    if (tokens[1] == "->") {
      dir.emplace_back(tokens[0], tokens[2]);
    } else if (tokens[1] == "--") {
      if (tokens[0] == tokens[2]) {
        throw parse_error(where + "undirected self-loop at '" + tokens[0] + "'");
      }
      und.emplace_back(tokens[0], tokens[2]);
    } else {
      throw parse_error(where + "unknown edge operator '" + tokens[1] + "'");
    }
  }
  return MixedGraph(std::move(labels), dir, und);
}

MixedGraph load_mg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mg(buf.str());
}

std::string to_mg(const MixedGraph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& [a, b] : g.directed_edges()) {
    out << g.label(a) << " -> " << g.label(b) << '\n';
  }
  for (const auto& [a, b] : g.undirected_edges()) {
    out << g.label(a) << " -- " << g.label(b) << '\n';
  }
  return out.str();
}

std::string to_dot(const MixedGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& l : g.labels()) out << "  \"" << l << "\";\n";
  for (const auto& [a, b] : g.directed_edges()) {
    out << "  \"" << g.label(a) << "\" -> \"" << g.label(b) << "\";\n";
  }
  for (const auto& [a, b] : g.undirected_edges()) {
    out << "  \"" << g.label(a) << "\" -> \"" << g.label(b)
        << "\" [dir=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tsg::graph
