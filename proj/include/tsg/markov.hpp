#pragma once

#include <string>
#include <vector>

#include "tsg/mixed_graph.hpp"

namespace tsg::markov {

using graph::MixedGraph;
using graph::VertexSet;

// Noncausal: the source block does not Granger-cause the target block.
// ContempCI: source and target are contemporaneously conditionally
// independent.  CondIndep: the limit information sets of source and target
// are independent given the information set.
enum class StatementKind { Noncausal, ContempCI, CondIndep };

// Constraint families of increasing strength: pairwise, local and
// block-recursive are enumerable edge-by-edge, vertex-by-vertex and
// block-by-block; the global causal and global independence levels are
// query-only.
enum class MarkovLevel { PC, LC, BC, GC, GA };

// One graph-licensed constraint on the process.  The information set names
// the vertices whose filtration conditions the claim: the full vertex set for
// enumerated statements, the separating set for CondIndep.
struct MarkovStatement {
  StatementKind kind;
  VertexSet source;
  VertexSet target;
  VertexSet information;
  bool operator==(const MarkovStatement&) const = default;
};

// All statements the graph asserts at the given level, canonically sorted
// (kind, then source and target labels).  Statements whose source set works
// out empty are vacuous and suppressed.  BC enumerates nonempty blocks of
// size at most max_block.  Levels GC and GA are query-only and rejected.
std::vector<MarkovStatement> enumerate_statements(const MixedGraph& g,
                                                  MarkovLevel level,
                                                  int max_block = 3);

// True iff the graph licenses "source A does not Granger-cause B at
// information set A u B u S": every path into B with an arrowhead at its B
// end is blocked given S u B.  A, B, S must be pairwise disjoint.
bool gc_noncausal(const MixedGraph& g, const VertexSet& A, const VertexSet& B,
                  const VertexSet& S);

// True iff the graph licenses contemporaneous conditional independence of A
// and B at information set A u B u S: every extended bi-pointing path
// between them is blocked given A u B u S.
bool gc_contemp(const MixedGraph& g, const VertexSet& A, const VertexSet& B,
                const VertexSet& S);

// True iff the graph licenses independence of the limit information sets of
// A and B given the one of S, i.e. A and B are p-separated given S.
bool ga_condindep(const MixedGraph& g, const VertexSet& A, const VertexSet& B,
                  const VertexSet& S);

struct GrangerBundle {
  bool a_noncausal_b;
  bool b_noncausal_a;
  bool contemporaneously_independent;
  bool operator==(const GrangerBundle&) const = default;
};

// The three statements that accompany a p-separation: A does not cause B,
// B does not cause A, and A, B are contemporaneously independent, all at
// information set A u B u S.
GrangerBundle psep_granger_bundle(const MixedGraph& g, const VertexSet& A,
                                  const VertexSet& B, const VertexSet& S);

// One-line rendering, e.g. "noncausal {1} -/-> {4} | info={1,3,4}" with sets
// as comma-joined lexicographically sorted labels.
std::string to_line(const std::vector<std::string>& labels,
                    const MarkovStatement& s);
std::string to_line(const MixedGraph& g, const MarkovStatement& s);

}  // namespace tsg::markov
