#pragma once

#include <optional>
#include <utility>

#include "tsg/mixed_graph.hpp"

namespace tsg::sep {

using graph::MixedGraph;
using graph::VertexSet;

// Mark an edge shows at one of its endpoints: a directed edge a -> b has
// Tail at a and Head at b; an undirected edge has Line at both ends.
enum class Mark { Tail, Head, Line };

enum class JunctionStatus { Collider, NonCollider };

// Classification of an intermediate vertex c on a path from the marks of the
// incoming and outgoing edges at c.  Collider shapes are ->c<-, ->c-- and
// --c<-: neither mark is a tail and not both are lines.
JunctionStatus collider_status(Mark arrival, Mark departure);

// Path families recognized by the search.  Any places no constraint on the
// path ends.  BPointing requires an arrowhead at the arrival endpoint b.
// ExtendedBiPointing requires the path to be entirely undirected or to carry
// an arrowhead at the start of its first directed edge and at the end of its
// last directed edge, so that it splits as undirected segment, bi-pointing
// core, undirected segment.
enum class PathKind { Any, BPointing, ExtendedBiPointing };

// True iff some path of the given kind between a and b is open given S:
// every intermediate occurrence classified Collider lies in S and every
// NonCollider occurrence lies outside S.  Paths may revisit vertices and
// edges, so this reduces to reachability over oriented edge traversals.
// Throws query_error if a = b or either endpoint lies in S.
bool p_connecting_exists(const MixedGraph& g, int a, int b,
                         const VertexSet& S, PathKind kind);

// True iff no pair a in A, b in B is joined by an open path given S.
// A, B, S must be pairwise disjoint and A, B nonempty.
bool p_separated(const MixedGraph& g, const VertexSet& A, const VertexSet& B,
                 const VertexSet& S);

// True iff every path between A and B with an arrowhead at its B end is
// blocked given the full conditioning set C.  C may contain B (the usual
// call passes S union B); it must not meet A.  Empty A or B is vacuously
// blocked.
bool b_pointing_blocked(const MixedGraph& g, const VertexSet& A,
                        const VertexSet& B, const VertexSet& C);

// True iff every extended bi-pointing path between A and B is blocked given
// C (usually A union B union S).  Symmetric in A and B.
bool ext_bipointing_blocked(const MixedGraph& g, const VertexSet& A,
                            const VertexSet& B, const VertexSet& C);

// Local-configuration test equivalent to p_separated(g, A, B, V\(A u B)):
// (A u ch(A)) and (B u ch(B)) are disjoint and no undirected edge joins them.
bool pure_collider_check(const MixedGraph& g, const VertexSet& A,
                         const VertexSet& B);

// If A and B are p-separated given S, grows them to a partition (A', B') with
// A' u B' u S = an(A u B u S), A within A', B within B', and A', B' still
// p-separated given S; otherwise nullopt.  The returned sets live in g's
// universe.
std::optional<std::pair<VertexSet, VertexSet>> extend_separation(
    const MixedGraph& g, const VertexSet& A, const VertexSet& B,
    const VertexSet& S);

// Trail-based activity test: enumerates trails (all vertices distinct,
// endpoints included) and declares one active given S when every collider on
// it has a descendant path into S (lies in an(S)) and every noncollider v is
// outside S or sits between two undirected edges while pa(v)\S is nonempty.
// Equivalent to p_connecting_exists with kind Any.
bool trail_p_active_exists(const MixedGraph& g, int a, int b,
                           const VertexSet& S);

// Ground-truth search: exhaustive DFS over paths that use no oriented edge
// traversal twice, applying the blocking definition literally.  For kind
// ExtendedBiPointing the path is searched as undirected segment, bi-pointing
// core, undirected segment, since shortening arguments do not preserve the
// segment structure across repeats.  Unlike p_connecting_exists this places
// no precondition on the endpoints, so C may contain a or b.
bool oracle_path_exists(const MixedGraph& g, int a, int b, const VertexSet& C,
                        PathKind kind);

// Ground truth for pure_collider_check: true iff some path between a and b
// has every intermediate occurrence classified Collider.
bool oracle_pure_collider_path_exists(const MixedGraph& g, int a, int b);

}  // namespace tsg::sep
