#include "tsg/markov.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "tsg/separation.hpp"

namespace tsg::markov {

namespace {

void check_disjoint(const MixedGraph& g, const VertexSet& A,
                    const VertexSet& B, const VertexSet& S) {
  if (A.universe() != g.vertex_count() || B.universe() != g.vertex_count() ||
      S.universe() != g.vertex_count()) {
    throw query_error("vertex set does not belong to this graph");
  }
  if (A.intersects(B) || A.intersects(S) || B.intersects(S)) {
    throw query_error("A, B and S must be pairwise disjoint");
  }
}

int kind_rank(StatementKind k) {
  switch (k) {
    case StatementKind::Noncausal: return 0;
    case StatementKind::ContempCI: return 1;
    case StatementKind::CondIndep: return 2;
  }
  return 3;
}

std::vector<std::string> sorted_labels(const std::vector<std::string>& labels,
                                       const VertexSet& s) {
  std::vector<std::string> out;
  for (const int v : s.members()) out.push_back(labels.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_set(const std::vector<std::string>& labels,
                       const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& l : sorted_labels(labels, s)) {
    if (!first) out << ',';
    first = false;
    out << l;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::vector<MarkovStatement> enumerate_statements(const MixedGraph& g,
                                                  MarkovLevel level,
                                                  int max_block) {
  const int n = g.vertex_count();
  const VertexSet all = g.full_set();
  std::vector<MarkovStatement> out;
  const auto add = [&](StatementKind kind, VertexSet source, VertexSet target) {
    if (source.empty()) return;  // vacuous
    out.push_back({kind, std::move(source), std::move(target), all});
  };
  switch (level) {
    case MarkovLevel::PC:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b || g.has_directed(a, b)) continue;
          add(StatementKind::Noncausal, g.set_of({a}), g.set_of({b}));
        }
      }
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (g.has_undirected(a, b)) continue;
          add(StatementKind::ContempCI, g.set_of({a}), g.set_of({b}));
        }
      }
      break;
    case MarkovLevel::LC:
      for (int a = 0; a < n; ++a) {
        const VertexSet self = g.set_of({a});
        add(StatementKind::Noncausal, all - (graph::parents(g, self) | self),
            self);
        add(StatementKind::ContempCI, all - (graph::neighbours(g, self) | self),
            self);
      }
      break;
    case MarkovLevel::BC:
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > max_block) continue;
        VertexSet block(n);
        for (int v = 0; v < n; ++v) {
          if (mask & (1u << v)) block.insert(v);
        }
        add(StatementKind::Noncausal, all - (graph::parents(g, block) | block),
            block);
        add(StatementKind::ContempCI,
            all - (graph::neighbours(g, block) | block), block);
      }
      break;
    case MarkovLevel::GC:
    case MarkovLevel::GA:
      throw query_error("level is query-only, not enumerable");
  }
  const auto& labels = g.labels();
  std::sort(out.begin(), out.end(),
            [&](const MarkovStatement& x, const MarkovStatement& y) {
              const int rx = kind_rank(x.kind), ry = kind_rank(y.kind);
              if (rx != ry) return rx < ry;
              const auto sx = sorted_labels(labels, x.source);
              const auto sy = sorted_labels(labels, y.source);
              if (sx != sy) return sx < sy;
              return sorted_labels(labels, x.target) <
                     sorted_labels(labels, y.target);
            });
  return out;
}

bool gc_noncausal(const MixedGraph& g, const VertexSet& A, const VertexSet& B,
                  const VertexSet& S) {
  check_disjoint(g, A, B, S);
  return sep::b_pointing_blocked(g, A, B, S | B);
}

bool gc_contemp(const MixedGraph& g, const VertexSet& A, const VertexSet& B,
                const VertexSet& S) {
  check_disjoint(g, A, B, S);
  return sep::ext_bipointing_blocked(g, A, B, A | B | S);
}

bool ga_condindep(const MixedGraph& g, const VertexSet& A, const VertexSet& B,
                  const VertexSet& S) {
  check_disjoint(g, A, B, S);
  return sep::p_separated(g, A, B, S);
}

GrangerBundle psep_granger_bundle(const MixedGraph& g, const VertexSet& A,
                                  const VertexSet& B, const VertexSet& S) {
  check_disjoint(g, A, B, S);
  return {gc_noncausal(g, A, B, S), gc_noncausal(g, B, A, S),
          gc_contemp(g, A, B, S)};
}

std::string to_line(const std::vector<std::string>& labels,
                    const MarkovStatement& s) {
  const int n = static_cast<int>(labels.size());
  if (s.source.universe() != n || s.target.universe() != n ||
      s.information.universe() != n) {
    throw query_error("statement does not match the label universe");
  }
  std::ostringstream out;
  switch (s.kind) {
    case StatementKind::Noncausal:
      out << "noncausal " << render_set(labels, s.source) << " -/-> "
          << render_set(labels, s.target);
      break;
    case StatementKind::ContempCI:
      out << "contemp " << render_set(labels, s.source) << " <-/-> "
          << render_set(labels, s.target);
      break;
    case StatementKind::CondIndep:
      out << "condindep " << render_set(labels, s.source) << " _||_ "
          << render_set(labels, s.target);
      break;
  }
  out << " | info=" << render_set(labels, s.information);
  return out.str();
}

std::string to_line(const MixedGraph& g, const MarkovStatement& s) {
  return to_line(g.labels(), s);
}

}  // namespace tsg::markov
