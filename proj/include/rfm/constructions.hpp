#pragma once

#include "rfm/core.hpp"

namespace rfm {

/// Cycle C_L as a 2-uniform hypergraph; even cycles carry the bipartition.
Hypergraph cycle_graph(int length);

/// 2n-2 colors on C_2n: n-1 copies of each perfect matching.
ColoredFamily drisko_example(int n);

/// drisko_example(n) plus one extra perfect matching of chords; n even.
ColoredFamily bgs_example(int n);

struct OddCycleFamily {
  ColoredFamily family;
  Rational target;  // k + 1/2
};

/// 2k copies of the edge set of C_{2k+1}; per-color nu* equals k + 1/2.
OddCycleFamily odd_cycle_family(int k);

/// 2n-1 copies of the edge set of a triangle plus a disjoint C_{2n-3};
/// per-color nu* equals n.
ColoredFamily two_odd_cycles_family(int n);

struct TruncatedPlane {
  Hypergraph hypergraph;  // (q+1)-partite on q^2+q vertices
  EdgeSet lines;          // all q^2 lines
  int order;              // q
};

/// Projective plane of prime order q with one point and its lines removed.
TruncatedPlane truncated_projective_plane(int q);

/// Family made of `count` identical copies of the given edge set.
ColoredFamily copies(const Hypergraph& h, const EdgeSet& edges, int count);

}  // namespace rfm
