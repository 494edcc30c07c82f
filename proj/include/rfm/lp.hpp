#pragma once

#include <map>
#include <optional>
#include <utility>

#include "rfm/core.hpp"

namespace rfm {

/// Nonnegative edge values with load at most b_v at every vertex.
/// Only nonzero entries are stored; size is the a-weighted total.
struct FractionalMatching {
  std::map<int, Rational> values;
  Rational size = 0;
};

/// Nonnegative vertex values covering every queried edge: sum over the
/// vertices of e is at least a_e. Size is the b-weighted total.
struct FractionalCover {
  std::map<int, Rational> values;
  Rational size = 0;
};

/// Optimal value with both certificates; primal.size == dual.size == value
/// and complementary slackness hold exactly (checked after every solve).
struct LPResult {
  Rational value = 0;
  FractionalMatching primal;
  FractionalCover dual;
};

LPResult nu_star(const Hypergraph& h, const EdgeSet& edges, const WeightSystem& w);
LPResult tau_star(const Hypergraph& h, const EdgeSet& edges, const WeightSystem& w);

struct DualUniqueness {
  bool unique = true;
  // Two distinct optimal covers when not unique.
  std::optional<std::pair<FractionalCover, FractionalCover>> witnesses;
};

/// Decides whether the optimal cover is a single point by maximizing and
/// minimizing each g(v) over the optimal face of the dual program.
DualUniqueness dual_is_unique(const Hypergraph& h, const EdgeSet& edges,
                              const WeightSystem& w);

/// Maximum number of pairwise-disjoint edges, by branch and bound with the
/// fractional relaxation as pruning bound. Exhaustive; guarded by max_edges.
int matching_number(const Hypergraph& h, const EdgeSet& edges, int max_edges = 24);

}  // namespace rfm
