#include "rfm/lp.hpp"

#include <algorithm>
#include <functional>

namespace rfm {
namespace {

enum class Sense { LE, GE, EQ };

struct RowSpec {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LE;
  Rational rhs = 0;
};

struct LPSpec {
  int vars = 0;
  bool maximize = false;
  std::vector<Rational> objective;
  std::vector<RowSpec> rows;
};

struct LPOutcome {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Optimal;
  Rational value = 0;
  std::vector<Rational> solution;
  // Reduced cost of each row's slack at optimality. Valid only for
  // maximization problems whose rows are all 'LE' with nonnegative rhs,
  // where it equals the optimal dual multiplier of the row.
  std::vector<Rational> row_duals;
  bool duals_valid = false;
};

// Dense exact-rational simplex, two phases, Bland's rule in both (entering:
// lowest eligible column index; leaving: lowest basic variable on ties).
// Column layout: structural, slack/surplus, artificial, rhs last.
LPOutcome solve_lp(const LPSpec& spec) {
  const int n = spec.vars;
  const int m = static_cast<int>(spec.rows.size());

  std::vector<std::vector<Rational>> coeffs(m);
  std::vector<Sense> sense(m);
  std::vector<Rational> rhs(m);
  bool any_flipped = false;
  for (int i = 0; i < m; ++i) {
    coeffs[i] = spec.rows[i].coeffs;
    sense[i] = spec.rows[i].sense;
    rhs[i] = spec.rows[i].rhs;
    if (rhs[i] < 0) {
      any_flipped = true;
      rhs[i] = -rhs[i];
      for (auto& c : coeffs[i]) c = -c;
      if (sense[i] == Sense::LE) sense[i] = Sense::GE;
      else if (sense[i] == Sense::GE) sense[i] = Sense::LE;
    }
  }

  std::vector<int> slack_col(m, -1);
  std::vector<int> art_col(m, -1);
  int total = n;
  for (int i = 0; i < m; ++i)
    if (sense[i] != Sense::EQ) slack_col[i] = total++;
  const int first_art = total;
  for (int i = 0; i < m; ++i)
    if (sense[i] != Sense::LE) art_col[i] = total++;
  const bool any_artificial = total > first_art;

  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(total + 1, Rational(0)));
  std::vector<int> basis(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = coeffs[i][j];
    if (slack_col[i] >= 0) T[i][slack_col[i]] = sense[i] == Sense::LE ? 1 : -1;
    if (art_col[i] >= 0) {
      T[i][art_col[i]] = 1;
      basis[i] = art_col[i];
    } else {
      basis[i] = slack_col[i];
    }
    T[i][total] = rhs[i];
  }

  std::vector<char> banned(total, 0);

  auto pivot = [&](std::vector<Rational>& obj, int row, int col) {
    const int leaving = basis[row];
    if (leaving >= first_art) banned[leaving] = 1;
    auto& pr = T[row];
    const Rational p = pr[col];
    if (p != 1)
      for (int j = 0; j <= total; ++j)
        if (pr[j] != 0) pr[j] /= p;
    auto eliminate = [&](std::vector<Rational>& target) {
      const Rational f = target[col];
      if (f == 0) return;
      for (int j = 0; j <= total; ++j)
        if (pr[j] != 0) target[j] -= f * pr[j];
    };
    for (int k = 0; k < static_cast<int>(T.size()); ++k)
      if (k != row) eliminate(T[k]);
    eliminate(obj);
    basis[row] = col;
  };

  // Returns false on unboundedness.
  auto run = [&](std::vector<Rational>& obj) -> bool {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < total; ++j)
        if (!banned[j] && obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(T.size()); ++i) {
        if (T[i][enter] <= 0) continue;
        Rational ratio = T[i][total] / T[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(obj, leave, enter);
    }
  };

  if (any_artificial) {
    std::vector<Rational> obj(total + 1, Rational(0));
    for (int j = first_art; j < total; ++j) obj[j] = 1;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= first_art)
        for (int j = 0; j <= total; ++j)
          if (T[i][j] != 0) obj[j] -= T[i][j];
    if (!run(obj)) throw std::logic_error("phase one cannot be unbounded");
    if (obj[total] != 0) {
      LPOutcome out;
      out.status = LPOutcome::Status::Infeasible;
      return out;
    }
    for (int i = 0; i < static_cast<int>(T.size());) {
      if (basis[i] < first_art) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_art; ++j)
        if (T[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(obj, i, col);
        ++i;
      } else {
        // Redundant row: all structural entries eliminated.
        T.erase(T.begin() + i);
        basis.erase(basis.begin() + i);
      }
    }
    for (int j = first_art; j < total; ++j) banned[j] = 1;
  }

  std::vector<Rational> cost(total, Rational(0));
  for (int j = 0; j < n; ++j)
    cost[j] = spec.maximize ? Rational(-spec.objective[j]) : spec.objective[j];
  std::vector<Rational> obj(total + 1, Rational(0));
  for (int j = 0; j < total; ++j) obj[j] = cost[j];
  for (int i = 0; i < static_cast<int>(T.size()); ++i) {
    const Rational cb = basis[i] < n ? cost[basis[i]] : Rational(0);
    if (cb != 0)
      for (int j = 0; j <= total; ++j)
        if (T[i][j] != 0) obj[j] -= cb * T[i][j];
  }
  LPOutcome out;
  if (!run(obj)) {
    out.status = LPOutcome::Status::Unbounded;
    return out;
  }
  out.status = LPOutcome::Status::Optimal;
  const Rational value_min = -obj[total];
  out.value = spec.maximize ? Rational(-value_min) : value_min;
  out.solution.assign(n, Rational(0));
  for (int i = 0; i < static_cast<int>(T.size()); ++i)
    if (basis[i] < n) out.solution[basis[i]] = T[i][total];
  out.duals_valid = spec.maximize && !any_artificial && !any_flipped;
  if (out.duals_valid) {
    out.row_duals.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) out.row_duals[i] = obj[slack_col[i]];
  }
  return out;
}

std::vector<int> incident_vertices(const Hypergraph& h, const EdgeSet& edges) {
  std::vector<char> seen(h.vertex_count, 0);
  for (int e : edges)
    for (int v : h.edge(e)) seen[v] = 1;
  std::vector<int> vertices;
  for (int v = 0; v < h.vertex_count; ++v)
    if (seen[v]) vertices.push_back(v);
  return vertices;
}

// Exact re-verification of both certificates: feasibility, objective
// equality, and complementary slackness. Throws on any violation.
void check_lp_result(const Hypergraph& h, const EdgeSet& edges,
                     const WeightSystem& w, const LPResult& r) {
  std::vector<Rational> load(h.vertex_count, Rational(0));
  Rational primal_size = 0;
  for (const auto& [e, f] : r.primal.values) {
    if (!edges.contains(e)) throw std::logic_error("matching supported outside edge set");
    if (f <= 0) throw std::logic_error("stored matching value not positive");
    for (int v : h.edge(e)) load[v] += f;
    primal_size += w.edge_weight[e] * f;
  }
  for (int v = 0; v < h.vertex_count; ++v)
    if (load[v] > w.vertex_weight[v]) throw std::logic_error("matching overloads a vertex");
  if (primal_size != r.primal.size || primal_size != r.value)
    throw std::logic_error("primal size mismatch");

  auto cover_value = [&](int v) {
    auto it = r.dual.values.find(v);
    return it == r.dual.values.end() ? Rational(0) : it->second;
  };
  Rational dual_size = 0;
  for (const auto& [v, g] : r.dual.values) {
    if (g <= 0) throw std::logic_error("stored cover value not positive");
    dual_size += w.vertex_weight[v] * g;
  }
  for (int e : edges) {
    Rational s = 0;
    for (int v : h.edge(e)) s += cover_value(v);
    if (s < w.edge_weight[e]) throw std::logic_error("cover misses an edge");
    // complementary slackness, primal side
    auto it = r.primal.values.find(e);
    if (it != r.primal.values.end() && s != w.edge_weight[e])
      throw std::logic_error("complementary slackness violated on an edge");
  }
  if (dual_size != r.dual.size || dual_size != r.value)
    throw std::logic_error("dual size mismatch");
  for (const auto& [v, g] : r.dual.values)
    if (g > 0 && load[v] != w.vertex_weight[v])
      throw std::logic_error("complementary slackness violated on a vertex");
}

}  // namespace

LPResult nu_star(const Hypergraph& h, const EdgeSet& edges, const WeightSystem& w) {
  validate_weights(h, w);
  LPResult result;
  if (edges.empty()) return result;

  const auto& members = edges.indices();
  const int k = static_cast<int>(members.size());
  const auto vertices = incident_vertices(h, edges);
  std::vector<int> row_of_vertex(h.vertex_count, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) row_of_vertex[vertices[i]] = static_cast<int>(i);

  LPSpec spec;
  spec.vars = k;
  spec.maximize = true;
  spec.objective.reserve(k);
  for (int e : members) spec.objective.push_back(w.edge_weight[e]);
  spec.rows.assign(vertices.size(), RowSpec{});
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    spec.rows[i].coeffs.assign(k, Rational(0));
    spec.rows[i].sense = Sense::LE;
    spec.rows[i].rhs = w.vertex_weight[vertices[i]];
  }
  for (int j = 0; j < k; ++j)
    for (int v : h.edge(members[j])) spec.rows[row_of_vertex[v]].coeffs[j] = 1;

  const auto out = solve_lp(spec);
  if (out.status != LPOutcome::Status::Optimal || !out.duals_valid)
    throw std::logic_error("matching program must solve to optimality");

  result.value = out.value;
  for (int j = 0; j < k; ++j)
    if (out.solution[j] != 0) result.primal.values[members[j]] = out.solution[j];
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (out.row_duals[i] != 0) result.dual.values[vertices[i]] = out.row_duals[i];
  for (const auto& [e, f] : result.primal.values) result.primal.size += w.edge_weight[e] * f;
  for (const auto& [v, g] : result.dual.values) result.dual.size += w.vertex_weight[v] * g;

  check_lp_result(h, edges, w, result);
  return result;
}

LPResult tau_star(const Hypergraph& h, const EdgeSet& edges, const WeightSystem& w) {
  // Same optimal basis serves both programs; the checked certificates make
  // the value simultaneously a maximum matching and a minimum cover.
  return nu_star(h, edges, w);
}

DualUniqueness dual_is_unique(const Hypergraph& h, const EdgeSet& edges,
                              const WeightSystem& w) {
  DualUniqueness result;
  if (edges.empty()) return result;
  const Rational optimum = nu_star(h, edges, w).value;
  const auto vertices = incident_vertices(h, edges);
  const int k = static_cast<int>(vertices.size());
  std::vector<int> col_of_vertex(h.vertex_count, -1);
  for (int i = 0; i < k; ++i) col_of_vertex[vertices[i]] = i;

  LPSpec spec;
  spec.vars = k;
  spec.objective.assign(k, Rational(0));
  for (int e : edges) {
    RowSpec row;
    row.coeffs.assign(k, Rational(0));
    for (int v : h.edge(e)) row.coeffs[col_of_vertex[v]] = 1;
    row.sense = Sense::GE;
    row.rhs = w.edge_weight[e];
    spec.rows.push_back(std::move(row));
  }
  {
    RowSpec row;
    row.coeffs.reserve(k);
    for (int v : vertices) row.coeffs.push_back(w.vertex_weight[v]);
    row.sense = Sense::EQ;
    row.rhs = optimum;
    spec.rows.push_back(std::move(row));
  }

  auto optimize_coordinate = [&](int column, bool maximize) {
    spec.maximize = maximize;
    spec.objective.assign(k, Rational(0));
    spec.objective[column] = 1;
    auto out = solve_lp(spec);
    if (out.status != LPOutcome::Status::Optimal)
      throw std::logic_error("optimal cover face must be a nonempty polytope");
    return out;
  };
  auto cover_from = [&](const std::vector<Rational>& g) {
    FractionalCover cover;
    for (int i = 0; i < k; ++i)
      if (g[i] != 0) {
        cover.values[vertices[i]] = g[i];
        cover.size += w.vertex_weight[vertices[i]] * g[i];
      }
    return cover;
  };

  for (int i = 0; i < k; ++i) {
    auto high = optimize_coordinate(i, true);
    auto low = optimize_coordinate(i, false);
    if (high.value != low.value) {
      result.unique = false;
      result.witnesses = std::make_pair(cover_from(high.solution), cover_from(low.solution));
      return result;
    }
  }
  return result;
}

int matching_number(const Hypergraph& h, const EdgeSet& edges, int max_edges) {
  if (edges.size() > max_edges)
    throw ScaleError("matching_number: edge set too large for exhaustive mode");
  const auto& members = edges.indices();
  const int k = static_cast<int>(members.size());
  const WeightSystem unit = unit_weights(h);
  std::vector<char> used(h.vertex_count, 0);
  int best = 0;

  std::function<void(int, int)> dfs = [&](int from, int count) {
    best = std::max(best, count);
    std::vector<int> candidates;
    for (int idx = from; idx < k; ++idx) {
      bool free = true;
      for (int v : h.edge(members[idx]))
        if (used[v]) {
          free = false;
          break;
        }
      if (free) candidates.push_back(idx);
    }
    if (candidates.empty()) return;
    if (count + static_cast<int>(candidates.size()) <= best) return;
    std::vector<int> candidate_edges;
    candidate_edges.reserve(candidates.size());
    for (int idx : candidates) candidate_edges.push_back(members[idx]);
    const long bound = floor_long(nu_star(h, EdgeSet(candidate_edges), unit).value);
    if (count + bound <= best) return;
    const int idx = candidates.front();
    for (int v : h.edge(members[idx])) used[v] = 1;
    dfs(idx + 1, count + 1);
    for (int v : h.edge(members[idx])) used[v] = 0;
    dfs(idx + 1, count);
  };
  dfs(0, 0);
  return best;
}

}  // namespace rfm
