#include "rfm/rainbow.hpp"

#include <algorithm>
#include <functional>

namespace rfm {
namespace {

void check_limits(const ColoredFamily& family, const SearchLimits& limits) {
  if (static_cast<int>(family.colors.size()) > limits.max_colors)
    throw ScaleError("rainbow search: too many colors for exhaustive mode");
  int total = 0;
  for (const auto& color : family.colors) total += color.size();
  if (total > limits.max_total_edges)
    throw ScaleError("rainbow search: too many edges for exhaustive mode");
}

}  // namespace

std::optional<RainbowCertificate> find_rainbow_fractional(
    const ColoredFamily& family, const Rational& n, const WeightSystem& w,
    const SearchLimits& limits) {
  if (n <= 0) throw std::invalid_argument("rainbow target must be positive");
  validate_weights(family.hypergraph, w);
  check_limits(family, limits);
  const Hypergraph& h = family.hypergraph;
  const int m = static_cast<int>(family.colors.size());

  // Pool of edges still available from color c onward, and its value; when
  // the pool alone reaches n the pruning bound can never fire below it.
  std::vector<EdgeSet> suffix_pool(m + 1);
  for (int c = m - 1; c >= 0; --c)
    suffix_pool[c] = suffix_pool[c + 1].united(family.colors[c]);
  std::vector<bool> suffix_rich(m + 1, false);
  for (int c = 0; c <= m; ++c)
    suffix_rich[c] = nu_star(h, suffix_pool[c], w).value >= n;

  EdgeSet chosen;
  std::vector<std::pair<int, int>> assignment;
  std::optional<RainbowCertificate> found;

  std::function<bool(int)> dfs = [&](int c) -> bool {
    const LPResult current = nu_star(h, chosen, w);
    if (current.value >= n) {
      found = RainbowCertificate{assignment, current.primal, n};
      return true;
    }
    if (c == m) return false;
    // Adding edges never decreases the optimum, so the chosen set together
    // with every remaining edge bounds any completion of this node.
    if (!suffix_rich[c] &&
        nu_star(h, chosen.united(suffix_pool[c]), w).value < n)
      return false;
    for (int e : family.colors[c]) {
      if (chosen.contains(e)) continue;
      const EdgeSet saved = chosen;
      chosen = chosen.with(e);
      assignment.emplace_back(c, e);
      if (dfs(c + 1)) return true;
      assignment.pop_back();
      chosen = saved;
    }
    return dfs(c + 1);  // skipping the color is explored last
  };
  dfs(0);

  if (found) {
    const auto check = verify_certificate(family, n, w, *found);
    if (!check.ok)
      throw std::logic_error("emitted rainbow certificate failed verification: " + check.reason);
  }
  return found;
}

std::optional<IntegralRainbowCertificate> find_rainbow_integral(
    const ColoredFamily& family, int n, const SearchLimits& limits) {
  if (n < 0) throw std::invalid_argument("rainbow target must be nonnegative");
  check_limits(family, limits);
  const Hypergraph& h = family.hypergraph;
  const int m = static_cast<int>(family.colors.size());

  std::vector<char> used(h.vertex_count, 0);
  std::vector<std::pair<int, int>> assignment;
  std::optional<IntegralRainbowCertificate> found;

  std::function<bool(int)> dfs = [&](int c) -> bool {
    if (static_cast<int>(assignment.size()) >= n) {
      found = IntegralRainbowCertificate{assignment};
      return true;
    }
    if (c == m) return false;
    if (static_cast<int>(assignment.size()) + (m - c) < n) return false;
    for (int e : family.colors[c]) {
      bool free = true;
      for (int v : h.edge(e))
        if (used[v]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int v : h.edge(e)) used[v] = 1;
      assignment.emplace_back(c, e);
      if (dfs(c + 1)) return true;
      assignment.pop_back();
      for (int v : h.edge(e)) used[v] = 0;
    }
    return dfs(c + 1);
  };
  dfs(0);

  if (found) {
    const auto check = verify_integral_certificate(family, n, *found);
    if (!check.ok)
      throw std::logic_error("emitted rainbow certificate failed verification: " + check.reason);
  }
  return found;
}

VerifyResult verify_certificate(const ColoredFamily& family, const Rational& n,
                                const WeightSystem& w, const RainbowCertificate& cert) {
  const Hypergraph& h = family.hypergraph;
  const int m = static_cast<int>(family.colors.size());
  std::vector<char> color_used(m, 0);
  std::vector<char> edge_used(h.edge_count(), 0);
  for (const auto& [c, e] : cert.assignment) {
    if (c < 0 || c >= m) return {false, "invalid color index"};
    if (e < 0 || e >= h.edge_count()) return {false, "invalid edge index"};
    if (color_used[c]) return {false, "color reused"};
    if (edge_used[e]) return {false, "edge reused"};
    if (!family.colors[c].contains(e)) return {false, "edge not in color"};
    color_used[c] = 1;
    edge_used[e] = 1;
  }
  std::vector<Rational> load(h.vertex_count, Rational(0));
  Rational size = 0;
  for (const auto& [e, f] : cert.matching.values) {
    if (e < 0 || e >= h.edge_count()) return {false, "invalid edge index"};
    if (!edge_used[e]) return {false, "support outside assignment"};
    if (f < 0) return {false, "negative value"};
    for (int v : h.edge(e)) load[v] += f;
    size += w.edge_weight[e] * f;
  }
  for (int v = 0; v < h.vertex_count; ++v)
    if (load[v] > w.vertex_weight[v]) return {false, "vertex overloaded"};
  if (size != cert.matching.size) return {false, "size mismatch"};
  if (size < n) return {false, "size below target"};
  return {true, ""};
}

VerifyResult verify_integral_certificate(const ColoredFamily& family, int n,
                                         const IntegralRainbowCertificate& cert) {
  const Hypergraph& h = family.hypergraph;
  const int m = static_cast<int>(family.colors.size());
  std::vector<char> color_used(m, 0);
  std::vector<char> edge_used(h.edge_count(), 0);
  std::vector<char> vertex_used(h.vertex_count, 0);
  for (const auto& [c, e] : cert.assignment) {
    if (c < 0 || c >= m) return {false, "invalid color index"};
    if (e < 0 || e >= h.edge_count()) return {false, "invalid edge index"};
    if (color_used[c]) return {false, "color reused"};
    if (edge_used[e]) return {false, "edge reused"};
    if (!family.colors[c].contains(e)) return {false, "edge not in color"};
    for (int v : h.edge(e))
      if (vertex_used[v]) return {false, "edges intersect"};
    for (int v : h.edge(e)) vertex_used[v] = 1;
    color_used[c] = 1;
    edge_used[e] = 1;
  }
  if (static_cast<int>(cert.assignment.size()) < n) return {false, "size below target"};
  return {true, ""};
}

}  // namespace rfm
