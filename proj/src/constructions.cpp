#include "rfm/constructions.hpp"

#include <algorithm>
#include <array>

#include "rfm/lp.hpp"

namespace rfm {
namespace {

void check_color_values(const ColoredFamily& family, const Rational& expected) {
  const WeightSystem unit = unit_weights(family.hypergraph);
  for (const auto& color : family.colors) {
    const Rational value = nu_star(family.hypergraph, color, unit).value;
    if (value != expected)
      throw std::logic_error("generated color has fractional matching number " +
                             rational_string(value) + ", expected " +
                             rational_string(expected));
  }
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

Hypergraph cycle_graph(int length) {
  if (length < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, length - 1});
  std::optional<std::vector<int>> sides;
  if (length % 2 == 0) {
    sides.emplace(length);
    for (int v = 0; v < length; ++v) (*sides)[v] = v % 2;
  }
  return Hypergraph(length, 2, std::move(edges), std::move(sides));
}

ColoredFamily drisko_example(int n) {
  if (n < 2) throw std::invalid_argument("drisko_example needs n >= 2");
  Hypergraph h = cycle_graph(2 * n);
  std::vector<int> even_matching, odd_matching;
  for (int i = 0; i < 2 * n; ++i) (i % 2 == 0 ? even_matching : odd_matching).push_back(i);
  std::vector<EdgeSet> colors;
  for (int c = 0; c < n - 1; ++c) colors.emplace_back(even_matching);
  for (int c = 0; c < n - 1; ++c) colors.emplace_back(odd_matching);
  ColoredFamily family = make_family(std::move(h), std::move(colors));
  check_color_values(family, Rational(n));
  return family;
}

ColoredFamily bgs_example(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("bgs_example needs even n >= 2");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + 1 < 2 * n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, 2 * n - 1});
  std::vector<int> chord_matching;
  for (int k = 0; k < n / 2; ++k) {
    chord_matching.push_back(static_cast<int>(edges.size()));
    edges.push_back({4 * k, 4 * k + 2});
    chord_matching.push_back(static_cast<int>(edges.size()));
    edges.push_back({4 * k + 1, 4 * k + 3});
  }
  Hypergraph h(2 * n, 2, std::move(edges));
  std::vector<int> even_matching, odd_matching;
  for (int i = 0; i < 2 * n; ++i) (i % 2 == 0 ? even_matching : odd_matching).push_back(i);
  std::vector<EdgeSet> colors;
  for (int c = 0; c < n - 1; ++c) colors.emplace_back(even_matching);
  for (int c = 0; c < n - 1; ++c) colors.emplace_back(odd_matching);
  colors.emplace_back(std::move(chord_matching));
  ColoredFamily family = make_family(std::move(h), std::move(colors));
  check_color_values(family, Rational(n));
  return family;
}

OddCycleFamily odd_cycle_family(int k) {
  if (k < 1) throw std::invalid_argument("odd_cycle_family needs k >= 1");
  Hypergraph h = cycle_graph(2 * k + 1);
  const EdgeSet all = h.all_edges();
  std::vector<EdgeSet> colors(2 * k, all);
  ColoredFamily family = make_family(std::move(h), std::move(colors));
  const Rational target = Rational(k) + make_rational(1, 2);
  check_color_values(family, target);
  return OddCycleFamily{std::move(family), target};
}

ColoredFamily two_odd_cycles_family(int n) {
  if (n < 3) throw std::invalid_argument("two_odd_cycles_family needs n >= 3");
  std::vector<std::vector<int>> edges = {{0, 1}, {1, 2}, {0, 2}};
  for (int i = 3; i + 1 < 2 * n; ++i) edges.push_back({i, i + 1});
  edges.push_back({3, 2 * n - 1});
  Hypergraph h(2 * n, 2, std::move(edges));
  const EdgeSet all = h.all_edges();
  std::vector<EdgeSet> colors(2 * n - 1, all);
  ColoredFamily family = make_family(std::move(h), std::move(colors));
  check_color_values(family, Rational(n));
  return family;
}

TruncatedPlane truncated_projective_plane(int q) {
  if (!is_prime(q)) throw std::invalid_argument("plane order must be prime");

  // Homogeneous triples over the prime field, first nonzero coordinate
  // normalized to 1, enumerated lexicographically. The same list serves as
  // points and as line coefficient vectors.
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        std::array<int, 3> t{x, y, z};
        const int first = t[0] != 0 ? t[0] : (t[1] != 0 ? t[1] : t[2]);
        if (first == 1) triples.push_back(t);
      }
  const int plane_size = q * q + q + 1;
  if (static_cast<int>(triples.size()) != plane_size)
    throw std::logic_error("wrong number of projective points");

  auto on_line = [&](const std::array<int, 3>& line, const std::array<int, 3>& point) {
    return (line[0] * point[0] + line[1] * point[1] + line[2] * point[2]) % q == 0;
  };

  // The deleted point (0:0:1) is the lexicographically first triple; the
  // q+1 lines through it are exactly those with third coefficient zero.
  const std::array<int, 3> apex{0, 0, 1};
  if (triples.front() != apex) throw std::logic_error("unexpected point order");

  std::vector<int> vertex_of_point(plane_size, -1);
  std::vector<std::array<int, 3>> kept_points;
  for (int p = 0; p < plane_size; ++p) {
    if (triples[p] == apex) continue;
    vertex_of_point[p] = static_cast<int>(kept_points.size());
    kept_points.push_back(triples[p]);
  }

  std::vector<int> sides(kept_points.size(), -1);
  int side = 0;
  std::vector<std::vector<int>> kept_lines;
  for (const auto& line : triples) {
    std::vector<int> vertices;
    for (int p = 0; p < plane_size; ++p)
      if (vertex_of_point[p] >= 0 && on_line(line, triples[p]))
        vertices.push_back(vertex_of_point[p]);
    if (line[2] == 0) {
      // Deleted line: its surviving points form one side of the partition.
      if (static_cast<int>(vertices.size()) != q)
        throw std::logic_error("deleted line has wrong point count");
      for (int v : vertices) sides[v] = side;
      ++side;
    } else {
      if (static_cast<int>(vertices.size()) != q + 1)
        throw std::logic_error("kept line has wrong point count");
      kept_lines.push_back(std::move(vertices));
    }
  }
  if (side != q + 1 || static_cast<int>(kept_lines.size()) != q * q)
    throw std::logic_error("truncation produced wrong counts");

  Hypergraph h(static_cast<int>(kept_points.size()), q + 1, std::move(kept_lines),
               std::move(sides));

  // Structural checks: two lines meet in exactly one vertex and every
  // vertex lies on exactly q of the kept lines.
  std::vector<int> degree(h.vertex_count, 0);
  for (int i = 0; i < h.edge_count(); ++i) {
    for (int v : h.edge(i)) ++degree[v];
    for (int j = i + 1; j < h.edge_count(); ++j) {
      std::vector<int> common;
      std::set_intersection(h.edge(i).begin(), h.edge(i).end(), h.edge(j).begin(),
                            h.edge(j).end(), std::back_inserter(common));
      if (common.size() != 1) throw std::logic_error("two lines must meet in one point");
    }
  }
  for (int v = 0; v < h.vertex_count; ++v)
    if (degree[v] != q) throw std::logic_error("vertex on wrong number of lines");

  const EdgeSet lines = h.all_edges();
  const Rational value = nu_star(h, lines, unit_weights(h)).value;
  if (value != q)
    throw std::logic_error("truncated plane has wrong fractional matching number");
  return TruncatedPlane{std::move(h), lines, q};
}

ColoredFamily copies(const Hypergraph& h, const EdgeSet& edges, int count) {
  if (count < 1) throw std::invalid_argument("copies needs count >= 1");
  std::vector<EdgeSet> colors(count, edges);
  return make_family(h, std::move(colors));
}

}  // namespace rfm
