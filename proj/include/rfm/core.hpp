#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfm {

// All scalar arithmetic in the toolkit is exact; values are kept canonical
// (lowest terms, positive denominator). No floating point anywhere.
using Rational = mpq_class;

/// Thrown when an exhaustive routine would exceed its enumeration cap.
struct ScaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational make_rational(long numerator, long denominator = 1);
Rational parse_rational(const std::string& text);
/// Canonical "p/q" rendering, denominator always written.
std::string rational_string(const Rational& value);
long floor_long(const Rational& value);
long ceil_long(const Rational& value);

/// Set of edge indices in canonical ascending order (set semantics).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<int> indices);
  static EdgeSet full(int edge_count);

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int edge) const;
  bool subset_of(const EdgeSet& other) const;
  EdgeSet with(int edge) const;
  EdgeSet united(const EdgeSet& other) const;
  const std::vector<int>& indices() const { return indices_; }
  std::vector<int>::const_iterator begin() const { return indices_.begin(); }
  std::vector<int>::const_iterator end() const { return indices_.end(); }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<int> indices_;
};

/// r-uniform hypergraph with dense 0-based vertex and edge indices.
/// Edges are stored with sorted vertex lists and carry stable indices.
struct Hypergraph {
  Hypergraph(int vertices, int r, std::vector<std::vector<int>> edge_list,
             std::optional<std::vector<int>> sides = std::nullopt);

  int vertex_count;
  int uniformity;
  std::vector<std::vector<int>> edges;
  // vertex -> side in [0, uniformity); present only for partite instances,
  // in which case every edge has exactly one vertex per side.
  std::optional<std::vector<int>> partition;

  int edge_count() const { return static_cast<int>(edges.size()); }
  const std::vector<int>& edge(int index) const;
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
};

/// Positive rational weights a_e (per edge) and b_v (per vertex).
struct WeightSystem {
  std::vector<Rational> edge_weight;
  std::vector<Rational> vertex_weight;

  Rational min_edge_weight(const EdgeSet& over) const;
  Rational min_vertex_weight() const;
};

void validate_weights(const Hypergraph& h, const WeightSystem& w);
WeightSystem unit_weights(const Hypergraph& h);

/// 0/1 vector of length vertex_count with ones exactly on the edge.
std::vector<int> incidence_vector(const Hypergraph& h, int edge_index);

/// Ordered family of edge sets E_1..E_m; repeated sets are allowed.
struct ColoredFamily {
  Hypergraph hypergraph;
  std::vector<EdgeSet> colors;
};

ColoredFamily make_family(Hypergraph h, std::vector<EdgeSet> colors,
                          bool allow_empty_colors = false);

/// Parsed instance file: hypergraph, named colors, weights.
struct Instance {
  Hypergraph hypergraph;
  std::vector<std::string> color_names;
  std::vector<EdgeSet> colors;
  WeightSystem weights;

  ColoredFamily family(bool allow_empty_colors = false) const;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace rfm
