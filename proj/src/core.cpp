#include "rfm/core.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace rfm {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational value(mpz_class(text));
      return value;
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational value(num);
    value /= Rational(den);
    return value;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

std::string rational_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

long floor_long(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor out of range");
  return q.get_si();
}

long ceil_long(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("ceil out of range");
  return q.get_si();
}

EdgeSet::EdgeSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("duplicate edge index in edge set");
}

EdgeSet EdgeSet::full(int edge_count) {
  std::vector<int> all(edge_count);
  for (int i = 0; i < edge_count; ++i) all[i] = i;
  return EdgeSet(std::move(all));
}

bool EdgeSet::contains(int edge) const {
  return std::binary_search(indices_.begin(), indices_.end(), edge);
}

bool EdgeSet::subset_of(const EdgeSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

EdgeSet EdgeSet::with(int edge) const {
  if (contains(edge)) return *this;
  std::vector<int> merged = indices_;
  merged.insert(std::upper_bound(merged.begin(), merged.end(), edge), edge);
  EdgeSet result;
  result.indices_ = std::move(merged);
  return result;
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  std::vector<int> merged;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(merged));
  EdgeSet result;
  result.indices_ = std::move(merged);
  return result;
}

Hypergraph::Hypergraph(int vertices, int r, std::vector<std::vector<int>> edge_list,
                       std::optional<std::vector<int>> sides)
    : vertex_count(vertices), uniformity(r), edges(std::move(edge_list)),
      partition(std::move(sides)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (uniformity < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (partition) {
    if (static_cast<int>(partition->size()) != vertex_count)
      throw std::invalid_argument("partition length differs from vertex count");
    for (int side : *partition)
      if (side < 0 || side >= uniformity)
        throw std::invalid_argument("partition side out of range");
  }
  std::map<std::vector<int>, int> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    if (static_cast<int>(e.size()) != uniformity)
      throw std::invalid_argument("edge has wrong number of vertices");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge has repeated vertices");
    if (e.front() < 0 || e.back() >= vertex_count)
      throw std::invalid_argument("edge vertex out of range");
    if (!seen.emplace(e, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate edge in hypergraph");
    if (partition) {
      std::vector<char> hit(uniformity, 0);
      for (int v : e) {
        if (hit[(*partition)[v]])
          throw std::invalid_argument("edge has two vertices on one side");
        hit[(*partition)[v]] = 1;
      }
    }
  }
}

const std::vector<int>& Hypergraph::edge(int index) const {
  if (index < 0 || index >= edge_count())
    throw std::invalid_argument("invalid edge index");
  return edges[index];
}

Rational WeightSystem::min_edge_weight(const EdgeSet& over) const {
  if (over.empty()) throw std::invalid_argument("minimum edge weight of empty set");
  Rational best;
  bool first = true;
  for (int e : over) {
    if (first || edge_weight[e] < best) best = edge_weight[e];
    first = false;
  }
  return best;
}

Rational WeightSystem::min_vertex_weight() const {
  if (vertex_weight.empty()) throw std::invalid_argument("minimum vertex weight of empty set");
  Rational best = vertex_weight[0];
  for (const auto& b : vertex_weight)
    if (b < best) best = b;
  return best;
}

void validate_weights(const Hypergraph& h, const WeightSystem& w) {
  if (static_cast<int>(w.edge_weight.size()) != h.edge_count())
    throw std::invalid_argument("edge weight count differs from edge count");
  if (static_cast<int>(w.vertex_weight.size()) != h.vertex_count)
    throw std::invalid_argument("vertex weight count differs from vertex count");
  for (const auto& a : w.edge_weight)
    if (a <= 0) throw std::invalid_argument("edge weights must be positive");
  for (const auto& b : w.vertex_weight)
    if (b <= 0) throw std::invalid_argument("vertex weights must be positive");
}

WeightSystem unit_weights(const Hypergraph& h) {
  WeightSystem w;
  w.edge_weight.assign(h.edge_count(), Rational(1));
  w.vertex_weight.assign(h.vertex_count, Rational(1));
  return w;
}

std::vector<int> incidence_vector(const Hypergraph& h, int edge_index) {
  const auto& e = h.edge(edge_index);
  std::vector<int> chi(h.vertex_count, 0);
  for (int v : e) chi[v] = 1;
  return chi;
}

ColoredFamily make_family(Hypergraph h, std::vector<EdgeSet> colors,
                          bool allow_empty_colors) {
  if (colors.empty()) throw std::invalid_argument("family needs at least one color");
  for (const auto& color : colors) {
    if (!allow_empty_colors && color.empty())
      throw std::invalid_argument("empty color in family");
    for (int e : color)
      if (e < 0 || e >= h.edge_count())
        throw std::invalid_argument("color references invalid edge index");
  }
  return ColoredFamily{std::move(h), std::move(colors)};
}

ColoredFamily Instance::family(bool allow_empty_colors) const {
  return make_family(hypergraph, colors, allow_empty_colors);
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::optional<int> uniformity;
  std::optional<int> vertex_count;
  std::optional<std::vector<int>> partition;
  std::vector<std::vector<int>> edge_vertices;
  std::map<std::vector<int>, int> edge_index;
  std::vector<std::string> color_names;
  std::vector<std::vector<int>> color_members;
  std::vector<std::pair<int, Rational>> edge_weights;
  std::vector<std::pair<int, Rational>> vertex_weights;

  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& message) -> std::invalid_argument {
    return std::invalid_argument("line " + std::to_string(line_no) + ": " + message);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words[0][0] == '%') continue;
    const std::string& key = words[0];
    if (key == "r") {
      if (words.size() != 2) throw fail("expected 'r <uniformity>'");
      uniformity = parse_int(words[1], "uniformity");
    } else if (key == "v") {
      if (words.size() != 2) throw fail("expected 'v <vertex_count>'");
      vertex_count = parse_int(words[1], "vertex count");
    } else if (key == "partition") {
      if (!vertex_count) throw fail("partition before vertex count");
      if (static_cast<int>(words.size()) != *vertex_count + 1)
        throw fail("partition length differs from vertex count");
      std::vector<int> sides;
      for (std::size_t i = 1; i < words.size(); ++i)
        sides.push_back(parse_int(words[i], "partition side"));
      partition = std::move(sides);
    } else if (key == "color") {
      if (words.size() != 2) throw fail("expected 'color <name>'");
      color_names.push_back(words[1]);
      color_members.emplace_back();
    } else if (key == "e") {
      if (!uniformity) throw fail("edge before uniformity");
      if (static_cast<int>(words.size()) != *uniformity + 1)
        throw fail("edge has wrong number of vertices");
      std::vector<int> vertices;
      for (std::size_t i = 1; i < words.size(); ++i)
        vertices.push_back(parse_int(words[i], "vertex"));
      std::sort(vertices.begin(), vertices.end());
      int index;
      auto it = edge_index.find(vertices);
      if (it != edge_index.end()) {
        index = it->second;
      } else {
        index = static_cast<int>(edge_vertices.size());
        edge_vertices.push_back(vertices);
        edge_index.emplace(std::move(vertices), index);
      }
      if (color_names.empty()) {
        color_names.push_back("0");
        color_members.emplace_back();
      }
      auto& members = color_members.back();
      if (std::find(members.begin(), members.end(), index) != members.end())
        throw fail("duplicate edge within one color");
      members.push_back(index);
    } else if (key == "wa") {
      if (words.size() != 3) throw fail("expected 'wa <edge> <p/q>'");
      edge_weights.emplace_back(parse_int(words[1], "edge index"), parse_rational(words[2]));
    } else if (key == "wb") {
      if (words.size() != 3) throw fail("expected 'wb <vertex> <p/q>'");
      vertex_weights.emplace_back(parse_int(words[1], "vertex"), parse_rational(words[2]));
    } else {
      throw fail("unknown directive '" + key + "'");
    }
  }

  if (!uniformity) throw std::invalid_argument("missing 'r' line");
  if (!vertex_count) throw std::invalid_argument("missing 'v' line");

  Hypergraph h(*vertex_count, *uniformity, std::move(edge_vertices), std::move(partition));
  WeightSystem w = unit_weights(h);
  for (const auto& [e, value] : edge_weights) {
    if (e < 0 || e >= h.edge_count()) throw std::invalid_argument("wa edge index out of range");
    if (value <= 0) throw std::invalid_argument("edge weights must be positive");
    w.edge_weight[e] = value;
  }
  for (const auto& [v, value] : vertex_weights) {
    if (v < 0 || v >= h.vertex_count) throw std::invalid_argument("wb vertex out of range");
    if (value <= 0) throw std::invalid_argument("vertex weights must be positive");
    w.vertex_weight[v] = value;
  }

  std::vector<EdgeSet> colors;
  colors.reserve(color_members.size());
  for (auto& members : color_members) colors.emplace_back(std::move(members));

  return Instance{std::move(h), std::move(color_names), std::move(colors), std::move(w)};
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& instance) {
  const Hypergraph& h = instance.hypergraph;
  std::vector<char> covered(h.edge_count(), 0);
  for (const auto& color : instance.colors)
    for (int e : color) covered[e] = 1;
  for (int e = 0; e < h.edge_count(); ++e)
    if (!covered[e])
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " belongs to no color; file format cannot express it");
  std::ostringstream out;
  out << "r " << h.uniformity << "\n";
  out << "v " << h.vertex_count << "\n";
  if (h.partition) {
    out << "partition";
    for (int side : *h.partition) out << " " << side;
    out << "\n";
  }
  for (std::size_t c = 0; c < instance.colors.size(); ++c) {
    out << "color " << instance.color_names[c] << "\n";
    for (int e : instance.colors[c]) {
      out << "e";
      for (int v : h.edge(e)) out << " " << v;
      out << "\n";
    }
  }
  for (int e = 0; e < h.edge_count(); ++e)
    if (instance.weights.edge_weight[e] != 1)
      out << "wa " << e << " " << rational_string(instance.weights.edge_weight[e]) << "\n";
  for (int v = 0; v < h.vertex_count; ++v)
    if (instance.weights.vertex_weight[v] != 1)
      out << "wb " << v << " " << rational_string(instance.weights.vertex_weight[v]) << "\n";
  return out.str();
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write instance file: " + path);
  out << serialize_instance(instance);
}

}  // namespace rfm
