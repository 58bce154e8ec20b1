#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "skewlines/geometry.hpp"
#include "skewlines/vertex_set.hpp"

namespace skewlines {

/// Undirected simple graph with dense bitset rows. For G(X) the vertices
/// are line indices and edges join skew lines.
class SkewGraph {
 public:
  SkewGraph() = default;
  explicit SkewGraph(int n);

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  long long edge_count() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const SkewGraph&, const SkewGraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

SkewGraph build_skew_graph(const FieldSpec& f, const LineTable& table);
SkewGraph complement(const SkewGraph& g);
/// Intersection of the neighbourhoods of vs, minus vs. Throws EmptyInput.
VertexSet common_neighbors(const SkewGraph& g, std::span<const int> vs);
/// Whether vs is pairwise adjacent.
bool is_clique(const SkewGraph& g, std::span<const int> vs);
/// Whether vs is a clique with no common neighbour outside it.
bool is_maximal_clique(const SkewGraph& g, std::span<const int> vs);

/// The 3k-vertex graph with p_{3i+j} ~ p_{3i'+m} iff i != i'.
SkewGraph moon_moser(int k);

/// DIMACS: "p edge n m" then "e u v" with 1-based ids, sorted.
void write_dimacs(std::ostream& os, const SkewGraph& g);
SkewGraph read_dimacs(std::istream& is);

}  // namespace skewlines
