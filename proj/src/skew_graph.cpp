#include "skewlines/skew_graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "skewlines/error.hpp"

namespace skewlines {

SkewGraph::SkewGraph(int n) : n_(n), adj_(n, VertexSet(n)) {}

void SkewGraph::add_edge(int u, int v) {
  if (u == v) throw Error(ErrorCode::PreconditionViolated, "self loop");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

long long SkewGraph::edge_count() const {
  long long twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<int, int>> SkewGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (v > u) out.emplace_back(u, v);
    });
  return out;
}

SkewGraph build_skew_graph(const FieldSpec& f, const LineTable& table) {
  const int n = table.size();
  SkewGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!lines_meet(f, table.lines[u], table.lines[v])) g.add_edge(u, v);
  return g;
}

SkewGraph complement(const SkewGraph& g) {
  const int n = g.size();
  SkewGraph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

VertexSet common_neighbors(const SkewGraph& g, std::span<const int> vs) {
  if (vs.empty()) throw Error(ErrorCode::EmptyInput, "common_neighbors of no vertices");
  VertexSet out = g.neighbors(vs[0]);
  for (int v : vs.subspan(1)) out &= g.neighbors(v);
  for (int v : vs) out.erase(v);
  return out;
}

bool is_clique(const SkewGraph& g, std::span<const int> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_maximal_clique(const SkewGraph& g, std::span<const int> vs) {
  if (!is_clique(g, vs)) return false;
  if (vs.empty()) return g.size() == 0;
  return common_neighbors(g, vs).empty();
}

SkewGraph moon_moser(int k) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  SkewGraph g(3 * k);
  for (int u = 0; u < 3 * k; ++u)
    for (int v = u + 1; v < 3 * k; ++v)
      if (u / 3 != v / 3) g.add_edge(u, v);
  return g;
}

void write_dimacs(std::ostream& os, const SkewGraph& g) {
  const auto es = g.edges();
  os << "p edge " << g.size() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

SkewGraph read_dimacs(std::istream& is) {
  std::string line;
  SkewGraph g;
  bool have_header = false;
  long long declared = 0, seen = 0;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      int n = 0;
      if (!(ls >> kind >> n >> declared) || n < 0)
        throw Error(ErrorCode::ParseError, "bad header at line " + std::to_string(lineno));
      g = SkewGraph(n);
      have_header = true;
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (!have_header || !(ls >> u >> v) || u < 1 || v < 1 || u > g.size() ||
          v > g.size() || u == v)
        throw Error(ErrorCode::ParseError, "bad edge at line " + std::to_string(lineno));
      g.add_edge(u - 1, v - 1);
      ++seen;
    } else {
      throw Error(ErrorCode::ParseError, "unknown record at line " + std::to_string(lineno));
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'p edge' header");
  if (seen != declared)
    throw Error(ErrorCode::ParseError, "header declares " + std::to_string(declared) +
                                           " edges, found " + std::to_string(seen));
  return g;
}

}  // namespace skewlines
