#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "skewlines/error.hpp"
#include "support.hpp"

using namespace skewlines;
using testing::surface;

TEST_CASE("skew graph is q^4-regular") {
  for (int q : {2, 3, 4}) {
    const Surface& s = surface(q);
    for (int v = 0; v < s.graph.size(); ++v) CHECK(s.graph.degree(v) == q * q * q * q);
    CHECK(s.graph.edge_count() == static_cast<long long>(s.graph.size()) * q * q * q * q / 2);
  }
}

TEST_CASE("adjacency is skewness") {
  const Surface& s = surface(2);
  for (int i = 0; i < s.graph.size(); ++i)
    for (int j = i + 1; j < s.graph.size(); ++j)
      CHECK(s.graph.adjacent(i, j) == !lines_meet(s.field, s.lines.lines[i], s.lines.lines[j]));
}

TEST_CASE("basic graph operations") {
  SkewGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  CHECK_THROWS_AS(g.add_edge(3, 3), Error);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  const SkewGraph c = complement(g);
  CHECK(c.edge_count() == 3);
  CHECK(c.adjacent(0, 3));
  const std::vector<int> tri{0, 1, 2};
  CHECK(is_clique(g, tri));
  CHECK(is_maximal_clique(g, tri));
  const std::vector<int> edge{0, 1};
  CHECK_FALSE(is_maximal_clique(g, edge));
  CHECK(common_neighbors(g, edge).to_vector() == std::vector<int>{2});
  CHECK_THROWS_AS(common_neighbors(g, std::vector<int>{}), Error);
}

TEST_CASE("Moon-Moser graph") {
  for (int k = 1; k <= 4; ++k) {
    const SkewGraph g = moon_moser(k);
    CHECK(g.size() == 3 * k);
    for (int u = 0; u < g.size(); ++u)
      for (int v = u + 1; v < g.size(); ++v) CHECK(g.adjacent(u, v) == (u / 3 != v / 3));
  }
}

TEST_CASE("DIMACS round trip") {
  const SkewGraph& g = surface(2).graph;
  std::stringstream ss;
  write_dimacs(ss, g);
  CHECK(read_dimacs(ss) == g);
}

TEST_CASE("DIMACS parse errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
  };
  CHECK_THROWS_AS(parse("e 1 2\n"), Error);
  CHECK_THROWS_AS(parse("p edge 3 2\ne 1 2\n"), Error);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 4\n"), Error);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 x\n"), Error);
  const SkewGraph g = parse("c comment\np edge 3 1\ne 1 3\n");
  CHECK(g.adjacent(0, 2));
}
