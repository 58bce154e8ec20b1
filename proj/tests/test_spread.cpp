#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlines/error.hpp"
#include "skewlines/spread.hpp"
#include "support.hpp"

using namespace skewlines;
using testing::surface;

TEST_CASE("quadric through the base triple") {
  for (int q : {2, 3, 4}) {
    const Surface& s = surface(q);
    const QuadricConfig cfg = quadric_through(s, s.base_triple());
    CAPTURE(q);
    CHECK(static_cast<int>(cfg.surface_lines().size()) == 2 * q + 2);
    for (const auto& r : cfg.rulings) {
      CHECK(static_cast<int>(r.lines.size()) == q * q + 1);
      CHECK(static_cast<int>(r.surface.size()) == q + 1);
      for (const auto& l : r.lines)
        for (const auto& p : points_on(s.field, l))
          CHECK(evaluate(s.field, cfg.quadric, p.coords).is_zero());
    }
    for (int b : s.base_triple())
      CHECK(std::binary_search(cfg.rulings[0].surface.begin(), cfg.rulings[0].surface.end(), b));
    for (int a : cfg.rulings[0].surface)
      for (int b : cfg.rulings[1].surface) CHECK_FALSE(s.graph.adjacent(a, b));
    CHECK(is_clique(s.graph, cfg.rulings[0].surface));
    CHECK(is_clique(s.graph, cfg.rulings[1].surface));
    // first nonzero coefficient is 1
    for (auto c : cfg.quadric.coeffs)
      if (!c.is_zero()) {
        CHECK(c == FieldElem::one());
        break;
      }
  }
}

TEST_CASE("the quadric does not depend on the order of the lines") {
  const Surface& s = surface(3);
  const auto [a, b, c] = s.base_triple();
  CHECK(quadric_through(s, {a, b, c}).quadric == quadric_through(s, {c, a, b}).quadric);
  CHECK(quadric_through(s, {a, b, c}).quadric == quadric_through(s, {b, c, a}).quadric);
}

TEST_CASE("meeting lines are rejected") {
  const Surface& s = surface(2);
  CHECK_THROWS_AS(quadric_through(s, {0, 1, 8}), Error);
}

TEST_CASE("star chords and dual pairs") {
  for (int q : {2, 3, 4}) {
    const Surface& s = surface(q);
    const QuadricConfig cfg = quadric_through(s, s.base_triple());
    for (int r : {0, 1}) {
      const StarChordPairing p = star_chords(s, cfg, r);
      CHECK(static_cast<int>(p.chords.size()) == q * (q - 1));
      CHECK(static_cast<int>(p.pairs.size()) == q * (q - 1) / 2);
      for (const auto& st : p.chord_stars) CHECK(static_cast<int>(st.size()) == q + 1);
      for (const auto& c : p.chords) CHECK_FALSE(s.lines.index_of(c).has_value());
    }
  }
}

TEST_CASE("constructed sets have the formula size") {
  const std::map<int, int> size{{2, 6}, {3, 13}, {4, 23}};
  for (auto [q, n] : size) {
    const Surface& s = surface(q);
    CHECK(large_skew_set_size(q) == n);
    const QuadricConfig cfg = quadric_through(s, s.base_triple());
    const auto pairs = star_chords(s, cfg, 1).pairs.size();
    const auto b = s.base_triple();
    for (bool sign : {false, true}) {
      const LargeSkewSet set = build_large_skew_set(s, cfg, 1, b, std::vector<bool>(pairs, sign));
      CHECK(static_cast<int>(set.lines.size()) == n);
      CHECK(is_clique(s.graph, set.lines));
      for (int l : cfg.rulings[1].surface)
        CHECK(std::binary_search(set.lines.begin(), set.lines.end(), l));
    }
  }
}

TEST_CASE("construction preconditions") {
  const Surface& s = surface(3);
  const QuadricConfig cfg = quadric_through(s, s.base_triple());
  const auto b = s.base_triple();
  CHECK_THROWS_AS(build_large_skew_set(s, cfg, 0, b, std::vector<bool>(3)), Error);
  CHECK_THROWS_AS(build_large_skew_set(s, cfg, 1, b, std::vector<bool>(2)), Error);
  CHECK_THROWS_AS(build_large_skew_set(s, cfg, 1, {b[0], b[0], b[1]}, std::vector<bool>(3)), Error);
}

TEST_CASE("different signs from one configuration conflict") {
  const Surface& s = surface(3);
  const QuadricConfig cfg = quadric_through(s, s.base_triple());
  const auto b = s.base_triple();
  const auto x = build_large_skew_set(s, cfg, 1, b, {false, false, false});
  const auto y = build_large_skew_set(s, cfg, 1, b, {false, true, false});
  std::vector<int> both = x.lines;
  both.insert(both.end(), y.lines.begin(), y.lines.end());
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  CHECK(x.lines != y.lines);
  CHECK_FALSE(is_clique(s.graph, both));
}

TEST_CASE("extension to a maximal set") {
  const Surface& s = surface(2);
  const QuadricConfig cfg = quadric_through(s, s.base_triple());
  const auto set = build_large_skew_set(s, cfg, 1, s.base_triple(), {false});
  const Extension e = extend_to_maximal(set.lines, s.graph);
  CHECK(e.clique == set.lines);
  CHECK(e.added() == 0);
  const Extension from_two = extend_to_maximal({0, 4}, s.graph);
  CHECK(is_maximal_clique(s.graph, from_two.clique));
  CHECK(from_two.candidates.front().size() == 10);
  CHECK(from_two.candidates.back().empty());
}

TEST_CASE("lower bound formula") {
  CHECK(lower_bound_count(2) == "4");
  CHECK(lower_bound_count(3) == "64");
  CHECK(lower_bound_count(4) == "1280");
  CHECK(lower_bound_count(4) == std::to_string(181043200LL / quadric_config_count(4)));
  CHECK(lower_bound_count(13) == "220024499169862509796524032");
}

TEST_CASE("quadric configuration counts") {
  CHECK(quadric_config_count(2) == 360);
  CHECK(quadric_config_count(3) == 11340);
  CHECK(quadric_config_count(4) == 141440);
}

TEST_CASE("q = 2 multiplicities") {
  const MultiplicityReport r = census_from_quadrics(surface(2));
  CHECK(r.configs == 360);
  CHECK(r.generated == 1440);
  CHECK(r.distinct == 72);
  CHECK(r.multiplicity == std::map<long long, long long>{{20, 72}});
  CHECK(r.sizes == std::map<int, long long>{{6, 72}});
  CHECK(r.pairs_checked > 0);
  CHECK(r.pairs_jointly_extendable == 0);
}
