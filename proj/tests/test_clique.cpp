#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlines/error.hpp"
#include "support.hpp"

using namespace skewlines;
using testing::surface;

namespace {

std::set<std::vector<int>> pivot_from(const SkewGraph& g, const std::vector<int>& r) {
  std::set<std::vector<int>> out;
  bk_pivot(g, VertexSet::of(g.size(), r), common_neighbors(g, r), VertexSet(g.size()),
           [&](std::span<const int> c) { out.emplace(c.begin(), c.end()); });
  return out;
}

OrbitRepList orbit_reps(const SkewGraph& g, const std::vector<int>& r, const PermList& stab,
                        OrbitOptions opts = {}) {
  OrbitRepList reps;
  const VertexSet p = r.empty() ? VertexSet::full(g.size()) : common_neighbors(g, r);
  bk_orbits(g, VertexSet::of(g.size(), r), p, VertexSet(g.size()), stab,
            [&](std::span<const int> c) { reps.emplace_back(c.begin(), c.end()); }, opts);
  return reps;
}

}  // namespace

TEST_CASE("bk_pivot matches exhaustive enumeration on random graphs") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(1, 13);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  for (int t = 0; t < 60; ++t) {
    const SkewGraph g = testing::random_graph(size(rng), dens(rng), rng);
    CHECK(testing::collect_pivot(g) == testing::brute_maximal_cliques(g));
  }
}

TEST_CASE("edgeless and complete graphs") {
  SkewGraph empty(5);
  CHECK(census(empty).histogram == std::map<int, long long>{{1, 5}});
  const SkewGraph full = complement(empty);
  CHECK(census(full).histogram == std::map<int, long long>{{5, 1}});
}

TEST_CASE("Moon-Moser graphs have 3^k maximal cliques") {
  long long expected = 1;
  for (int k = 1; k <= 5; ++k) {
    expected *= 3;
    const CliqueCensus c = census(moon_moser(k));
    CHECK(c.total == expected);
    CHECK(c.histogram.at(k) == expected);
  }
}

TEST_CASE("q = 2 census") {
  const CliqueCensus c = census(surface(2).graph);
  CHECK(c.histogram == std::map<int, long long>{{5, 216}, {6, 72}});
}

TEST_CASE("pivot choice") {
  SkewGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  // all of 0..3 score 1; the smallest index wins
  CHECK(choose_pivot(g, VertexSet::full(4), VertexSet(4)) == 0);
  g.add_edge(1, 2);
  CHECK(choose_pivot(g, VertexSet::full(4), VertexSet(4)) == 1);
  CHECK_THROWS_AS(choose_pivot(g, VertexSet(4), VertexSet(4)), Error);
}

TEST_CASE("bk_pivot rejects malformed states") {
  SkewGraph g(3);
  g.add_edge(0, 1);
  auto run = [&](std::vector<int> r, std::vector<int> p, std::vector<int> e) {
    bk_pivot(g, VertexSet::of(3, r), VertexSet::of(3, p), VertexSet::of(3, e),
             [](std::span<const int>) {});
  };
  CHECK_THROWS_AS(run({0, 2}, {}, {}), Error);
  CHECK_THROWS_AS(run({}, {0, 1}, {1}), Error);
  CHECK_THROWS_AS(run({0}, {0, 1}, {}), Error);
  CHECK_THROWS_AS(run({0}, {2}, {}), Error);
  CHECK_NOTHROW(run({0}, {1}, {}));
}

TEST_CASE("parallel census equals the serial one") {
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    const SkewGraph g = testing::random_graph(20, 0.6, rng);
    const CliqueCensus serial = census(g);
    for (int depth : {0, 1, 2, 4})
      for (int jobs : {1, 3}) {
        ParallelCensusOptions o;
        o.jobs = jobs;
        o.split_depth = depth;
        std::set<std::vector<int>> got;
        o.sink = [&](std::span<const int> c) { got.emplace(c.begin(), c.end()); };
        const auto res = census_parallel(g, {}, VertexSet::full(20), VertexSet(20), o);
        CHECK(res.census == serial);
        CHECK(got == testing::collect_pivot(g));
      }
  }
  const SkewGraph& g2 = surface(2).graph;
  ParallelCensusOptions o;
  o.jobs = 4;
  CHECK(census_parallel(g2, {}, VertexSet::full(27), VertexSet(27), o).census == census(g2));
}

TEST_CASE("skipped tasks are left out and reported tasks add up") {
  const SkewGraph& g = surface(2).graph;
  ParallelCensusOptions all;
  std::map<int, CliqueCensus> per_task;
  all.on_task_done = [&](int id, const CliqueCensus& c) { per_task[id] = c; };
  const auto full = census_parallel(g, {}, VertexSet::full(27), VertexSet(27), all);
  CHECK(full.completed == full.tasks);
  ParallelCensusOptions some;
  for (int i = 0; i < full.tasks; i += 2) some.skip.insert(i);
  auto partial = census_parallel(g, {}, VertexSet::full(27), VertexSet(27), some).census;
  for (int i : some.skip) partial.merge(per_task[i]);
  CHECK(partial == full.census);
}

TEST_CASE("bk_orbits with the trivial group is bk_pivot") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const SkewGraph g = testing::random_graph(12, 0.5, rng);
    PermList id(12);
    id.push_back(Permutation::identity(12));
    const auto reps = orbit_reps(g, {}, id);
    const std::set<std::vector<int>> got(reps.begin(), reps.end());
    CHECK(got.size() == reps.size());
    CHECK(got == testing::collect_pivot(g));
  }
}

TEST_CASE("orbit representatives cover every clique through the base triple") {
  for (int q : {2, 3}) {
    const Surface& s = surface(q);
    const auto base = s.base_triple();
    const std::vector<int> r(base.begin(), base.end());
    const auto gens = builtin_generators(s.field, s.lines);
    const auto stab = triple_stabilizer(gens, base);
    const auto reps = orbit_reps(s.graph, r, PermList::from(stab));
    for (const auto& c : reps) CHECK(is_maximal_clique(s.graph, c));
    CHECK(expand_orbits(reps, stab) == pivot_from(s.graph, r));
  }
}

TEST_CASE("bk_orbits rejects bad stabilizers") {
  const Surface& s = surface(2);
  const std::vector<int> r{0, 4, 8};
  const VertexSet p = common_neighbors(s.graph, r);
  auto run = [&](const PermList& stab) {
    bk_orbits(s.graph, VertexSet::of(27, r), p, VertexSet(27), stab, [](std::span<const int>) {});
  };
  CHECK_THROWS_AS(run(PermList(27)), Error);
  std::vector<int> swap01(27);
  for (int i = 0; i < 27; ++i) swap01[i] = i;
  std::swap(swap01[0], swap01[1]);
  PermList moves(27);
  moves.push_back(Permutation(swap01));
  CHECK_THROWS_AS(run(moves), Error);
  std::swap(swap01[0], swap01[1]);
  std::swap(swap01[20], swap01[21]);
  PermList breaks(27);
  breaks.push_back(Permutation(swap01));
  if (!preserves_adjacency(Permutation(swap01), s.graph)) CHECK_THROWS_AS(run(breaks), Error);
}

TEST_CASE("restricted orbit representatives are maximal cliques") {
  const Surface& s = surface(3);
  const auto base = s.base_triple();
  const std::vector<int> r(base.begin(), base.end());
  const auto stab = triple_stabilizer(builtin_generators(s.field, s.lines), base);
  OrbitOptions o;
  o.restrict_to_pivot = true;
  const auto reps = orbit_reps(s.graph, r, PermList::from(stab), o);
  CHECK_FALSE(reps.empty());
  for (const auto& c : reps) CHECK(is_maximal_clique(s.graph, c));
}

TEST_CASE("parallel orbit census matches the serial run") {
  const Surface& s = surface(3);
  const auto base = s.base_triple();
  const std::vector<int> r(base.begin(), base.end());
  const PermList stab = PermList::from(triple_stabilizer(builtin_generators(s.field, s.lines), base));
  CliqueCensus serial;
  for (const auto& c : orbit_reps(s.graph, r, stab)) serial.add(static_cast<int>(c.size()));
  for (int jobs : {1, 2}) {
    ParallelOrbitOptions o;
    o.jobs = jobs;
    const auto res =
        orbit_census_parallel(s.graph, r, common_neighbors(s.graph, r), VertexSet(112), stab, o);
    CHECK(res.census == serial);
    CHECK(res.completed == res.tasks);
  }
}

TEST_CASE("a raised stop flag ends the orbit search early") {
  const Surface& s = surface(3);
  const auto base = s.base_triple();
  const std::vector<int> r(base.begin(), base.end());
  const PermList stab = PermList::from(triple_stabilizer(builtin_generators(s.field, s.lines), base));
  std::atomic<bool> stop{true};
  ParallelOrbitOptions o;
  o.orbit.stop = &stop;
  const auto res =
      orbit_census_parallel(s.graph, r, common_neighbors(s.graph, r), VertexSet(112), stab, o);
  CHECK(res.completed == 0);
}
