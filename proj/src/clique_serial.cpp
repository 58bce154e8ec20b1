// Serial reference implementations of both Bron-Kerbosch variants.

#include <algorithm>

#include "clique_internal.hpp"
#include "skewlines/error.hpp"

namespace skewlines {

namespace {

void emit_sorted(std::vector<int> r, const CliqueSink& sink) {
  std::sort(r.begin(), r.end());
  sink(r);
}

void pivot_recurse(const SkewGraph& g, std::vector<int>& r, VertexSet p, VertexSet e,
                   const CliqueSink& sink) {
  if (p.empty() && e.empty()) {
    emit_sorted(r, sink);
    return;
  }
  const int u = choose_pivot(g, p, e);
  VertexSet candidates = p;
  candidates.subtract(g.neighbors(u));
  candidates.for_each([&](int v) {
    r.push_back(v);
    pivot_recurse(g, r, p & g.neighbors(v), e & g.neighbors(v), sink);
    r.pop_back();
    p.erase(v);
    e.insert(v);
  });
}

void check_search_state(const SkewGraph& g, const std::vector<int>& r, const VertexSet& p,
                        const VertexSet& e) {
  const int n = g.size();
  if (p.universe() != n || e.universe() != n)
    throw Error(ErrorCode::PreconditionViolated, "vertex set universe differs from graph");
  if (!is_clique(g, r)) throw Error(ErrorCode::PreconditionViolated, "R is not a clique");
  if (p.intersects(e)) throw Error(ErrorCode::PreconditionViolated, "P and E overlap");
  for (int v : r)
    if (p.contains(v) || e.contains(v))
      throw Error(ErrorCode::PreconditionViolated, "R overlaps P or E");
  if (!r.empty()) {
    const VertexSet common = common_neighbors(g, r);
    if (!p.is_subset_of(common) || !e.is_subset_of(common))
      throw Error(ErrorCode::PreconditionViolated, "P or E not adjacent to all of R");
  }
}

}  // namespace

int choose_pivot(const SkewGraph& g, const VertexSet& p, const VertexSet& e) {
  const VertexSet pool = p | e;
  if (pool.empty()) throw Error(ErrorCode::EmptyPivotPool, "P and E are empty");
  int best = -1, best_score = -1;
  pool.for_each([&](int u) {
    const int score = (p & g.neighbors(u)).count();
    if (score > best_score) {
      best = u;
      best_score = score;
    }
  });
  return best;
}

void bk_pivot(const SkewGraph& g, const VertexSet& r, const VertexSet& p,
              const VertexSet& e, const CliqueSink& sink) {
  std::vector<int> rv = r.to_vector();
  check_search_state(g, rv, p, e);
  pivot_recurse(g, rv, p, e, sink);
}

CliqueCensus census(const SkewGraph& g) {
  CliqueCensus c;
  const int n = g.size();
  bk_pivot(g, VertexSet(n), VertexSet::full(n), VertexSet(n),
           [&](std::span<const int> clique) { c.add(static_cast<int>(clique.size())); });
  return c;
}

namespace detail {

void validate_stabilizer(const SkewGraph& g, std::span<const int> r, const PermList& stab) {
  if (stab.empty()) throw Error(ErrorCode::InvalidStabilizer, "empty stabilizer list");
  if (stab.degree() != g.size())
    throw Error(ErrorCode::InvalidStabilizer, "permutation degree differs from graph size");
  const auto edges = g.edges();
  for (std::size_t i = 0; i < stab.size(); ++i) {
    for (int v : r)
      if (stab.image(i, v) != v)
        throw Error(ErrorCode::InvalidStabilizer,
                    "element " + std::to_string(i) + " moves vertex " + std::to_string(v));
    for (auto [u, v] : edges)
      if (!g.adjacent(stab.image(i, u), stab.image(i, v)))
        throw Error(ErrorCode::InvalidStabilizer,
                    "element " + std::to_string(i) + " breaks edge " + std::to_string(u) +
                        "-" + std::to_string(v));
  }
}

std::vector<int> orbit_representatives(const SkewGraph& g, const VertexSet& p,
                                       const VertexSet& e, const PermList& stab,
                                       const OrbitOptions& opts) {
  const int u = choose_pivot(g, p, e);
  VertexSet pool = p;
  if (opts.restrict_to_pivot) pool.subtract(g.neighbors(u));
  std::vector<int> reps;
  while (!pool.empty()) {
    int first = -1;
    pool.for_each([&](int v) {
      if (first < 0) first = v;
    });
    reps.push_back(first);
    pool.erase(first);
    for (std::size_t i = 0; i < stab.size(); ++i) pool.erase(stab.image(i, first));
  }
  return reps;
}

void orbit_recurse(const SkewGraph& g, std::vector<int>& r, VertexSet p, VertexSet e,
                   const PermList& stab, const CliqueSink& sink, const OrbitOptions& opts) {
  if (p.empty() && e.empty()) {
    emit_sorted(r, sink);
    return;
  }
  if (opts.stop && opts.stop->load(std::memory_order_relaxed)) return;
  const auto reps = orbit_representatives(g, p, e, stab, opts);
  const PermList* current = &stab;
  PermList owned;
  for (int v : reps) {
    PermList stab_v = current->fixing(v);
    r.push_back(v);
    orbit_recurse(g, r, p & g.neighbors(v), e & g.neighbors(v), stab_v, sink, opts);
    r.pop_back();
    p.erase(v);
    e.insert(v);
    owned = std::move(stab_v);
    current = &owned;
    if (opts.stop && opts.stop->load(std::memory_order_relaxed)) return;
  }
}

}  // namespace detail

void bk_orbits(const SkewGraph& g, const VertexSet& r, const VertexSet& p,
               const VertexSet& e, const PermList& stab, const CliqueSink& sink,
               const OrbitOptions& opts) {
  std::vector<int> rv = r.to_vector();
  check_search_state(g, rv, p, e);
  if (opts.validate) detail::validate_stabilizer(g, rv, stab);
  detail::orbit_recurse(g, rv, p, e, stab, sink, opts);
}

std::set<std::vector<int>> expand_orbits(const OrbitRepList& reps,
                                         std::span<const Permutation> group,
                                         std::size_t cap) {
  std::set<std::vector<int>> out;
  if (group.empty()) {
    for (auto rep : reps) {
      std::sort(rep.begin(), rep.end());
      out.insert(rep);
    }
    return out;
  }
  const auto elems = closure(group, cap);
  for (const auto& rep : reps)
    for (const auto& g : elems) out.insert(apply_to_clique(g, rep));
  return out;
}

std::vector<PivotTask> split_pivot_search(const SkewGraph& g, const std::vector<int>& r,
                                          const VertexSet& p, const VertexSet& e,
                                          int depth, const CliqueSink& sink) {
  check_search_state(g, r, p, e);
  std::vector<PivotTask> tasks;
  std::vector<int> rv = r;
  auto expand = [&](auto&& self, VertexSet pp, VertexSet ee, int d) -> void {
    if (pp.empty() && ee.empty()) {
      emit_sorted(rv, sink);
      return;
    }
    if (d == 0) {
      tasks.push_back({rv, std::move(pp), std::move(ee)});
      return;
    }
    const int u = choose_pivot(g, pp, ee);
    VertexSet candidates = pp;
    candidates.subtract(g.neighbors(u));
    candidates.for_each([&](int v) {
      rv.push_back(v);
      self(self, pp & g.neighbors(v), ee & g.neighbors(v), d - 1);
      rv.pop_back();
      pp.erase(v);
      ee.insert(v);
    });
  };
  expand(expand, p, e, depth);
  return tasks;
}

OrbitSplit split_orbit_search(const SkewGraph& g, const std::vector<int>& r,
                              const VertexSet& p, const VertexSet& e, const PermList& stab,
                              const OrbitOptions& opts) {
  check_search_state(g, r, p, e);
  if (opts.validate) detail::validate_stabilizer(g, r, stab);
  OrbitSplit split;
  if (p.empty() && e.empty()) {
    split.root_reported = true;
    return split;
  }
  const auto reps = detail::orbit_representatives(g, p, e, stab, opts);
  split.tasks.reserve(reps.size());  // `current` points into tasks
  VertexSet pc = p, ec = e;
  const PermList* current = &stab;
  for (int v : reps) {
    OrbitTask t;
    t.r = r;
    t.r.push_back(v);
    t.p = pc & g.neighbors(v);
    t.e = ec & g.neighbors(v);
    t.stab = current->fixing(v);
    split.tasks.push_back(std::move(t));
    pc.erase(v);
    ec.insert(v);
    current = &split.tasks.back().stab;
  }
  return split;
}

}  // namespace skewlines
