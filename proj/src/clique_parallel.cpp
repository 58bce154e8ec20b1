// Arena-based pivoting kernel and OpenMP drivers for the census runs.

#include <omp.h>

#include <algorithm>
#include <bit>
#include <mutex>

#include "clique_internal.hpp"
#include "skewlines/error.hpp"

namespace skewlines {

namespace {

using Word = VertexSet::Word;

// Bron-Kerbosch with pivoting on raw word spans. Each depth owns three rows
// (P, E, candidates) of a preallocated arena, so the recursion allocates
// nothing after construction.
class ArenaSearch {
 public:
  explicit ArenaSearch(const SkewGraph& g)
      : n_(g.size()), w_(VertexSet::word_count(g.size())) {
    adj_.resize(static_cast<std::size_t>(n_) * w_);
    for (int v = 0; v < n_; ++v) {
      auto row = g.neighbors(v).words();
      std::copy(row.begin(), row.end(), adj_.begin() + static_cast<std::ptrdiff_t>(v) * w_);
    }
    arena_.resize(static_cast<std::size_t>(n_ + 2) * 3 * w_);
    counts_.assign(n_ + 1, 0);
  }

  void run(const PivotTask& task, const CliqueSink* sink) {
    sink_ = sink;
    r_ = task.r;
    Word* p = row(0, 0);
    Word* e = row(0, 1);
    auto pw = task.p.words();
    auto ew = task.e.words();
    std::copy(pw.begin(), pw.end(), p);
    std::copy(ew.begin(), ew.end(), e);
    recurse(0);
  }

  CliqueCensus census() const {
    CliqueCensus c;
    for (int s = 0; s <= n_; ++s)
      if (counts_[s]) c.add(s, counts_[s]);
    return c;
  }

 private:
  Word* row(int depth, int which) {
    return arena_.data() + (static_cast<std::size_t>(depth) * 3 + which) * w_;
  }
  const Word* nbr(int v) const { return adj_.data() + static_cast<std::size_t>(v) * w_; }

  bool is_empty(const Word* s) const {
    for (int i = 0; i < w_; ++i)
      if (s[i]) return false;
    return true;
  }

  void report() {
    ++counts_[r_.size()];
    if (sink_) {
      std::vector<int> sorted = r_;
      std::sort(sorted.begin(), sorted.end());
      (*sink_)(sorted);
    }
  }

  int pivot(const Word* p, const Word* e) const {
    int best = -1, best_score = -1, p_size = 0;
    for (int i = 0; i < w_; ++i) p_size += std::popcount(p[i]);
    for (int i = 0; i < w_; ++i) {
      Word pool = p[i] | e[i];
      while (pool) {
        const int u = i * VertexSet::kBits + std::countr_zero(pool);
        pool &= pool - 1;
        const Word* nu = nbr(u);
        int score = 0;
        for (int k = 0; k < w_; ++k) score += std::popcount(p[k] & nu[k]);
        if (score > best_score) {
          best = u;
          best_score = score;
          if (score == p_size) return best;
        }
      }
    }
    return best;
  }

  void recurse(int depth) {
    Word* p = row(depth, 0);
    Word* e = row(depth, 1);
    Word* cand = row(depth, 2);
    if (is_empty(p)) {
      if (is_empty(e)) report();
      return;
    }
    const Word* nu = nbr(pivot(p, e));
    for (int i = 0; i < w_; ++i) cand[i] = p[i] & ~nu[i];
    Word* np = row(depth + 1, 0);
    Word* ne = row(depth + 1, 1);
    for (int i = 0; i < w_; ++i) {
      while (cand[i]) {
        const int b = std::countr_zero(cand[i]);
        const Word bit = Word{1} << b;
        cand[i] &= cand[i] - 1;
        const int v = i * VertexSet::kBits + b;
        const Word* nv = nbr(v);
        for (int k = 0; k < w_; ++k) {
          np[k] = p[k] & nv[k];
          ne[k] = e[k] & nv[k];
        }
        r_.push_back(v);
        recurse(depth + 1);
        r_.pop_back();
        p[i] &= ~bit;
        e[i] |= bit;
      }
    }
  }

  int n_;
  int w_;
  std::vector<Word> adj_;
  std::vector<Word> arena_;
  std::vector<long long> counts_;
  std::vector<int> r_;
  const CliqueSink* sink_ = nullptr;
};

bool stopped(const std::atomic<bool>* stop) {
  return stop && stop->load(std::memory_order_relaxed);
}

}  // namespace

CliqueCensus run_pivot_task(const SkewGraph& g, const PivotTask& task,
                            const CliqueSink* sink) {
  ArenaSearch search(g);
  search.run(task, sink);
  return search.census();
}

ParallelCensusResult census_parallel(const SkewGraph& g, const std::vector<int>& r,
                                     const VertexSet& p, const VertexSet& e,
                                     const ParallelCensusOptions& opts) {
  if (opts.jobs < 1) throw Error(ErrorCode::PreconditionViolated, "jobs must be >= 1");
  std::mutex mu;
  CliqueSink guarded;
  if (opts.sink)
    guarded = [&](std::span<const int> c) {
      std::lock_guard lock(mu);
      opts.sink(c);
    };

  ParallelCensusResult result;
  const auto tasks = split_pivot_search(g, r, p, e, opts.split_depth,
                                        [&](std::span<const int> c) {
                                          result.census.add(static_cast<int>(c.size()));
                                          if (opts.sink) opts.sink(c);
                                        });
  result.tasks = static_cast<int>(tasks.size());
  const CliqueSink* task_sink = opts.sink ? &guarded : nullptr;

#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.jobs)
  for (int i = 0; i < static_cast<int>(tasks.size()); ++i) {
    if (opts.skip.count(i) || stopped(opts.stop)) continue;
    ArenaSearch local(g);
    local.run(tasks[i], task_sink);
    const CliqueCensus c = local.census();
    std::lock_guard lock(mu);
    result.census.merge(c);
    ++result.completed;
    if (opts.on_task_done) opts.on_task_done(i, c);
  }
  return result;
}

ParallelCensusResult orbit_census_parallel(const SkewGraph& g, const std::vector<int>& r,
                                           const VertexSet& p, const VertexSet& e,
                                           const PermList& stab,
                                           const ParallelOrbitOptions& opts) {
  if (opts.jobs < 1) throw Error(ErrorCode::PreconditionViolated, "jobs must be >= 1");
  ParallelCensusResult result;
  const OrbitSplit split = split_orbit_search(g, r, p, e, stab, opts.orbit);
  if (split.root_reported) {
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    result.census.add(static_cast<int>(sorted.size()));
    if (opts.sink) opts.sink(sorted);
    return result;
  }
  result.tasks = static_cast<int>(split.tasks.size());
  std::mutex mu;
  OrbitOptions inner = opts.orbit;
  inner.validate = false;

#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.jobs)
  for (int i = 0; i < static_cast<int>(split.tasks.size()); ++i) {
    if (opts.skip.count(i) || stopped(inner.stop)) continue;
    const OrbitTask& t = split.tasks[i];
    CliqueCensus local;
    std::vector<int> rv = t.r;
    detail::orbit_recurse(
        g, rv, t.p, t.e, t.stab,
        [&](std::span<const int> c) {
          local.add(static_cast<int>(c.size()));
          if (opts.sink) {
            std::lock_guard lock(mu);
            opts.sink(c);
          }
        },
        inner);
    std::lock_guard lock(mu);
    if (stopped(inner.stop)) {
      // partial branch: counted but not recorded as complete
      result.census.merge(local);
      continue;
    }
    result.census.merge(local);
    ++result.completed;
    if (opts.on_task_done) opts.on_task_done(i, local);
  }
  return result;
}

}  // namespace skewlines
