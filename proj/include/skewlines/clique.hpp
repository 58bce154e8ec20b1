#pragma once

// Maximal clique enumeration by Bron-Kerbosch with pivoting, and the
// orbit-pruned variant that lists at least one representative per orbit of
// maximal cliques under a group of automorphisms fixing R.
//
// bk_pivot and bk_orbits are the serial reference implementations. The
// census kernels below run the same recursion on preallocated word arenas
// and distribute a fixed frontier of subproblems over OpenMP threads.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "skewlines/perm_group.hpp"
#include "skewlines/skew_graph.hpp"
#include "skewlines/vertex_set.hpp"

namespace skewlines {

/// Receives one maximal clique as a sorted vertex list. Parallel drivers may
/// call it concurrently; they serialize calls internally.
using CliqueSink = std::function<void(std::span<const int>)>;

struct CliqueCensus {
  std::map<int, long long> histogram;
  long long total = 0;

  void add(int size, long long count = 1) {
    histogram[size] += count;
    total += count;
  }
  void merge(const CliqueCensus& other) {
    for (auto [s, c] : other.histogram) add(s, c);
  }
  friend bool operator==(const CliqueCensus&, const CliqueCensus&) = default;
};

/// u in P u E maximizing |P n N(u)|, smallest index on ties.
int choose_pivot(const SkewGraph& g, const VertexSet& p, const VertexSet& e);

/// Reports every maximal clique containing R and contained in R u P that
/// avoids extension by E. Throws PreconditionViolated on malformed input.
void bk_pivot(const SkewGraph& g, const VertexSet& r, const VertexSet& p,
              const VertexSet& e, const CliqueSink& sink);

struct OrbitOptions {
  /// Restrict orbit representatives to P \ N(u) for the pivot u. Off by
  /// default; not known to preserve orbit coverage.
  bool restrict_to_pivot = false;
  /// Validate the stabilizer (fixes R, preserves adjacency) up front.
  bool validate = true;
  /// Checked between branches; set to abandon the search early.
  const std::atomic<bool>* stop = nullptr;
};

/// Orbit-pruned Bron-Kerbosch. stab must be an explicit list of
/// automorphisms fixing R pointwise and P, E setwise (e.g. a stabilizer
/// subgroup). Throws InvalidStabilizer.
void bk_orbits(const SkewGraph& g, const VertexSet& r, const VertexSet& p,
               const VertexSet& e, const PermList& stab, const CliqueSink& sink,
               const OrbitOptions& opts = {});

/// Serial census from (empty, V, empty).
CliqueCensus census(const SkewGraph& g);

/// Representatives emitted by bk_orbits, in emission order.
using OrbitRepList = std::vector<std::vector<int>>;

/// { sorted g(rep) : g in <group>, rep in reps }. The group is closed
/// internally; throws ClosureCapExceeded.
std::set<std::vector<int>> expand_orbits(const OrbitRepList& reps,
                                         std::span<const Permutation> group,
                                         std::size_t cap = 10'000'000);

// ---- parallel kernels ----

/// An independent subproblem of the pivoting search.
struct PivotTask {
  std::vector<int> r;
  VertexSet p, e;
};

/// Expands the search tree from (r, p, e) to the given depth. Cliques
/// reported above the frontier go to `sink`; the returned tasks partition
/// the remaining leaves, in serial visiting order.
std::vector<PivotTask> split_pivot_search(const SkewGraph& g, const std::vector<int>& r,
                                          const VertexSet& p, const VertexSet& e,
                                          int depth, const CliqueSink& sink);

/// Runs one task to completion with the arena kernel, counting cliques.
CliqueCensus run_pivot_task(const SkewGraph& g, const PivotTask& task,
                            const CliqueSink* sink = nullptr);

struct ParallelCensusOptions {
  int jobs = 1;
  int split_depth = 2;
  /// Task ids to skip (already completed in a checkpoint).
  std::set<int> skip;
  /// Called (serialized) after each task finishes.
  std::function<void(int task, const CliqueCensus&)> on_task_done;
  /// Optional clique stream; calls are serialized.
  CliqueSink sink;
  const std::atomic<bool>* stop = nullptr;
};

struct ParallelCensusResult {
  CliqueCensus census;
  int tasks = 0;
  int completed = 0;
};

/// Census of maximal cliques containing r inside r u p, avoiding e. Counts
/// do not depend on jobs; cliques found above the frontier are always
/// counted.
ParallelCensusResult census_parallel(const SkewGraph& g, const std::vector<int>& r,
                                     const VertexSet& p, const VertexSet& e,
                                     const ParallelCensusOptions& opts);

/// An independent top-level branch of the orbit search: the state the
/// orbit loop reaches when it recurses on its i-th representative.
struct OrbitTask {
  std::vector<int> r;
  VertexSet p, e;
  PermList stab;
};

struct OrbitSplit {
  std::vector<OrbitTask> tasks;
  /// True when (r, p, e) itself was reported as a maximal clique.
  bool root_reported = false;
};

OrbitSplit split_orbit_search(const SkewGraph& g, const std::vector<int>& r,
                              const VertexSet& p, const VertexSet& e, const PermList& stab,
                              const OrbitOptions& opts = {});

struct ParallelOrbitOptions {
  int jobs = 1;
  OrbitOptions orbit;
  std::set<int> skip;
  std::function<void(int task, const CliqueCensus&)> on_task_done;
  /// Representative stream; calls are serialized.
  CliqueSink sink;
};

/// Histogram of representatives emitted by bk_orbits from (r, p, e, stab),
/// with the top-level branches distributed over threads.
ParallelCensusResult orbit_census_parallel(const SkewGraph& g, const std::vector<int>& r,
                                           const VertexSet& p, const VertexSet& e,
                                           const PermList& stab,
                                           const ParallelOrbitOptions& opts);

}  // namespace skewlines
