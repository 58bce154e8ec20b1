#pragma once

#include <vector>

#include "skewlines/clique.hpp"

namespace skewlines::detail {

/// Orbit representatives of the candidate pool under stab, first-element
/// order.
std::vector<int> orbit_representatives(const SkewGraph& g, const VertexSet& p,
                                       const VertexSet& e, const PermList& stab,
                                       const OrbitOptions& opts);

/// Recursive body of the orbit search; r is unsorted.
void orbit_recurse(const SkewGraph& g, std::vector<int>& r, VertexSet p, VertexSet e,
                   const PermList& stab, const CliqueSink& sink, const OrbitOptions& opts);

void validate_stabilizer(const SkewGraph& g, std::span<const int> r, const PermList& stab);

}  // namespace skewlines::detail
