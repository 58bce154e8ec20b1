#pragma once

#include <array>

#include "skewlines/field.hpp"
#include "skewlines/geometry.hpp"
#include "skewlines/skew_graph.hpp"

namespace skewlines {

/// Everything derived from one choice of q: the field, the line table, the
/// star points and the skew graph. Immutable after construction.
struct Surface {
  FieldSpec field;
  LineTable lines;
  StarPointTable stars;
  SkewGraph graph;

  static Surface build(const FieldSpec& f);
  int q() const { return field.q(); }
  /// (L_0, L_{q+2}, L_{2q+4}).
  std::array<int, 3> base_triple() const { return {0, q() + 2, 2 * q() + 4}; }
};

inline Surface Surface::build(const FieldSpec& f) {
  LineTable t = enumerate_lines(f);
  StarPointTable s = star_points(f, t);
  SkewGraph g = build_skew_graph(f, t);
  return Surface{f, std::move(t), std::move(s), std::move(g)};
}

}  // namespace skewlines
