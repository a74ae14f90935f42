// Small named diagrams used by tests, examples and the sample data files.
#pragma once

#include "builder.hpp"
#include "diagram.hpp"

namespace moyrt::samples {

/// A circle colored m; counterclockwise unless ccw is false.
inline LayeredDiagram circle(int m, bool ccw = true, DiagramKind kind = DiagramKind::graph) {
  const Side s = ccw ? Side::right : Side::left;
  return {kind, std::nullopt, {Cup{0, m, s}, Cap{0, s}}};
}

/// Two 1-colored edges between a split and a merge of a 2-colored edge, counterclockwise.
inline LayeredDiagram theta() {
  return {DiagramKind::graph, std::nullopt, {Cup{0, 2, Side::right}, Fork{1, 1, 1}, Join{1, std::nullopt}, Cap{0, Side::right}}};
}

inline LayeredDiagram unknot(int m) { return circle(m, true, DiagramKind::link); }

/// Unknot with one kink to the right of an upward strand.
inline LayeredDiagram kink_unknot(int m, Sign sign) {
  TangleBuilder b({Strand{m, true}});
  b.cup(1, m, Side::left).crossing(0, sign).cap(1, Side::left);
  return close_nested_right(b.finish(), DiagramKind::link);
}

/// Closure of the two-strand braid sigma_1^{twists} on colors (a, b); twists even keeps the colors apart.
inline LayeredDiagram two_braid_closure(int a, int b, int twists, Sign sign) {
  TangleBuilder t({Strand{a, true}, Strand{b, true}});
  for (int i = 0; i < twists; ++i) t.crossing(0, sign);
  return close_nested_right(t.finish(), DiagramKind::link);
}

inline LayeredDiagram hopf(int a, int b, Sign sign = Sign::positive) { return two_braid_closure(a, b, 2, sign); }

inline LayeredDiagram trefoil(int m, Sign sign = Sign::positive) { return two_braid_closure(m, m, 3, sign); }

inline LayeredDiagram unlink(int a, int b) { return disjoint_union(unknot(a), unknot(b)); }

}  // namespace moyrt::samples
