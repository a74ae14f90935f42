// Seeded random diagrams for property tests: closed MOY graphs and colored
// links built from braids with kinks and zigzags.
#pragma once

#include "builder.hpp"
#include "diagram.hpp"

#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace moyrt {

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Closes an open profile greedily: caps matching neighbours, joins
/// same-direction neighbours, otherwise forks off a piece that can be capped.
inline bool greedy_close(Profile& p, std::vector<Event>& ev, std::size_t budget) {
  while (!p.empty()) {
    if (ev.size() > budget || p.size() < 2) return false;
    std::optional<Event> next;
    for (std::size_t i = 0; i + 1 < p.size() && !next; ++i)
      if (p[i].color == p[i + 1].color && p[i].up != p[i + 1].up)
        next = Cap{static_cast<int>(i), p[i].up ? Side::left : Side::right};
    for (std::size_t i = 0; i + 1 < p.size() && !next; ++i)
      if (p[i].up == p[i + 1].up) next = Join{static_cast<int>(i), std::nullopt};
    if (!next) {
      const int a = p[0].color, b = p[1].color;
      next = a > b ? Event{Fork{0, a - b, b}} : Event{Fork{1, a, b - a}};
    }
    if (apply_event(p, *next)) return false;
    ev.push_back(*next);
  }
  return true;
}

}  // namespace detail

/// A random valid closed graph with at most max_events events and colors at most color_cap.
inline LayeredDiagram random_closed_graph(std::mt19937_64& rng, std::size_t max_events = 10, int color_cap = 4) {
  using detail::uniform;
  while (true) {
    Profile p;
    std::vector<Event> ev;
    const int opening = uniform(rng, 2, 8);
    for (int s = 0; s < opening; ++s) {
      const int size = static_cast<int>(p.size());
      std::optional<Event> e;
      switch (uniform(rng, 0, 3)) {
        case 0:
          e = Cup{uniform(rng, 0, size), uniform(rng, 1, std::min(3, color_cap)), uniform(rng, 0, 1) ? Side::left : Side::right};
          break;
        case 1:
          if (size > 0) {
            const int i = uniform(rng, 0, size - 1);
            if (p[i].color >= 2) {
              const int l = uniform(rng, 1, p[i].color - 1);
              e = Fork{i, l, p[i].color - l};
            }
          }
          break;
        case 2:
          if (size > 1) e = Join{uniform(rng, 0, size - 2), std::nullopt};
          break;
        default:
          if (size > 1) {
            const int i = uniform(rng, 0, size - 2);
            e = Cap{i, p[i].up ? Side::left : Side::right};
          }
          break;
      }
      if (!e) continue;
      Profile trial = p;
      if (apply_event(trial, *e)) continue;
      p = std::move(trial);
      ev.push_back(*e);
    }
    if (!detail::greedy_close(p, ev, max_events)) continue;
    if (ev.empty() || ev.size() > max_events) continue;
    LayeredDiagram d{DiagramKind::graph, std::nullopt, ev};
    if (!validate(d).empty() || max_color(d) > color_cap) continue;
    return d;
  }
}

struct RandomLinkOptions {
  int max_strands = 3;
  int max_word = 5;
  int max_color = 3;
  int max_decorations = 2;  ///< kinks and zigzags
};

/// Closure of a random colored braid, decorated with kinks and zigzags and
/// possibly mirrored. Colors are constant along each component.
inline LayeredDiagram random_link(std::mt19937_64& rng, const RandomLinkOptions& o = {}) {
  using detail::uniform;
  const int k = uniform(rng, 1, o.max_strands);
  const int len = k > 1 ? uniform(rng, 1, o.max_word) : 0;
  std::vector<std::pair<int, Sign>> word;
  for (int i = 0; i < len; ++i) word.emplace_back(uniform(rng, 0, k - 2), uniform(rng, 0, 1) ? Sign::positive : Sign::negative);

  // slot -> starting strand after the word; cycles of that map are components
  std::vector<int> at(k);
  std::iota(at.begin(), at.end(), 0);
  for (const auto& [i, s] : word) std::swap(at[i], at[i + 1]);
  std::vector<int> color(k, 0);
  for (int start = 0; start < k; ++start) {
    if (color[start]) continue;
    const int c = uniform(rng, 1, o.max_color);
    for (int j = start; !color[j]; j = at[j]) color[j] = c;
  }

  Profile bottom;
  for (int j = 0; j < k; ++j) bottom.push_back({color[j], true});
  TangleBuilder b(bottom);
  auto decorate = [&]() {
    const int n = static_cast<int>(b.virtual_profile().size());
    const int i = uniform(rng, 0, n - 1);
    const int c = b.virtual_profile()[i].color;
    switch (uniform(rng, 0, 2)) {
      case 0:  // kink on the right of strand i
        b.cup(i + 1, c, Side::left).crossing(i, uniform(rng, 0, 1) ? Sign::positive : Sign::negative).cap(i + 1, Side::left);
        break;
      case 1:  // zigzag through the right
        b.cup(i + 1, c, Side::right).cap(i, Side::left);
        break;
      default:  // zigzag through the left
        b.cup(i, c, Side::left).cap(i + 1, Side::right);
        break;
    }
  };
  const int decorations = uniform(rng, 0, o.max_decorations);
  std::vector<int> when(decorations);
  for (auto& w : when) w = uniform(rng, 0, len);
  for (int step = 0; step <= len; ++step) {
    for (int w : when)
      if (w == step) decorate();
    if (step < len) b.crossing(word[step].first, word[step].second);
  }
  LayeredDiagram d = close_nested_right(b.finish(), DiagramKind::link);
  return uniform(rng, 0, 1) ? mirror(d) : d;
}

}  // namespace moyrt
