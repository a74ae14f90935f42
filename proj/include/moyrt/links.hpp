// Colored link diagrams: crossing resolution into ladders, the bracket <D>_N,
// the normalised RT polynomial, parity bookkeeping and Reidemeister pairs.
//
// Naming: at a Crossing the bottom-left
// strand has color n and the bottom-right strand has color m. The left ladder
// Gamma_k moves a rung of color k from the right strand to the left one, then
// a rung of color n+k-m back to the right.
#pragma once

#include "builder.hpp"
#include "qalg.hpp"
#include "state_sum.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace moyrt {

struct Resolution {
  int k = 0;
  LaurentPoly coefficient;  ///< signed monomial
  Tangle local;             ///< ladder on [n up, m up] -> [m up, n up]
};

/// Resolutions of a crossing whose bottom-right strand has color m and
/// bottom-left strand color n.
inline std::vector<Resolution> resolve_crossing(int m, int n, Sign sign) {
  if (m < 1 || n < 1) throw std::invalid_argument("resolve_crossing: colors must be positive");
  std::vector<Resolution> out;
  for (int k = std::max(0, m - n); k <= m; ++k) {
    TangleBuilder b({Strand{n, true}, Strand{m, true}});
    b.fork(1, k, m - k).join(0).fork(0, m, n + k - m).join(1);
    const BigInt s = (m - k) % 2 == 0 ? 1 : -1;
    const int e = sign == Sign::positive ? k - m : m - k;
    out.push_back({k, LaurentPoly::monomial(s, e), b.finish()});
  }
  return out;
}

/// s(c): (-1)^m q^{+-m(N+1-m)} when both colors are m, else 1.
inline LaurentPoly shift_factor(int m, int n, Sign sign, int N) {
  if (m != n) return LaurentPoly::constant(1);
  const int e = m * (N + 1 - m);
  return LaurentPoly::monomial(m % 2 == 0 ? 1 : -1, sign == Sign::positive ? e : -e);
}

struct CrossingInfo {
  std::size_t layer = 0;
  int pos = 0;
  Sign sign = Sign::positive;
  int m = 0;  ///< bottom-right color
  int n = 0;  ///< bottom-left color
};

inline std::vector<CrossingInfo> crossings(const LayeredDiagram& d) {
  const auto profs = profiles(d);
  std::vector<CrossingInfo> out;
  for (std::size_t i = 0; i < d.layers.size(); ++i)
    if (const auto* c = std::get_if<Crossing>(&d.layers[i]))
      out.push_back({i, c->pos, c->sign, profs[i][c->pos + 1].color, profs[i][c->pos].color});
  return out;
}

namespace detail {

inline std::vector<Event> shifted_events(const std::vector<Event>& evs, int by) {
  std::vector<Event> out = evs;
  for (auto& e : out) std::visit([&](auto& x) { x.pos += by; }, e);
  return out;
}

/// Per crossing, the resolutions with their ladder events placed at the crossing.
inline std::vector<std::vector<std::pair<LaurentPoly, std::vector<Event>>>> placed_resolutions(
    const std::vector<CrossingInfo>& cs) {
  std::vector<std::vector<std::pair<LaurentPoly, std::vector<Event>>>> out;
  for (const auto& c : cs) {
    auto& row = out.emplace_back();
    for (auto& r : resolve_crossing(c.m, c.n, c.sign)) row.emplace_back(r.coefficient, shifted_events(r.local.layers, c.pos));
  }
  return out;
}

inline unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MOYRT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return hw;
}

}  // namespace detail

/// The graph obtained by choosing resolution choice[i] at the i-th crossing.
inline LayeredDiagram resolve_diagram(const LayeredDiagram& d, const std::vector<int>& choice) {
  const auto cs = crossings(d);
  if (choice.size() != cs.size()) throw std::invalid_argument("resolve_diagram: one choice per crossing");
  const auto placed = detail::placed_resolutions(cs);
  LayeredDiagram g{DiagramKind::graph, d.N, {}};
  std::size_t ci = 0;
  for (const auto& e : d.layers) {
    if (std::holds_alternative<Crossing>(e)) {
      const auto& evs = placed[ci][choice[ci]].second;
      g.layers.insert(g.layers.end(), evs.begin(), evs.end());
      ++ci;
    } else {
      g.layers.push_back(e);
    }
  }
  return g;
}

/// Index choice of the minimal-k resolution at every crossing (always index 0).
inline std::vector<int> minimal_choice(const LayeredDiagram& d) { return std::vector<int>(crossings(d).size(), 0); }

enum class LinkEngine { expand, fused };

/// <D>_N: sum over one resolution per crossing of the coefficient product
/// times the bracket of the resolved graph.
inline LaurentPoly bracket_link(const LayeredDiagram& d, int N, LinkEngine engine = LinkEngine::expand,
                                EvalStats* stats = nullptr) {
  require_valid(d);
  if (N < 1 || N > kMaxN) throw std::invalid_argument("bracket_link: N out of range");
  const auto cs = crossings(d);
  const auto placed = detail::placed_resolutions(cs);

  if (engine == LinkEngine::fused) {
    Sweep sw(N);
    std::size_t ci = 0;
    for (const auto& e : d.layers) {
      if (!std::holds_alternative<Crossing>(e)) {
        sw.apply(e);
        continue;
      }
      std::optional<Sweep> acc;
      for (const auto& [coef, evs] : placed[ci]) {
        Sweep branch = sw;
        branch.scale(coef);
        for (const auto& x : evs) branch.apply(x);
        if (acc)
          acc->merge(branch);
        else
          acc = std::move(branch);
      }
      sw = std::move(*acc);
      ++ci;
    }
    if (stats) *stats = {sw.peak_states(), d.layers.size()};
    return sw.result();
  }

  // pre-expansion: enumerate the mixed-radix choice space, split among threads
  std::size_t total = 1;
  for (const auto& row : placed) total *= row.size();
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(detail::thread_count(), total));
  std::vector<LaurentPoly> partial(threads);
  std::vector<std::size_t> peaks(threads, 0);
  auto work = [&](unsigned t) {
    const std::size_t lo = total * t / threads, hi = total * (t + 1) / threads;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      std::size_t rest = idx;
      LaurentPoly coef = LaurentPoly::constant(1);
      LayeredDiagram g{DiagramKind::graph, d.N, {}};
      std::vector<int> choice(placed.size());
      for (std::size_t c = placed.size(); c-- > 0;) {
        choice[c] = static_cast<int>(rest % placed[c].size());
        rest /= placed[c].size();
      }
      std::size_t ci = 0;
      for (const auto& e : d.layers) {
        if (std::holds_alternative<Crossing>(e)) {
          const auto& [cf, evs] = placed[ci][choice[ci]];
          coef *= cf;
          g.layers.insert(g.layers.end(), evs.begin(), evs.end());
          ++ci;
        } else {
          g.layers.push_back(e);
        }
      }
      EvalStats st;
      partial[t] += coef * bracket(g, N, &st);
      peaks[t] = std::max(peaks[t], st.peak_states);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  LaurentPoly sum;
  for (const auto& p : partial) sum += p;
  if (stats) *stats = {*std::max_element(peaks.begin(), peaks.end()), d.layers.size()};
  return sum;
}

/// Oracle: every complete resolution evaluated by full state enumeration.
inline LaurentPoly bracket_link_naive(const LayeredDiagram& d, int N) {
  require_valid(d);
  const auto cs = crossings(d);
  const auto placed = detail::placed_resolutions(cs);
  std::vector<int> choice(cs.size(), 0);
  LaurentPoly sum;
  while (true) {
    LaurentPoly coef = LaurentPoly::constant(1);
    for (std::size_t c = 0; c < cs.size(); ++c) coef *= placed[c][choice[c]].first;
    sum += coef * bracket_naive(resolve_diagram(d, choice), N);
    std::size_t c = 0;
    for (; c < cs.size(); ++c) {
      if (++choice[c] < static_cast<int>(placed[c].size())) break;
      choice[c] = 0;
    }
    if (c == cs.size()) return sum;
  }
}

inline LaurentPoly shift_product(const LayeredDiagram& d, int N) {
  LaurentPoly s = LaurentPoly::constant(1);
  for (const auto& c : crossings(d)) s *= shift_factor(c.m, c.n, c.sign, N);
  return s;
}

/// RT_D(q) = <D>_N times the product of the shift factors.
inline LaurentPoly rt_polynomial(const LayeredDiagram& d, int N, LinkEngine engine = LinkEngine::expand) {
  return bracket_link(d, N, engine) * shift_product(d, N);
}

/// Sum over components of the component color. Strands pass straight through crossings.
inline int total_color(const LayeredDiagram& d) {
  require_valid(d);
  if (has_vertices(d)) throw std::invalid_argument("total_color: diagram has vertices");
  std::vector<int> parent, color;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> row;
  for (const auto& ev : d.layers) {
    if (const auto* e = std::get_if<Cup>(&ev)) {
      parent.push_back(static_cast<int>(parent.size()));
      color.push_back(e->color);
      const int id = parent.back();
      row.insert(row.begin() + e->pos, {id, id});
    } else if (const auto* e = std::get_if<Cap>(&ev)) {
      const int a = find(row[e->pos]), b = find(row[e->pos + 1]);
      if (a != b) parent[b] = a;
      row.erase(row.begin() + e->pos, row.begin() + e->pos + 2);
    } else if (const auto* e = std::get_if<Crossing>(&ev)) {
      std::swap(row[e->pos], row[e->pos + 1]);
    }
  }
  int tc = 0;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i)
    if (find(i) == i) tc += color[i];
  return tc;
}

/// a(c) = m when both crossing colors equal m, else 0.
inline int adjustment_term(const CrossingInfo& c) { return c.m == c.n ? c.m : 0; }

/// cr of the minimal resolution plus the adjustment terms.
inline int adjusted_rotation(const LayeredDiagram& d) {
  int a = 0;
  for (const auto& c : crossings(d)) a += adjustment_term(c);
  return colored_rotation_number(resolve_diagram(d, minimal_choice(d))) + a;
}

/// cr of every complete resolution (for the independence check).
inline std::set<int> rotation_numbers_over_resolutions(const LayeredDiagram& d) {
  const auto cs = crossings(d);
  std::vector<int> radix;
  for (const auto& c : cs) radix.push_back(static_cast<int>(resolve_crossing(c.m, c.n, c.sign).size()));
  std::set<int> out;
  std::vector<int> choice(cs.size(), 0);
  while (true) {
    out.insert(colored_rotation_number(resolve_diagram(d, choice)));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == radix[i]) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reidemeister pairs

enum class Move { R1pos, R1neg, R2a, R2b, R3 };

inline std::string move_name(Move m) {
  switch (m) {
    case Move::R1pos: return "R1+";
    case Move::R1neg: return "R1-";
    case Move::R2a: return "R2a";
    case Move::R2b: return "R2b";
    case Move::R3: return "R3";
  }
  return "?";
}

struct ReidemeisterPair {
  std::string label;
  LayeredDiagram d0, d1;
  bool regular = true;  ///< R2/R3: the bracket itself is invariant
};

namespace detail {

inline LayeredDiagram close_link(const TangleBuilder& b) { return close_nested_right(b.finish(), DiagramKind::link); }

inline std::string colors_label(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace detail

/// Diagram pairs one move apart. Every variant is also returned mirrored.
inline std::vector<ReidemeisterPair> reidemeister_pairs(Move move, const std::vector<int>& colors) {
  for (int c : colors)
    if (c < 1) throw std::invalid_argument("reidemeister_pairs: colors must be positive");
  std::vector<ReidemeisterPair> out;
  const std::string base = move_name(move) + " " + detail::colors_label(colors);
  auto push = [&](const std::string& what, LayeredDiagram d0, LayeredDiagram d1, bool regular) {
    out.push_back({base + " " + what, d0, d1, regular});
    out.push_back({base + " " + what + " mirrored", mirror(d0), mirror(d1), regular});
  };
  auto need = [&](std::size_t k) {
    if (colors.size() != k) throw std::invalid_argument("reidemeister_pairs: " + move_name(move) + " takes " + std::to_string(k) + " colors");
  };
  switch (move) {
    case Move::R1pos:
    case Move::R1neg: {
      need(1);
      const int m = colors[0];
      const Sign s = move == Move::R1pos ? Sign::positive : Sign::negative;
      const Profile bottom{Strand{m, true}};
      TangleBuilder kink(bottom);
      kink.cup(1, m, Side::left).crossing(0, s).cap(1, Side::left);
      push("kink", detail::close_link(kink), detail::close_link(TangleBuilder(bottom)), false);
      break;
    }
    case Move::R2a: {
      need(2);
      const Profile bottom{Strand{colors[0], true}, Strand{colors[1], true}};
      for (Sign first : {Sign::positive, Sign::negative}) {
        TangleBuilder b(bottom);
        b.crossing(0, first).crossing(0, flip(first));
        push(first == Sign::positive ? "+-" : "-+", detail::close_link(b), detail::close_link(TangleBuilder(bottom)),
             true);
      }
      break;
    }
    case Move::R2b: {
      need(2);
      const int m = colors[0], n = colors[1];
      const Profile bottom{Strand{m, true}, Strand{n, false}};
      for (Sign first : {Sign::positive, Sign::negative}) {
        TangleBuilder b(bottom);
        b.cup(0, n, Side::right).crossing(1, first).cap(2, Side::left);
        b.cup(2, n, Side::left).crossing(1, flip(first)).cap(0, Side::right);
        push(first == Sign::positive ? "+-" : "-+", detail::close_link(b), detail::close_link(TangleBuilder(bottom)),
             true);
      }
      break;
    }
    case Move::R3: {
      need(3);
      const Profile bottom{Strand{colors[0], true}, Strand{colors[1], true}, Strand{colors[2], true}};
      using Word = std::vector<std::pair<int, Sign>>;
      const Sign P = Sign::positive, M = Sign::negative;
      const std::vector<std::tuple<std::string, Word, Word>> cases = {
          {"+++", {{0, P}, {1, P}, {0, P}}, {{1, P}, {0, P}, {1, P}}},
          {"---", {{0, M}, {1, M}, {0, M}}, {{1, M}, {0, M}, {1, M}}},
          {"++-", {{0, P}, {1, P}, {0, M}}, {{1, M}, {0, P}, {1, P}}},
      };
      // shared suffix s1 s2 s1 returns each strand to its starting slot
      const Word suffix = {{0, P}, {1, P}, {0, P}};
      for (const auto& [name, w0, w1] : cases) {
        TangleBuilder b0(bottom), b1(bottom);
        for (const auto& [p, s] : w0) b0.crossing(p, s);
        for (const auto& [p, s] : w1) b1.crossing(p, s);
        for (const auto& [p, s] : suffix) {
          b0.crossing(p, s);
          b1.crossing(p, s);
        }
        push(name, detail::close_link(b0), detail::close_link(b1), true);
      }
      break;
    }
  }
  return out;
}

}  // namespace moyrt
