// The sl(N) state sum of a closed MOY graph.
//
// A state gives every edge of color c a c-element subset of the label set
// {-N+1, -N+3, ..., N-1}, disjointly split at each vertex. Its weight is the
// product of vertex weights q^{c1 c2 / 2 - pi(sigma(e1), sigma(e2))} times
// q^{rot(sigma)}. Subsets are bit masks: bit i stands for label 2i - N + 1.
// All exponents below are in half units (the key e is q^{e/2}).
#pragma once

#include "diagram.hpp"
#include "qalg.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace moyrt {

using Mask = std::uint32_t;
inline constexpr int kMaxN = 24;

/// Labels of {-N+1, ..., N-1} carried by a mask, ascending.
inline std::vector<int> mask_labels(Mask m, int N) {
  std::vector<int> out;
  for (int i = 0; i < N; ++i)
    if (m >> i & 1u) out.push_back(2 * i - N + 1);
  return out;
}

inline Mask labels_to_mask(const std::vector<int>& labels, int N) {
  Mask m = 0;
  for (int a : labels) {
    if ((a + N - 1) % 2 != 0 || a < -N + 1 || a > N - 1)
      throw std::invalid_argument("labels_to_mask: " + std::to_string(a) + " is not a label for N=" + std::to_string(N));
    const Mask bit = Mask{1} << ((a + N - 1) / 2);
    if (m & bit) throw std::invalid_argument("labels_to_mask: repeated label");
    m |= bit;
  }
  return m;
}

/// Sum of the labels in a mask.
inline int label_sum(Mask m, int N) {
  int s = 0;
  for (Mask r = m; r; r &= r - 1) s += 2 * std::countr_zero(r) - N + 1;
  return s;
}

/// #{(a, b) in A x B : a > b} on masks (label order equals bit order).
inline int pi_count(Mask a, Mask b) {
  int n = 0;
  for (Mask r = a; r; r &= r - 1) n += std::popcount(b & ((Mask{1} << std::countr_zero(r)) - 1));
  return n;
}

/// #{(a, b) in A x B : a > b} on explicit label sets.
inline int pi_count(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++n;
  return n;
}

/// c1*c2/2 - pi(A1, A2), in half units. A1 belongs to e1 (see vertex_e1_is_left).
inline int vertex_weight_exponent(int c1, int c2, Mask a1, Mask a2) {
  if (std::popcount(a1) != c1 || std::popcount(a2) != c2)
    throw std::invalid_argument("vertex_weight_exponent: subset sizes differ from colors");
  if (a1 & a2) throw std::invalid_argument("vertex_weight_exponent: overlapping subsets");
  return c1 * c2 - 2 * pi_count(a1, a2);
}

inline int vertex_weight_exponent(int c1, int c2, const std::vector<int>& a1, const std::vector<int>& a2) {
  if (static_cast<int>(a1.size()) != c1 || static_cast<int>(a2.size()) != c2)
    throw std::invalid_argument("vertex_weight_exponent: subset sizes differ from colors");
  for (int x : a1)
    for (int y : a2)
      if (x == y) throw std::invalid_argument("vertex_weight_exponent: overlapping subsets");
  return c1 * c2 - 2 * pi_count(a1, a2);
}

/// Turning of a cup or cap per unit label, in half units: +1 (i.e. +1/2) when
/// the up strand is on the right, -1 when it is on the left.
inline int turning_contribution(const Event& e) {
  if (const auto* c = std::get_if<Cup>(&e)) return c->up_side == Side::right ? 1 : -1;
  if (const auto* c = std::get_if<Cap>(&e)) return c->up_side == Side::right ? 1 : -1;
  throw std::invalid_argument("turning_contribution: only cups and caps turn");
}

/// At a vertex the edge e1 is the one on the left when facing along the flow
/// of the single edge: the planar-left strand for upward strands, the
/// planar-right strand for downward ones.
inline bool vertex_e1_is_left(bool strands_up) { return strands_up; }

/// Colored rotation number: sum over cups and caps of color * (+-1/2).
inline int colored_rotation_number(const LayeredDiagram& d) {
  require_valid(d);
  const auto profs = profiles(d);
  int half = 0;
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    const auto& e = d.layers[i];
    if (const auto* c = std::get_if<Cup>(&e))
      half += c->color * turning_contribution(e);
    else if (const auto* c = std::get_if<Cap>(&e))
      half += profs[i][c->pos].color * turning_contribution(e);
    else if (std::holds_alternative<Crossing>(e))
      throw std::invalid_argument("colored_rotation_number: resolve crossings first");
  }
  if (half % 2 != 0) throw std::logic_error("colored_rotation_number: odd total turning");
  return half / 2;
}

// ---------------------------------------------------------------------------
// sweep dynamic programme

using StateKey = std::vector<Mask>;
using StateMap = std::map<StateKey, LaurentPoly>;

struct EvalStats {
  std::size_t peak_states = 0;
  std::size_t layers = 0;
};

/// Bottom-to-top sweep. The state is the tuple of subsets on the current row
/// of strands; equal states are merged by adding their weights.
class Sweep {
 public:
  explicit Sweep(int N) : N_(N) {
    if (N < 1 || N > kMaxN) throw std::invalid_argument("Sweep: N out of range");
    by_size_.resize(N + 1);
    for (Mask m = 0; m < (Mask{1} << N); ++m) by_size_[std::popcount(m)].push_back(m);
    states_.emplace(StateKey{}, LaurentPoly::constant(1));
  }

  int N() const noexcept { return N_; }
  const Profile& profile() const noexcept { return profile_; }
  const StateMap& states() const noexcept { return states_; }
  std::size_t peak_states() const noexcept { return peak_; }

  void apply(const Event& ev) {
    if (std::holds_alternative<Crossing>(ev)) throw std::invalid_argument("Sweep: crossings must be resolved first");
    const Profile before = profile_;
    if (auto err = apply_event(profile_, ev)) throw std::invalid_argument("Sweep: " + *err);
    StateMap next;
    std::visit([&](const auto& e) { step(before, e, next); }, ev);
    states_ = std::move(next);
    peak_ = std::max(peak_, states_.size());
  }

  /// Multiplies every weight by p.
  void scale(const LaurentPoly& p) {
    for (auto it = states_.begin(); it != states_.end();) {
      it->second = it->second * p;
      it = it->second.is_zero() ? states_.erase(it) : std::next(it);
    }
  }

  /// Adds the states of another sweep over the same row of strands.
  void merge(const Sweep& o) {
    if (o.profile_ != profile_ || o.N_ != N_) throw std::invalid_argument("Sweep::merge: profiles differ");
    for (const auto& [k, v] : o.states_) add(states_, k, v, 0);
    peak_ = std::max({peak_, o.peak_, states_.size()});
  }

  /// Final value once the row is empty.
  LaurentPoly result() const {
    if (!profile_.empty()) throw std::invalid_argument("Sweep: diagram is not closed");
    auto it = states_.find(StateKey{});
    LaurentPoly r = it == states_.end() ? LaurentPoly{} : it->second;
    if (!r.is_integral()) throw std::logic_error("state sum produced half-integer exponents");
    return r;
  }

 private:
  static void add(StateMap& m, const StateKey& k, const LaurentPoly& w, int half_shift) {
    if (w.is_zero()) return;
    auto [it, inserted] = m.try_emplace(k, w.shifted(half_shift));
    if (!inserted) {
      it->second += w.shifted(half_shift);
      if (it->second.is_zero()) m.erase(it);
    }
  }

  const std::vector<Mask>& subsets(int c) const {
    static const std::vector<Mask> none;
    return c <= N_ ? by_size_[c] : none;
  }

  void step(const Profile&, const Cup& e, StateMap& next) const {
    const int turn = turning_contribution(e);
    for (const auto& [key, w] : states_)
      for (Mask s : subsets(e.color)) {
        StateKey k = key;
        k.insert(k.begin() + e.pos, {s, s});
        add(next, k, w, turn * label_sum(s, N_));
      }
  }

  void step(const Profile&, const Cap& e, StateMap& next) const {
    const int turn = turning_contribution(e);
    for (const auto& [key, w] : states_) {
      const Mask s = key[e.pos];
      if (key[e.pos + 1] != s) continue;
      StateKey k = key;
      k.erase(k.begin() + e.pos, k.begin() + e.pos + 2);
      add(next, k, w, turn * label_sum(s, N_));
    }
  }

  void step(const Profile& before, const Join& e, StateMap& next) const {
    const Strand& l = before[e.pos];
    const Strand& r = before[e.pos + 1];
    const bool e1_left = vertex_e1_is_left(l.up);
    for (const auto& [key, w] : states_) {
      const Mask a = key[e.pos], b = key[e.pos + 1];
      if (a & b) continue;
      const int wt = e1_left ? vertex_weight_exponent(l.color, r.color, a, b)
                             : vertex_weight_exponent(r.color, l.color, b, a);
      StateKey k = key;
      k[e.pos] = a | b;
      k.erase(k.begin() + e.pos + 1);
      add(next, k, w, wt);
    }
  }

  void step(const Profile& before, const Fork& e, StateMap& next) const {
    const bool e1_left = vertex_e1_is_left(before[e.pos].up);
    for (const auto& [key, w] : states_) {
      const Mask s = key[e.pos];
      for (Mask a = s;; a = (a - 1) & s) {
        if (std::popcount(a) == e.left_color) {
          const Mask b = s & ~a;
          const int wt = e1_left ? vertex_weight_exponent(e.left_color, e.right_color, a, b)
                                 : vertex_weight_exponent(e.right_color, e.left_color, b, a);
          StateKey k = key;
          k[e.pos] = a;
          k.insert(k.begin() + e.pos + 1, b);
          add(next, k, w, wt);
        }
        if (a == 0) break;
      }
    }
  }

  void step(const Profile&, const Crossing&, StateMap&) const {}

  int N_;
  std::vector<std::vector<Mask>> by_size_;
  Profile profile_;
  StateMap states_;
  std::size_t peak_ = 1;
};

inline void require_graph(const LayeredDiagram& d, const char* who) {
  require_valid(d);
  if (has_crossings(d)) throw std::invalid_argument(std::string(who) + ": diagram has crossings");
}

/// <Gamma>_N by the sweep.
inline LaurentPoly bracket(const LayeredDiagram& d, int N, EvalStats* stats = nullptr) {
  require_graph(d, "bracket");
  Sweep sw(N);
  for (const auto& e : d.layers) sw.apply(e);
  if (stats) *stats = {sw.peak_states(), d.layers.size()};
  return sw.result();
}

// ---------------------------------------------------------------------------
// naive enumeration over all states

namespace detail {

struct GraphEdges {
  std::vector<int> color;  // per edge class
  std::vector<int> turn;   // half-unit turning per unit label
  struct Vertex {
    int out, e1, e2;  // out is the single edge
  };
  std::vector<Vertex> vertices;
};

inline GraphEdges extract_edges(const LayeredDiagram& d) {
  std::vector<int> parent;
  std::vector<int> color;
  std::vector<int> turn;
  auto fresh = [&](int c) {
    parent.push_back(static_cast<int>(parent.size()));
    color.push_back(c);
    turn.push_back(0);
    return static_cast<int>(parent.size()) - 1;
  };
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  struct Raw {
    int out, e1, e2;
  };
  std::vector<Raw> raw;
  std::vector<int> row;  // edge id per strand
  Profile prof;
  for (const auto& ev : d.layers) {
    const Profile before = prof;
    if (auto err = apply_event(prof, ev)) throw std::invalid_argument(*err);
    if (const auto* e = std::get_if<Cup>(&ev)) {
      const int id = fresh(e->color);
      turn[id] += turning_contribution(ev);
      row.insert(row.begin() + e->pos, {id, id});
    } else if (const auto* e = std::get_if<Cap>(&ev)) {
      const int a = find(row[e->pos]), b = find(row[e->pos + 1]);
      if (a != b) {
        parent[b] = a;
        turn[a] += turn[b];
        turn[b] = 0;
      }
      turn[a] += turning_contribution(ev);
      row.erase(row.begin() + e->pos, row.begin() + e->pos + 2);
    } else if (const auto* e = std::get_if<Join>(&ev)) {
      const int l = row[e->pos], r = row[e->pos + 1];
      const int out = fresh(before[e->pos].color + before[e->pos + 1].color);
      raw.push_back(vertex_e1_is_left(before[e->pos].up) ? Raw{out, l, r} : Raw{out, r, l});
      row[e->pos] = out;
      row.erase(row.begin() + e->pos + 1);
    } else if (const auto* e = std::get_if<Fork>(&ev)) {
      const int in = row[e->pos];
      const int l = fresh(e->left_color), r = fresh(e->right_color);
      raw.push_back(vertex_e1_is_left(before[e->pos].up) ? Raw{in, l, r} : Raw{in, r, l});
      row[e->pos] = l;
      row.insert(row.begin() + e->pos + 1, r);
    } else {
      throw std::invalid_argument("bracket_naive: diagram has crossings");
    }
  }
  // compress classes
  std::map<int, int> index;
  GraphEdges g;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
    const int r = find(i);
    if (index.try_emplace(r, static_cast<int>(g.color.size())).second) {
      g.color.push_back(color[r]);
      g.turn.push_back(0);
    }
  }
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) g.turn[index[find(i)]] += turn[i];
  for (const auto& v : raw) g.vertices.push_back({index[find(v.out)], index[find(v.e1)], index[find(v.e2)]});
  return g;
}

}  // namespace detail

/// <Gamma>_N by enumerating every state.
inline LaurentPoly bracket_naive(const LayeredDiagram& d, int N) {
  require_graph(d, "bracket_naive");
  if (N < 1 || N > kMaxN) throw std::invalid_argument("bracket_naive: N out of range");
  const detail::GraphEdges g = detail::extract_edges(d);
  const int E = static_cast<int>(g.color.size());
  for (int c : g.color)
    if (c > N) return {};

  std::vector<std::vector<Mask>> by_size(N + 1);
  for (Mask m = 0; m < (Mask{1} << N); ++m) by_size[std::popcount(m)].push_back(m);

  // each vertex is checked once its highest-numbered edge is assigned
  std::vector<std::vector<int>> check_at(E);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const auto& x = g.vertices[v];
    check_at[std::max({x.out, x.e1, x.e2})].push_back(v);
  }

  std::vector<Mask> sigma(E, 0);
  LaurentPoly total;
  std::function<void(int, int)> rec = [&](int e, int half) {
    if (e == E) {
      total += LaurentPoly::monomial_half(1, half);
      return;
    }
    for (Mask s : by_size[g.color[e]]) {
      sigma[e] = s;
      int h = half + g.turn[e] * label_sum(s, N);
      bool ok = true;
      for (int v : check_at[e]) {
        const auto& x = g.vertices[v];
        const Mask a = sigma[x.e1], b = sigma[x.e2];
        if ((a & b) || (a | b) != sigma[x.out]) {
          ok = false;
          break;
        }
        h += vertex_weight_exponent(g.color[x.e1], g.color[x.e2], a, b);
      }
      if (ok) rec(e + 1, h);
    }
  };
  rec(0, 0);
  if (!total.is_integral()) throw std::logic_error("state sum produced half-integer exponents");
  return total;
}

}  // namespace moyrt
