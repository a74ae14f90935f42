// The seven local relations satisfied by the sl(N) bracket, realised as pairs
// of closed diagrams so that both sides can be evaluated and compared.
//
// Each local picture is a tangle. Tangles whose top and bottom boundaries
// already agree are closed by nested arcs on the right. The others (relations
// 2, 6 and 7) first get a common reducer on top that brings the top boundary
// back to the bottom one. Every term of a relation shares the same closure.
#pragma once

#include "builder.hpp"
#include "qalg.hpp"
#include "state_sum.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace moyrt {

struct RelationParams {
  int N = 2;
  int i = 0, j = 0, k = 0, l = 0, m = 0, n = 0;
  bool reversed = false;  ///< reverse the orientation of every diagram

  std::string to_string(int relation) const {
    std::ostringstream os;
    os << "relation " << relation << " N=" << N;
    switch (relation) {
      case 1: os << " m=" << m; break;
      case 2: os << " i=" << i << " j=" << j << " k=" << k; break;
      case 3:
      case 4: os << " m=" << m << " n=" << n; break;
      case 5: os << " m=" << m; break;
      case 6: os << " l=" << l << " m=" << m << " n=" << n; break;
      case 7: os << " k=" << k << " l=" << l << " m=" << m << " n=" << n; break;
      default: break;
    }
    if (reversed) os << " reversed";
    return os.str();
  }
};

struct RelationTerm {
  LaurentPoly coeff;
  LayeredDiagram diagram;
};

struct Relation {
  std::vector<RelationTerm> lhs;
  std::vector<RelationTerm> rhs;
};

namespace detail {

inline Strand up(int c) { return {c, true}; }
inline Strand down(int c) { return {c, false}; }

inline RelationTerm term(LaurentPoly c, LayeredDiagram d) { return {std::move(c), std::move(d)}; }

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("build_relation: ") + what);
}

}  // namespace detail

/// Both sides of relation `id` (1..7) as weighted closed diagrams.
inline Relation build_relation(int id, const RelationParams& p) {
  using detail::require;
  using detail::term;
  using detail::up;
  const LaurentPoly one = LaurentPoly::constant(1);
  const int N = p.N;
  require(N >= 1, "N must be positive");
  Relation rel;

  // Closes `b` after applying `reduce` (which may be empty) on top.
  auto close = [](TangleBuilder b, auto reduce) {
    reduce(b);
    return close_nested_right(b.finish());
  };
  auto none = [](TangleBuilder&) {};

  switch (id) {
    case 1: {
      require(p.m >= 0 && p.m <= N, "need 0 <= m <= N");
      TangleBuilder b;
      b.cup(0, p.m, Side::right).cap(0, Side::right);
      rel.lhs.push_back(term(one, close(b, none)));
      rel.rhs.push_back(term(quantum_binomial(N, p.m), LayeredDiagram{}));
      break;
    }
    case 2: {
      require(p.i >= 1 && p.j >= 1 && p.k >= 1, "need i, j, k >= 1");
      const Profile bottom{up(p.i + p.j + p.k)};
      auto reduce = [](TangleBuilder& b) { b.join(1).join(0); };
      TangleBuilder l(bottom), r(bottom);
      l.fork(0, p.i, p.j + p.k).fork(1, p.j, p.k);
      r.fork(0, p.i + p.j, p.k).fork(0, p.i, p.j);
      rel.lhs.push_back(term(one, close(l, reduce)));
      rel.rhs.push_back(term(one, close(r, reduce)));
      break;
    }
    case 3: {
      require(p.m >= 1 && p.n >= 1, "need m, n >= 1");
      const Profile bottom{up(p.m)};
      TangleBuilder l(bottom);
      l.cup(1, p.n, Side::left).join(0).fork(0, p.m, p.n).cap(1, Side::left);
      rel.lhs.push_back(term(one, close(l, none)));
      rel.rhs.push_back(term(quantum_binomial(std::max(N - p.m, 0), p.n), close(TangleBuilder(bottom), none)));
      break;
    }
    case 4: {
      require(p.m >= 1 && p.n >= 1, "need m, n >= 1");
      const Profile bottom{up(p.m + p.n)};
      TangleBuilder l(bottom);
      l.fork(0, p.m, p.n).join(0);
      rel.lhs.push_back(term(one, close(l, none)));
      rel.rhs.push_back(term(quantum_binomial(p.m + p.n, p.n), close(TangleBuilder(bottom), none)));
      break;
    }
    case 5: {
      require(p.m >= 1 && p.m + 1 <= N, "need 1 <= m and m + 1 <= N");
      const int m = p.m;
      const Profile bottom{up(1), detail::down(m)};
      TangleBuilder l(bottom);
      l.cup(0, m, Side::right).join(1).fork(1, 1, m).cap(2, Side::left);
      l.cup(2, m, Side::left).join(1).fork(1, m, 1).cap(0, Side::right);
      TangleBuilder r2(bottom);
      r2.cup(0, m - 1, Side::right).join(1).cap(1, Side::left);
      r2.cup(1, m, Side::left).fork(1, m - 1, 1).cap(0, Side::right);
      rel.lhs.push_back(term(one, close(l, none)));
      rel.rhs.push_back(term(one, close(TangleBuilder(bottom), none)));
      rel.rhs.push_back(term(quantum_int(N - m - 1), close(r2, none)));
      break;
    }
    case 6: {
      const int l = p.l, m = p.m, n = p.n;
      require(l >= 1 && m >= 1 && n >= 0 && n <= m, "need l >= 1, m >= 1, 0 <= n <= m");
      const Profile bottom{up(1), up(m + l - 1)};
      auto reduce = [=](TangleBuilder& b) { b.join(0).fork(0, 1, m + l - 1); };
      TangleBuilder lhs(bottom), r1(bottom), r2(bottom);
      lhs.fork(1, l + n - 1, m - n).join(0).fork(0, l, n).join(1);
      r1.fork(1, l - 1, m).join(0);
      r2.join(0).fork(0, l, m);
      rel.lhs.push_back(term(one, close(lhs, reduce)));
      rel.rhs.push_back(term(quantum_binomial(m - 1, n), close(r1, reduce)));
      if (n >= 1) rel.rhs.push_back(term(quantum_binomial(m - 1, n - 1), close(r2, reduce)));
      break;
    }
    case 7: {
      const int k = p.k, l = p.l, m = p.m, n = p.n;
      require(m >= 1 && n >= 1 && l >= 0, "need m, n >= 1 and l >= 0");
      require(k >= std::max(m - n, 0) && k <= m + l, "need max(m - n, 0) <= k <= m + l");
      const Profile bottom{up(n), up(m + l)};
      auto reduce = [=](TangleBuilder& b) { b.join(0).fork(0, n, m + l); };
      TangleBuilder lhs(bottom);
      lhs.fork(1, k, m + l - k).join(0).fork(0, m, n + k - m).join(1);
      rel.lhs.push_back(term(one, close(lhs, reduce)));
      for (int j = std::max(m - n, 0); j <= m; ++j) {
        const int kj = k - j;
        if (kj < 0 || kj > l) continue;
        TangleBuilder r(bottom);
        r.fork(0, m - j, n + j - m).join(1).fork(1, j, n + l).join(0);
        rel.rhs.push_back(term(quantum_binomial(l, kj), close(r, reduce)));
      }
      break;
    }
    default:
      throw std::invalid_argument("build_relation: relation id must be 1..7");
  }
  if (p.reversed) {
    for (auto* side : {&rel.lhs, &rel.rhs})
      for (auto& t : *side) t.diagram = reverse_orientation(t.diagram);
  }
  return rel;
}

inline LaurentPoly evaluate_side(const std::vector<RelationTerm>& side, int N) {
  LaurentPoly s;
  for (const auto& t : side) s += t.coeff * bracket(t.diagram, N);
  return s;
}

struct RelationCheck {
  bool holds = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

inline RelationCheck evaluate_relation(int id, const RelationParams& p) {
  const Relation rel = build_relation(id, p);
  RelationCheck c{false, evaluate_side(rel.lhs, p.N), evaluate_side(rel.rhs, p.N)};
  c.holds = c.lhs == c.rhs;
  return c;
}

inline bool check_relation(int id, const RelationParams& p) { return evaluate_relation(id, p).holds; }

/// The parameter tuples of relation `id` with N <= max_N (orientation not included).
inline std::vector<RelationParams> relation_grid(int id, int max_N) {
  std::vector<RelationParams> out;
  for (int N = 1; N <= max_N; ++N) {
    switch (id) {
      case 1:
        for (int m = 0; m <= N; ++m) out.push_back({.N = N, .m = m});
        break;
      case 2:
        for (int i = 1; i <= N; ++i)
          for (int j = 1; i + j <= N; ++j)
            for (int k = 1; i + j + k <= N; ++k) out.push_back({.N = N, .i = i, .j = j, .k = k});
        break;
      case 3:
      case 4:
        for (int m = 1; m <= N; ++m)
          for (int n = 1; m + n <= N; ++n) out.push_back({.N = N, .m = m, .n = n});
        break;
      case 5:
        for (int m = 1; m + 1 <= N; ++m) out.push_back({.N = N, .m = m});
        break;
      case 6:
        for (int m = 1; m <= N + 1; ++m)
          for (int l = 1; m + l - 1 <= N; ++l)
            for (int n = 0; n <= m; ++n) out.push_back({.N = N, .l = l, .m = m, .n = n});
        break;
      case 7:
        for (int m = 1; m <= N; ++m)
          for (int n = 1; n <= N; ++n)
            for (int l = 0; m + l <= N && n + l <= N; ++l)
              for (int k = std::max(m - n, 0); k <= m + l; ++k) out.push_back({.N = N, .k = k, .l = l, .m = m, .n = n});
        break;
      default:
        throw std::invalid_argument("relation_grid: relation id must be 1..7");
    }
  }
  return out;
}

/// Default N bound of each relation's grid.
inline int relation_default_max_N(int id) { return id == 1 ? 5 : 4; }

}  // namespace moyrt
