// Verification suites: each runs one family of identities over a parameter
// grid and reports every checked tuple.
#pragma once

#include "gdim.hpp"
#include "links.hpp"
#include "partition.hpp"
#include "qalg.hpp"
#include "random.hpp"
#include "samples.hpp"
#include "skein.hpp"
#include "state_sum.hpp"
#include "symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace moyrt {

struct CheckItem {
  std::string label;
  bool ok = false;
  std::string detail;  ///< filled on failure
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckItem> items;

  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return !c.ok; }));
  }
  void add(std::string label, bool ok, std::string detail = {}) {
    items.push_back({std::move(label), ok, ok ? std::string{} : std::move(detail)});
  }
};

using Bounds = std::map<std::string, int>;

inline int bound(const Bounds& b, const std::string& key, int fallback) {
  auto it = b.find(key);
  return it == b.end() ? fallback : it->second;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"skein", "symfunc", "gdim", "reidemeister", "parity", "oracle"};
  return names;
}

// ---------------------------------------------------------------------------

/// Keys: N (relations 2-7, default 4), N1 (relation 1, default 5), colors (largest parameter, default no limit).
inline SuiteReport verify_skein(const Bounds& b) {
  SuiteReport r{"skein", {}};
  const int cap = bound(b, "colors", 1 << 20);
  for (int id = 1; id <= 7; ++id) {
    const int maxN = id == 1 ? bound(b, "N1", bound(b, "N", 5)) : bound(b, "N", 4);
    for (const auto& base : relation_grid(id, maxN)) {
      if (std::max({base.i, base.j, base.k, base.l, base.m, base.n}) > cap) continue;
      for (bool rev : {false, true}) {
        RelationParams p = base;
        p.reversed = rev;
        const auto c = evaluate_relation(id, p);
        r.add(p.to_string(id), c.holds, "lhs " + c.lhs.to_string() + " rhs " + c.rhs.to_string());
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

/// Keys: trials (random alphabets per check, default 3).
inline SuiteReport verify_symfunc(const Bounds& b, std::uint64_t seed) {
  SuiteReport r{"symfunc", {}};
  std::mt19937_64 rng(seed);
  const int trials = bound(b, "trials", 3);
  auto alphabets = [&](std::size_t size) {
    std::vector<Alphabet> out;
    for (int t = 0; t < trials; ++t) out.push_back(random_alphabet(size, rng));
    return out;
  };

  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      const auto a = quantum_binomial(m + n, n), c = quantum_binomial_partition_sum(m, n);
      r.add("quantum binomial m=" + std::to_string(m) + " n=" + std::to_string(n), a == c, a.to_string() + " vs " + c.to_string());
    }

  for (std::size_t size : {3u, 4u})
    for (const auto& A : alphabets(size))
      for (const auto& lam : partitions_in_box(3, 3)) {
        const Rational x = schur_eval(lam, A, SchurRoute::bialternant);
        const Rational y = schur_eval(lam, A, SchurRoute::jacobi_trudi_h);
        const Rational z = schur_eval(lam, A, SchurRoute::jacobi_trudi_e);
        r.add("schur routes " + lam.to_string() + " |A|=" + std::to_string(size), x == y && y == z,
              x.str() + " / " + y.str() + " / " + z.str());
        Alphabet neg = A;
        for (auto& v : neg) v = -v;
        const Rational s = schur_neg_eval(lam, A), t = schur_eval(lam.conjugate(), neg, SchurRoute::jacobi_trudi_h);
        r.add("negative schur " + lam.to_string() + " |A|=" + std::to_string(size), s == t, s.str() + " vs " + t.str());
      }

  const auto kostka_alphabets = alphabets(4);
  for (int size = 0; size <= 6; ++size)
    for (const auto& lam : partitions_of(size, size, size)) {
      bool ok = true;
      std::string detail;
      for (const auto& A : kostka_alphabets) {
        Rational rhs = 0;
        for (const auto& mu : partitions_of(size, size, size))
          if (const auto k = kostka(mu, lam)) rhs += Rational(static_cast<long long>(k)) * schur_eval(mu, A, SchurRoute::jacobi_trudi_h);
        const Rational lhs = complete_product_eval(lam, A);
        if (lhs != rhs) {
          ok = false;
          detail = lhs.str() + " vs " + rhs.str();
        }
      }
      r.add("kostka expansion " + lam.to_string(), ok, detail);
      bool tri = kostka(lam, lam) == 1;
      for (const auto& mu : partitions_of(size, size, size))
        if (lam > mu && kostka(mu, lam) != 0) tri = false;
      r.add("kostka triangularity " + lam.to_string(), tri, "nonzero below the diagonal");
    }

  for (int l = 1; l <= 8; ++l)
    for (std::size_t size = 1; size <= 5; ++size)
      for (const auto& A : alphabets(size)) {
        const Rational res = newton_identity_residual(l, A);
        r.add("newton l=" + std::to_string(l) + " |A|=" + std::to_string(size), res == 0, "residual " + res.str());
      }

  for (int k = 1; k <= 8; ++k)
    for (const auto& A : alphabets(4)) {
      const auto e = elementary_values(k, A);
      const Rational h = h_from_e_determinant(k, e), p = p_from_e_determinant(k, e);
      r.add("e-determinants k=" + std::to_string(k), h == complete_eval(k, A) && p == power_eval(k, A),
            "h " + h.str() + " p " + p.str());
    }

  const auto pieri_alphabets = alphabets(5);
  for (int k = 1; k <= 3; ++k)
    for (int size = 0; size <= 5; ++size)
      for (const auto& lam : partitions_of(size, size, size)) {
        bool ok = true;
        for (const auto& A : pieri_alphabets) {
          Rational rhs = 0;
          for (const auto& mu : pieri_e(k, lam)) rhs += schur_eval(mu, A, SchurRoute::jacobi_trudi_h);
          if (elementary_eval(k, A) * schur_eval(lam, A, SchurRoute::jacobi_trudi_h) != rhs) ok = false;
        }
        r.add("pieri k=" + std::to_string(k) + " " + lam.to_string(), ok, "e_k s_lambda differs from the strip sum");
      }

  for (int m = 1; m <= 3; ++m)
    for (int l = 1; l <= 5; ++l)
      for (int j = 1; j <= m; ++j)
        r.add("power derivative m=" + std::to_string(m) + " l=" + std::to_string(l) + " j=" + std::to_string(j),
              power_derivative_check(m, l, j), "derivative mismatch");

  for (int N = 0; N <= 6; ++N)
    for (int m = 0; m <= N; ++m) {
      const auto p = grassmannian_poincare(m, N);
      const auto want = LaurentPoly::q(m * (N - m)) * quantum_binomial(N, m);
      const std::string tag = " m=" + std::to_string(m) + " N=" + std::to_string(N);
      r.add("grassmannian poincare" + tag, p == want, p.to_string() + " vs " + want.to_string());
      r.add("grassmannian pairing" + tag, grassmannian_pairing_is_perfect(m, N), "trace matrix is not a permutation");
      bool comp = true;
      for (const auto& lam : grassmannian_basis(m, N))
        if (grassmannian_trace(lam, lam.box_complement(m, N - m), m, N) != 1) comp = false;
      r.add("grassmannian complement" + tag, comp, "complement does not pair to 1");
    }

  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      LaurentPoly s;
      for (const auto& lam : partitions_in_box(m, n)) s += LaurentPoly::q(2 * lam.size());
      const auto want = LaurentPoly::q(m * n) * quantum_binomial(m + n, n);
      r.add("box generating function m=" + std::to_string(m) + " n=" + std::to_string(n), s == want,
            s.to_string() + " vs " + want.to_string());
    }
  return r;
}

// ---------------------------------------------------------------------------

/// Keys: N (default 6), circle_N (default 5).
inline SuiteReport verify_gdim(const Bounds& b) {
  SuiteReport r{"gdim", {}};
  const int maxN = bound(b, "N", 6);
  for (int N = 2; N <= maxN; ++N)
    for (int m = 1; m <= N - 1; ++m) {
      const auto t = gdim_decomp3(m, N);
      r.add("decomp3 m=" + std::to_string(m) + " N=" + std::to_string(N), check_decomp3_identity(m, N),
            "gamma " + t.gamma.to_string());
    }
  for (int N = 1; N <= maxN; ++N)
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= m; ++n)
        for (int l = 0; m + l - 1 <= N; ++l)
          r.add("decomp4 l=" + std::to_string(l) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                    " N=" + std::to_string(N),
                check_decomp4_identity(l, m, n, N), "identity fails");
  const int circleN = bound(b, "circle_N", 5);
  for (int N = 1; N <= circleN; ++N)
    for (int m = 0; m <= N; ++m) {
      const auto g = gdim_circle(m, N);
      const auto circ = samples::circle(m);
      const auto br = m == 0 ? LaurentPoly::constant(1) : bracket(circ, N);
      const std::string tag = " m=" + std::to_string(m) + " N=" + std::to_string(N);
      r.add("circle tau=1" + tag, g.value.substitute_tau_one() == br, g.to_string() + " vs " + br.to_string());
      const int parity = g.value.odd().is_zero() ? 0 : 1;
      const int cr = m == 0 ? 0 : colored_rotation_number(circ);
      r.add("circle tau parity" + tag, parity == ((cr % 2) + 2) % 2 && parity == m % 2, "parity mismatch");
    }
  return r;
}

// ---------------------------------------------------------------------------

struct ReidemeisterBounds {
  int N = 3;
  int colors = 2;
  int r1_N = 4;
  int r1_colors = 3;
  LinkEngine engine = LinkEngine::expand;
};

inline void check_pair(SuiteReport& r, const ReidemeisterPair& p, int N, LinkEngine engine) {
  const auto b0 = bracket_link(p.d0, N, engine), b1 = bracket_link(p.d1, N, engine);
  const auto t0 = b0 * shift_product(p.d0, N), t1 = b1 * shift_product(p.d1, N);
  const std::string tag = " N=" + std::to_string(N);
  r.add("rt " + p.label + tag, t0 == t1, t0.to_string() + " vs " + t1.to_string());
  if (p.regular) r.add("bracket " + p.label + tag, b0 == b1, b0.to_string() + " vs " + b1.to_string());
}

/// Keys: N, colors, r1_N, r1_colors, fused (0/1).
inline SuiteReport verify_reidemeister(const Bounds& b) {
  ReidemeisterBounds rb;
  rb.N = bound(b, "N", rb.N);
  rb.colors = bound(b, "colors", rb.colors);
  rb.r1_N = bound(b, "r1_N", rb.r1_N);
  rb.r1_colors = bound(b, "r1_colors", rb.r1_colors);
  rb.engine = bound(b, "fused", 0) ? LinkEngine::fused : LinkEngine::expand;
  SuiteReport r{"reidemeister", {}};
  for (int N = 1; N <= rb.r1_N; ++N)
    for (int m = 1; m <= rb.r1_colors; ++m)
      for (Move mv : {Move::R1pos, Move::R1neg})
        for (const auto& p : reidemeister_pairs(mv, {m})) check_pair(r, p, N, rb.engine);
  for (int N = 1; N <= rb.N; ++N)
    for (int a = 1; a <= rb.colors; ++a)
      for (int c = 1; c <= rb.colors; ++c) {
        for (Move mv : {Move::R2a, Move::R2b})
          for (const auto& p : reidemeister_pairs(mv, {a, c})) check_pair(r, p, N, rb.engine);
        for (int e = 1; e <= rb.colors; ++e)
          for (const auto& p : reidemeister_pairs(Move::R3, {a, c, e})) check_pair(r, p, N, rb.engine);
      }
  return r;
}

// ---------------------------------------------------------------------------

/// Keys: count (random links, default 100), small (links for the resolution-independence check, default 30).
inline SuiteReport verify_parity(const Bounds& b, std::uint64_t seed) {
  SuiteReport r{"parity", {}};
  std::mt19937_64 rng(seed);
  const int count = bound(b, "count", 100);
  for (int i = 0; i < count; ++i) {
    const auto d = random_link(rng);
    const int tc = total_color(d), cr = adjusted_rotation(d);
    r.add("parity link " + std::to_string(i) + " crossings=" + std::to_string(crossings(d).size()),
          ((cr - tc) % 2 + 2) % 2 == 0, "cr^=" + std::to_string(cr) + " tc=" + std::to_string(tc));
  }
  const int small = bound(b, "small", 30);
  RandomLinkOptions o;
  o.max_word = 3;
  o.max_color = 2;
  o.max_decorations = 1;
  for (int i = 0; i < small; ++i) {
    const auto d = random_link(rng, o);
    const auto values = rotation_numbers_over_resolutions(d);
    std::string seen;
    for (int v : values) seen += std::to_string(v) + " ";
    r.add("resolution independence " + std::to_string(i) + " crossings=" + std::to_string(crossings(d).size()),
          values.size() == 1, "cr values " + seen);
  }
  return r;
}

// ---------------------------------------------------------------------------

/// Hand-built and random closed graphs with at most 10 events.
inline std::vector<LayeredDiagram> oracle_corpus(std::size_t random_count, std::uint64_t seed) {
  std::vector<LayeredDiagram> out;
  for (int m = 1; m <= 3; ++m) {
    out.push_back(samples::circle(m));
    out.push_back(samples::circle(m, false));
  }
  out.push_back(samples::theta());
  out.push_back(reverse_orientation(samples::theta()));
  out.push_back(mirror(samples::theta()));
  out.push_back(disjoint_union(samples::circle(1), samples::circle(2)));
  for (int id : {3, 4, 5, 6, 7})
    for (const auto& p : relation_grid(id, 3)) {
      for (const auto& t : build_relation(id, p).lhs)
        if (t.diagram.layers.size() <= 10) out.push_back(t.diagram);
      if (out.size() >= 40) break;
    }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count;) {
    auto d = random_closed_graph(rng);
    if (!has_vertices(d)) continue;  // plain circles are already covered above
    out.push_back(std::move(d));
    ++i;
  }
  return out;
}

/// Keys: random (random graphs, default 40), N (default 4).
inline SuiteReport verify_oracle(const Bounds& b, std::uint64_t seed) {
  SuiteReport r{"oracle", {}};
  const int maxN = bound(b, "N", 4);
  const auto corpus = oracle_corpus(static_cast<std::size_t>(bound(b, "random", 40)), seed);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (int N = 1; N <= maxN; ++N) {
      const auto dp = bracket(corpus[i], N), naive = bracket_naive(corpus[i], N);
      r.add("diagram " + std::to_string(i) + " events=" + std::to_string(corpus[i].layers.size()) + " N=" + std::to_string(N),
            dp == naive, dp.to_string() + " vs " + naive.to_string());
    }
  return r;
}

inline SuiteReport run_suite(const std::string& name, const Bounds& b, std::uint64_t seed) {
  if (name == "skein") return verify_skein(b);
  if (name == "symfunc") return verify_symfunc(b, seed);
  if (name == "gdim") return verify_gdim(b);
  if (name == "reidemeister") return verify_reidemeister(b);
  if (name == "parity") return verify_parity(b, seed);
  if (name == "oracle") return verify_oracle(b, seed);
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace moyrt
