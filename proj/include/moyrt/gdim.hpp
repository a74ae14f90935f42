// Closed-form graded dimensions (in q and tau, tau^2 = 1) of the pieces of
// two decompositions, and the identities relating them.
#pragma once

#include "qalg.hpp"

#include <stdexcept>
#include <string>

namespace moyrt {

struct GradedDim {
  TauPoly value;
  friend bool operator==(const GradedDim&, const GradedDim&) = default;
  std::string to_string() const { return value.to_string(); }
};

struct GradedTriple {
  GradedDim gamma, gamma0, gamma1;
};

namespace detail {

inline TauPoly tq(int q_exp) { return TauPoly({}, LaurentPoly::q(q_exp)); }
inline TauPoly one_plus_tau_q(int e) { return TauPoly::scalar(LaurentPoly::constant(1)) + tq(e); }

/// prod_{j=1}^{upto} (1 + tau q^{2j-N-1}); empty product for upto <= 0.
inline TauPoly tau_product(int upto, int N) {
  TauPoly p = TauPoly::scalar(LaurentPoly::constant(1));
  for (int j = 1; j <= upto; ++j) p = p * one_plus_tau_q(2 * j - N - 1);
  return p;
}

/// [a choose k] extended to a = -1 by [-1 choose 0] = 1 (only that case is needed).
inline LaurentPoly binom_ext(int a, int k) {
  if (k < 0) return {};
  if (a < 0) return k == 0 ? LaurentPoly::constant(1) : LaurentPoly{};
  return quantum_binomial(a, k);
}

}  // namespace detail

/// tau^m [N choose m]
inline GradedDim gdim_circle(int m, int N) {
  if (m < 0 || m > N) throw std::invalid_argument("gdim_circle: need 0 <= m <= N");
  return {TauPoly::tau_power(m, quantum_binomial(N, m))};
}

inline GradedTriple gdim_decomp3(int m, int N) {
  if (m < 1 || m > N - 1) throw std::invalid_argument("gdim_decomp3: need 1 <= m <= N-1");
  using namespace detail;
  const TauPoly P = tau_product(m, N);
  const LaurentPoly qm = LaurentPoly::q(-m);
  GradedTriple t;
  t.gamma.value = TauPoly::tau() * (qm * quantum_int(N - m)) * one_plus_tau_q(2 * m - N + 1) * P;
  t.gamma0.value = one_plus_tau_q(1 - N) * P;
  t.gamma1.value = LaurentPoly::q(1 - m) * one_plus_tau_q(2 * m - N - 1) * P;
  return t;
}

/// gdim Gamma = gdim Gamma0 + tau [N-m-1] gdim Gamma1
inline bool check_decomp3_identity(int m, int N) {
  const auto t = gdim_decomp3(m, N);
  return t.gamma.value == t.gamma0.value + TauPoly::tau() * quantum_int(N - m - 1) * t.gamma1.value;
}

inline bool decomp4_admissible(int l, int m, int n, int N) {
  return 0 <= n && n <= m && m <= N && l >= 0 && m + l - 1 <= N;
}

inline GradedTriple gdim_decomp4(int l, int m, int n, int N) {
  if (!decomp4_admissible(l, m, n, N))
    throw std::invalid_argument("gdim_decomp4: need 0 <= n <= m <= N, l >= 0, m + l - 1 <= N");
  using namespace detail;
  const TauPoly Q = tau_product(m + l - 1, N);
  GradedTriple t;
  t.gamma0.value = LaurentPoly::q(-l * m + m) * one_plus_tau_q(2 * l - N - 1) * Q;
  if (l + m <= N) {
    t.gamma1.value = LaurentPoly::q(-l * m) * tau_product(m + l, N);
    t.gamma.value =
        (LaurentPoly::q(-l * m + m - n) * quantum_binomial(m, n)) * one_plus_tau_q(2 * n + 2 * l - N - 1) * Q;
  } else {
    t.gamma1.value = TauPoly{};
    t.gamma.value = (LaurentPoly::q(-l * m + m) * binom_ext(m - 1, n)) * one_plus_tau_q(N + 1 - 2 * m) * Q;
  }
  return t;
}

/// gdim Gamma = [m-1 choose n] gdim Gamma0 + [m-1 choose n-1] gdim Gamma1
inline bool check_decomp4_identity(int l, int m, int n, int N) {
  const auto t = gdim_decomp4(l, m, n, N);
  using detail::binom_ext;
  return t.gamma.value == binom_ext(m - 1, n) * t.gamma0.value + binom_ext(m - 1, n - 1) * t.gamma1.value;
}

}  // namespace moyrt
