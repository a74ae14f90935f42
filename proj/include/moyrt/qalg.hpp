// Exact Laurent polynomials in q (with q^{1/2} resolution), the tau-extension
// with tau^2 = 1, and quantum integers / binomials.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moyrt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer-coefficient Laurent polynomial in q^{1/2}.
///
/// Exponents are stored in half units: the key e stands for q^{e/2}. No stored
/// coefficient is ever zero, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& c) { return monomial_half(c, 0); }

  /// c * q^{half_exp/2}
  static LaurentPoly monomial_half(const BigInt& c, int half_exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(half_exp, c);
    return p;
  }

  /// c * q^{exp}
  static LaurentPoly monomial(const BigInt& c, int exp) { return monomial_half(c, 2 * exp); }

  /// q^{exp}
  static LaurentPoly q(int exp = 1) { return monomial(1, exp); }

  static LaurentPoly from_terms(Terms terms) {
    LaurentPoly p;
    for (auto& [e, c] : terms)
      if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// True iff every exponent is a whole power of q.
  bool is_integral() const {
    for (const auto& [e, c] : terms_)
      if (e % 2 != 0) return false;
    return true;
  }

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Coefficient of q^{half_exp/2}.
  BigInt coeff_half(int half_exp) const {
    auto it = terms_.find(half_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Coefficient of q^{exp}.
  BigInt coeff(int exp) const { return coeff_half(2 * exp); }

  int min_half_exponent() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
    return terms_.begin()->first;
  }
  int max_half_exponent() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
    return terms_.rbegin()->first;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& s) {
    if (s == 0) return {};
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by q^{half_units/2}.
  LaurentPoly shifted(int half_units) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + half_units, c);
    return r;
  }

  /// q -> q^{-1}
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Exact quotient; throws if the divisor does not divide this polynomial.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlo = divisor.min_half_exponent();
    const int dhi = divisor.max_half_exponent();
    const BigInt& lead = divisor.terms_.rbegin()->second;
    while (!rem.is_zero()) {
      if (rem.max_half_exponent() - rem.min_half_exponent() < dhi - dlo)
        throw std::domain_error("LaurentPoly: inexact division");
      const auto& [re, rc] = *rem.terms_.rbegin();
      if (rc % lead != 0) throw std::domain_error("LaurentPoly: inexact division");
      LaurentPoly t = monomial_half(rc / lead, re - dhi);
      quot += t;
      rem -= t * divisor;
    }
    return quot;
  }

  /// Exact value at a rational point; only defined for integral polynomials.
  Rational evaluate_at(const Rational& q0) const {
    if (!is_integral()) throw std::domain_error("evaluate_at: polynomial has half-integer exponents");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      const int k = e / 2;
      if (k < 0 && q0 == 0) throw std::domain_error("evaluate_at: negative power of zero");
      Rational pw = 1;
      const Rational base = k >= 0 ? q0 : Rational(1) / q0;
      for (int i = 0; i < (k >= 0 ? k : -k); ++i) pw *= base;
      acc += Rational(c) * pw;
    }
    return acc;
  }

  /// Canonical text, ascending exponent: "q^-2 + 1 + q^2", "-2*q^(1/2)", "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      const std::string power = power_string(e);
      if (power.empty())
        os << mag;
      else if (mag == 1)
        os << power;
      else
        os << mag << '*' << power;
    }
    return os.str();
  }

  /// Parses the form produced by to_string (whitespace-insensitive).
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static std::string power_string(int half_exp) {
    if (half_exp == 0) return "";
    if (half_exp % 2 == 0) {
      const int k = half_exp / 2;
      return k == 1 ? "q" : "q^" + std::to_string(k);
    }
    return "q^(" + std::to_string(half_exp) + "/2)";
  }

  Terms terms_;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
  }

  LaurentPoly run() {
    if (text_.empty()) fail("empty input");
    LaurentPoly result;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term() * BigInt(sign);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char next() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("LaurentPoly::parse: " + why + " at offset " + std::to_string(pos_));
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(text_.substr(start, pos_ - start));
  }

  int signed_int() {
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    return sign * static_cast<int>(digits());
  }

  LaurentPoly term() {
    BigInt coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = digits();
      have_coef = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    if (peek() != 'q') {
      if (!have_coef) fail("expected a term");
      return LaurentPoly::constant(coef);
    }
    ++pos_;
    int half = 2;
    if (peek() == '^') {
      ++pos_;
      if (peek() == '(') {
        ++pos_;
        const int num = signed_int();
        int den = 1;
        if (peek() == '/') {
          ++pos_;
          den = static_cast<int>(digits());
        }
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        if (den == 1)
          half = 2 * num;
        else if (den == 2)
          half = num;
        else
          fail("exponent denominator must be 1 or 2");
      } else {
        half = 2 * signed_int();
      }
    }
    return LaurentPoly::monomial_half(coef, half);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text) { return detail::PolyParser(text).run(); }

/// Multiply by q^{half_units/2}.
inline LaurentPoly shift_q(const LaurentPoly& p, int half_units) { return p.shifted(half_units); }

/// even + tau * odd, with tau^2 = 1.
class TauPoly {
 public:
  TauPoly() = default;
  TauPoly(LaurentPoly even, LaurentPoly odd) : even_(std::move(even)), odd_(std::move(odd)) {}

  static TauPoly scalar(LaurentPoly p) { return {std::move(p), {}}; }
  static TauPoly tau() { return {{}, LaurentPoly::constant(1)}; }
  /// tau^{parity mod 2} * p
  static TauPoly tau_power(int parity, LaurentPoly p) {
    return (parity % 2 == 0) ? TauPoly(std::move(p), {}) : TauPoly({}, std::move(p));
  }

  const LaurentPoly& even() const noexcept { return even_; }
  const LaurentPoly& odd() const noexcept { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  LaurentPoly substitute_tau_one() const { return even_ + odd_; }

  TauPoly& operator+=(const TauPoly& o) {
    even_ += o.even_;
    odd_ += o.odd_;
    return *this;
  }
  TauPoly& operator-=(const TauPoly& o) {
    even_ -= o.even_;
    odd_ -= o.odd_;
    return *this;
  }
  friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
  friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
  friend TauPoly operator*(const TauPoly& a, const TauPoly& b) {
    return {a.even_ * b.even_ + a.odd_ * b.odd_, a.even_ * b.odd_ + a.odd_ * b.even_};
  }
  friend TauPoly operator*(const TauPoly& a, const LaurentPoly& s) { return {a.even_ * s, a.odd_ * s}; }
  friend TauPoly operator*(const LaurentPoly& s, const TauPoly& a) { return a * s; }
  friend bool operator==(const TauPoly& a, const TauPoly& b) = default;

  /// "(even) + tau*(odd)", omitting vanishing parts.
  std::string to_string() const {
    if (is_zero()) return "0";
    if (odd_.is_zero()) return even_.to_string();
    const std::string t = "tau*(" + odd_.to_string() + ")";
    if (even_.is_zero()) return t;
    return "(" + even_.to_string() + ") + " + t;
  }

 private:
  LaurentPoly even_;
  LaurentPoly odd_;
};

/// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
inline LaurentPoly quantum_int(int n) {
  if (n < 0) throw std::invalid_argument("quantum_int: negative argument");
  LaurentPoly r;
  for (int i = 0; i < n; ++i) r += LaurentPoly::q(n - 1 - 2 * i);
  return r;
}

inline LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly r = LaurentPoly::constant(1);
  for (int j = 2; j <= n; ++j) r *= quantum_int(j);
  return r;
}

/// [m choose k] = [m]! / ([k]! [m-k]!), and 0 when k < 0 or k > m.
inline LaurentPoly quantum_binomial(int m, int k) {
  if (m < 0) throw std::invalid_argument("quantum_binomial: negative upper index");
  if (k < 0 || k > m) return {};
  return quantum_factorial(m).divide_exact(quantum_factorial(k) * quantum_factorial(m - k));
}

/// q^{-mn} * sum over partitions lambda with at most m parts, each <= n, of q^{2|lambda|}.
inline LaurentPoly quantum_binomial_partition_sum(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("quantum_binomial_partition_sum: negative argument");
  LaurentPoly sum;
  // rows left to fill, cap on the next part, running size
  std::function<void(int, int, int)> walk = [&](int rows, int cap, int size) {
    sum += LaurentPoly::q(2 * size);
    if (rows == 0) return;
    for (int part = 1; part <= cap; ++part) walk(rows - 1, part, size + part);
  };
  walk(m, n, 0);
  return sum.shifted(-2 * m * n);
}

}  // namespace moyrt
