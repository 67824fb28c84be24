/**
 * @file laurent.hpp
 * @brief Exact Laurent-polynomial and rational-function arithmetic over Z in
 *        one variable v (with q = v^2), plus quantum integers, factorials,
 *        binomials and their balanced "c"-variants.
 */
#pragma once

#include <cassert>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ischur {

using Int = mpz_class;
using Rat = mpq_class;

/// Sparse Laurent polynomial sum_e c_e v^e with c_e in Z.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long n) {
    if (n != 0) t_[0] = Int(n);
  }
  Laurent(const Int& n) {
    if (n != 0) t_[0] = n;
  }

  static Laurent monomial(Int coeff, int exp) {
    Laurent r;
    if (coeff != 0) r.t_[exp] = std::move(coeff);
    return r;
  }
  /// v^exp
  static Laurent v_pow(int exp) { return monomial(Int(1), exp); }
  /// q^exp = v^(2 exp)
  static Laurent q_pow(int exp) { return monomial(Int(1), 2 * exp); }

  bool is_zero() const { return t_.empty(); }
  const std::map<int, Int>& terms() const { return t_; }

  Int coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Int(0) : it->second;
  }
  int min_deg() const {
    assert(!t_.empty());
    return t_.begin()->first;
  }
  int max_deg() const {
    assert(!t_.empty());
    return t_.rbegin()->first;
  }
  const Int& lead() const {
    assert(!t_.empty());
    return t_.rbegin()->second;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.t_) r.t_[e] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }

  Laurent pow(unsigned long k) const {
    Laurent r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  /// Bar involution v -> v^{-1}.
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[-e] = c;
    return r;
  }

  /// Multiply by v^k.
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }

  /// Exact division; returns false (and leaves quot untouched) when not exact.
  static bool try_divide(const Laurent& num, const Laurent& den, Laurent& quot) {
    if (den.is_zero()) return false;
    if (num.is_zero()) {
      quot = Laurent();
      return true;
    }
    const int qmin = num.min_deg() - den.min_deg();
    Laurent r = num, q;
    while (!r.is_zero()) {
      int e = r.max_deg() - den.max_deg();
      if (e < qmin) return false;
      if (!mpz_divisible_p(r.lead().get_mpz_t(), den.lead().get_mpz_t()))
        return false;
      Int c;
      mpz_divexact(c.get_mpz_t(), r.lead().get_mpz_t(), den.lead().get_mpz_t());
      Laurent term = monomial(c, e);
      q += term;
      r -= term * den;
    }
    quot = q;
    return true;
  }

  /// Exact division that must succeed.
  friend Laurent exact_div(const Laurent& num, const Laurent& den) {
    Laurent q;
    if (!try_divide(num, den, q))
      throw std::domain_error("exact_div: inexact Laurent division");
    return q;
  }

  /// Evaluate at a rational value of v (nonzero when negative exponents occur).
  Rat eval(const Rat& v) const {
    Rat r = 0;
    for (const auto& [e, c] : t_) {
      Rat p = 1;
      unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
      Rat base = v;
      while (a) {
        if (a & 1) p *= base;
        base *= base;
        a >>= 1;
      }
      if (e < 0) p = 1 / p;
      r += Rat(c) * p;
    }
    return r;
  }

  /// Canonical human-readable rendering, lowest exponent first.
  std::string str(const std::string& var = "v") const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
      Int a = c > 0 ? c : Int(-c);
      if (s.empty())
        s += (c < 0 ? "-" : "");
      else
        s += (c < 0 ? " - " : " + ");
      bool unit = (a == 1);
      if (e == 0 || !unit) s += a.get_str();
      if (e != 0) {
        if (!unit) s += "*";
        s += var;
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void add_term(int e, Int c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_[e] = std::move(c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  std::map<int, Int> t_;
};

// ----------------------------------------------------------------------------
// quantum combinatorics (all in the variable q = v^2 unless a base is given)
// ----------------------------------------------------------------------------

/// [a]_p = 1 + p + ... + p^{a-1} for a >= 0 and any Laurent base p.
inline Laurent qint(long a, const Laurent& p) {
  assert(a >= 0);
  Laurent r, pk(1);
  for (long k = 0; k < a; ++k) {
    r += pk;
    pk *= p;
  }
  return r;
}
inline Laurent qint(long a) { return qint(a, Laurent::q_pow(1)); }

/// [a]_p! = [1]_p [2]_p ... [a]_p.
inline Laurent qfact(long a, const Laurent& p) {
  Laurent r(1);
  for (long k = 1; k <= a; ++k) r *= qint(k, p);
  return r;
}
inline Laurent qfact(long a) { return qfact(a, Laurent::q_pow(1)); }

/// Gaussian binomial [a choose b]_p = [a]_p! / ([b]_p! [a-b]_p!).
inline Laurent qbinom(long a, long b, const Laurent& p) {
  if (b < 0 || b > a) return Laurent();
  return exact_div(qfact(a, p), qfact(b, p) * qfact(a - b, p));
}
inline Laurent qbinom(long a, long b) { return qbinom(a, b, Laurent::q_pow(1)); }

/// Symmetric integer [a]_v = v^{a-1} + v^{a-3} + ... + v^{1-a}.
inline Laurent vint(long a) {
  assert(a >= 0);
  Laurent r;
  for (long k = 0; k < a; ++k)
    r += Laurent::v_pow(static_cast<int>(a - 1 - 2 * k));
  return r;
}

/// [a]_v! = [1]_v [2]_v ... [a]_v.
inline Laurent vfact(long a) {
  Laurent r(1);
  for (long k = 1; k <= a; ++k) r *= vint(k);
  return r;
}

/// Balanced integer [2a]_c = [a]_q (q^a + 1); the argument must be even.
inline Laurent cint(long even_arg) {
  assert(even_arg >= 0 && even_arg % 2 == 0);
  long a = even_arg / 2;
  return qint(a) * (Laurent::q_pow(static_cast<int>(a)) + Laurent(1));
}

/// [a]_c! = prod_{k=1..a} [2k]_c.
inline Laurent cfact(long a) {
  Laurent r(1);
  for (long k = 1; k <= a; ++k) r *= cint(2 * k);
  return r;
}

/// f_d(q) = prod_{i=1-d}^{d-1} (q + q^{-i}).
inline Laurent f_d(long d) {
  Laurent r(1);
  for (long i = 1 - d; i <= d - 1; ++i)
    r *= Laurent::q_pow(1) + Laurent::q_pow(static_cast<int>(-i));
  return r;
}

// ----------------------------------------------------------------------------
// integer-polynomial helpers (used by the rational-function field)
// ----------------------------------------------------------------------------

namespace detail {

inline Int content(const Laurent& a) {
  Int g = 0;
  for (const auto& [e, c] : a.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;  // 0 for the zero polynomial, positive otherwise
}

inline Laurent scale_div(const Laurent& a, const Int& d) {
  Laurent r;
  for (const auto& [e, c] : a.terms()) {
    Int q = c / d;
    assert(q * d == c);
    r += Laurent::monomial(q, e);
  }
  return r;
}

inline Laurent scale_mul(const Laurent& a, const Int& d) {
  Laurent r;
  for (const auto& [e, c] : a.terms()) r += Laurent::monomial(c * d, e);
  return r;
}

/// Pseudo-remainder of polynomials (min_deg >= 0), deg a >= deg b >= 0.
inline Laurent prem(Laurent a, const Laurent& b) {
  int db = b.max_deg();
  while (!a.is_zero() && a.max_deg() >= db) {
    int e = a.max_deg() - db;
    Int la = a.lead();
    a = scale_mul(a, b.lead());
    a -= Laurent::monomial(la, e) * b;
  }
  return a;
}

/// gcd over Z[v] via the primitive pseudo-remainder sequence.
inline Laurent poly_gcd(Laurent a, Laurent b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Int ca = content(a), cb = content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = scale_div(a, ca);
  b = scale_div(b, cb);
  if (a.max_deg() < b.max_deg()) std::swap(a, b);
  while (!b.is_zero()) {
    Laurent r = prem(a, b);
    if (!r.is_zero()) r = scale_div(r, content(r));
    a = b;
    b = r;
  }
  if (a.lead() < 0) a = -a;
  return scale_mul(a, c);
}

}  // namespace detail

// ----------------------------------------------------------------------------
// rational functions
// ----------------------------------------------------------------------------

/// Reduced fraction num/den with num a Laurent polynomial and den an ordinary
/// polynomial with nonzero constant term and positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long n) : num_(n), den_(1) {}
  RatFunc(const Laurent& n) : num_(n), den_(1) {}
  RatFunc(const Laurent& n, const Laurent& d) : num_(n), den_(d) { reduce(); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  Rat eval(const Rat& v) const { return num_.eval(v) / den_.eval(v); }

  std::string str(const std::string& var = "v") const {
    if (den_ == Laurent(1)) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = Laurent(1);
      return;
    }
    // Move unit factors v^k of the denominator into the numerator.
    int s = den_.min_deg();
    if (s != 0) {
      den_ = den_.shifted(-s);
      num_ = num_.shifted(-s);
    }
    int t = num_.min_deg();
    Laurent n0 = num_.shifted(-t);
    Laurent g = detail::poly_gcd(n0, den_);
    n0 = exact_div(n0, g);
    den_ = exact_div(den_, g);
    if (den_.lead() < 0) {
      den_ = -den_;
      n0 = -n0;
    }
    num_ = n0.shifted(t);
  }

  Laurent num_;
  Laurent den_;
};

}  // namespace ischur
