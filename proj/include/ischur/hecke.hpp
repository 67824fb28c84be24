/**
 * @file hecke.hpp
 * @brief Iwahori-Hecke algebra of the signed permutation group over Laurent
 *        polynomials: T-basis arithmetic, generator inverses, the bar
 *        involution, signed sums over parabolic subgroups, and the
 *        double-coset elements attached to index matrices.
 */
#pragma once

#include <cassert>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "comb.hpp"
#include "laurent.hpp"
#include "weylb.hpp"

namespace ischur {

/// Element of the Hecke algebra in the T-basis with Laurent coefficients.
/// T_s satisfies (T_s + 1)(T_s - q) = 0 and T_w T_w' = T_{ww'} whenever
/// lengths add.
class HeckeElt {
 public:
  explicit HeckeElt(int d) : d_(d) {}

  static HeckeElt zero(int d) { return HeckeElt(d); }
  static HeckeElt unit(int d) { return basis(SignedPerm(d)); }
  static HeckeElt basis(const SignedPerm& w) {
    HeckeElt h(w.d());
    h.terms_[w] = Laurent(1);
    return h;
  }

  int d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<SignedPerm, Laurent>& terms() const { return terms_; }

  Laurent coeff(const SignedPerm& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent() : it->second;
  }

  void add_term(const SignedPerm& w, const Laurent& c) {
    if (c.is_zero()) return;
    Laurent& slot = terms_[w];
    slot += c;
    if (slot.is_zero()) terms_.erase(w);
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    assert(d_ == o.d_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    assert(d_ == o.d_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  HeckeElt& operator*=(const Laurent& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, t] : terms_) t = t * c;
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(HeckeElt a, const Laurent& c) { return a *= c; }
  friend HeckeElt operator*(const Laurent& c, HeckeElt a) { return a *= c; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) {
    return !(a == b);
  }

  /// Right multiplication by the generator T_{s_i}.
  void mul_gen_right(int i) {
    std::map<SignedPerm, Laurent> out;
    const Laurent q = Laurent::q_pow(1), qm1 = Laurent::q_pow(1) - Laurent(1);
    for (const auto& [w, c] : terms_) {
      SignedPerm ws = w;
      ws.mul_right_gen(i);
      if (!w.has_right_descent(i)) {
        addto(out, ws, c);
      } else {
        addto(out, ws, q * c);
        addto(out, w, qm1 * c);
      }
    }
    terms_ = std::move(out);
  }

  /// Right multiplication by the inverse generator T_{s_i}^{-1}.
  void mul_gen_right_inv(int i) {
    std::map<SignedPerm, Laurent> out;
    const Laurent qi = Laurent::q_pow(-1),
                  qim1 = Laurent::q_pow(-1) - Laurent(1);
    for (const auto& [w, c] : terms_) {
      SignedPerm ws = w;
      ws.mul_right_gen(i);
      if (w.has_right_descent(i)) {
        addto(out, ws, c);
      } else {
        addto(out, ws, qi * c);
        addto(out, w, qim1 * c);
      }
    }
    terms_ = std::move(out);
  }

  /// Left multiplication by the generator T_{s_i}.
  void mul_gen_left(int i) {
    std::map<SignedPerm, Laurent> out;
    const Laurent q = Laurent::q_pow(1), qm1 = Laurent::q_pow(1) - Laurent(1);
    for (const auto& [w, c] : terms_) {
      SignedPerm sw = w;
      sw.mul_left_gen(i);
      if (!w.has_left_descent(i)) {
        addto(out, sw, c);
      } else {
        addto(out, sw, q * c);
        addto(out, w, qm1 * c);
      }
    }
    terms_ = std::move(out);
  }

  /// Right multiplication by T_w (applied via a reduced word).
  void mul_basis_right(const SignedPerm& w) {
    for (int i : w.reduced_word()) mul_gen_right(i);
  }

  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
    assert(a.d_ == b.d_);
    HeckeElt out(a.d_);
    for (const auto& [w2, c2] : b.terms_) {
      HeckeElt tmp = a;
      tmp *= c2;
      tmp.mul_basis_right(w2);
      out += tmp;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")*T[" << w.str() << "]";
    }
    return os.str();
  }

 private:
  static void addto(std::map<SignedPerm, Laurent>& m, const SignedPerm& w,
                    const Laurent& c) {
    if (c.is_zero()) return;
    Laurent& slot = m[w];
    slot += c;
    if (slot.is_zero()) m.erase(w);
  }

  int d_;
  std::map<SignedPerm, Laurent> terms_;
};

/// Inverse basis element T_w^{-1}.
inline HeckeElt inv_basis(const SignedPerm& w) {
  HeckeElt out = HeckeElt::unit(w.d());
  std::vector<int> word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out.mul_gen_right_inv(*it);
  return out;
}

/// Bar involution: v -> v^{-1} on coefficients and T_w -> (T_{w^{-1}})^{-1}.
inline HeckeElt bar(const HeckeElt& h) {
  HeckeElt out = HeckeElt::zero(h.d());
  for (const auto& [w, c] : h.terms()) {
    HeckeElt bw = HeckeElt::unit(h.d());
    for (int i : w.reduced_word()) bw.mul_gen_right_inv(i);
    bw *= c.bar();
    out += bw;
  }
  return out;
}

/// (-q)^{-l}: the coefficient carried by length-l terms of the signed sum.
inline Laurent neg_q_pow_minus(long l) {
  return Laurent::monomial(l % 2 ? Int(-1) : Int(1), static_cast<int>(-2 * l));
}

/// Signed parabolic sum [xy]_nu: plain T-sum over the even factor of W_nu
/// times the (-q)^{-length}-twisted sum over the odd factor.
inline HeckeElt xy_lambda(const Composition& nu) {
  const int d = static_cast<int>(nu.d());
  HeckeElt out = HeckeElt::zero(d);
  for (const auto& w0 : subgroup_elements(d, simple_gens_parity(nu, 0)))
    for (const auto& w1 : subgroup_elements(d, simple_gens_parity(nu, 1)))
      out.add_term(w0 * w1, neg_q_pow_minus(w1.length()));
  return out;
}

/// Bar-invariant normalization n_nu = v^{-l(w0 even) + l(w0 odd)} [xy]_nu.
inline HeckeElt n_lambda(const Composition& nu) {
  const int d = static_cast<int>(nu.d());
  long l0 = longest_element(d, simple_gens_parity(nu, 0)).length();
  long l1 = longest_element(d, simple_gens_parity(nu, 1)).length();
  return xy_lambda(nu) * Laurent::v_pow(static_cast<int>(-l0 + l1));
}

/// The twisted sum over D_delta ∩ W_nu entering the double-coset element:
/// each w decomposes within W_nu as w^(0) w^(1) and carries (-q)^{-l(w^(1))}.
inline HeckeElt d_delta_sum(const GenComposition& delta, const Composition& nu) {
  const int d = static_cast<int>(nu.d());
  std::vector<int> J = simple_gens(delta);
  HeckeElt out = HeckeElt::zero(d);
  for (const auto& w0 : subgroup_elements(d, simple_gens_parity(nu, 0)))
    for (const auto& w1 : subgroup_elements(d, simple_gens_parity(nu, 1))) {
      SignedPerm w = w0 * w1;
      bool minimal = true;
      for (int j : J)
        if (w.has_left_descent(j)) {
          minimal = false;
          break;
        }
      if (minimal) out.add_term(w, neg_q_pow_minus(w1.length()));
    }
  return out;
}

/// Double-coset element T_{W_mu g W_nu} = [xy]_mu T_g ( twisted D-sum ).
inline HeckeElt T_double_coset(const Composition& mu, const SignedPerm& g,
                               const Composition& nu) {
  IndexMatrix A = kappa(mu, g, nu);
  HeckeElt out = xy_lambda(mu);
  out.mul_basis_right(g);
  return out * d_delta_sum(delta_of(A), nu);
}

}  // namespace ischur
