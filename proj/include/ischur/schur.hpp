/**
 * @file schur.hpp
 * @brief The matrix-indexed endomorphism algebra: a brute-force
 *        multiplication engine through the underlying Hecke algebra, closed
 *        one-band multiplication formulas in the plain and the rescaled
 *        (bracket) bases, the bar involution, and the monomial and canonical
 *        bases.
 */
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "comb.hpp"
#include "hecke.hpp"
#include "laurent.hpp"
#include "weylb.hpp"

namespace ischur {

/// Formal Laurent combination of basis matrices.
class SchurElt {
 public:
  SchurElt() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexMatrix, Laurent>& terms() const { return terms_; }

  Laurent coeff(const IndexMatrix& A) const {
    auto it = terms_.find(A);
    return it == terms_.end() ? Laurent() : it->second;
  }

  void add_term(const IndexMatrix& A, const Laurent& c) {
    if (c.is_zero()) return;
    Laurent& slot = terms_[A];
    slot += c;
    if (slot.is_zero()) terms_.erase(A);
  }

  SchurElt& operator+=(const SchurElt& o) {
    for (const auto& [A, c] : o.terms_) add_term(A, c);
    return *this;
  }
  SchurElt& operator-=(const SchurElt& o) {
    for (const auto& [A, c] : o.terms_) add_term(A, -c);
    return *this;
  }
  SchurElt& operator*=(const Laurent& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [A, t] : terms_) t = t * c;
    return *this;
  }
  friend SchurElt operator+(SchurElt a, const SchurElt& b) { return a += b; }
  friend SchurElt operator-(SchurElt a, const SchurElt& b) { return a -= b; }
  friend SchurElt operator*(SchurElt a, const Laurent& c) { return a *= c; }
  friend SchurElt operator*(const Laurent& c, SchurElt a) { return a *= c; }
  friend bool operator==(const SchurElt& a, const SchurElt& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SchurElt& a, const SchurElt& b) {
    return !(a == b);
  }

  static SchurElt basis(const IndexMatrix& A) {
    SchurElt e;
    e.terms_[A] = Laurent(1);
    return e;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [A, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")*" << A.str();
    }
    return os.str();
  }

 private:
  std::map<IndexMatrix, Laurent> terms_;
};

/// Switches for readings of the closed formulas that the source leaves
/// ambiguous; defaults are the calibrated values.
struct MulOpts {
  /// Lowering formulas: exponent on the second scalar runs over j<k
  /// (default) or j>k.
  bool lower_qdd_greater = false;
  /// Placement of the k<0 sign factor in the rescaled formulas:
  ///   0 calibrated reading: on raising terms at the boundary band;
  ///   1 printed reading:    on lowering terms at every band;
  ///   2 alternate reading:  on lowering terms at the boundary band only.
  int sign_reading = 0;
  /// Monomial factor order: bit 0 flips the row direction (default
  /// descending), bit 1 flips the column direction (default descending).
  int order_variant = 0;
};

/// Multiplication engines and bases for one parameter set (m, n, d).
class SchurAlgebra {
 public:
  SchurAlgebra(int m, int n, long d) : xi_(m, n, d) {
    for (size_t i = 0; i < xi_.size(); ++i)
      blocks_[margin_key(xi_.mat(i))].push_back(i);
  }

  const XiIndex& xi() const { return xi_; }
  int m() const { return xi_.m(); }
  int n() const { return xi_.n(); }
  long d() const { return xi_.d(); }
  int radius() const { return xi_.m() + xi_.n(); }

  /// Matrix indices sharing the given margins.
  const std::vector<size_t>& block_of(const Composition& row,
                                      const Composition& col) const {
    static const std::vector<size_t> empty;
    auto it = blocks_.find(
        std::make_pair(row.parts, col.parts));
    return it == blocks_.end() ? empty : it->second;
  }

  // --------------------------------------------------------------------
  // brute-force engine through the Hecke algebra
  // --------------------------------------------------------------------

  /// Composition product in the plain basis, computed inside the Hecke
  /// algebra and re-expanded; throws if the re-expansion leaves a residue.
  SchurElt mul_generic(const IndexMatrix& B, const IndexMatrix& A) {
    if (!(B.col() == A.row())) return SchurElt();
    const HeckeElt prod = tdc(B) * applied(A);
    return expand_in_double_cosets(prod, B.row(), A.col());
  }

  /// Express a Hecke element lying in the span of the double-coset elements
  /// of the (row, col) block; throws if it does not.
  SchurElt expand_in_double_cosets(const HeckeElt& h, const Composition& row,
                                   const Composition& col) {
    SchurElt out;
    HeckeElt rest = h;
    for (size_t idx : block_of(row, col)) {
      Laurent c = rest.coeff(xi_.g(idx));
      if (c.is_zero()) continue;
      rest -= tdc(xi_.mat(idx)) * c;
      out.add_term(xi_.mat(idx), c);
    }
    if (!rest.is_zero())
      throw std::logic_error("element does not lie in the double-coset span");
    return out;
  }

  // --------------------------------------------------------------------
  // closed formulas in the plain basis
  // --------------------------------------------------------------------

  /// Closed product for a one-band matrix B (recognized on the fly) against
  /// an arbitrary A, in the plain basis.
  SchurElt mul_chevalley_e(const IndexMatrix& B, const IndexMatrix& A,
                           const MulOpts& opts = {}) {
    auto form = chevalley_form(B);
    if (!form) throw std::invalid_argument("left factor is not one-band");
    if (!(B.col() == A.row())) return SchurElt();
    if (form->a == 0) return SchurElt::basis(A);
    if (form->a == 1) return unit_band_e(form->h, form->lower, A, opts);
    return multi_band_e(form->h, form->a, form->lower, A, opts);
  }

  // --------------------------------------------------------------------
  // rescaled (bracket) basis
  // --------------------------------------------------------------------

  /// Plain-basis element rescaled into the bracket basis and vice versa:
  /// e_A = sign * v^{lhat} [A] with sign = (-1)^{a_hat}.
  static SchurElt e_to_bracket(const SchurElt& f) {
    SchurElt out;
    for (const auto& [A, c] : f.terms()) {
      Laurent s = Laurent::v_pow(static_cast<int>(ell_hat(A)));
      if (a_hat(A) % 2) s = -s;
      out.add_term(A, c * s);
    }
    return out;
  }
  static SchurElt bracket_to_e(const SchurElt& f) {
    SchurElt out;
    for (const auto& [A, c] : f.terms()) {
      Laurent s = Laurent::v_pow(static_cast<int>(-ell_hat(A)));
      if (a_hat(A) % 2) s = -s;
      out.add_term(A, c * s);
    }
    return out;
  }

  /// Bracket product [B][A] via the brute-force engine and rescaling.
  SchurElt mul_bracket_exact(const IndexMatrix& B, const IndexMatrix& A) {
    SchurElt e = mul_generic(B, A);
    Laurent pre = Laurent::v_pow(static_cast<int>(-ell_hat(B) - ell_hat(A)));
    if ((a_hat(B) + a_hat(A)) % 2) pre = -pre;
    return e_to_bracket(e) * pre;
  }

  /// Bracket product [B][A] for one-band B by the closed rescaled formulas.
  SchurElt mul_bracket_closed(const IndexMatrix& B, const IndexMatrix& A,
                              const MulOpts& opts = {}) {
    auto form = chevalley_form(B);
    if (!form) throw std::invalid_argument("left factor is not one-band");
    if (!(B.col() == A.row())) return SchurElt();
    if (form->a == 0) return SchurElt::basis(A);
    if (form->a == 1) return unit_band_bracket(form->h, form->lower, A, opts);
    return multi_band_bracket(form->h, form->a, form->lower, A, opts);
  }

  /// Bracket product of a one-band matrix against a bracket combination.
  SchurElt mul_bracket_closed(const IndexMatrix& B, const SchurElt& f,
                              const MulOpts& opts = {}) {
    SchurElt out;
    for (const auto& [A, c] : f.terms())
      out += mul_bracket_closed(B, A, opts) * c;
    return out;
  }

  // --------------------------------------------------------------------
  // bar involution on the matrix algebra
  // --------------------------------------------------------------------

  /// Bar image of a single bracket basis element, as a bracket combination.
  const SchurElt& bar_bracket_basis(const IndexMatrix& A) {
    size_t idx = xi_.index_of(A);
    if (idx == XiIndex::npos)
      throw std::invalid_argument("matrix outside the parameter set");
    auto it = bar_cache_.find(idx);
    if (it != bar_cache_.end()) return it->second;
    const Composition lam = A.row(), mu = A.col();
    // value of [A] on the normalized generator, then its Hecke bar image
    Laurent pre = Laurent::v_pow(static_cast<int>(-ell_hat(A)));
    if (a_hat(A) % 2) pre = -pre;
    HeckeElt val = tdc(A) * pre;
    const int dd = static_cast<int>(xi_.d());
    long l0 = longest_element(dd, simple_gens_parity(mu, 0)).length();
    long l1 = longest_element(dd, simple_gens_parity(mu, 1)).length();
    HeckeElt img = bar(val) * Laurent::v_pow(static_cast<int>(2 * (l0 - l1)));
    // expand back: [C] takes the normalized generator to sign*v^{-lhat} tdc(C)
    SchurElt out;
    HeckeElt rest = img;
    for (size_t c_idx : block_of(lam, mu)) {
      const IndexMatrix& C = xi_.mat(c_idx);
      Laurent lead = rest.coeff(xi_.g(c_idx));
      if (lead.is_zero()) continue;
      Laurent unscale = Laurent::v_pow(static_cast<int>(ell_hat(C)));
      if (a_hat(C) % 2) unscale = -unscale;
      Laurent fc = lead * unscale;
      Laurent rescale = Laurent::v_pow(static_cast<int>(-ell_hat(C)));
      if (a_hat(C) % 2) rescale = -rescale;
      rest -= tdc(C) * (fc * rescale);
      out.add_term(C, fc);
    }
    if (!rest.is_zero())
      throw std::logic_error("bar image leaves the double-coset span");
    return bar_cache_.emplace(idx, std::move(out)).first->second;
  }

  /// Bar involution of a bracket combination (one margin block at a time is
  /// not required; terms may mix blocks).
  SchurElt bar_bracket(const SchurElt& f) {
    SchurElt out;
    for (const auto& [A, c] : f.terms())
      out += bar_bracket_basis(A) * c.bar();
    return out;
  }

  // --------------------------------------------------------------------
  // monomial basis
  // --------------------------------------------------------------------

  /// One factor of the monomial product: a band index with direction and
  /// multiplicity; the margins are chained in later.
  struct BandStep {
    int h;       // band in [0..m+n-1]
    long mult;   // multiplicity
    bool lower;  // lowering instead of raising
  };

  /// The band steps attached to the off-diagonal entries of A, in the
  /// calibrated product order.
  std::vector<BandStep> monomial_steps(const IndexMatrix& A,
                                       const MulOpts& opts = {}) const {
    const int r = radius();
    const int mm = xi_.m();
    std::vector<std::pair<int, int>> cells;
    for (int i = -r; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        if (A.at(i, j) > 0) cells.push_back({i, j});
    std::sort(cells.begin(), cells.end(), [&](auto& a, auto& b) {
      int ai = (opts.order_variant & 1) ? a.first : -a.first;
      int bi = (opts.order_variant & 1) ? b.first : -b.first;
      if (ai != bi) return ai < bi;
      int aj = (opts.order_variant & 2) ? a.second : -a.second;
      int bj = (opts.order_variant & 2) ? b.second : -b.second;
      return aj < bj;
    });
    std::vector<BandStep> steps;
    auto push = [&](int h, long mult) {
      // a raising step at negative band h is a lowering step at -h-1
      if (h >= 0)
        steps.push_back({h, mult, false});
      else
        steps.push_back({-h - 1, mult, true});
    };
    for (auto [i, j] : cells) {
      long a = A.at(i, j);
      if (i < -mm && j > mm) {
        // the boundary band admits only unit multiplicities, so the middle
        // segment is a unit band repeated a times
        for (int h = i; h <= -mm - 2; ++h) push(h, a);
        for (long rep = 0; rep < a; ++rep)
          for (int h = -mm - 1; h <= mm; ++h) push(h, 1);
        for (int h = mm + 1; h <= j - 1; ++h) push(h, a);
      } else {
        for (int h = i; h <= j - 1; ++h) push(h, a);
      }
    }
    return steps;
  }

  /// Chevalley factors realizing the band steps, margins chained from
  /// col(A) on the right to row(A) on the left; empty on failure.
  std::vector<IndexMatrix> monomial_factors(const IndexMatrix& A,
                                            const MulOpts& opts = {}) const {
    std::vector<BandStep> steps = monomial_steps(A, opts);
    std::vector<IndexMatrix> factors;
    Composition cur = A.col();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      auto F = it->lower ? chevalley_lower(it->h, it->mult, cur)
                         : chevalley_upper(it->h, it->mult, cur);
      if (!F) return {};
      factors.push_back(*F);
      cur = F->row();
    }
    if (!(cur == A.row())) return {};
    std::reverse(factors.begin(), factors.end());
    return factors;
  }

  /// Symmetric quantum factorial collected by the boundary-crossing
  /// multiplicities of A.  Entries with i < -m and j > m of size a must
  /// cross the parity boundary one unit at a time, and the a crossings
  /// accumulate a factor [a]_v!; everywhere else the lead stays a unit.
  Laurent crossing_factorial(const IndexMatrix& A) const {
    const int r = radius();
    const int mm = xi_.m();
    Laurent f(1);
    for (int i = -r; i < -mm; ++i)
      for (int j = mm + 1; j <= r; ++j) f *= vfact(A.at(i, j));
    return f;
  }

  /// Normalized monomial product: the ordered product of the Chevalley
  /// factors, scaled so that the coefficient at [A] is the (positive)
  /// crossing factorial of A.  Returns the element and the removed sign.
  std::pair<SchurElt, int> monomial_bracket(const IndexMatrix& A,
                                            const MulOpts& opts = {}) {
    std::vector<IndexMatrix> factors = monomial_factors(A, opts);
    if (factors.empty() && !(A == diag_matrix(A.row())))
      throw std::logic_error("no factorization for matrix");
    SchurElt prod = SchurElt::basis(diag_matrix(A.col()));
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      prod = mul_bracket_closed(*it, prod, opts);
    Laurent lead = prod.coeff(A);
    Laurent expect = crossing_factorial(A);
    int iota;
    if (lead == expect)
      iota = 1;
    else if (lead == -expect)
      iota = -1;
    else
      throw std::logic_error("monomial lead is not the crossing factorial");
    if (iota < 0) prod *= -Laurent(1);
    return {prod, iota};
  }

  // --------------------------------------------------------------------
  // canonical basis
  // --------------------------------------------------------------------

  /// True if every term of f has negative degree.
  static bool strictly_below(const Laurent& f) {
    return f.is_zero() || f.max_deg() < 0;
  }

  /// Canonical basis element of A in bracket coordinates: the unique
  /// bar-invariant element equal to [A] plus strictly dominance-lower
  /// terms with coefficients in v^{-1} Z[v^{-1}].  It is solved
  /// triangularly from the bar matrix of the margin block, so it does not
  /// depend on any product factorization.
  const SchurElt& canonical_basis(const IndexMatrix& A) {
    size_t idx = xi_.index_of(A);
    if (idx == XiIndex::npos)
      throw std::invalid_argument("matrix outside the parameter set");
    auto it = can_cache_.find(idx);
    if (it != can_cache_.end()) return it->second;
    std::vector<IndexMatrix> below;
    for (size_t b : block_of(A.row(), A.col())) {
      const IndexMatrix& C = xi_.mat(b);
      if (less_alg(C, A)) below.push_back(C);
    }
    SchurElt c = canonical_with_order(A, linear_extension(below));
    return can_cache_.emplace(idx, std::move(c)).first->second;
  }

  /// Canonical element computed along an explicit linear extension of the
  /// part of the block lying strictly below A (top coefficient solved
  /// last); exposed so tests can verify independence of the extension.
  SchurElt canonical_with_order(const IndexMatrix& A,
                                const std::vector<IndexMatrix>& below) {
    SchurElt out = SchurElt::basis(A);
    for (auto rit = below.rbegin(); rit != below.rend(); ++rit) {
      const IndexMatrix& C = *rit;
      // bar-invariance at position C: p_C - bar(p_C) must equal the
      // defect K contributed by the already-solved strictly higher terms
      Laurent K;
      for (const auto& [B, p] : out.terms())
        K += p.bar() * bar_bracket_basis(B).coeff(C);
      if (K.is_zero()) continue;
      if (!(K.bar() == -K))
        throw std::logic_error("bar defect is not antisymmetric");
      Laurent p;
      for (int k = K.min_deg(); k < 0; ++k)
        p += Laurent::monomial(K.coeff(k), k);
      if (!p.is_zero()) out.add_term(C, p);
    }
    return out;
  }

  // --------------------------------------------------------------------
  // cached Hecke-side data
  // --------------------------------------------------------------------

  /// Double-coset element of a matrix (cached).
  const HeckeElt& tdc(const IndexMatrix& A) {
    size_t idx = xi_.index_of(A);
    if (idx == XiIndex::npos)
      throw std::invalid_argument("matrix outside the parameter set");
    auto it = tdc_cache_.find(idx);
    if (it != tdc_cache_.end()) return it->second;
    HeckeElt t = T_double_coset(A.row(), xi_.g(idx), A.col());
    return tdc_cache_.emplace(idx, std::move(t)).first->second;
  }

  /// Right part T_g * (twisted D-sum) of the double-coset element (cached);
  /// the value of the matrix's map on the plain generator equals
  /// [xy]_row * this.
  const HeckeElt& applied(const IndexMatrix& A) {
    size_t idx = xi_.index_of(A);
    auto it = app_cache_.find(idx);
    if (it != app_cache_.end()) return it->second;
    HeckeElt t = HeckeElt::basis(xi_.g(idx));
    t = t * d_delta_sum(delta_of(A), A.col());
    return app_cache_.emplace(idx, std::move(t)).first->second;
  }

 private:
  using MarginKey = std::pair<std::vector<long>, std::vector<long>>;
  static MarginKey margin_key(const IndexMatrix& A) {
    return {A.row().parts, A.col().parts};
  }

  // scalar families for the plain-basis formulas
  Laurent q_dot(int h) const {
    return hat_idx(h, xi_.m()) == 0 ? Laurent(1)
                                    : -Laurent::q_pow(-1);
  }
  Laurent q_ddot(int h) const {
    return hat_idx(h, xi_.m()) == 0 ? Laurent::q_pow(1) : -Laurent(1);
  }
  Laurent q_band(int h) const {  // base q_h = q^{+-1}
    return Laurent::q_pow(hat_idx(h, xi_.m()) == 0 ? 1 : -1);
  }
  Laurent v_band(int h) const {  // v_h = v^{+-1}
    return Laurent::v_pow(hat_idx(h, xi_.m()) == 0 ? 1 : -1);
  }

  static Laurent lpow(const Laurent& b, long e) {
    assert(e >= 0);
    Laurent r(1);
    for (long i = 0; i < e; ++i) r *= b;
    return r;
  }

  /// A shifted by +E^theta_{h,k} -E^theta_{h+1,k} (raising) or the reverse
  /// (lowering); empty if the result leaves the matrix set.
  static std::optional<IndexMatrix> band_shift(const IndexMatrix& A, int h,
                                               int k, long t, bool lower) {
    IndexMatrix T = A;
    T.add_sym(h, k, lower ? -t : t);
    T.add_sym(h + 1, k, lower ? t : -t);
    if (!T.is_valid()) return std::nullopt;
    return T;
  }

  // ---- plain basis, multiplicity one -----------------------------------

  SchurElt unit_band_e(int h, bool lower, const IndexMatrix& A,
                       const MulOpts& opts) {
    const int r = radius();
    SchurElt out;
    for (int k = -r; k <= r; ++k) {
      auto T = band_shift(A, h, k, 1, lower);
      if (!T) continue;
      Laurent coeff;
      if (!lower) {
        long e_dot = 0, e_ddot = 0;
        for (int j = -r; j < k; ++j) e_dot += A.at(h + 1, j);
        for (int j = k + 1; j <= r; ++j) e_ddot += A.at(h, j);
        Laurent mag = (h == 0 && k == 0) ? cint(A.at(0, 0) + 1)
                                         : qint(A.at(h, k) + 1, q_band(h));
        coeff = lpow(q_dot(h + 1), e_dot) * lpow(q_ddot(h), e_ddot) * mag;
      } else {
        long e_dot = 0, e_ddot = 0;
        for (int j = k + 1; j <= r; ++j) e_dot += A.at(h, j);
        if (!opts.lower_qdd_greater) {
          for (int j = -r; j < k; ++j) e_ddot += A.at(h + 1, j);
        } else {
          for (int j = k + 1; j <= r; ++j) e_ddot += A.at(h + 1, j);
        }
        Laurent mag = qint(A.at(h + 1, k) + 1, q_band(h + 1));
        coeff = lpow(q_dot(h), e_dot) * lpow(q_ddot(h + 1), e_ddot) * mag;
      }
      out.add_term(*T, coeff);
    }
    return out;
  }

  // ---- plain basis, general multiplicity (band away from the boundary) --

  /// Enumerate t-vectors with given total and per-entry caps.
  static void enum_capped(const std::vector<long>& caps, long total,
                          const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> t(caps.size(), 0);
    auto rec = [&](auto&& self, size_t pos, long rest) -> void {
      if (pos == caps.size()) {
        if (rest == 0) f(t);
        return;
      }
      long hi = std::min(caps[pos], rest);
      for (long v = 0; v <= hi; ++v) {
        t[pos] = v;
        self(self, pos + 1, rest - v);
      }
      t[pos] = 0;
    };
    rec(rec, 0, total);
  }

  SchurElt multi_band_e(int h, long b, bool lower, const IndexMatrix& A,
                        const MulOpts& opts) {
    const int r = radius();
    if (h == xi_.m())
      throw std::invalid_argument("multiplicity above one at the boundary band");
    SchurElt out;
    auto idx = [&](int k) { return static_cast<size_t>(k + r); };
    std::vector<long> caps(2 * r + 1, 0);
    if (!lower) {
      for (int k = -r; k <= r; ++k) caps[idx(k)] = A.at(h + 1, k);
    } else if (h > 0) {
      for (int k = -r; k <= r; ++k) caps[idx(k)] = A.at(h, k);
    } else {
      // t_i + t_{-i} <= a_{0i}: cap each side by the row entry, filter below
      for (int k = -r; k <= r; ++k)
        caps[idx(k)] = k == 0 ? A.at(0, 0) / 2 : A.at(0, k);
    }
    enum_capped(caps, b, [&](const std::vector<long>& t) {
      if (lower && h == 0) {
        for (int k = 1; k <= r; ++k)
          if (t[idx(k)] + t[idx(-k)] > A.at(0, k)) return;
      }
      IndexMatrix T = A;
      for (int k = -r; k <= r; ++k) {
        long tk = t[idx(k)];
        if (tk == 0) continue;
        T.add_sym(h, k, lower ? -tk : tk);
        T.add_sym(h + 1, k, lower ? tk : -tk);
      }
      if (!T.is_valid()) return;
      Laurent coeff(1);
      if (!lower) {
        long e_dot = 0, e_ddot = 0;
        for (int k = -r; k <= r; ++k)
          for (int j = -r; j < k; ++j)
            e_dot += (A.at(h + 1, j) - t[idx(j)]) * t[idx(k)];
        if (h != 0) {
          for (int k = -r; k <= r; ++k)
            for (int j = k + 1; j <= r; ++j) e_ddot += A.at(h, j) * t[idx(k)];
          coeff = lpow(q_dot(h + 1), e_dot) * lpow(q_ddot(h), e_ddot);
          for (int k = -r; k <= r; ++k)
            coeff *= qbinom(A.at(h, k) + t[idx(k)], t[idx(k)], q_band(h));
        } else {
          for (int k = -r; k <= r; ++k) {
            for (int j = k + 1; j <= r; ++j) e_ddot += A.at(0, j) * t[idx(k)];
            for (int j = k + 1; j < -k; ++j) e_ddot += t[idx(j)] * t[idx(k)];
          }
          for (int k = -r; k < 0; ++k)
            e_ddot += t[idx(k)] * (t[idx(k)] - 1) / 2;
          coeff = lpow(q_dot(1), e_dot) * lpow(q_ddot(0), e_ddot);
          long x = (A.at(0, 0) - 1) / 2;
          coeff *= exact_div(cfact(x + t[idx(0)]),
                             cfact(x) * qfact(t[idx(0)]));
          for (int k = 1; k <= r; ++k) {
            long tk = t[idx(k)], tmk = t[idx(-k)];
            coeff *= exact_div(
                qfact(A.at(0, k) + tk + tmk),
                qfact(A.at(0, k)) * qfact(tk) * qfact(tmk));
          }
        }
      } else {
        long e_dot = 0, e_ddot = 0;
        for (int k = -r; k <= r; ++k)
          for (int j = k + 1; j <= r; ++j)
            e_dot += (A.at(h, j) - t[idx(j)]) * t[idx(k)];
        if (!opts.lower_qdd_greater) {
          for (int k = -r; k <= r; ++k)
            for (int j = -r; j < k; ++j)
              e_ddot += A.at(h + 1, j) * t[idx(k)];
        } else {
          for (int k = -r; k <= r; ++k)
            for (int j = k + 1; j <= r; ++j)
              e_ddot += A.at(h + 1, j) * t[idx(k)];
        }
        coeff = lpow(q_dot(h), e_dot) * lpow(q_ddot(h + 1), e_ddot);
        for (int k = -r; k <= r; ++k)
          coeff *= qbinom(A.at(h + 1, k) + t[idx(k)], t[idx(k)],
                          q_band(h + 1));
      }
      out.add_term(T, coeff);
    });
    return out;
  }

  // ---- bracket basis, multiplicity one ----------------------------------

  /// Parity-boundary sign exponent at column k.
  long eps_boundary(const IndexMatrix& A, int k) const {
    const int r = radius();
    const int mm = xi_.m();
    long e = 0;
    for (int i = mm + 1; i <= r; ++i)
      for (int j = -r; j < k; ++j) e += A.at(i, j);
    for (int i = -r; i < -mm; ++i)
      for (int j = k + 1; j <= r; ++j) e += A.at(i, j);
    return e;
  }

  SchurElt unit_band_bracket(int h, bool lower, const IndexMatrix& A,
                             const MulOpts& opts) {
    const int r = radius();
    const int mm = xi_.m();
    const int sgn_hh1 =
        (hat_idx(h, mm) + hat_idx(h + 1, mm)) % 2 ? -1 : 1;
    SchurElt out;
    for (int k = -r; k <= r; ++k) {
      auto T = band_shift(A, h, k, 1, lower);
      if (!T) continue;
      long beta = 0;
      bool neg = false;
      Laurent mag;
      if (!lower) {
        for (int j = k; j <= r; ++j) beta += A.at(h, j);
        for (int j = k + 1; j <= r; ++j) beta -= sgn_hh1 * A.at(h + 1, j);
        if (h == mm) {
          long e = eps_boundary(A, k);
          if (opts.sign_reading == 0 && k < 0) ++e;
          neg = e % 2;
        }
        mag = (h == 0 && k == 0) ? cint(A.at(0, 0) + 1).bar()
                                 : qint(A.at(h, k) + 1,
                                        q_band(h).bar())
                                       ;
      } else {
        for (int j = -r; j <= k; ++j) beta += A.at(h + 1, j);
        for (int j = -r; j < k; ++j) beta -= sgn_hh1 * A.at(h, j);
        if (h == 0 && k > 0) beta += sgn_hh1;
        if (h == mm && eps_boundary(A, k) % 2) neg = !neg;
        bool delta_applies = opts.sign_reading == 1 ||
                             (opts.sign_reading == 2 && h == mm);
        if (delta_applies && k < 0) neg = !neg;
        mag = qint(A.at(h + 1, k) + 1, q_band(h + 1).bar());
      }
      int vdir = lower ? (hat_idx(h + 1, mm) ? -1 : 1)
                       : (hat_idx(h, mm) ? -1 : 1);
      Laurent coeff =
          Laurent::v_pow(static_cast<int>(vdir * beta)) * mag;
      if (neg) coeff = -coeff;
      out.add_term(*T, coeff);
    }
    return out;
  }

  // ---- bracket basis, general multiplicity ------------------------------

  SchurElt multi_band_bracket(int h, long b, bool lower, const IndexMatrix& A,
                              const MulOpts& opts) {
    const int r = radius();
    const int mm = xi_.m();
    if (h == mm)
      throw std::invalid_argument("multiplicity above one at the boundary band");
    SchurElt out;
    auto idx = [&](int k) { return static_cast<size_t>(k + r); };
    std::vector<long> caps(2 * r + 1, 0);
    if (!lower) {
      for (int k = -r; k <= r; ++k) caps[idx(k)] = A.at(h + 1, k);
    } else if (h > 0) {
      for (int k = -r; k <= r; ++k) caps[idx(k)] = A.at(h, k);
    } else {
      for (int k = -r; k <= r; ++k)
        caps[idx(k)] = k == 0 ? A.at(0, 0) / 2 : A.at(0, k);
    }
    const int vdir = lower ? (hat_idx(h + 1, mm) ? -1 : 1)
                           : (hat_idx(h, mm) ? -1 : 1);
    const Laurent vbase2 = Laurent::q_pow(vdir);  // v_band^2
    enum_capped(caps, b, [&](const std::vector<long>& t) {
      if (lower && h == 0) {
        for (int k = 1; k <= r; ++k)
          if (t[idx(k)] + t[idx(-k)] > A.at(0, k)) return;
      }
      IndexMatrix T = A;
      for (int k = -r; k <= r; ++k) {
        long tk = t[idx(k)];
        if (tk == 0) continue;
        T.add_sym(h, k, lower ? -tk : tk);
        T.add_sym(h + 1, k, lower ? tk : -tk);
      }
      if (!T.is_valid()) return;
      long beta = 0;
      Laurent coeff(1);
      if (!lower) {
        for (int k = -r; k <= r; ++k) {
          for (int j = k; j <= r; ++j) beta += A.at(h, j) * t[idx(k)];
          for (int j = k + 1; j <= r; ++j)
            beta -= (A.at(h + 1, j) - t[idx(j)]) * t[idx(k)];
        }
        if (h == 0) {
          for (int k = -r; k <= r; ++k)
            for (int j = k + 1; j <= -k; ++j)
              beta += t[idx(j)] * t[idx(k)];
          for (int j = -r; j <= 0; ++j)
            beta += t[idx(j)] * (t[idx(j)] - 1) / 2;
          long x = (A.at(0, 0) - 1) / 2;
          Laurent mag = exact_div(cfact(x + t[idx(0)]),
                                  cfact(x) * qfact(t[idx(0)]));
          for (int k = 1; k <= r; ++k) {
            long tk = t[idx(k)], tmk = t[idx(-k)];
            mag *= exact_div(qfact(A.at(0, k) + tk + tmk),
                             qfact(A.at(0, k)) * qfact(tk) * qfact(tmk));
          }
          coeff = mag.bar();
        } else {
          for (int k = -r; k <= r; ++k)
            coeff *= qbinom(A.at(h, k) + t[idx(k)], t[idx(k)], vbase2).bar();
        }
      } else {
        for (int k = -r; k <= r; ++k) {
          for (int j = -r; j <= k; ++j) beta += A.at(h + 1, j) * t[idx(k)];
          for (int j = -r; j < k; ++j)
            beta -= (A.at(h, j) - t[idx(j)]) * t[idx(k)];
        }
        if (h == 0) {
          for (int k = -r; k <= r; ++k)
            for (int j = -k + 1; j < k; ++j) beta += t[idx(j)] * t[idx(k)];
          for (int j = 1; j <= r; ++j)
            beta += t[idx(j)] * (t[idx(j)] + 1) / 2;
        }
        for (int k = -r; k <= r; ++k)
          coeff *=
              qbinom(A.at(h + 1, k) + t[idx(k)], t[idx(k)], vbase2).bar();
      }
      coeff = coeff * Laurent::v_pow(static_cast<int>(vdir * beta));
      out.add_term(T, coeff);
    });
    return out;
  }

  XiIndex xi_;
  std::map<MarginKey, std::vector<size_t>> blocks_;
  std::map<size_t, HeckeElt> tdc_cache_;
  std::map<size_t, HeckeElt> app_cache_;
  std::map<size_t, SchurElt> bar_cache_;
  std::map<size_t, SchurElt> can_cache_;
};

}  // namespace ischur
