/**
 * @file tensorspace.hpp
 * @brief The q-tensor superspace over the signed index alphabet: parity and
 *        length statistics on index tuples, the right Hecke action on the
 *        weighted basis, the module isomorphism onto the direct sum of
 *        signed q-permutation modules, and transport of index-matrix
 *        endomorphisms through that isomorphism.
 */
#pragma once

#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke.hpp"
#include "linalg.hpp"
#include "schur.hpp"

namespace ischur {

// ----------------------------------------------------------------------------
// statistics on index tuples
// ----------------------------------------------------------------------------

/// Inversion-type length of a tuple: pairs k < l with t_k > t_l together
/// with pairs k <= l with -t_k > t_l (the diagonal pairs count the negative
/// entries).
inline long tuple_length(const std::vector<int>& t) {
  const int d = static_cast<int>(t.size());
  long out = 0;
  for (int k = 0; k < d; ++k)
    for (int l = k; l < d; ++l) {
      if (k < l && t[k] > t[l]) ++out;
      if (-t[k] > t[l]) ++out;
    }
  return out;
}

/// Parity of a tuple: the same pair count as tuple_length, but with each
/// pair weighted by the product of the entry parities, reduced mod 2.
inline int tuple_parity(const std::vector<int>& t, int m) {
  const int d = static_cast<int>(t.size());
  long out = 0;
  for (int k = 0; k < d; ++k)
    for (int l = k; l < d; ++l) {
      const int w = hat_idx(t[k], m) * hat_idx(t[l], m);
      if (k < l && t[k] > t[l]) out += w;
      if (-t[k] > t[l]) out += w;
    }
  return static_cast<int>(out & 1);
}

/// Decomposition of a tuple as the sorted tuple of its weight moved by a
/// minimal coset representative.
struct TupleSplit {
  Composition lam;
  SignedPerm g;
};

inline TupleSplit split_tuple(const std::vector<int>& t, int m, int n) {
  Composition lam = wt(t, m, n);
  SignedPerm g = coset_rep_for_tuple(lam, t);
  return {std::move(lam), std::move(g)};
}

/// All tuples of length d over the alphabet [-m-n .. m+n], odometer order.
inline std::vector<std::vector<int>> all_tuples(int m, int n, int d) {
  const int r = m + n;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, -r);
  for (;;) {
    out.push_back(cur);
    int p = d - 1;
    while (p >= 0 && cur[p] == r) cur[p--] = -r;
    if (p < 0) break;
    ++cur[p];
  }
  return out;
}

// ----------------------------------------------------------------------------
// tensor vectors
// ----------------------------------------------------------------------------

/// Sparse vector in the tensor space, keyed by index tuples. Storage uses
/// the unweighted basis e_t; the weighted basis (v^{length} e_t) is exposed
/// through the *_bold accessors.
class TensorElt {
 public:
  TensorElt(int m, int n, int d) : m_(m), n_(n), d_(d) {}

  static TensorElt plain(int m, int n, const std::vector<int>& t) {
    TensorElt x(m, n, static_cast<int>(t.size()));
    x.add_plain(t, Laurent(1));
    return x;
  }
  static TensorElt bold(int m, int n, const std::vector<int>& t) {
    TensorElt x(m, n, static_cast<int>(t.size()));
    x.add_bold(t, Laurent(1));
    return x;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Laurent>& terms() const { return terms_; }

  Laurent coeff_plain(const std::vector<int>& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Laurent() : it->second;
  }
  Laurent coeff_bold(const std::vector<int>& t) const {
    return coeff_plain(t) * Laurent::v_pow(static_cast<int>(-tuple_length(t)));
  }

  void add_plain(const std::vector<int>& t, const Laurent& c) {
    assert(static_cast<int>(t.size()) == d_);
    if (c.is_zero()) return;
    Laurent& slot = terms_[t];
    slot += c;
    if (slot.is_zero()) terms_.erase(t);
  }
  void add_bold(const std::vector<int>& t, const Laurent& c) {
    add_plain(t, c * Laurent::v_pow(static_cast<int>(tuple_length(t))));
  }

  TensorElt& operator+=(const TensorElt& o) {
    assert(m_ == o.m_ && n_ == o.n_ && d_ == o.d_);
    for (const auto& [t, c] : o.terms_) add_plain(t, c);
    return *this;
  }
  TensorElt& operator-=(const TensorElt& o) {
    assert(m_ == o.m_ && n_ == o.n_ && d_ == o.d_);
    for (const auto& [t, c] : o.terms_) add_plain(t, -c);
    return *this;
  }
  TensorElt& operator*=(const Laurent& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, f] : terms_) f = f * c;
    return *this;
  }
  friend bool operator==(const TensorElt& a, const TensorElt& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorElt& a, const TensorElt& b) {
    return !(a == b);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")e[";
      for (size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
      os << "]";
    }
    return os.str();
  }

 private:
  int m_ = 0, n_ = 0, d_ = 0;
  std::map<std::vector<int>, Laurent> terms_;
};

// ----------------------------------------------------------------------------
// the right Hecke action
// ----------------------------------------------------------------------------

/// Right action of the k-th generator (k = 0 flips the first entry's sign,
/// k >= 1 swaps positions k, k+1), given by its case table on the weighted
/// basis.
inline TensorElt act_gen(const TensorElt& x, int k) {
  assert(k >= 0 && k < x.d());
  const int m = x.m();
  const Laurent q = Laurent::v_pow(2);
  const Laurent qm1 = q - Laurent(1);
  TensorElt out(x.m(), x.n(), x.d());
  for (const auto& [t, c] : x.terms()) {
    const Laurent b = c * Laurent::v_pow(static_cast<int>(-tuple_length(t)));
    if (k == 0) {
      const int a = t[0];
      if (a == 0) {
        out.add_bold(t, b * q);
        continue;
      }
      std::vector<int> s = t;
      s[0] = -a;
      const Laurent sg(hat_idx(a, m) ? -1 : 1);
      if (a > 0) {
        out.add_bold(s, b * sg);
      } else {
        out.add_bold(s, b * sg * q);
        out.add_bold(t, b * qm1);
      }
    } else {
      const int a = t[k - 1];
      const int b2 = t[k];
      if (a == b2) {
        if (hat_idx(a, m) == 0)
          out.add_bold(t, b * q);
        else
          out.add_bold(t, -b);
        continue;
      }
      std::vector<int> s = t;
      std::swap(s[k - 1], s[k]);
      const Laurent sg((hat_idx(a, m) && hat_idx(b2, m)) ? -1 : 1);
      if (a < b2) {
        out.add_bold(s, b * sg);
      } else {
        out.add_bold(s, b * sg * q);
        out.add_bold(t, b * qm1);
      }
    }
  }
  return out;
}

/// Right action of a word in the generators, applied left to right.
inline TensorElt act_word(const TensorElt& x, const std::vector<int>& word) {
  TensorElt y = x;
  for (int k : word) y = act_gen(y, k);
  return y;
}

/// Right action of a full Hecke element (via reduced words, by linearity).
inline TensorElt act(const TensorElt& x, const HeckeElt& h) {
  assert(h.d() == x.d());
  TensorElt out(x.m(), x.n(), x.d());
  for (const auto& [w, c] : h.terms()) {
    TensorElt y = act_word(x, w.reduced_word());
    y *= c;
    out += y;
  }
  return out;
}

/// Concatenation product: multiplicative on the weighted basis, so on the
/// unweighted basis it carries the correction v^{length(jk)-length(j)-length(k)}.
inline TensorElt concat_mul(const TensorElt& x, const TensorElt& y) {
  assert(x.m() == y.m() && x.n() == y.n());
  TensorElt out(x.m(), x.n(), x.d() + y.d());
  for (const auto& [tx, cx] : x.terms()) {
    const Laurent bx = cx * Laurent::v_pow(static_cast<int>(-tuple_length(tx)));
    for (const auto& [ty, cy] : y.terms()) {
      const Laurent by =
          cy * Laurent::v_pow(static_cast<int>(-tuple_length(ty)));
      std::vector<int> t = tx;
      t.insert(t.end(), ty.begin(), ty.end());
      out.add_bold(t, bx * by);
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// the direct sum of signed q-permutation modules
// ----------------------------------------------------------------------------

/// Element of the direct sum over weights of the cyclic modules generated by
/// the signed parabolic sums, written in the basis indexed by minimal coset
/// representatives.
struct ModuleElt {
  std::map<Composition, std::map<SignedPerm, Laurent>> blocks;

  void add(const Composition& lam, const SignedPerm& g, const Laurent& c) {
    if (c.is_zero()) return;
    auto& blk = blocks[lam];
    Laurent& slot = blk[g];
    slot += c;
    if (slot.is_zero()) {
      blk.erase(g);
      if (blk.empty()) blocks.erase(lam);
    }
  }
  bool is_zero() const { return blocks.empty(); }
  friend bool operator==(const ModuleElt& a, const ModuleElt& b) {
    return a.blocks == b.blocks;
  }
  friend bool operator!=(const ModuleElt& a, const ModuleElt& b) {
    return !(a == b);
  }
};

/// Plain Hecke form of one block: sum of c_g * (generator sum) * T_g.
inline HeckeElt block_raw(const Composition& lam,
                          const std::map<SignedPerm, Laurent>& blk) {
  HeckeElt out = HeckeElt::zero(static_cast<int>(lam.d()));
  for (const auto& [g, c] : blk) {
    HeckeElt x = xy_lambda(lam);
    x.mul_basis_right(g);
    x *= c;
    out += x;
  }
  return out;
}

/// Inverse of block_raw: coefficients on the minimal-representative basis.
/// The minimal-length term of each remaining coset is its representative
/// with coefficient exactly the basis coefficient, so peeling minimal terms
/// is exact; a minimal term outside the representative set means the element
/// is not in the module.
inline std::map<SignedPerm, Laurent> block_extract(const Composition& lam,
                                                   HeckeElt h) {
  std::map<SignedPerm, Laurent> out;
  const std::vector<int> J = simple_gens(lam);
  while (!h.is_zero()) {
    const SignedPerm* best = nullptr;
    long best_len = 0;
    for (const auto& [w, c] : h.terms()) {
      const long l = w.length();
      if (!best || l < best_len) {
        best = &w;
        best_len = l;
      }
    }
    const SignedPerm w = *best;
    for (int j : J)
      if (w.has_left_descent(j))
        throw std::domain_error("element is outside the permutation module");
    const Laurent c = h.coeff(w);
    assert(!out.count(w));
    out[w] = c;
    HeckeElt sub = xy_lambda(lam);
    sub.mul_basis_right(w);
    sub *= c;
    h -= sub;
  }
  return out;
}

/// Right action of the k-th generator on a module element.
inline ModuleElt module_act_gen(const ModuleElt& x, int k) {
  ModuleElt out;
  for (const auto& [lam, blk] : x.blocks) {
    HeckeElt raw = block_raw(lam, blk);
    raw.mul_gen_right(k);
    for (const auto& [g, c] : block_extract(lam, raw)) out.add(lam, g, c);
  }
  return out;
}

// ----------------------------------------------------------------------------
// the isomorphism and endomorphism transport
// ----------------------------------------------------------------------------

/// Forward isomorphism: the weighted basis vector of a tuple maps, up to the
/// tuple's parity sign, to the minimal-representative basis vector of its
/// weight block.
inline ModuleElt phi_iso(const TensorElt& x) {
  ModuleElt out;
  for (const auto& [t, c] : x.terms()) {
    const Laurent b = c * Laurent::v_pow(static_cast<int>(-tuple_length(t)));
    TupleSplit sp = split_tuple(t, x.m(), x.n());
    out.add(sp.lam, sp.g, tuple_parity(t, x.m()) ? -b : b);
  }
  return out;
}

/// Inverse isomorphism.
inline TensorElt phi_inv(const ModuleElt& x, int m, int n, int d) {
  TensorElt out(m, n, d);
  for (const auto& [lam, blk] : x.blocks) {
    const std::vector<int> base = i_lambda(lam);
    for (const auto& [g, c] : blk) {
      const std::vector<int> t = apply_tuple(base, g);
      out.add_bold(t, tuple_parity(t, m) ? -c : c);
    }
  }
  return out;
}

/// Action of a basis endomorphism on a module element: it kills every block
/// except its column margin and sends that block's cyclic generator to the
/// double-coset element, extended Hecke-linearly.
inline ModuleElt matrix_apply(SchurAlgebra& S, const IndexMatrix& A,
                              const ModuleElt& x) {
  ModuleElt out;
  auto it = x.blocks.find(A.col());
  if (it == x.blocks.end()) return out;
  HeckeElt raw = HeckeElt::zero(static_cast<int>(S.d()));
  for (const auto& [g, c] : it->second) {
    HeckeElt term = S.tdc(A);
    term.mul_basis_right(g);
    term *= c;
    raw += term;
  }
  for (const auto& [g, c] : block_extract(A.row(), raw)) out.add(A.row(), g, c);
  return out;
}

/// The transported endomorphism of a basis matrix, as its columns on the
/// weighted tuple basis.
inline std::map<std::vector<int>, TensorElt> transported_columns(
    SchurAlgebra& S, const IndexMatrix& A,
    const std::vector<std::vector<int>>& tuples) {
  std::map<std::vector<int>, TensorElt> cols;
  const int m = S.m(), n = S.n(), d = static_cast<int>(S.d());
  for (const auto& t : tuples) {
    const TensorElt x = TensorElt::bold(m, n, t);
    cols.emplace(t, phi_inv(matrix_apply(S, A, phi_iso(x)), m, n, d));
  }
  return cols;
}

/// Apply a transported endomorphism (given by its columns) to a vector.
inline TensorElt apply_columns(
    const std::map<std::vector<int>, TensorElt>& cols, const TensorElt& x) {
  TensorElt out(x.m(), x.n(), x.d());
  for (const auto& [t, c] : x.terms()) {
    TensorElt col = cols.at(t);
    col *= c * Laurent::v_pow(static_cast<int>(-tuple_length(t)));
    out += col;
  }
  return out;
}

/// Summary of transporting the whole basis into the endomorphism ring of the
/// tensor space.
struct TransportReport {
  long basis_count = 0;    ///< number of basis matrices transported
  bool all_commute = true; ///< every transported map commutes with the action
  bool identity_ok = true; ///< the transported identity is the identity map
  long rank = 0;           ///< rank of the matrix of transported coefficients
};

/// Transport every basis matrix, check Hecke-linearity of the images
/// generator by generator, check the transported identity, and compute the
/// rank of the coefficient matrix of the images. The rank over the fraction
/// field is computed by specializing v at a rational point: the specialized
/// rank is a lower bound for the generic rank, and the generic rank is at
/// most the row count, so hitting the row count certifies equality. A
/// shortfall falls back to fraction-free elimination over the Laurent ring.
inline TransportReport transport_report(SchurAlgebra& S,
                                        const Rat& point = Rat(2)) {
  TransportReport rep;
  const int m = S.m(), n = S.n(), d = static_cast<int>(S.d());
  const auto tuples = all_tuples(m, n, d);
  const long T = static_cast<long>(tuples.size());
  std::map<std::vector<int>, long> tix;
  for (const auto& t : tuples) tix.emplace(t, static_cast<long>(tix.size()));

  rep.basis_count = static_cast<long>(S.xi().size());
  std::vector<std::vector<Laurent>> coords;
  coords.reserve(rep.basis_count);
  std::map<std::vector<int>, TensorElt> idcols;
  for (const auto& t : tuples) idcols.emplace(t, TensorElt(m, n, d));

  for (size_t idx = 0; idx < S.xi().size(); ++idx) {
    const IndexMatrix& A = S.xi().mat(idx);
    const auto cols = transported_columns(S, A, tuples);

    for (const auto& t : tuples) {
      for (int k = 0; k < d; ++k) {
        const TensorElt moved = act_gen(TensorElt::bold(m, n, t), k);
        const TensorElt lhs = apply_columns(cols, moved);
        const TensorElt rhs = act_gen(cols.at(t), k);
        if (lhs != rhs) rep.all_commute = false;
      }
    }

    auto form = chevalley_form(A);
    if (form && form->a == 0)
      for (const auto& t : tuples) idcols.at(t) += cols.at(t);

    std::vector<Laurent> row(T * T);
    for (const auto& [t, col] : cols) {
      const long cidx = tix.at(t);
      for (const auto& [u, c] : col.terms())
        row[cidx * T + tix.at(u)] =
            c * Laurent::v_pow(static_cast<int>(-tuple_length(u)));
    }
    coords.push_back(std::move(row));
  }

  for (const auto& t : tuples)
    if (idcols.at(t) != TensorElt::bold(m, n, t)) rep.identity_ok = false;

  std::vector<std::vector<Rat>> num(coords.size());
  for (size_t r = 0; r < coords.size(); ++r) {
    num[r].reserve(coords[r].size());
    for (const Laurent& f : coords[r]) num[r].push_back(laurent_eval(f, point));
  }
  rep.rank = rank_rational(std::move(num));
  if (rep.rank < rep.basis_count) rep.rank = rank_laurent(std::move(coords));
  return rep;
}

}  // namespace ischur
