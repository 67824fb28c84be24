/**
 * @file weylb.hpp
 * @brief Hyperoctahedral (signed-permutation) groups: lengths, descents,
 *        reduced words, Bruhat order, parabolic subgroups attached to
 *        two-colored compositions, and distinguished (double-)coset
 *        representatives.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace ischur {

/// Element of W(B_d): a permutation w of [-d..d] with w(-i) = -w(i), stored
/// through the images of 1..d.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(int d) : img_(d) {
    std::iota(img_.begin(), img_.end(), 1);
  }
  static SignedPerm from_images(std::vector<int> img) {
    SignedPerm w;
    w.img_ = std::move(img);
#ifndef NDEBUG
    int d = static_cast<int>(w.img_.size());
    std::vector<bool> seen(d + 1, false);
    for (int v : w.img_) {
      int a = v < 0 ? -v : v;
      assert(a >= 1 && a <= d && !seen[a]);
      seen[a] = true;
    }
#endif
    return w;
  }

  /// Simple generator: s_0 = (-1,1); s_i = (i,i+1)(-i,-i-1) for i >= 1.
  static SignedPerm gen(int d, int i) {
    SignedPerm w(d);
    if (i == 0) {
      w.img_[0] = -1;
    } else {
      assert(i >= 1 && i < d);
      std::swap(w.img_[i - 1], w.img_[i]);
    }
    return w;
  }

  int d() const { return static_cast<int>(img_.size()); }
  const std::vector<int>& images() const { return img_; }

  int operator()(int i) const {
    if (i == 0) return 0;
    return i > 0 ? img_[i - 1] : -img_[-i - 1];
  }

  /// Composition (w*u)(i) = w(u(i)); matches the right action on tuples.
  friend SignedPerm operator*(const SignedPerm& w, const SignedPerm& u) {
    assert(w.d() == u.d());
    std::vector<int> img(w.d());
    for (int k = 1; k <= w.d(); ++k) img[k - 1] = w(u(k));
    return from_images(std::move(img));
  }

  SignedPerm inverse() const {
    std::vector<int> img(d());
    for (int k = 1; k <= d(); ++k) {
      int v = img_[k - 1];
      if (v > 0)
        img[v - 1] = k;
      else
        img[-v - 1] = -k;
    }
    return from_images(std::move(img));
  }

  bool is_identity() const {
    for (int k = 1; k <= d(); ++k)
      if (img_[k - 1] != k) return false;
    return true;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) {
    return !(a == b);
  }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.img_ < b.img_;
  }

  /// Number of type-B inversions:
  /// #{1<=i<j<=d : w(i)>w(j)} + #{1<=i<=j<=d : -w(i)>w(j)}.
  long length() const {
    long l = 0;
    int n = d();
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        if (i < j && (*this)(i) > (*this)(j)) ++l;
        if (-(*this)(i) > (*this)(j)) ++l;
      }
    return l;
  }

  /// Right multiplication by s_i (in place): swaps positions / negates slot 1.
  void mul_right_gen(int i) {
    if (i == 0)
      img_[0] = -img_[0];
    else
      std::swap(img_[i - 1], img_[i]);
  }
  /// Left multiplication by s_i (in place): acts on values.
  void mul_left_gen(int i) {
    for (auto& v : img_) {
      if (i == 0) {
        if (v == 1 || v == -1) v = -v;
      } else {
        if (v == i)
          v = i + 1;
        else if (v == i + 1)
          v = i;
        else if (v == -i)
          v = -(i + 1);
        else if (v == -(i + 1))
          v = -i;
      }
    }
  }

  bool has_right_descent(int i) const {
    return i == 0 ? (*this)(1) < 0 : (*this)(i) > (*this)(i + 1);
  }
  bool has_left_descent(int i) const { return inverse().has_right_descent(i); }

  /// Some reduced word (letters in 0..d-1), greedy from the right.
  std::vector<int> reduced_word() const {
    SignedPerm w = *this;
    std::vector<int> rev;
    while (!w.is_identity()) {
      int i = 0;
      while (!w.has_right_descent(i)) ++i;
      rev.push_back(i);
      w.mul_right_gen(i);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

  std::string str() const {
    std::string s = "[";
    for (int k = 0; k < d(); ++k) {
      if (k) s += ",";
      s += std::to_string(img_[k]);
    }
    return s + "]";
  }

 private:
  std::vector<int> img_;
};

/// Bruhat order by the standard descent recursion (subword property).
inline bool bruhat_leq(const SignedPerm& u, const SignedPerm& w) {
  if (u.length() > w.length()) return false;
  if (u == w) return true;
  if (w.is_identity()) return u.is_identity();
  int i = 0;
  while (!w.has_right_descent(i)) ++i;
  SignedPerm w2 = w;
  w2.mul_right_gen(i);
  if (u.has_right_descent(i)) {
    SignedPerm u2 = u;
    u2.mul_right_gen(i);
    return bruhat_leq(u2, w2);
  }
  return bruhat_leq(u, w2);
}

/// All of W(B_d) in lexicographic image order (|W| = 2^d d!).
inline std::vector<SignedPerm> all_elements(int d) {
  std::vector<int> base(d);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPerm> out;
  std::vector<int> perm = base;
  std::sort(perm.begin(), perm.end());
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> img(perm);
      for (int k = 0; k < d; ++k)
        if (mask & (1u << k)) img[k] = -img[k];
      out.push_back(SignedPerm::from_images(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------------------
// two-colored compositions and their parabolic subgroups
// ----------------------------------------------------------------------------

/// Composition lambda = (lambda_0, ..., lambda_{m+n}) of d; part 0 spans a
/// signed block (its parabolic is a smaller hyperoctahedral group), parts
/// 1..m are even, parts m+1..m+n odd.
struct Composition {
  int m = 0, n = 0;
  std::vector<long> parts;  // size m+n+1

  long d() const { return std::accumulate(parts.begin(), parts.end(), 0L); }
  /// partial sum lambda~_i = lambda_0 + ... + lambda_i
  long tilde(int i) const {
    long s = 0;
    for (int k = 0; k <= i; ++k) s += parts[k];
    return s;
  }
  /// parity of part index (0 for |i|<=m, 1 otherwise)
  int hat(int i) const { return std::abs(i) <= m ? 0 : 1; }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.m == b.m && a.n == b.n && a.parts == b.parts;
  }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts < b.parts;
  }
  std::string str() const {
    std::string s = "(";
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k) s += k == static_cast<size_t>(m) + 1 ? "|" : ",";
      s += std::to_string(parts[k]);
    }
    return s + ")";
  }
};

/// All of Lambda(m|n,d): nonnegative (m+n+1)-tuples summing to d.
inline std::vector<Composition> enumerate_lambda(int m, int n, long d) {
  std::vector<Composition> out;
  std::vector<long> cur(m + n + 1, 0);
  auto rec = [&](auto&& self, int pos, long rest) -> void {
    if (pos == m + n) {
      cur[pos] = rest;
      out.push_back({m, n, cur});
      return;
    }
    for (long v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Generalized composition: a signed block of size b0 followed by ordinary
/// blocks with a parity tag each; describes parabolic subgroups such as the
/// stabilizer overlap attached to a basis matrix.
struct GenComposition {
  long b0 = 0;                             // signed-block size
  std::vector<std::pair<long, int>> parts;  // (size, parity)

  long d() const {
    long s = b0;
    for (auto& [sz, p] : parts) s += sz;
    return s;
  }
};

inline GenComposition gencomp_of(const Composition& lam) {
  GenComposition g;
  g.b0 = lam.parts[0];
  for (int i = 1; i <= lam.m + lam.n; ++i)
    if (lam.parts[i] > 0) g.parts.push_back({lam.parts[i], lam.hat(i)});
  return g;
}

/// Simple-generator index set J of the parabolic subgroup W_delta.
inline std::vector<int> simple_gens(const GenComposition& gc) {
  std::vector<int> J;
  for (long j = 0; j < gc.b0; ++j) J.push_back(static_cast<int>(j));
  long off = gc.b0;
  for (auto& [sz, p] : gc.parts) {
    for (long j = off + 1; j < off + sz; ++j) J.push_back(static_cast<int>(j));
    off += sz;
  }
  return J;
}
inline std::vector<int> simple_gens(const Composition& lam) {
  return simple_gens(gencomp_of(lam));
}

/// Generators of the parity-p factor of W_delta: the signed block counts as
/// parity 0, ordinary blocks carry their own parity tag.
inline std::vector<int> simple_gens_parity(const GenComposition& gc, int p) {
  std::vector<int> J;
  if (p == 0)
    for (long j = 0; j < gc.b0; ++j) J.push_back(static_cast<int>(j));
  long off = gc.b0;
  for (auto& [sz, par] : gc.parts) {
    if (par == p)
      for (long j = off + 1; j < off + sz; ++j) J.push_back(static_cast<int>(j));
    off += sz;
  }
  return J;
}
inline std::vector<int> simple_gens_parity(const Composition& lam, int p) {
  return simple_gens_parity(gencomp_of(lam), p);
}

/// Elements of the standard parabolic W_J by closure under generators.
inline std::vector<SignedPerm> subgroup_elements(int d,
                                                 const std::vector<int>& J) {
  std::set<SignedPerm> seen;
  std::vector<SignedPerm> queue{SignedPerm(d)};
  seen.insert(queue[0]);
  for (size_t h = 0; h < queue.size(); ++h) {
    for (int j : J) {
      SignedPerm w = queue[h];
      w.mul_right_gen(j);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

/// Longest element of the standard parabolic W_J (greedy ascent).
inline SignedPerm longest_element(int d, const std::vector<int>& J) {
  SignedPerm w(d);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (!w.has_right_descent(j)) {
        SignedPerm w2 = w;
        w2.mul_right_gen(j);
        if (w2.length() > w.length()) {
          w = w2;
          moved = true;
        }
      }
    }
  }
  return w;
}

/// w = u * x with u in W_J and x the minimal representative of the right
/// coset W_J w; lengths are additive.
inline std::pair<SignedPerm, SignedPerm> parabolic_decompose(
    const SignedPerm& w, const std::vector<int>& J) {
  SignedPerm x = w, u(w.d());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (x.has_left_descent(j)) {
        x.mul_left_gen(j);
        u.mul_right_gen(j);  // u := u * s_j, so that u * x stays equal to w
        moved = true;
        break;
      }
    }
  }
  return {u, x};
}

/// Minimal right-coset representatives D_J = {w : no left descent in J}.
inline std::vector<SignedPerm> min_coset_reps(int d, const std::vector<int>& J) {
  std::vector<SignedPerm> out;
  for (const auto& w : all_elements(d)) {
    bool ok = true;
    for (int j : J)
      if (w.has_left_descent(j)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return out;
}

/// Minimal double-coset representatives for W_Jl \ W / W_Jr.
inline std::vector<SignedPerm> min_double_coset_reps(
    int d, const std::vector<int>& Jl, const std::vector<int>& Jr) {
  std::vector<SignedPerm> out;
  for (const auto& w : all_elements(d)) {
    bool ok = true;
    for (int j : Jl)
      if (w.has_left_descent(j)) {
        ok = false;
        break;
      }
    if (ok)
      for (int j : Jr)
        if (w.has_right_descent(j)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(w);
  }
  return out;
}

// ----------------------------------------------------------------------------
// tuples over the index alphabet and weights
// ----------------------------------------------------------------------------

/// (t . w)_k = t_{w(k)} with t_{-j} := -t_j.
inline std::vector<int> apply_tuple(const std::vector<int>& t,
                                    const SignedPerm& w) {
  std::vector<int> r(t.size());
  for (size_t k = 0; k < t.size(); ++k) {
    int v = w(static_cast<int>(k) + 1);
    r[k] = v > 0 ? t[v - 1] : -t[-v - 1];
  }
  return r;
}

/// Weakly increasing tuple of weight lambda: lambda_0 zeros, lambda_1 ones, ...
inline std::vector<int> i_lambda(const Composition& lam) {
  std::vector<int> t;
  for (int r = 0; r <= lam.m + lam.n; ++r)
    for (long c = 0; c < lam.parts[r]; ++c) t.push_back(r);
  return t;
}

/// Weight of a tuple over [-m-n..m+n]: counts of each absolute value.
inline Composition wt(const std::vector<int>& t, int m, int n) {
  Composition lam{m, n, std::vector<long>(m + n + 1, 0)};
  for (int v : t) {
    int a = v < 0 ? -v : v;
    assert(a <= m + n);
    ++lam.parts[a];
  }
  return lam;
}

/// Membership in W_lambda via the stabilizer description.
inline bool in_parabolic(const SignedPerm& w, const Composition& lam) {
  std::vector<int> t = i_lambda(lam);
  return apply_tuple(t, w) == t;
}

/// The minimal-length g with i_lambda . g = t (brute force at desk scale).
inline SignedPerm coset_rep_for_tuple(const Composition& lam,
                                      const std::vector<int>& t) {
  const std::vector<int> base = i_lambda(lam);
  const int d = static_cast<int>(t.size());
  bool found = false;
  SignedPerm best(d);
  long best_len = 0;
  for (const auto& w : all_elements(d)) {
    if (apply_tuple(base, w) == t) {
      long l = w.length();
      if (!found || l < best_len) {
        best = w;
        best_len = l;
        found = true;
      }
    }
  }
  assert(found);
  return best;
}

// ----------------------------------------------------------------------------
// Kilmoyer intersections and longest double-coset representatives
// ----------------------------------------------------------------------------

/// J_delta = {j in J(mu) : g s_j g^{-1} in W_lambda}; for g minimal in its
/// double coset this generates g^{-1} W_lambda g  ∩  W_mu.
inline std::vector<int> overlap_gens(const Composition& lam,
                                     const SignedPerm& g,
                                     const Composition& mu) {
  std::vector<int> J;
  const int d = g.d();
  const SignedPerm gi = g.inverse();
  for (int j : simple_gens(mu)) {
    SignedPerm conj = g * SignedPerm::gen(d, j) * gi;
    if (in_parabolic(conj, lam)) J.push_back(j);
  }
  return J;
}

/// Longest element g+ of the double coset W_lambda g W_mu, for g the minimal
/// representative: g+ = w0(lambda) * g * w0(J_delta) * w0(mu).
inline SignedPerm longest_double_coset_rep(const Composition& lam,
                                           const SignedPerm& g,
                                           const Composition& mu) {
  const int d = g.d();
  SignedPerm a = longest_element(d, simple_gens(lam));
  SignedPerm b = longest_element(d, overlap_gens(lam, g, mu));
  SignedPerm c = longest_element(d, simple_gens(mu));
  return a * g * (b * c);
}

}  // namespace ischur
