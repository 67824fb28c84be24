/**
 * @file comb.hpp
 * @brief Centro-symmetric index matrices, the block-intersection
 *        correspondence kappa, margin compositions, matrix statistics
 *        (lengths, dominance order, factorial weights), and Chevalley
 *        matrix constructors.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "weylb.hpp"

namespace ischur {

/// Parity of an index value: 0 on [-m..m], 1 outside.
inline int hat_idx(int i, int m) { return std::abs(i) <= m ? 0 : 1; }

// ----------------------------------------------------------------------------
// IndexMatrix: natural-number matrices over the symmetric index alphabet
// ----------------------------------------------------------------------------

/// Square matrix over the alphabet [-m-n..m+n] with the centro-symmetry
/// a_{ij} = a_{-i,-j}, encoding how one block system meets a translated one.
class IndexMatrix {
 public:
  IndexMatrix(int m, int n)
      : m_(m), n_(n), r_(m + n), data_((2 * (m + n) + 1) * (2 * (m + n) + 1), 0) {}

  int m() const { return m_; }
  int n() const { return n_; }
  /// Largest index, i.e. m+n.
  int radius() const { return r_; }
  /// Side length 2(m+n)+1 of the matrix.
  int size() const { return 2 * r_ + 1; }
  /// Parity of an index for this alphabet.
  int hat(int i) const { return hat_idx(i, m_); }

  long at(int i, int j) const { return data_[idx(i, j)]; }
  long& at(int i, int j) { return data_[idx(i, j)]; }

  /// Add v at (i,j) and at (-i,-j); the centre cell (0,0) receives 2v.
  void add_sym(int i, int j, long v) {
    data_[idx(i, j)] += v;
    data_[idx(-i, -j)] += v;
  }

  long total() const { return std::accumulate(data_.begin(), data_.end(), 0L); }
  /// Degree d with total = 2d+1.
  long d() const { return (total() - 1) / 2; }

  /// Validity: nonnegative centro-symmetric entries, odd positive centre,
  /// and no entry above 1 where the row and column parities differ.
  bool is_valid() const {
    for (int i = -r_; i <= r_; ++i)
      for (int j = -r_; j <= r_; ++j) {
        long a = at(i, j);
        if (a < 0 || a != at(-i, -j)) return false;
        if (hat(i) != hat(j) && a > 1) return false;
      }
    return at(0, 0) >= 1 && at(0, 0) % 2 == 1;
  }

  /// Row margin: part 0 is (a_00-1)/2 + sum of the rest of row 0, part i>0
  /// the full sum of row i.
  Composition row() const {
    Composition lam{m_, n_, std::vector<long>(r_ + 1, 0)};
    lam.parts[0] = (at(0, 0) - 1) / 2;
    for (int j = 1; j <= r_; ++j) lam.parts[0] += at(0, j);
    for (int i = 1; i <= r_; ++i)
      for (int j = -r_; j <= r_; ++j) lam.parts[i] += at(i, j);
    return lam;
  }
  /// Column margin, defined symmetrically.
  Composition col() const {
    Composition mu{m_, n_, std::vector<long>(r_ + 1, 0)};
    mu.parts[0] = (at(0, 0) - 1) / 2;
    for (int i = 1; i <= r_; ++i) mu.parts[0] += at(i, 0);
    for (int j = 1; j <= r_; ++j)
      for (int i = -r_; i <= r_; ++i) mu.parts[j] += at(i, j);
    return mu;
  }

  const std::vector<long>& key() const { return data_; }

  friend bool operator==(const IndexMatrix& a, const IndexMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IndexMatrix& a, const IndexMatrix& b) {
    return !(a == b);
  }
  friend bool operator<(const IndexMatrix& a, const IndexMatrix& b) {
    return a.data_ < b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = -r_; i <= r_; ++i) {
      if (i > -r_) os << "; ";
      for (int j = -r_; j <= r_; ++j) {
        if (j > -r_) os << " ";
        os << at(i, j);
      }
    }
    os << "]";
    return os.str();
  }

 private:
  size_t idx(int i, int j) const {
    assert(std::abs(i) <= r_ && std::abs(j) <= r_);
    return static_cast<size_t>(i + r_) * size() + (j + r_);
  }

  int m_, n_, r_;
  std::vector<long> data_;
};

// ----------------------------------------------------------------------------
// kappa: from (lambda, g, mu) to a matrix and back
// ----------------------------------------------------------------------------

/// Index of the block of the composition containing the value v: block 0 is
/// [-lam_0..lam_0], block i>0 runs (tilde_{i-1}..tilde_i], block -i mirrors.
inline int block_index(const Composition& lam, int v) {
  int a = std::abs(v);
  if (a <= lam.parts[0]) return 0;
  long t = lam.parts[0];
  for (int i = 1; i <= lam.m + lam.n; ++i) {
    t += lam.parts[i];
    if (a <= t) return v > 0 ? i : -i;
  }
  assert(false);
  return 0;
}

/// kappa(lambda, g, mu): entry (i,j) counts values x in the j-th mu-block
/// whose image g(x) lies in the i-th lambda-block.
inline IndexMatrix kappa(const Composition& lam, const SignedPerm& g,
                         const Composition& mu) {
  assert(lam.m == mu.m && lam.n == mu.n && lam.d() == mu.d());
  const int d = static_cast<int>(lam.d());
  assert(g.d() == d);
  IndexMatrix A(lam.m, lam.n);
  for (int x = -d; x <= d; ++x) {
    int gx = x == 0 ? 0 : g(x);
    ++A.at(block_index(lam, gx), block_index(mu, x));
  }
  return A;
}

/// All (g, kappa(lam,g,mu)) with g a minimal double-coset representative and
/// the matrix satisfying the parity cap (the trivial-intersection condition).
inline std::vector<std::pair<SignedPerm, IndexMatrix>> super_cosets(
    const Composition& lam, const Composition& mu) {
  std::vector<std::pair<SignedPerm, IndexMatrix>> out;
  const int d = static_cast<int>(lam.d());
  for (const auto& g :
       min_double_coset_reps(d, simple_gens(lam), simple_gens(mu))) {
    IndexMatrix A = kappa(lam, g, mu);
    if (A.is_valid()) out.push_back({g, A});
  }
  return out;
}

/// Reference inverse of kappa: margins are read off the matrix and g is
/// recovered by scanning the minimal double-coset representatives.
inline SignedPerm kappa_inv_g(const IndexMatrix& A) {
  const Composition lam = A.row(), mu = A.col();
  for (const auto& [g, B] : super_cosets(lam, mu))
    if (B == A) return g;
  assert(false && "matrix has no representative");
  return SignedPerm(static_cast<int>(A.d()));
}

// ----------------------------------------------------------------------------
// Enumeration of the matrix set and its closed count
// ----------------------------------------------------------------------------

/// All valid matrices for the given (m, n, d), in ascending entry order.
inline std::vector<IndexMatrix> enumerate_Xi(int m, int n, long d) {
  const int r = m + n;
  // free cells: row 0 columns 1..r, then all of rows 1..r
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= r; ++j) cells.push_back({0, j});
  for (int i = 1; i <= r; ++i)
    for (int j = -r; j <= r; ++j) cells.push_back({i, j});
  std::vector<IndexMatrix> out;
  IndexMatrix cur(m, n);
  auto rec = [&](auto&& self, size_t pos, long rest) -> void {
    if (pos == cells.size()) {
      cur.at(0, 0) = 2 * rest + 1;
      out.push_back(cur);
      cur.at(0, 0) = 0;
      return;
    }
    auto [i, j] = cells[pos];
    long cap = hat_idx(i, m) != hat_idx(j, m) ? std::min(rest, 1L) : rest;
    for (long v = 0; v <= cap; ++v) {
      cur.add_sym(i, j, v);
      self(self, pos + 1, rest - v);
      cur.add_sym(i, j, -v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Closed count of the matrix set: sum_k C(2m^2+2n^2+2m+k, k) * C(4mn+2n, d-k).
inline Int xi_count_formula(int m, int n, long d) {
  Int total = 0;
  for (long k = 0; k <= d; ++k) {
    Int a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(2 * m * m + 2 * n * n + 2 * m + k),
                 static_cast<unsigned long>(k));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(4 * m * n + 2 * n),
                 static_cast<unsigned long>(d - k));
    total += a * b;
  }
  return total;
}

/// Matrices whose row-0 and column-0 sums are both 1 (centre entry 1 and no
/// other weight on the middle row or column).
inline bool is_variant_matrix(const IndexMatrix& A) {
  return A.row().parts[0] == 0 && A.col().parts[0] == 0;
}

/// Closed count of the variant subset: sum_k C(2m^2+2n^2+k-1, k) * C(4mn, d-k).
inline Int xi_variant_count_formula(int m, int n, long d) {
  Int total = 0;
  for (long k = 0; k <= d; ++k) {
    Int a = 0, b;
    long top = 2 * m * m + 2 * n * n + k - 1;
    if (top >= 0)
      mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(top),
                   static_cast<unsigned long>(k));
    else if (k == 0)
      a = 1;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(4 * m * n),
                 static_cast<unsigned long>(d - k));
    total += a * b;
  }
  return total;
}

// ----------------------------------------------------------------------------
// The stabilizer-overlap composition delta(A) and the factorial weight
// ----------------------------------------------------------------------------

/// Generalized composition describing g^{-1} W_lam g  ∩  W_mu inside W_mu:
/// the signed part (a_00-1)/2 first, then column 0 rows 1..r, then for each
/// column j=1..r all rows -r..r in increasing order.  Part parity is the
/// parity of the column.
inline GenComposition delta_of(const IndexMatrix& A) {
  const int r = A.radius();
  GenComposition gc;
  gc.b0 = (A.at(0, 0) - 1) / 2;
  for (int i = 1; i <= r; ++i)
    if (A.at(i, 0) > 0) gc.parts.push_back({A.at(i, 0), 0});
  for (int j = 1; j <= r; ++j)
    for (int i = -r; i <= r; ++i)
      if (A.at(i, j) > 0) gc.parts.push_back({A.at(i, j), A.hat(j)});
  return gc;
}

/// Factorial weight of a matrix: the signed-part factorial at the centre
/// times plain q-factorials of the remaining cells of the index family,
/// in base q or q^{-1} according to the column parity.
inline Laurent matfact(const IndexMatrix& A) {
  const int r = A.radius();
  Laurent f = cfact((A.at(0, 0) - 1) / 2);
  auto base = [&](int j) { return Laurent::q_pow(A.hat(j) == 0 ? 1 : -1); };
  for (int j = 1; j <= r; ++j) f *= qfact(A.at(0, j), base(j));
  for (int i = 1; i <= r; ++i)
    for (int j = -r; j <= r; ++j) f *= qfact(A.at(i, j), base(j));
  return f;
}

// ----------------------------------------------------------------------------
// Length statistics and the dominance order
// ----------------------------------------------------------------------------

namespace detail {
/// The index family over which the length statistics run: the centre, the
/// positive half of row 0, and all of rows 1..r.
inline std::vector<std::pair<int, int>> stat_cells(const IndexMatrix& A) {
  const int r = A.radius();
  std::vector<std::pair<int, int>> cells{{0, 0}};
  for (int j = 1; j <= r; ++j) cells.push_back({0, j});
  for (int i = 1; i <= r; ++i)
    for (int j = -r; j <= r; ++j) cells.push_back({i, j});
  return cells;
}
/// Entry with the centre halved: (a_00-1)/2 at (0,0), a_ij elsewhere.
inline long nat_entry(const IndexMatrix& A, int i, int j) {
  return i == 0 && j == 0 ? (A.at(0, 0) - 1) / 2 : A.at(i, j);
}
}  // namespace detail

/// Crossing length: half the number of inversions between family cells and
/// arbitrary cells, ell(A) = 1/2 sum_{(i,j)} a~_ij (sum_{k<i,l>j} + sum_{k>i,l<j}) a_kl.
inline long ell(const IndexMatrix& A) {
  const int r = A.radius();
  long twice = 0;
  for (auto [i, j] : detail::stat_cells(A)) {
    long aij = detail::nat_entry(A, i, j);
    if (aij == 0) continue;
    long cross = 0;
    for (int k = -r; k <= r; ++k)
      for (int l = -r; l <= r; ++l)
        if ((k < i && l > j) || (k > i && l < j)) cross += A.at(k, l);
    twice += aij * cross;
  }
  assert(twice % 2 == 0);
  return twice / 2;
}

/// Row-spread correction: ell°(A) = 1/2 sum_{(i,j)} (-1)^{hat i} a~_ij sum_{l≠j} a_il.
inline long ell_ring(const IndexMatrix& A) {
  const int r = A.radius();
  long twice = 0;
  for (auto [i, j] : detail::stat_cells(A)) {
    long aij = detail::nat_entry(A, i, j);
    if (aij == 0) continue;
    long rowrest = 0;
    for (int l = -r; l <= r; ++l)
      if (l != j) rowrest += A.at(i, l);
    twice += (A.hat(i) == 0 ? 1 : -1) * aij * rowrest;
  }
  assert(twice % 2 == 0);
  return twice / 2;
}

/// Combined length ell^(A) = ell(A) + ell°(A).
inline long ell_hat(const IndexMatrix& A) { return ell(A) + ell_ring(A); }

/// Odd-part crossing count: entries are replaced by 1 at the centre, kept on
/// odd-parity rows and zeroed elsewhere, then crossings are counted as in ell.
inline long a_hat(const IndexMatrix& A) {
  const int r = A.radius();
  auto ring = [&](int i, int j) -> long {
    if (i == 0 && j == 0) return 1;
    return A.hat(i) == 1 ? A.at(i, j) : 0;
  };
  long twice = 0;
  for (auto [i, j] : detail::stat_cells(A)) {
    long aij = ring(i, j);
    if (aij == 0) continue;
    long cross = 0;
    for (int k = -r; k <= r; ++k)
      for (int l = -r; l <= r; ++l)
        if ((k < i && l > j) || (k > i && l < j)) cross += ring(k, l);
    twice += aij * cross;
  }
  assert(twice % 2 == 0);
  return twice / 2;
}

/// Block parity of the matrix within the graded algebra: the sum of the odd
/// parts of both margins, mod 2.
inline int parity_of(const IndexMatrix& A) {
  Composition lam = A.row(), mu = A.col();
  long s = 0;
  for (int i = lam.m + 1; i <= lam.m + lam.n; ++i)
    s += lam.parts[i] + mu.parts[i];
  return static_cast<int>(s % 2);
}

/// Corner sum sigma_ij(A) = sum_{x<=i, y>=j} a_xy.
inline long sigma(const IndexMatrix& A, int i, int j) {
  const int r = A.radius();
  long s = 0;
  for (int x = -r; x <= i; ++x)
    for (int y = j; y <= r; ++y) s += A.at(x, y);
  return s;
}

/// Dominance: equal margins and sigma_ij(A) <= sigma_ij(B) for all i < j.
inline bool leq_alg(const IndexMatrix& A, const IndexMatrix& B) {
  if (!(A.row() == B.row()) || !(A.col() == B.col())) return false;
  const int r = A.radius();
  for (int i = -r; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      if (sigma(A, i, j) > sigma(B, i, j)) return false;
  return true;
}

inline bool less_alg(const IndexMatrix& A, const IndexMatrix& B) {
  return !(A == B) && leq_alg(A, B);
}

/// Deterministic linear extension of the dominance order: Kahn's algorithm,
/// always releasing the smallest available (ell, entries) key first.
inline std::vector<IndexMatrix> linear_extension(
    const std::vector<IndexMatrix>& v) {
  const size_t n = v.size();
  std::vector<std::vector<size_t>> succ(n);
  std::vector<size_t> indeg(n, 0);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (a != b && less_alg(v[a], v[b])) {
        succ[a].push_back(b);
        ++indeg[b];
      }
  using Key = std::pair<long, std::vector<long>>;
  auto key = [&](size_t i) { return Key{ell(v[i]), v[i].key()}; };
  std::priority_queue<std::pair<Key, size_t>, std::vector<std::pair<Key, size_t>>,
                      std::greater<>>
      pq;
  for (size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) pq.push({key(i), i});
  std::vector<IndexMatrix> out;
  out.reserve(n);
  while (!pq.empty()) {
    size_t i = pq.top().second;
    pq.pop();
    out.push_back(v[i]);
    for (size_t b : succ[i])
      if (--indeg[b] == 0) pq.push({key(b), b});
  }
  assert(out.size() == n);
  return out;
}

// ----------------------------------------------------------------------------
// Chevalley matrices
// ----------------------------------------------------------------------------

/// Diagonal matrix with margins lam on both sides.
inline IndexMatrix diag_matrix(const Composition& lam) {
  IndexMatrix A(lam.m, lam.n);
  A.at(0, 0) = 2 * lam.parts[0] + 1;
  for (int i = 1; i <= lam.m + lam.n; ++i) {
    A.at(i, i) = lam.parts[i];
    A.at(-i, -i) = lam.parts[i];
  }
  return A;
}

/// Chevalley data: a matrix that is diagonal after removing a single
/// symmetric off-diagonal pair a * E^theta at (h,h+1) (raising) or (h+1,h)
/// (lowering).
struct ChevalleyForm {
  int h = 0;       // band index in [0..m+n-1]
  long a = 0;      // multiplicity (0 means the matrix is diagonal)
  bool lower = false;
};

/// Raising Chevalley matrix with column margin mu, or nothing if invalid.
inline std::optional<IndexMatrix> chevalley_upper(int h, long a,
                                                  const Composition& mu) {
  if (a < 0 || h < 0 || h >= mu.m + mu.n) return std::nullopt;
  if (mu.parts[h + 1] < a) return std::nullopt;
  Composition nu = mu;
  nu.parts[h + 1] -= a;
  IndexMatrix B = diag_matrix(nu);
  B.add_sym(h, h + 1, a);
  if (!B.is_valid()) return std::nullopt;
  return B;
}

/// Lowering Chevalley matrix with column margin mu, or nothing if invalid.
inline std::optional<IndexMatrix> chevalley_lower(int h, long a,
                                                  const Composition& mu) {
  if (a < 0 || h < 0 || h >= mu.m + mu.n) return std::nullopt;
  if (mu.parts[h] < a) return std::nullopt;
  Composition nu = mu;
  nu.parts[h] -= a;
  IndexMatrix C = diag_matrix(nu);
  C.add_sym(h + 1, h, a);
  if (!C.is_valid()) return std::nullopt;
  return C;
}

/// Recognize a Chevalley matrix; a = 0 reports a diagonal matrix.
inline std::optional<ChevalleyForm> chevalley_form(const IndexMatrix& A) {
  const int r = A.radius();
  std::vector<std::pair<int, int>> off;
  for (int i = -r; i <= r; ++i)
    for (int j = -r; j <= r; ++j)
      if (i != j && A.at(i, j) != 0) off.push_back({i, j});
  if (off.empty()) return ChevalleyForm{0, 0, false};
  if (off.size() != 2) return std::nullopt;
  auto [i, j] = off[0];
  if (off[1] != std::make_pair(-i, -j)) return std::nullopt;
  if (i < 0 || (i == 0 && j < 0)) std::tie(i, j) = off[1];
  if (j == i + 1) return ChevalleyForm{i, A.at(i, j), false};
  if (j == i - 1) return ChevalleyForm{i - 1, A.at(i, j), true};
  return std::nullopt;
}

// ----------------------------------------------------------------------------
// Memoized correspondence over a full parameter set
// ----------------------------------------------------------------------------

/// The matrix set for fixed (m,n,d) together with the minimal representative
/// of each matrix, indexed both ways.
class XiIndex {
 public:
  XiIndex(int m, int n, long d) : m_(m), n_(n), d_(d) {
    mats_ = enumerate_Xi(m, n, d);
    for (size_t i = 0; i < mats_.size(); ++i) pos_[mats_[i].key()] = i;
    std::map<std::pair<std::vector<long>, std::vector<long>>,
             std::vector<std::pair<SignedPerm, IndexMatrix>>>
        blocks;
    gmin_.assign(mats_.size(), SignedPerm(static_cast<int>(d)));
    for (size_t i = 0; i < mats_.size(); ++i) {
      Composition lam = mats_[i].row(), mu = mats_[i].col();
      auto bk = std::make_pair(lam.parts, mu.parts);
      auto it = blocks.find(bk);
      if (it == blocks.end()) it = blocks.insert({bk, super_cosets(lam, mu)}).first;
      bool found = false;
      for (const auto& [g, B] : it->second)
        if (B == mats_[i]) {
          gmin_[i] = g;
          found = true;
          break;
        }
      assert(found);
      (void)found;
    }
  }

  int m() const { return m_; }
  int n() const { return n_; }
  long d() const { return d_; }
  size_t size() const { return mats_.size(); }
  const IndexMatrix& mat(size_t i) const { return mats_[i]; }
  const SignedPerm& g(size_t i) const { return gmin_[i]; }
  const std::vector<IndexMatrix>& all() const { return mats_; }

  /// Position of a matrix in the enumeration, or npos if absent.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t index_of(const IndexMatrix& A) const {
    auto it = pos_.find(A.key());
    return it == pos_.end() ? npos : it->second;
  }

 private:
  int m_, n_;
  long d_;
  std::vector<IndexMatrix> mats_;
  std::map<std::vector<long>, size_t> pos_;
  std::vector<SignedPerm> gmin_;
};

}  // namespace ischur
