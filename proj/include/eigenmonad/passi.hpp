#pragma once

// Passi quotients of the free-group and free-abelian-group categories:
// truncated Magnus models, augmentation powers, the alternating diagonal
// elements π^d and the κ̃ families, polynomial degree of functors, and
// analyticity slices.

#include <climits>

#include "monadcore.hpp"

namespace eigenmonad {

struct DegreeOutOfRange : std::runtime_error {
  explicit DegreeOutOfRange(const std::string& w) : std::runtime_error("DegreeOutOfRange: " + w) {}
};
struct GenerationIncomplete : std::runtime_error {
  explicit GenerationIncomplete(const std::string& w) : std::runtime_error("GenerationIncomplete: " + w) {}
};
struct WindowTooSmall : std::runtime_error {
  explicit WindowTooSmall(const std::string& w) : std::runtime_error("WindowTooSmall: " + w) {}
};

enum class CatKind { Gr, Fr };

inline std::string kind_name(CatKind k) { return k == CatKind::Gr ? "gr" : "fr"; }

inline long long binom_ll(long long n, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Σ_{k≤d} n^k C(m+k−1, k)  and  Σ_{k≤d} C(nm+k−1, k), with C(−1,0) = 1, 0^0 = 1.
inline long long passi_rank_formula(CatKind kind, int n, int m, int d) {
  long long s = 0;
  for (int k = 0; k <= d; ++k) {
    if (kind == CatKind::Gr) s += ipow(n, k) * (k == 0 ? 1 : binom_ll(m + k - 1, k));
    else s += k == 0 ? 1 : binom_ll((long long)n * m + k - 1, k);
  }
  return s;
}

// -------------------------------------------------------- group elements

// Integer n×m matrix; τ^X lies in L(m,n); column j is the exponent vector of word j.
struct IntMat {
  int n = 0, m = 0;
  std::vector<long> a;  // row-major
  IntMat() = default;
  IntMat(int rows, int cols) : n(rows), m(cols), a((std::size_t)rows * cols, 0) {}
  long& at(int i, int j) { return a[(std::size_t)i * m + j]; }
  long at(int i, int j) const { return a[(std::size_t)i * m + j]; }
  bool operator==(const IntMat& o) const { return n == o.n && m == o.m && a == o.a; }
  bool operator<(const IntMat& o) const {
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    return a < o.a;
  }
  static IntMat identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
  }
  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      if (i) s += ";";
      for (int j = 0; j < m; ++j) s += (j ? " " : "") + std::to_string(at(i, j));
    }
    return s + "]";
  }
};

inline IntMat int_mul(const IntMat& A, const IntMat& B) {
  if (A.m != B.n) throw DimensionMismatch("int_mul");
  IntMat C(A.n, B.m);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.m; ++k)
      if (A.at(i, k))
        for (int j = 0; j < B.m; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
  return C;
}

// τ^Y ∘ τ^X = τ^{XY}
inline IntMat fr_compose(const IntMat& Y, const IntMat& X) { return int_mul(X, Y); }

// exponent-sum matrix of a tuple: column j = exponent sums of word j
inline IntMat alpha(const GrTuple& t) {
  IntMat A(t.n, t.m());
  for (int j = 0; j < t.m(); ++j) {
    auto e = t.w[j].exponent_sums();
    for (int i = 0; i < t.n; ++i) A.at(i, j) = e[i];
  }
  return A;
}

// γ(τ^X)_j = x_1^{X_1j} ⋯ x_n^{X_nj}
inline GrTuple gamma(const IntMat& X) {
  std::vector<Word> w;
  for (int j = 0; j < X.m; ++j) {
    Word acc = Word::identity(X.n);
    for (int i = 0; i < X.n; ++i) acc = word_mul(acc, word_pow(Word::gen(X.n, i + 1), X.at(i, j)));
    w.push_back(acc);
  }
  return GrTuple(X.n, w);
}

using GrElt = std::map<GrTuple, Q>;
using FrElt = std::map<IntMat, Q>;

template <class K>
void elt_add(const Field& F, std::map<K, Q>& e, const K& k, const Q& x) {
  Q v = F.add(e[k], x);
  if (v == 0) e.erase(k);
  else e[k] = v;
}

inline GrElt compose(const Field& F, const GrElt& f, const GrElt& g) {
  GrElt r;
  for (auto& [a, x] : f)
    for (auto& [b, y] : g) elt_add(F, r, compose(a, b), F.mul(x, y));
  return r;
}

inline FrElt compose(const Field& F, const FrElt& f, const FrElt& g) {
  FrElt r;
  for (auto& [a, x] : f)
    for (auto& [b, y] : g) elt_add(F, r, fr_compose(a, b), F.mul(x, y));
  return r;
}

// π^d_n in L(nd, n): Σ_T (−1)^{d−|T|} D^T, position (k,i) holds x_i if k ∈ T.
inline GrElt pi_gr(const Field& F, int n, int d) {
  GrElt r;
  for (unsigned T = 0; T < (1u << d); ++T) {
    std::vector<Word> w;
    for (int k = 0; k < d; ++k)
      for (int i = 1; i <= n; ++i) w.push_back((T >> k) & 1u ? Word::gen(n, i) : Word::identity(n));
    int sz = __builtin_popcount(T);
    elt_add(F, r, GrTuple(n, w), Q((d - sz) % 2 ? -1 : 1));
  }
  return r;
}

inline FrElt pi_fr(const Field& F, int n, int d) {
  FrElt r;
  for (unsigned T = 0; T < (1u << d); ++T) {
    IntMat X(n, n * d);
    for (int k = 0; k < d; ++k)
      if ((T >> k) & 1u)
        for (int i = 0; i < n; ++i) X.at(i, k * n + i) = 1;
    int sz = __builtin_popcount(T);
    elt_add(F, r, X, Q((d - sz) % 2 ? -1 : 1));
  }
  return r;
}

// --------------------------------------------------------------- cells

// Basis monomials of the truncated model of 𝒫^D(m,n).  Gr keys are tensor
// keys (factor = word in letter bytes 1..n).  Fr keys are byte strings of
// exponents of the nm variables t_{ik}, variable index k*n + i.
class PassiCell {
 public:
  PassiCell(const Field& F, CatKind kind, int n, int m, int D) : F_(F), kind_(kind), n_(n), m_(m), D_(D) {
    if (n < 0 || m < 0 || D < 0) throw std::invalid_argument("negative cell parameters");
    std::vector<std::pair<int, std::string>> keys;
    if (kind == CatKind::Gr) enumerate_gr(keys);
    else enumerate_fr(keys);
    std::sort(keys.begin(), keys.end());
    std::vector<std::string> k;
    for (auto& [d, s] : keys) {
      k.push_back(s);
      deg_.push_back(d);
    }
    idx_ = KeyIndex(k);
  }

  const Field& field() const { return F_; }
  CatKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int D() const { return D_; }
  int dim() const { return idx_.size(); }
  int degree(int i) const { return deg_[i]; }
  const std::string& key(int i) const { return idx_.keys[i]; }
  int index(const std::string& k) const { return idx_.at(k); }
  const KeyIndex& keys() const { return idx_; }

  std::string label(int i) const {
    const std::string& k = key(i);
    if (kind_ == CatKind::Gr) return m_ == 0 ? "1" : key_str(k);
    std::string s;
    for (int v = 0; v < (int)k.size(); ++v)
      if (k[v]) {
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(v % n_ + 1) + std::to_string(v / n_ + 1);
        if (k[v] > 1) s += "^" + std::to_string((int)k[v]);
      }
    return s.empty() ? "1" : s;
  }

  SparseVec q(const GrTuple& t) const {
    if (kind_ != CatKind::Gr || t.n != n_ || t.m() != m_) throw GeneratorMismatch("tuple does not fit the cell");
    return from_poly(magnus_tuple(F_, t, D_));
  }
  SparseVec q(const IntMat& X) const {
    if (kind_ != CatKind::Fr || X.n != n_ || X.m != m_) throw GeneratorMismatch("matrix does not fit the cell");
    std::vector<long> v((std::size_t)n_ * m_);
    for (int k = 0; k < m_; ++k)
      for (int i = 0; i < n_; ++i) v[k * n_ + i] = X.at(i, k);
    return from_poly(abelian_magnus(F_, v, D_));
  }
  SparseVec q(const GrElt& e) const {
    Accumulator acc(F_);
    for (auto& [t, x] : e) acc.add(x, q(t));
    return acc.take();
  }
  SparseVec q(const FrElt& e) const {
    Accumulator acc(F_);
    for (auto& [t, x] : e) acc.add(x, q(t));
    return acc.take();
  }
  SparseVec from_poly(const TensorPoly& p) const {
    std::map<int, Q> m;
    for (auto& [k, x] : p.c) m[idx_.at(k)] = x;
    return from_map(F_, m);
  }
  SparseVec from_poly(const CommPolyTrunc& p) const {
    std::map<int, Q> m;
    for (auto& [e, x] : p.c) m[idx_.at(exp_key(e))] = x;
    return from_map(F_, m);
  }
  static std::string exp_key(const std::vector<int>& e) {
    std::string s;
    for (int x : e) s.push_back((char)x);
    return s;
  }

  // span of monomials of degree ≥ d
  Subspace aug_power(int d) const {
    if (d < 0 || d > D_ + 1) throw DegreeOutOfRange(std::to_string(d));
    std::vector<SparseVec> v;
    for (int i = 0; i < dim(); ++i)
      if (deg_[i] >= d) v.push_back(SparseVec::unit(i));
    return Subspace::span(F_, dim(), v);
  }

 private:
  void enumerate_gr(std::vector<std::pair<int, std::string>>& out) const {
    if (m_ == 0) {
      out.push_back({0, ""});
      return;
    }
    std::vector<std::string> f(m_);
    std::function<void(int, int)> rec = [&](int j, int left) {
      if (j == m_) {
        int d = 0;
        for (auto& w : f) d += (int)w.size();
        out.push_back({d, join_factors(f)});
        return;
      }
      std::function<void(int)> grow = [&](int l) {
        rec(j + 1, l);
        if (l == 0) return;
        for (int i = 1; i <= n_; ++i) {
          f[j].push_back((char)i);
          grow(l - 1);
          f[j].pop_back();
        }
      };
      grow(left);
    };
    rec(0, D_);
  }
  void enumerate_fr(std::vector<std::pair<int, std::string>>& out) const {
    int nv = n_ * m_;
    std::vector<int> e(nv, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
      if (v == nv) {
        out.push_back({D_ - left, exp_key(e)});
        return;
      }
      for (int x = 0; x <= left; ++x) {
        e[v] = x;
        rec(v + 1, left - x);
      }
      e[v] = 0;
    };
    rec(0, D_);
  }

  Field F_;
  CatKind kind_;
  int n_, m_, D_;
  KeyIndex idx_;
  std::vector<int> deg_;
};

// ----------------------------------------------------------- Passi monad

// 𝒫^D over labels 0..cap: T(Y,X) is the cell with m = Y factors over n = X letters.
class PassiMonad : public Monad {
 public:
  PassiMonad(const Field& F, CatKind kind, int D, int cap)
      : Monad(F, range(cap)), kind_(kind), D_(D) {}

  CatKind kind() const { return kind_; }
  int D() const { return D_; }

  const PassiCell& cell(int Y, int X) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cells_.find({Y, X});
    if (it == cells_.end()) it = cells_.emplace(std::make_pair(Y, X), std::make_unique<PassiCell>(field(), kind_, X, Y, D_)).first;
    return *it->second;
  }

  int dim(int Y, int X) const override { return cell(Y, X).dim(); }
  std::string basis_label(int Y, int X, int i) const override { return cell(Y, X).label(i); }
  SparseVec unit(int X) const override {
    return kind_ == CatKind::Gr ? cell(X, X).q(GrTuple::identity(X)) : cell(X, X).q(IntMat::identity(X));
  }

  static std::vector<int> range(int cap) {
    std::vector<int> v;
    for (int i = 0; i <= cap; ++i) v.push_back(i);
    return v;
  }

 protected:
  SparseVec compute_comp(int Z, int Y, int X, int a, int b) const override {
    return kind_ == CatKind::Gr ? comp_gr(Z, Y, X, a, b) : comp_fr(Z, Y, X, a, b);
  }

 private:
  // a = ⊗_i ∏_{X_j ∈ u_i} (x_j − 1); b = ⊗_j ∏(x − 1) over the letters of v_j
  // expands into ± tuples of positive subwords; a ∘ t = ⊗_i ∏ (M(t_j) − 1).
  SparseVec comp_gr(int Z, int Y, int X, int a, int b) const {
    const PassiCell &A = cell(Z, Y), &B = cell(Y, X), &C = cell(Z, X);
    const Field& F = field();
    std::vector<std::string> u = Z == 0 ? std::vector<std::string>{} : split_factors(A.key(a));
    std::vector<std::string> v = Y == 0 ? std::vector<std::string>{} : split_factors(B.key(b));
    std::vector<bool> used(Y + 1, false);
    for (auto& w : u)
      for (char c : w) used[(int)c] = true;
    for (int j = 1; j <= Y; ++j)
      if (used[j] != !v[j - 1].empty()) return {};
    // per letter j: list of (sign, M(subword) − 1)
    std::vector<std::vector<std::pair<int, TensorPoly>>> opts(Y + 1);
    for (int j = 1; j <= Y; ++j) {
      const std::string& w = v[j - 1];
      int L = (int)w.size();
      for (unsigned S = 1; S < (1u << L); ++S) {
        std::vector<int> letters;
        for (int p = 0; p < L; ++p)
          if ((S >> p) & 1u) letters.push_back((int)w[p]);
        TensorPoly mm = magnus(F, Word(X, letters), D_);
        mm.add(std::string(), -1);
        opts[j].push_back({(L - __builtin_popcount(S)) % 2 ? -1 : 1, std::move(mm)});
      }
    }
    std::vector<int> live;
    for (int j = 1; j <= Y; ++j)
      if (used[j]) live.push_back(j);
    std::vector<int> pick(Y + 1, 0);
    Accumulator acc(F);
    while (true) {
      int sign = 1;
      for (int j : live) sign *= opts[j][pick[j]].first;
      TensorPoly out = TensorPoly::one(F, X, 0, D_);
      bool zero = false;
      for (int i = 0; i < Z && !zero; ++i) {
        TensorPoly fac = TensorPoly::one(F, X, 1, D_);
        for (char c : u[i]) fac = tp_mul(fac, opts[(int)c][pick[(int)c]].second);
        out = tp_tensor(out, fac);
        zero = out.is_zero();
      }
      if (!zero) {
        out.m = Z;
        acc.add(Q(sign), C.from_poly(out));
      }
      int k = (int)live.size() - 1;
      while (k >= 0 && ++pick[live[k]] == (int)opts[live[k]].size()) pick[live[k--]] = 0;
      if (k < 0) break;
    }
    return acc.take();
  }

  // a = ∏ (τ_{jk} − 1)^{p_jk}; b = Σ_{R≤e} ∏ C(e,r)(−1)^{e−r} τ^R;
  // a ∘ τ^R = ∏_{j,k} (∏_i (1+t_ik)^{R_ij} − 1)^{p_jk}.
  SparseVec comp_fr(int Z, int Y, int X, int a, int b) const {
    const PassiCell &A = cell(Z, Y), &B = cell(Y, X), &C = cell(Z, X);
    const Field& F = field();
    const std::string &p = A.key(a), &e = B.key(b);
    std::vector<bool> used(Y, false);
    for (int k = 0; k < Z; ++k)
      for (int j = 0; j < Y; ++j)
        if (p[k * Y + j]) used[j] = true;
    for (int j = 0; j < Y; ++j) {
      bool nonzero = false;
      for (int i = 0; i < X; ++i) nonzero |= e[j * X + i] != 0;
      if (used[j] != nonzero) return {};
    }
    int nv = X * Y;
    std::vector<int> r(nv, 0);
    Accumulator acc(F);
    const int outvars = X * Z;
    while (true) {
      Q coef = 1;
      for (int v = 0; v < nv; ++v) {
        coef *= binom_q(e[v], r[v]);
        if ((e[v] - r[v]) % 2) coef = -coef;
      }
      CommPolyTrunc prod = CommPolyTrunc::one(F, outvars, D_);
      for (int k = 0; k < Z && !prod.c.empty(); ++k)
        for (int j = 0; j < Y; ++j) {
          int pw = p[k * Y + j];
          if (!pw) continue;
          std::vector<long> vec(outvars, 0);
          for (int i = 0; i < X; ++i) vec[k * X + i] = r[j * X + i];
          CommPolyTrunc g = abelian_magnus(F, vec, D_);
          g.add(std::vector<int>(outvars, 0), -1);
          for (int s = 0; s < pw; ++s) prod = cp_mul(prod, g);
        }
      if (!prod.c.empty()) acc.add(F.norm(coef), C.from_poly(prod));
      int v = nv - 1;
      while (v >= 0 && ++r[v] > e[v]) r[v--] = 0;
      if (v < 0) break;
    }
    return acc.take();
  }

  CatKind kind_;
  int D_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<PassiCell>> cells_;
};

// ------------------------------------------------------ enumerations

// Reduced words over n letters of exact length L, in lexicographic order of
// the letter sequence (letters ordered 1,−1,2,−2,...).
inline void for_each_word(int n, int L, const std::function<bool(const Word&)>& fn) {
  std::vector<int> l;
  std::function<bool()> rec = [&]() -> bool {
    if ((int)l.size() == L) return fn(Word(n, l));
    for (int g = 1; g <= n; ++g)
      for (int s : {1, -1}) {
        int x = g * s;
        if (!l.empty() && l.back() == -x) continue;
        l.push_back(x);
        bool go = rec();
        l.pop_back();
        if (!go) return false;
      }
    return true;
  };
  if (n == 0 && L > 0) return;
  rec();
}

// m-tuples of reduced words over n letters with total length exactly L.
inline bool for_each_tuple(int n, int m, int L, const std::function<bool(const GrTuple&)>& fn) {
  std::vector<Word> w(m);
  std::function<bool(int, int)> rec = [&](int j, int left) -> bool {
    if (j == m) return left == 0 ? fn(GrTuple(n, w)) : true;
    for (int l = (j == m - 1 ? left : 0); l <= left; ++l) {
      bool go = true;
      for_each_word(n, l, [&](const Word& x) {
        w[j] = x;
        go = rec(j + 1, left - l);
        return go;
      });
      if (!go) return false;
    }
    return true;
  };
  if (m == 0) return L == 0 ? fn(GrTuple(n, {})) : true;
  return rec(0, L);
}

// n×m integer matrices with Σ|entries| exactly L.
inline bool for_each_intmat(int n, int m, int L, const std::function<bool(const IntMat&)>& fn) {
  IntMat X(n, m);
  int N = n * m;
  std::function<bool(int, int)> rec = [&](int v, int left) -> bool {
    if (v == N) return left == 0 ? fn(X) : true;
    for (int a = 0; a <= left; ++a)
      for (int s : {1, -1}) {
        if (a == 0 && s < 0) continue;
        X.a[v] = a * s;
        if (!rec(v + 1, left - a)) return false;
      }
    X.a[v] = 0;
    return true;
  };
  return rec(0, L);
}

// Rank of the q-images of every morphism of total length ≤ D (inverses included).
inline int passi_rank_computed(const PassiCell& c) {
  EchelonBuilder B(c.field(), c.dim());
  for (int L = 0; L <= c.D() && B.rank() < c.dim(); ++L) {
    if (c.kind() == CatKind::Gr)
      for_each_tuple(c.n(), c.m(), L, [&](const GrTuple& t) {
        B.add(c.q(t));
        return B.rank() < c.dim();
      });
    else
      for_each_intmat(c.n(), c.m(), L, [&](const IntMat& X) {
        B.add(c.q(X));
        return B.rank() < c.dim();
      });
  }
  return B.rank();
}

// --------------------------------------------------- polynomial ideals

struct IdealSpan {
  Subspace span;
  long generators = 0;  // elements generated before the span stabilized
};

// Span of q(f ∘ π^d_n) over f in L(m, nd) of total length ≤ L, stopping once
// `target` is reached.  Throws GenerationIncomplete if it is not.
inline IdealSpan pi_ideal_span(const PassiCell& c, int d, int L, const Subspace& target) {
  const Field& F = c.field();
  const int n = c.n(), m = c.m();
  EchelonBuilder B(F, c.dim());
  long count = 0;
  auto done = [&] { return B.rank() >= target.dim(); };
  if (c.kind() == CatKind::Gr) {
    GrElt pi = pi_gr(F, n, d);
    for (int l = 0; l <= L && !done(); ++l)
      for_each_tuple(n * d, m, l, [&](const GrTuple& f) {
        ++count;
        B.add(c.q(compose(F, GrElt{{f, Q(1)}}, pi)));
        return !done();
      });
  } else {
    FrElt pi = pi_fr(F, n, d);
    for (int l = 0; l <= L && !done(); ++l)
      for_each_intmat(n * d, m, l, [&](const IntMat& f) {
        ++count;
        B.add(c.q(compose(F, FrElt{{f, Q(1)}}, pi)));
        return !done();
      });
  }
  Subspace S = Subspace::from_builder(B);
  if (S != target)
    throw GenerationIncomplete(kind_name(c.kind()) + " cell (" + std::to_string(m) + "," + std::to_string(n) +
                               ") d=" + std::to_string(d) + ": span " + std::to_string(S.dim()) + " of " +
                               std::to_string(target.dim()));
  return {S, count};
}

// κ̃_{S,f}: S = {1..s}, f1(s) a letter x_i^{±1}, f2(s) ∈ [d], f3(s) ∈ [m];
// Σ_T (−1)^{d−|T|} (tuple whose k-th word is the ordered product of f1(s)
// over f2(s) ∈ T, f3(s) = k).
struct KappaFamily {
  std::vector<int> f1;  // signed letter
  std::vector<int> f2;  // 0..d−1
  std::vector<int> f3;  // 0..m−1
};

inline GrElt kappa_tilde_gr(const Field& F, int n, int m, int d, const KappaFamily& k) {
  GrElt r;
  for (unsigned T = 0; T < (1u << d); ++T) {
    std::vector<std::vector<int>> w(m);
    for (std::size_t s = 0; s < k.f1.size(); ++s)
      if ((T >> k.f2[s]) & 1u) w[k.f3[s]].push_back(k.f1[s]);
    std::vector<Word> words;
    for (auto& x : w) words.push_back(Word(n, x));
    elt_add(F, r, GrTuple(n, words), Q((d - __builtin_popcount(T)) % 2 ? -1 : 1));
  }
  return r;
}

inline FrElt kappa_tilde_fr(const Field& F, int n, int m, int d, const KappaFamily& k) {
  FrElt r;
  for (unsigned T = 0; T < (1u << d); ++T) {
    IntMat X(n, m);
    for (std::size_t s = 0; s < k.f1.size(); ++s)
      if ((T >> k.f2[s]) & 1u) X.at(std::abs(k.f1[s]) - 1, k.f3[s]) += k.f1[s] > 0 ? 1 : -1;
    elt_add(F, r, X, Q((d - __builtin_popcount(T)) % 2 ? -1 : 1));
  }
  return r;
}

// Span of κ̃ over families with |S| = d..smax and surjective f2, stopping at target.
inline IdealSpan kappa_span(const PassiCell& c, int d, int smax, const Subspace& target) {
  const Field& F = c.field();
  const int n = c.n(), m = c.m();
  EchelonBuilder B(F, c.dim());
  long count = 0;
  // d = 0: I^{(0)} is the whole cell; with no letters or factors the families vanish
  if (d == 0) return {target, 0};
  if (n == 0 || m == 0) return {Subspace::zero(F, c.dim()), 0};
  for (int s = d; s <= smax && B.rank() < target.dim(); ++s) {
    KappaFamily k{std::vector<int>(s), std::vector<int>(s), std::vector<int>(s)};
    std::function<bool(int)> rec = [&](int p) -> bool {
      if (p == s) {
        std::vector<bool> hit(d, false);
        for (int x : k.f2) hit[x] = true;
        for (bool h : hit)
          if (!h) return true;
        ++count;
        B.add(c.kind() == CatKind::Gr ? c.q(kappa_tilde_gr(F, n, m, d, k)) : c.q(kappa_tilde_fr(F, n, m, d, k)));
        return B.rank() < target.dim();
      }
      for (int g = 1; g <= n; ++g)
        for (int sg : {1, -1})
          for (int t = 0; t < d; ++t)
            for (int j = 0; j < m; ++j) {
              k.f1[p] = g * sg, k.f2[p] = t, k.f3[p] = j;
              if (!rec(p + 1)) return false;
            }
      return true;
    };
    rec(0);
  }
  return {Subspace::from_builder(B), count};
}

// κ_{S,f} in the group ring of F_n (one factor), same sign convention.
inline GrElt kappa_gr(const Field& F, int n, int d, const std::vector<int>& f1, const std::vector<int>& f2) {
  KappaFamily k{f1, f2, std::vector<int>(f1.size(), 0)};
  return kappa_tilde_gr(F, n, 1, d, k);
}

// ------------------------------------------------- functors and degree

// A functor on gr^o (Mor = GrTuple) or fr^o (Mor = IntMat): a morphism
// in L(Y,X) acts F(X) -> F(Y).
template <class Mor>
class Functor {
 public:
  virtual ~Functor() = default;
  virtual const Field& field() const = 0;
  virtual int max_label() const { return INT_MAX; }
  virtual int dim(int X) const = 0;
  virtual SparseVec act(const Mor& t, const SparseVec& v) const = 0;

  SparseVec act(const std::map<Mor, Q>& e, const SparseVec& v) const {
    Accumulator acc(field());
    for (auto& [t, x] : e) acc.add(x, act(t, v));
    return acc.take();
  }
};

using GrFunctor = Functor<GrTuple>;
using FrFunctor = Functor<IntMat>;

inline GrElt pi_elt(const Field& F, const GrFunctor&, int n, int d) { return pi_gr(F, n, d); }
inline FrElt pi_elt(const Field& F, const FrFunctor&, int n, int d) { return pi_fr(F, n, d); }

// ker(π^{d+1}_X ▷) ⊆ F(X): the degree-≤d part at X.
template <class Mor>
Subspace degree_kernel(const Functor<Mor>& Fn, int X, int d) {
  if ((long)X * (d + 1) > Fn.max_label()) throw WindowTooSmall("object " + std::to_string(X * (d + 1)));
  const Field& F = Fn.field();
  auto pi = pi_elt(F, Fn, X, d + 1);
  int out = Fn.dim(X * (d + 1));
  std::vector<SparseVec> cols;
  for (int v = 0; v < Fn.dim(X); ++v) cols.push_back(Fn.act(pi, SparseVec::unit(v)));
  return kernel_of_columns(F, Fn.dim(X), std::max(out, 1), cols);
}

template <class Mor>
bool polynomial_degree_leq(const Functor<Mor>& Fn, int d, const std::vector<int>& W) {
  for (int X : W)
    if (degree_kernel(Fn, X, d).dim() != Fn.dim(X)) return false;
  return true;
}

// P_d(F): the subfunctor X ↦ ker(π^{d+1}_X ▷), with restricted actions.
template <class Mor>
class PolynomialPart : public Functor<Mor> {
 public:
  PolynomialPart(const Functor<Mor>& Fn, int d) : F_(Fn), d_(d) {}
  const Field& field() const override { return F_.field(); }
  int max_label() const override { return F_.max_label() / (d_ + 1); }
  int dim(int X) const override { return space(X).dim(); }
  const Subspace& space(int X) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = K_.find(X);
    if (it == K_.end()) it = K_.emplace(X, degree_kernel(F_, X, d_)).first;
    return it->second;
  }
  using Functor<Mor>::act;
  SparseVec act(const Mor& t, const SparseVec& v) const override {
    int X = source(t), Y = target(t);
    Accumulator acc(field());
    for (auto& [i, x] : v.e) acc.add(x, space(X).basis()[i]);
    SparseVec w = F_.act(t, acc.take());
    if (!space(Y).member(w)) throw NotASubspace("polynomial part is not closed under the action");
    return to_sparse(field(), space(Y).coordinates(w));
  }

 private:
  static int source(const GrTuple& t) { return t.n; }
  static int target(const GrTuple& t) { return t.m(); }
  static int source(const IntMat& t) { return t.n; }
  static int target(const IntMat& t) { return t.m; }
  const Functor<Mor>& F_;
  int d_;
  mutable std::mutex mu_;
  mutable std::map<int, Subspace> K_;
};

// n ↦ k: every morphism acts as the identity.
template <class Mor>
class ConstantFunctor : public Functor<Mor> {
 public:
  explicit ConstantFunctor(const Field& F) : F_(F) {}
  const Field& field() const override { return F_; }
  int dim(int) const override { return 1; }
  using Functor<Mor>::act;
  SparseVec act(const Mor&, const SparseVec& v) const override { return v; }

 private:
  Field F_;
};

// n ↦ k^n, a tuple acting through its exponent-sum matrix.
class AbelianizationFunctor : public GrFunctor {
 public:
  explicit AbelianizationFunctor(const Field& F) : F_(F) {}
  const Field& field() const override { return F_; }
  int dim(int X) const override { return X; }
  using GrFunctor::act;
  SparseVec act(const GrTuple& t, const SparseVec& v) const override {
    IntMat A = alpha(t);
    std::map<int, Q> out;
    for (auto& [j, x] : v.e)
      for (int i = 0; i < t.m(); ++i)
        if (A.at(j, i)) out[i] += x * Q(A.at(j, i));
    return from_map(F_, out);
  }

 private:
  Field F_;
};

// ------------------------------------------------- analyticity slices

struct SliceCell {
  int Y, X;
  bool hypothesis = true;  // ν(Y) ≥ ν(X)
  int eigen_dim = -1, passi_dim = -1;
};

struct SliceResult {
  std::vector<SliceCell> cells;
  int cap = -1;
};

// J(Y,X) = degree ≥ ν(X) inside 𝒫^D, for all labels Y and window columns X.
inline SubGrid analyticity_ideal(const PassiMonad& T, const std::function<int(int)>& nu, const std::vector<int>& W) {
  SubGrid J;
  J.cap = max_label(T);
  for (int Y : T.labels())
    for (int X : W) {
      if (nu(X) > T.D() + 1) throw DegreeOutOfRange("ν exceeds the truncation degree");
      J.cell.emplace(std::make_pair(Y, X), T.cell(Y, X).aug_power(nu(X)));
    }
  return J;
}

inline SliceResult analyticity_slice(const Field& F, CatKind kind, const std::function<int(int)>& nu,
                                     const std::vector<int>& W, int D, int cap) {
  PassiMonad T(F, kind, D, cap);
  SubGrid J = analyticity_ideal(T, nu, W);
  auto E = make_eigenmonad(T, J, W);
  SliceResult r;
  r.cap = cap;
  for (int Y : W)
    for (int X : W) {
      SliceCell c{Y, X};
      c.hypothesis = nu(Y) >= nu(X);
      c.eigen_dim = E->dim(Y, X);
      c.passi_dim = (int)passi_rank_formula(kind, X, Y, nu(X) - 1);
      r.cells.push_back(c);
    }
  return r;
}

}  // namespace eigenmonad
