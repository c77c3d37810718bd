#pragma once

// Coefficient algebras B, the monads L^B_Fin and L^B_S, the bimodule actions
// on L~^B_Fin, the comparison E_R, abelianization on graded Passi pieces and
// the exterior-algebra example in characteristic 2.

#include "passi.hpp"

namespace eigenmonad {

// ------------------------------------------------------------------ RingB

// Finite-dimensional unital k-algebra given by structure constants.
struct RingB {
  Field F;
  std::vector<std::string> names;
  std::vector<std::vector<SparseVec>> mul;  // e_i e_j
  SparseVec one;

  int dim() const { return (int)names.size(); }

  static RingB ground(const Field& F) { return {F, {"1"}, {{SparseVec::unit(0)}}, SparseVec::unit(0)}; }
  // k[x]/(x²)
  static RingB dual_numbers(const Field& F) {
    return {F, {"1", "x"}, {{SparseVec::unit(0), SparseVec::unit(1)}, {SparseVec::unit(1), SparseVec{}}}, SparseVec::unit(0)};
  }

  SparseVec product(const SparseVec& a, const SparseVec& b) const {
    Accumulator acc(F);
    for (auto& [i, x] : a.e)
      for (auto& [j, y] : b.e) acc.add(F.mul(x, y), mul[i][j]);
    return acc.take();
  }
  SparseVec scalar(long c) const { return scale(F, Q(c), one); }

  bool check_axioms() const {
    for (int i = 0; i < dim(); ++i) {
      auto e = SparseVec::unit(i);
      if (product(one, e) != e || product(e, one) != e) return false;
      for (int j = 0; j < dim(); ++j)
        for (int k = 0; k < dim(); ++k) {
          auto ej = SparseVec::unit(j), ek = SparseVec::unit(k);
          if (product(product(e, ej), ek) != product(e, product(ej, ek))) return false;
        }
    }
    return true;
  }
};

// Matrix over B: entries as coordinate vectors.
struct BMat {
  int n = 0, m = 0;
  std::vector<SparseVec> a;
  BMat() = default;
  BMat(int rows, int cols) : n(rows), m(cols), a((std::size_t)rows * cols) {}
  SparseVec& at(int i, int j) { return a[(std::size_t)i * m + j]; }
  const SparseVec& at(int i, int j) const { return a[(std::size_t)i * m + j]; }
  bool operator==(const BMat& o) const { return n == o.n && m == o.m && a == o.a; }

  static BMat from_int(const RingB& B, const IntMat& X) {
    BMat r(X.n, X.m);
    for (int i = 0; i < X.n; ++i)
      for (int j = 0; j < X.m; ++j) r.at(i, j) = B.scalar(X.at(i, j));
    return r;
  }
};

inline BMat bmat_mul(const RingB& B, const BMat& X, const BMat& Y) {
  if (X.m != Y.n) throw DimensionMismatch("bmat_mul");
  BMat r(X.n, Y.m);
  for (int i = 0; i < X.n; ++i)
    for (int j = 0; j < Y.m; ++j) {
      Accumulator acc(B.F);
      for (int k = 0; k < X.m; ++k) acc.add(Q(1), B.product(X.at(i, k), Y.at(k, j)));
      r.at(i, j) = acc.take();
    }
  return r;
}

// ---------------------------------------------------------- Fin-indexed cells

// All maps {1..n} -> {1..m} (or only bijections), lexicographic, values 1-based.
inline std::vector<std::vector<int>> fin_maps(int n, int m, bool bijections) {
  std::vector<std::vector<int>> out;
  if (bijections && n != m) return out;
  if (n == 0) return {{}};
  if (m == 0) return out;
  std::vector<int> f(n, 1);
  while (true) {
    bool ok = true;
    if (bijections) {
      std::vector<char> hit(m + 1, 0);
      for (int x : f) ok = ok && !hit[x]++;
    }
    if (ok) out.push_back(f);
    int k = n - 1;
    while (k >= 0 && ++f[k] > m) f[k--] = 1;
    if (k < 0) break;
  }
  return out;
}

inline std::string fin_str(const std::vector<int>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

// L^B_D(m,n) = ⊕_{f ∈ D(n,m)} B^{⊗n}.  Index = map index · dim(B)^n + tensor index,
// the tensor index reading b_1 as the most significant digit.
class FinCell {
 public:
  FinCell(const RingB& B, int m, int n, bool bijections)
      : B_(B), m_(m), n_(n), maps_(fin_maps(n, m, bijections)) {
    for (int i = 0; i < (int)maps_.size(); ++i) where_[maps_[i]] = i;
    bpow_ = 1;
    for (int i = 0; i < n; ++i) bpow_ *= B.dim();
  }
  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return (int)maps_.size() * bpow_; }
  const std::vector<std::vector<int>>& maps() const { return maps_; }
  bool has(const std::vector<int>& f) const { return where_.count(f) > 0; }

  const std::vector<int>& map(int idx) const { return maps_[idx / bpow_]; }
  std::vector<int> coeffs(int idx) const {
    std::vector<int> b(n_);
    int t = idx % bpow_;
    for (int i = n_ - 1; i >= 0; --i) {
      b[i] = t % B_.dim();
      t /= B_.dim();
    }
    return b;
  }
  int index(const std::vector<int>& f, const std::vector<int>& b) const {
    auto it = where_.find(f);
    if (it == where_.end()) throw IndexOutOfRange("map " + fin_str(f) + " not in cell");
    int t = 0;
    for (int x : b) t = t * B_.dim() + x;
    return it->second * bpow_ + t;
  }
  // (r_1 ⊗ ... ⊗ r_n)_f for arbitrary r_i ∈ B, expanded multilinearly
  SparseVec element(const std::vector<int>& f, const std::vector<SparseVec>& r) const {
    Accumulator acc(B_.F);
    std::vector<int> b(n_);
    std::function<void(int, Q)> rec = [&](int i, Q c) {
      if (c == 0) return;
      if (i == n_) {
        acc.add(index(f, b), c);
        return;
      }
      for (auto& [k, x] : r[i].e) {
        b[i] = k;
        rec(i + 1, B_.F.mul(c, x));
      }
    };
    rec(0, Q(1));
    return acc.take();
  }
  std::string label(int idx) const {
    auto b = coeffs(idx);
    std::string s = "(";
    for (int i = 0; i < n_; ++i) s += (i ? "⊗" : "") + B_.names[b[i]];
    return s + ")_" + fin_str(map(idx));
  }

 private:
  const RingB& B_;
  int m_, n_;
  std::vector<std::vector<int>> maps_;
  std::map<std::vector<int>, int> where_;
  int bpow_ = 1;
};

// (b')_g ∘ (b)_f = (b_i b'_{f(i)})_{g∘f}; with bijections only this is L^B_S.
class FinMonad : public Monad {
 public:
  FinMonad(RingB B, int cap, bool bijections)
      : Monad(B.F, PassiMonad::range(cap)), B_(std::move(B)), bij_(bijections) {}

  const RingB& ring() const { return B_; }
  bool bijections() const { return bij_; }

  const FinCell& cell(int Y, int X) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cells_.find({Y, X});
    if (it == cells_.end())
      it = cells_.emplace(std::make_pair(Y, X), std::make_unique<FinCell>(B_, Y, X, bij_)).first;
    return *it->second;
  }

  int dim(int Y, int X) const override { return cell(Y, X).dim(); }
  std::string basis_label(int Y, int X, int i) const override { return cell(Y, X).label(i); }
  SparseVec unit(int X) const override {
    std::vector<int> id(X);
    for (int i = 0; i < X; ++i) id[i] = i + 1;
    return cell(X, X).element(id, std::vector<SparseVec>(X, B_.one));
  }

 protected:
  SparseVec compute_comp(int Z, int Y, int X, int a, int b) const override {
    const FinCell &outer = cell(Z, Y), &inner = cell(Y, X);
    auto g = outer.map(a), f = inner.map(b);
    auto bo = outer.coeffs(a), bi = inner.coeffs(b);
    std::vector<int> gf(X);
    std::vector<SparseVec> r(X);
    for (int i = 0; i < X; ++i) {
      gf[i] = g[f[i] - 1];
      r[i] = B_.mul[bi[i]][bo[f[i] - 1]];
    }
    return cell(Z, X).element(gf, r);
  }

 private:
  RingB B_;
  bool bij_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<FinCell>> cells_;
};

// ------------------------------------------------------------ left action

// τ^X ▷ (b)_f = Σ_g (b_1 X_{f(1)g(1)} ⊗ ... ⊗ b_n X_{f(n)g(n)})_g, for X ∈ M_{m,l}(B).
// This is E_R^{-1}(τ^X ∘ E_R((b)_f)) written out.
inline SparseVec fin_left_act(const FinMonad& L, const BMat& X, int n, const SparseVec& v) {
  const RingB& B = L.ring();
  const FinCell &src = L.cell(X.n, n), &dst = L.cell(X.m, n);
  Accumulator acc(B.F);
  for (auto& [idx, c] : v.e) {
    auto f = src.map(idx);
    auto b = src.coeffs(idx);
    for (auto& g : fin_maps(n, X.m, false)) {
      std::vector<SparseVec> r(n);
      bool zero = false;
      for (int i = 0; i < n && !zero; ++i) {
        r[i] = B.product(SparseVec::unit(b[i]), X.at(f[i] - 1, g[i] - 1));
        zero = r[i].empty();
      }
      if (!zero) acc.add(c, dst.element(g, r));
    }
  }
  return acc.take();
}

inline SparseVec fin_left_act(const FinMonad& L, const IntMat& X, int n, const SparseVec& v) {
  return fin_left_act(L, BMat::from_int(L.ring(), X), n, v);
}

inline SparseVec fin_left_act(const FinMonad& L, const FrElt& e, int n, const SparseVec& v) {
  Accumulator acc(L.field());
  for (auto& [X, x] : e) acc.add(x, fin_left_act(L, X, n, v));
  return acc.take();
}

// (b)_f ◁ (b')_σ = (b'_i b_{σ(i)})_{f∘σ}
inline SparseVec fin_right_act(const FinMonad& L, int m, int n, int idx, const std::vector<int>& sigma,
                               const std::vector<int>& bs) {
  const RingB& B = L.ring();
  const FinCell& c = L.cell(m, n);
  auto f = c.map(idx);
  auto b = c.coeffs(idx);
  std::vector<int> fs(n);
  std::vector<SparseVec> r(n);
  for (int i = 0; i < n; ++i) {
    fs[i] = f[sigma[i] - 1];
    r[i] = B.mul[bs[i]][b[sigma[i] - 1]];
  }
  return c.element(fs, r);
}

// c_{m,j} ∈ Fin(m, m−1) merges j and j+1; h_{m,j} ∈ Fin(m, m+1) skips j+1.
inline int c_map(int j, int k) { return k <= j ? k : k - 1; }
inline int h_map(int j, int k) { return k <= j ? k : k + 1; }

// Generator matrices (all in M_{m,·}).
inline IntMat block_diag(const std::vector<IntMat>& blocks) {
  int n = 0, m = 0;
  for (auto& b : blocks) n += b.n, m += b.m;
  IntMat X(n, m);
  int r = 0, c = 0;
  for (auto& b : blocks) {
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.m; ++j) X.at(r + i, c + j) = b.at(i, j);
    r += b.n, c += b.m;
  }
  return X;
}
inline IntMat row_mat(std::vector<long> v) {
  IntMat X(1, (int)v.size());
  X.a = std::move(v);
  return X;
}
inline IntMat col_mat(std::vector<long> v) {
  IntMat X((int)v.size(), 1);
  X.a = std::move(v);
  return X;
}
inline IntMat split_mat(int m, int j) { return block_diag({IntMat::identity(j - 1), row_mat({1, 1}), IntMat::identity(m - j)}); }
inline IntMat merge_mat(int m, int j) { return block_diag({IntMat::identity(j - 1), col_mat({1, 1}), IntMat::identity(m - j - 1)}); }
inline IntMat insert_mat(int m, int j) { return block_diag({IntMat::identity(j), IntMat(0, 1), IntMat::identity(m - j)}); }
inline IntMat delete_mat(int m, int j) { return block_diag({IntMat::identity(j - 1), IntMat(1, 0), IntMat::identity(m - j)}); }
inline BMat scale_mat(const RingB& B, int m, int j, const SparseVec& a) {
  BMat X = BMat::from_int(B, IntMat::identity(m));
  X.at(j - 1, j - 1) = a;
  return X;
}

// The five generator formulas, applied to one basis element of L~(m,n).
inline SparseVec gen_split(const FinMonad& L, int m, int n, int idx, int j) {
  const FinCell& c = L.cell(m, n);
  auto f = c.map(idx);
  auto b = c.coeffs(idx);
  Accumulator acc(L.field());
  for (auto& g : fin_maps(n, m + 1, false)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = c_map(j, g[i]) == f[i];
    if (ok) acc.add(Q(1), SparseVec::unit(L.cell(m + 1, n).index(g, b)));
  }
  return acc.take();
}
inline SparseVec gen_merge(const FinMonad& L, int m, int n, int idx, int j) {
  const FinCell& c = L.cell(m, n);
  auto f = c.map(idx);
  for (int& x : f) x = c_map(j, x);
  return SparseVec::unit(L.cell(m - 1, n).index(f, c.coeffs(idx)));
}
inline SparseVec gen_insert(const FinMonad& L, int m, int n, int idx, int j) {
  const FinCell& c = L.cell(m, n);
  auto f = c.map(idx);
  for (int& x : f) x = h_map(j, x);
  return SparseVec::unit(L.cell(m + 1, n).index(f, c.coeffs(idx)));
}
inline SparseVec gen_delete(const FinMonad& L, int m, int n, int idx, int j) {
  const FinCell& c = L.cell(m, n);
  auto f = c.map(idx);
  for (int& x : f) {
    if (x == j) return {};
    x = x < j ? x : x - 1;  // the unique preimage under h_{m−1,j−1}
  }
  return SparseVec::unit(L.cell(m - 1, n).index(f, c.coeffs(idx)));
}
inline SparseVec gen_scale(const FinMonad& L, int m, int n, int idx, int j, const SparseVec& a) {
  const FinCell& c = L.cell(m, n);
  auto f = c.map(idx);
  auto b = c.coeffs(idx);
  std::vector<SparseVec> r(n);
  for (int i = 0; i < n; ++i)
    r[i] = f[i] == j ? L.ring().product(SparseVec::unit(b[i]), a) : SparseVec::unit(b[i]);
  return c.element(f, r);
}

// --------------------------------------------------------------- θ and V

// θ_fr dilated at j: τ^{I⊕[1 1]⊕I} − τ^{I⊕[1 0]⊕I} − τ^{I⊕[0 1]⊕I} in M_{m,m+1}.
inline FrElt theta_fr_dilation(int m, int j) {
  if (j < 1 || j > m) throw IndexOutOfRange("theta_fr_dilation position " + std::to_string(j));
  auto mk = [&](long a, long b) { return block_diag({IntMat::identity(j - 1), row_mat({a, b}), IntMat::identity(m - j)}); };
  return {{mk(1, 1), Q(1)}, {mk(1, 0), Q(-1)}, {mk(0, 1), Q(-1)}};
}
inline FrElt theta_fr() { return theta_fr_dilation(1, 1); }

inline SparseVec theta_fr_action(const FinMonad& L, int j, int m, int n, const SparseVec& v) {
  return fin_left_act(L, theta_fr_dilation(m, j), n, v);
}

// ⋂_j ker(θ_j ▷) in L~^B_Fin(m,n)
inline Subspace vanishing_fin(const FinMonad& L, int m, int n) {
  const int dom = L.dim(m, n), cod = L.dim(m + 1, n);
  std::vector<SparseVec> cols(dom);
  for (int a = 0; a < dom; ++a) {
    Accumulator acc(L.field());
    for (int j = 1; j <= m; ++j)
      acc.add(Q(1), shift(theta_fr_action(L, j, m, n, SparseVec::unit(a)), (j - 1) * cod));
    cols[a] = acc.take();
  }
  return kernel_of_columns(L.field(), dom, std::max(1, m * cod), cols);
}

// ------------------------------------------------------------------ E_R

// E_R^{-1}(τ^X) = Σ_f (X_{1f(1)} ⊗ ... ⊗ X_{nf(n)})_f for X ∈ M_{n,m}(B).
inline SparseVec E_R_inverse(const FinMonad& L, const BMat& X) {
  const FinCell& c = L.cell(X.m, X.n);
  Accumulator acc(L.field());
  for (auto& f : c.maps()) {
    std::vector<SparseVec> r(X.n);
    bool zero = false;
    for (int i = 0; i < X.n && !zero; ++i) zero = (r[i] = X.at(i, f[i] - 1)).empty();
    if (!zero) acc.add(Q(1), c.element(f, r));
  }
  return acc.take();
}
inline SparseVec E_R_inverse(const FinMonad& L, const IntMat& X) { return E_R_inverse(L, BMat::from_int(L.ring(), X)); }
inline SparseVec E_R_inverse(const FinMonad& L, const FrElt& e) {
  Accumulator acc(L.field());
  for (auto& [X, x] : e) acc.add(x, E_R_inverse(L, X));
  return acc.take();
}

// E_R((b)_f) = τ^{υ_f(b)}: entry (i, f(i)) is b_i.
inline BMat E_R(const FinMonad& L, int m, int n, int idx) {
  const FinCell& c = L.cell(m, n);
  auto f = c.map(idx);
  auto b = c.coeffs(idx);
  BMat X(n, m);
  for (int i = 0; i < n; ++i) X.at(i, f[i] - 1) = SparseVec::unit(b[i]);
  return X;
}

// X with row i replaced by the sum of rows i, i+1 (θ-composite relation, rows 1-based).
inline IntMat merge_rows(const IntMat& X, int i, bool keep_first, bool keep_second) {
  IntMat Y(X.n - 1, X.m);
  for (int r = 0, s = 0; r < X.n; ++r) {
    if (r == i) continue;
    for (int k = 0; k < X.m; ++k) {
      long v = X.at(r, k);
      if (r == i - 1) v = (keep_first ? v : 0) + (keep_second ? X.at(i, k) : 0);
      Y.at(s, k) = v;
    }
    ++s;
  }
  return Y;
}

// ------------------------------------------------------ abelianization

// Passi gr model to fr model: letter i in factor k becomes t_{ik}.
inline SparseVec abelianize_passi(const PassiCell& gr, const PassiCell& fr, const SparseVec& v) {
  const int n = gr.n();
  std::map<int, Q> out;
  for (auto& [i, x] : v.e) {
    std::vector<int> e((std::size_t)n * gr.m(), 0);
    auto f = gr.m() == 0 ? std::vector<std::string>{} : split_factors(gr.key(i));
    for (int k = 0; k < gr.m(); ++k)
      for (char c : f[k]) ++e[(std::size_t)k * n + (c - 1)];
    out[fr.index(PassiCell::exp_key(e))] += x;
  }
  return from_map(gr.field(), out);
}

struct GradedAlpha {
  int gr_dim = 0, fr_dim = 0;
  bool gamma_filtered = true;  // γ(I^d_fr) ⊆ I^d_gr on the chosen lifts
  bool split_epi = false;      // ᾱ∘γ̄ = id
  bool iso = false;
};

// ᾱ: I^d/I^{d+1} (gr) -> I^d/I^{d+1} (fr) at (n,m), with the section γ̄.
inline GradedAlpha graded_alpha_compare(const Field& F, int n, int m, int d) {
  PassiCell gr(F, CatKind::Gr, n, m, d), fr(F, CatKind::Fr, n, m, d);
  GradedAlpha out;
  for (int i = 0; i < gr.dim(); ++i) out.gr_dim += gr.degree(i) == d;
  for (int i = 0; i < fr.dim(); ++i) out.fr_dim += fr.degree(i) == d;
  std::vector<SparseVec> images;
  bool split = true;
  for (int i = 0; i < fr.dim(); ++i) {
    if (fr.degree(i) != d) continue;
    // Σ_{R ≤ e} ∏ C(e,R)(−1)^{e−R} τ^R has Magnus image exactly t^e
    const std::string& key = fr.key(i);
    std::vector<int> e(key.begin(), key.end());
    std::vector<int> r(e.size(), 0);
    GrElt lift;
    std::function<void(std::size_t, Q)> rec = [&](std::size_t v, Q c) {
      if (v == e.size()) {
        IntMat X(n, m);
        for (int k = 0; k < m; ++k)
          for (int j = 0; j < n; ++j) X.at(j, k) = r[(std::size_t)k * n + j];
        elt_add(F, lift, gamma(X), c);
        return;
      }
      for (int x = 0; x <= e[v]; ++x) {
        r[v] = x;
        Q s = F.mul(c, Q(binom_ll(e[v], x) * ((e[v] - x) % 2 ? -1 : 1)));
        rec(v + 1, s);
      }
    };
    rec(0, Q(1));
    SparseVec g = gr.q(lift);
    for (auto& [k, x] : g.e)
      if (gr.degree(k) < d) out.gamma_filtered = false;
    SparseVec back = abelianize_passi(gr, fr, g);
    if (back != SparseVec::unit(i)) split = false;
    images.push_back(g);
  }
  out.split_epi = split && out.gamma_filtered;
  out.iso = out.split_epi && out.gr_dim == out.fr_dim;
  return out;
}

// ----------------------------------------------- exterior example (B = k)

// U(m) = ⊕_{n ≤ dim W} L_Fin(m,n) ⊗ Λ^n W; the balanced tensor is U(m)
// modulo (f∘σ)⊗z − sign(σ) f⊗z.
class FinExteriorTensor {
 public:
  FinExteriorTensor(const Field& F, int dimW) : F_(F), W_(dimW), L_(RingB::ground(F), 4, false) {}

  static long choose(int a, int b) { return binom_ll(a, b); }
  int wedge_dim(int n) const { return (int)choose(W_, n); }
  int offset(int m, int n) const {
    int o = 0;
    for (int k = 0; k < n; ++k) o += L_.dim(m, k) * wedge_dim(k);
    return o;
  }
  int dim(int m) const { return offset(m, W_ + 1); }
  int index(int m, int n, int fidx, int z) const { return offset(m, n) + fidx * wedge_dim(n) + z; }

  Subspace relations(int m) const {
    std::vector<SparseVec> rel;
    for (int n = 0; n <= W_; ++n)
      for (auto& sigma : fin_maps(n, n, true)) {
        int sg = sign(sigma);
        for (int a = 0; a < L_.dim(m, n); ++a) {
          auto f = L_.cell(m, n).map(a);
          std::vector<int> fs(n);
          for (int i = 0; i < n; ++i) fs[i] = f[sigma[i] - 1];
          int b = L_.cell(m, n).index(fs, std::vector<int>(n, 0));
          for (int z = 0; z < wedge_dim(n); ++z) {
            std::map<int, Q> r;
            r[index(m, n, b, z)] += 1;
            r[index(m, n, a, z)] -= Q(sg);
            rel.push_back(from_map(F_, r));
          }
        }
      }
    return Subspace::span(F_, dim(m), rel);
  }

  // left action of an fr element on representatives
  SparseVec act(const FrElt& e, int m, int target, const SparseVec& v) const {
    std::map<int, Q> out;
    for (auto& [i, x] : v.e) {
      int n = 0;
      while (n < W_ && i >= offset(m, n + 1)) ++n;
      int local = i - offset(m, n), fidx = local / wedge_dim(n), z = local % wedge_dim(n);
      SparseVec img = fin_left_act(L_, e, n, SparseVec::unit(fidx));
      for (auto& [g, y] : img.e) out[index(target, n, g, z)] += x * y;
    }
    return from_map(F_, out);
  }

  // f_n ⊗ (w_1 ∧ ... ∧ w_n) in U(1)
  SparseVec top_element(int n) const { return SparseVec::unit(index(1, n, 0, 0)); }

  // V(1): classes in U(1)/Rel killed by θ, as a dimension
  int vanishing_dim_at_one() const {
    Subspace rel1 = relations(1), rel2 = relations(2);
    QuotientCoords q2(rel2);
    std::vector<SparseVec> cols;
    for (int i = 0; i < dim(1); ++i) cols.push_back(q2.project(act(theta_fr(), 1, 2, SparseVec::unit(i))));
    Subspace pre = kernel_of_columns(F_, dim(1), std::max(1, q2.dim()), cols);
    return pre.dim() - rel1.dim();
  }

 private:
  static int sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) s = -s;
    return s;
  }
  Field F_;
  int W_;
  FinMonad L_;
};

struct ExteriorReport {
  bool element_nonzero = false;  // f_2 ⊗ (w1∧w2) nonzero in the balanced tensor
  bool theta_zero = false;       // θ ▷ it vanishes in the balanced tensor
  SparseVec theta_rep;           // θ ▷ it on representatives
  int vanishing_dim = 0, wedge_dim = 0;
};

inline ExteriorReport exterior_check(const Field& F) {
  FinExteriorTensor T(F, 2);
  ExteriorReport r;
  SparseVec z = T.top_element(2);
  r.element_nonzero = !T.relations(1).member(z);
  r.theta_rep = T.act(theta_fr(), 1, 2, z);
  r.theta_zero = T.relations(2).member(r.theta_rep);
  r.vanishing_dim = T.vanishing_dim_at_one();
  r.wedge_dim = T.wedge_dim(1);
  return r;
}

}  // namespace eigenmonad
