#pragma once

// Operad monads A_Ass and A_Lie, the comparison maps E, R and β, and the
// exponential-functor action of tuples on multilinear tensors.

#include "passi.hpp"

namespace eigenmonad {

struct NotMultilinear : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

inline std::vector<std::string> key_factors(const std::string& key, int m) {
  return m == 0 ? std::vector<std::string>{} : split_factors(key);
}

// x1x2⊗1⊗x3
inline std::string ass_label(const std::string& key, int m) {
  if (m == 0) return "()";
  std::string s;
  auto f = split_factors(key);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += "⊗";
    if (f[i].empty()) s += "1";
    for (char c : f[i]) s += "x" + std::to_string((int)c);
  }
  return s;
}

// x1 ⊗ ... ⊗ xn as an n-factor tensor
inline TensorPoly identity_tensor(const Field& F, int n) {
  if (n == 0) return TensorPoly::one(F, 0, 0, -1);
  std::vector<std::string> f;
  for (int i = 1; i <= n; ++i) f.push_back(std::string(1, (char)i));
  return TensorPoly::monomial(F, n, f, -1);
}

// ------------------------------------------------------- exponential action

// t = [w_1|...|w_l]_m acting k<X>^{⊗m} -> k<X>^{⊗l}.  Factor j is split into
// one copy per occurrence of x_j^{±1} (read across the words in order), copies
// at inverse occurrences get the antipode, and output factor i multiplies the
// copies sitting in w_i.  No occurrence means the counit.
inline TensorPoly exp_action(const GrTuple& t, const TensorPoly& v) {
  if (v.m != t.n) throw GeneratorMismatch("exp_action: tuple has " + std::to_string(t.n) + " letters, tensor has " +
                                          std::to_string(v.m) + " factors");
  struct Slot {
    int word;
    bool inv;
  };
  std::vector<Slot> slots;
  std::vector<std::vector<int>> occ(t.n + 1), in_word(t.m());
  for (int i = 0; i < t.m(); ++i)
    for (int x : t.w[i].l) {
      int s = (int)slots.size();
      slots.push_back({i, x < 0});
      occ[std::abs(x)].push_back(s);
      in_word[i].push_back(s);
    }

  TensorPoly r(v.F, v.n, t.m(), v.D);
  std::vector<std::string> fill(slots.size());
  for (auto& [k, x] : v.c) {
    auto f = key_factors(k, v.m);
    std::vector<int> seen(v.n + 1, 0);
    for (auto& w : f)
      for (char c : w)
        if (++seen[(int)c] > 1) throw NotMultilinear("letter X" + std::to_string((int)c) + " repeated");
    std::vector<std::pair<int, char>> letters;  // (input factor, letter), in order
    bool dead = false;
    for (int j = 0; j < v.m; ++j) {
      if (!f[j].empty() && occ[j + 1].empty()) dead = true;
      for (char c : f[j]) letters.emplace_back(j + 1, c);
    }
    if (dead) continue;
    for (auto& s : fill) s.clear();
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
      if (p == letters.size()) {
        std::vector<std::string> out(t.m());
        bool neg = false;
        for (int i = 0; i < t.m(); ++i)
          for (int s : in_word[i]) {
            const std::string& w = fill[s];
            if (slots[s].inv) {
              out[i].append(w.rbegin(), w.rend());
              if (w.size() % 2) neg = !neg;
            } else {
              out[i] += w;
            }
          }
        r.add(t.m() == 0 ? std::string() : join_factors(out), neg ? v.F.neg(x) : x);
        return;
      }
      auto [j, c] = letters[p];
      for (int s : occ[j]) {
        fill[s].push_back(c);
        rec(p + 1);
        fill[s].pop_back();
      }
    };
    rec(0);
  }
  return r;
}

inline TensorPoly exp_action(const Field& F, const GrElt& e, const TensorPoly& v) {
  if (e.empty()) throw GeneratorMismatch("exp_action: empty element has no target");
  TensorPoly r(F, v.n, e.begin()->first.m(), v.D);
  for (auto& [t, x] : e) r.add(exp_action(t, v), x);
  return r;
}

// ----------------------------------------------------------------- A_Ass

// A_Ass(m,n): m words using each of x_1..x_n exactly once.
class AssMonad : public Monad {
 public:
  AssMonad(const Field& F, int cap) : Monad(F, PassiMonad::range(cap)) {}

  const KeyIndex& cell(int Y, int X) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cells_.find({Y, X});
    if (it == cells_.end()) it = cells_.emplace(std::make_pair(Y, X), KeyIndex(component_basis(Y, ones(X)))).first;
    return it->second;
  }

  int dim(int Y, int X) const override { return cell(Y, X).size(); }
  std::string basis_label(int Y, int X, int i) const override { return ass_label(cell(Y, X).keys.at(i), Y); }
  SparseVec unit(int X) const override { return vec(X, X, identity_tensor(field(), X)); }

  SparseVec vec(int Y, int X, const TensorPoly& p) const { return cell(Y, X).vec(field(), p); }
  TensorPoly poly(int Y, int X, const SparseVec& v) const { return cell(Y, X).poly(field(), X, Y, v); }

 protected:
  SparseVec compute_comp(int Z, int Y, int X, int a, int b) const override {
    auto outer = key_factors(cell(Z, Y).keys[a], Z);
    auto inner = key_factors(cell(Y, X).keys[b], Y);
    std::vector<std::string> out(Z);
    for (int i = 0; i < Z; ++i)
      for (char c : outer[i]) out[i] += inner[(int)c - 1];
    return SparseVec::unit(cell(Z, X).at(Z == 0 ? std::string() : join_factors(out)));
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, KeyIndex> cells_;
};

// E(w_1 ⊗ ... ⊗ w_m) = [w_1|...|w_m]_n
inline GrTuple E_map(const AssMonad& A, int Y, int X, int a) {
  std::vector<Word> w;
  for (auto& f : key_factors(A.cell(Y, X).keys.at(a), Y)) {
    std::vector<int> l;
    for (char c : f) l.push_back((int)c);
    w.push_back(Word(X, l));
  }
  return GrTuple(X, w);
}

inline GrElt E_map(const AssMonad& A, int Y, int X, const SparseVec& v) {
  GrElt e;
  for (auto& [a, x] : v.e) elt_add(A.field(), e, E_map(A, Y, X, a), x);
  return e;
}

// R(f) = f ▷ (x_1 ⊗ ... ⊗ x_n), read in the A_Ass(m,n) basis.
inline SparseVec R_map(const AssMonad& A, int Y, int X, const GrElt& f) {
  TensorPoly id = identity_tensor(A.field(), X);
  TensorPoly r(A.field(), X, Y, -1);
  for (auto& [t, x] : f) {
    if (t.n != X || t.m() != Y) throw GeneratorMismatch("R_map: tuple " + t.str() + " outside the cell");
    r.add(exp_action(t, id), x);
  }
  return A.vec(Y, X, r);
}

// ----------------------------------------------------------------- A_Lie

struct LieBasisElt {
  std::vector<int> f;  // f[i] ∈ 1..m: fiber of letter i+1
  std::vector<HallTree> trees;

  std::string str() const {
    if (trees.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < trees.size(); ++i) s += (i ? "⊗" : "") + hall_str(trees[i]);
    return s;
  }
};

// Surjections n -> m in lexicographic order, each with every choice of Hall
// tree on its fibers.
inline std::vector<LieBasisElt> lie_basis(int m, int n) {
  std::vector<LieBasisElt> out;
  if (m == 0 || n == 0) {
    if (m == 0 && n == 0) out.push_back({});
    return out;
  }
  std::vector<int> f(n, 1);
  while (true) {
    std::vector<std::vector<int>> delta(m, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) delta[f[i] - 1][i] = 1;
    std::vector<std::vector<HallTree>> choice;
    bool surj = true;
    for (auto& d : delta) {
      choice.push_back(hall_set(d));
      if (choice.back().empty()) surj = false;
    }
    if (surj) {
      std::vector<int> idx(m, 0);
      while (true) {
        LieBasisElt e{f, {}};
        for (int j = 0; j < m; ++j) e.trees.push_back(choice[j][idx[j]]);
        out.push_back(std::move(e));
        int k = m - 1;
        while (k >= 0 && ++idx[k] == (int)choice[k].size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
    int k = n - 1;
    while (k >= 0 && ++f[k] > m) f[k--] = 1;
    if (k < 0) break;
  }
  return out;
}

// Σ over surjections of ∏ (|fiber| − 1)!
inline long long lie_dim_formula(int m, int n) {
  if (m == 0 || n == 0) return m == n ? 1 : 0;
  long long total = 0;
  std::vector<int> f(n, 1);
  while (true) {
    std::vector<int> size(m, 0);
    for (int x : f) ++size[x - 1];
    long long p = 1;
    for (int s : size) p *= s ? factorial(s - 1) : 0;
    total += p;
    int k = n - 1;
    while (k >= 0 && ++f[k] > m) f[k--] = 1;
    if (k < 0) break;
  }
  return total;
}

class LieMonad : public Monad {
 public:
  LieMonad(const Field& F, int cap) : Monad(F, PassiMonad::range(cap)), ass_(F, cap) {}

  struct Cell {
    std::vector<LieBasisElt> basis;
    std::vector<SparseVec> beta;  // in A_Ass(m,n)
    std::unique_ptr<SpanCoordinates> coords;
  };

  const AssMonad& ass() const { return ass_; }

  const Cell& cell(int Y, int X) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cells_.find({Y, X});
    if (it != cells_.end()) return *it->second;
    auto c = std::make_unique<Cell>();
    c->basis = lie_basis(Y, X);
    for (auto& e : c->basis) {
      TensorPoly p = TensorPoly::one(field(), X, 0, -1);
      for (auto& t : e.trees) p = tp_tensor(p, hall_expand(field(), t));
      p.m = Y;
      c->beta.push_back(ass_.vec(Y, X, p));
    }
    c->coords = std::make_unique<SpanCoordinates>(field(), ass_.dim(Y, X), c->beta);
    return *cells_.emplace(std::make_pair(Y, X), std::move(c)).first->second;
  }

  int dim(int Y, int X) const override { return (int)cell(Y, X).basis.size(); }
  std::string basis_label(int Y, int X, int i) const override { return cell(Y, X).basis.at(i).str(); }
  SparseVec unit(int X) const override { return from_ass(X, X, ass_.unit(X)); }

  SparseVec beta(int Y, int X, const SparseVec& v) const {
    Accumulator acc(field());
    for (auto& [i, x] : v.e) acc.add(x, cell(Y, X).beta[i]);
    return acc.take();
  }
  // β^{-1} on the image; throws NotASubspace elsewhere
  SparseVec from_ass(int Y, int X, const SparseVec& v) const { return cell(Y, X).coords->solve(v); }
  Subspace beta_image(int Y, int X) const {
    return Subspace::span(field(), ass_.dim(Y, X), cell(Y, X).beta);
  }

 protected:
  SparseVec compute_comp(int Z, int Y, int X, int a, int b) const override {
    SparseVec ab = ass_.compose(Z, Y, X, cell(Z, Y).beta[a], cell(Y, X).beta[b]);
    return from_ass(Z, X, ab);
  }

 private:
  AssMonad ass_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<Cell>> cells_;
};

// ------------------------------------------------------- primitivity ideal

// id_{i−1} × θ × id_{n−i} in L(n+1, n)
inline GrElt theta_dilation(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("theta_dilation position " + std::to_string(i));
  auto tuple = [&](bool left, bool right) {
    std::vector<Word> w;
    for (int k = 1; k <= n; ++k) {
      if (k != i) {
        w.push_back(Word::gen(n, k));
        continue;
      }
      w.push_back(left ? Word::gen(n, k) : Word::identity(n));
      w.push_back(right ? Word::gen(n, k) : Word::identity(n));
    }
    return GrTuple(n, w);
  };
  return {{tuple(true, true), Q(1)}, {tuple(false, true), Q(-1)}, {tuple(true, false), Q(-1)}};
}

// θ = [x1|x1]_1 − [e|x1]_1 − [x1|e]_1
inline GrElt theta_gr() { return theta_dilation(1, 1); }

// ⋂_j ker(θ-dilation at j ▷) inside A_Ass(m,n).
inline Subspace theta_kernel(const AssMonad& A, int m, int n) {
  const Field& F = A.field();
  const int dom = A.dim(m, n), cod = A.dim(m + 1, n);
  std::vector<SparseVec> cols(dom);
  std::vector<GrElt> thetas;
  for (int j = 1; j <= m; ++j) thetas.push_back(theta_dilation(m, j));
  for (int a = 0; a < dom; ++a) {
    TensorPoly v = A.poly(m, n, SparseVec::unit(a));
    Accumulator acc(F);
    for (int j = 0; j < m; ++j) acc.add(Q(1), shift(A.vec(m + 1, n, exp_action(F, thetas[j], v)), j * cod));
    cols[a] = acc.take();
  }
  return kernel_of_columns(F, dom, std::max(1, m * cod), cols);
}

// δ-component of k<X_N>^{⊗X} as a functor on gr^o, acting by exp_action.
class TensorComponentFunctor : public GrFunctor {
 public:
  TensorComponentFunctor(const Field& F, std::vector<int> delta) : F_(F), delta_(std::move(delta)) {}
  const Field& field() const override { return F_; }
  int dim(int X) const override { return basis(X).size(); }
  using GrFunctor::act;
  SparseVec act(const GrTuple& t, const SparseVec& v) const override {
    TensorPoly p = basis(t.n).poly(F_, (int)delta_.size(), t.n, v);
    return basis(t.m()).vec(F_, exp_action(t, p));
  }
  const KeyIndex& basis(int X) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = B_.find(X);
    if (it == B_.end()) it = B_.emplace(X, KeyIndex(component_basis(X, delta_))).first;
    return it->second;
  }

 private:
  Field F_;
  std::vector<int> delta_;
  mutable std::mutex mu_;
  mutable std::map<int, KeyIndex> B_;
};

}  // namespace eigenmonad
