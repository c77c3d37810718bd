#pragma once

// Finite-window monads in Mat_k (k-linear categories on a label set), their
// modules, left ideals, idealizers, eigenmonads, vanishing modules, Hom and
// the balanced tensor over an eigenmonad.
//
// A Monad carries every label it can compose through ("waypoints", 0..cap
// in practice); operations take a window W of labels whose cells they report.
// Quantifiers over intermediate objects range over all labels of the monad.

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_map>

#include "exactla.hpp"
#include "freealg.hpp"

namespace eigenmonad {

struct NotALeftIdeal : std::runtime_error {
  explicit NotALeftIdeal(const std::string& w) : std::runtime_error("NotALeftIdeal: " + w) {}
};

inline SparseVec to_sparse(const Field& F, const std::vector<Q>& v) {
  std::map<int, Q> m;
  for (int i = 0; i < (int)v.size(); ++i)
    if (v[i] != 0) m[i] = v[i];
  return from_map(F, m);
}

namespace detail {
struct Key5Hash {
  std::size_t operator()(const std::array<int, 5>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : k) h = (h ^ (std::size_t)(unsigned)x) * 1099511628211ull;
    return h;
  }
};

// Memo of basis-level bilinear products.
class BilinearCache {
 public:
  template <class F>
  SparseVec get(const std::array<int, 5>& k, F&& compute) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = map_.find(k);
      if (it != map_.end()) return it->second;
    }
    SparseVec v = compute();
    std::lock_guard<std::mutex> lk(mu_);
    return map_.emplace(k, std::move(v)).first->second;
  }
  void clear() {
    std::lock_guard<std::mutex> lk(mu_);
    map_.clear();
  }

 private:
  mutable std::mutex mu_;
  mutable std::unordered_map<std::array<int, 5>, SparseVec, Key5Hash> map_;
};
}  // namespace detail

// ------------------------------------------------------------------ monads

class Monad {
 public:
  Monad(Field F, std::vector<int> labels) : F_(std::move(F)), labels_(std::move(labels)) {}
  virtual ~Monad() = default;
  Monad(const Monad&) = delete;
  Monad& operator=(const Monad&) = delete;

  const Field& field() const { return F_; }
  const std::vector<int>& labels() const { return labels_; }
  bool has_label(int X) const { return std::find(labels_.begin(), labels_.end(), X) != labels_.end(); }

  // T(Y,X): morphisms X -> Y
  virtual int dim(int Y, int X) const = 0;
  virtual std::string basis_label(int, int, int i) const { return "b" + std::to_string(i); }
  virtual SparseVec unit(int X) const = 0;

  // basis a of T(Z,Y) after basis b of T(Y,X), in T(Z,X)
  SparseVec comp(int Z, int Y, int X, int a, int b) const {
    if (!cache_) return compute_comp(Z, Y, X, a, b);
    return memo_.get({Z, Y, X, a, b}, [&] { return compute_comp(Z, Y, X, a, b); });
  }

  SparseVec compose(int Z, int Y, int X, const SparseVec& f, const SparseVec& g) const {
    Accumulator acc(F_);
    for (auto& [a, x] : f.e)
      for (auto& [b, y] : g.e) acc.add(F_.mul(x, y), comp(Z, Y, X, a, b));
    return acc.take();
  }

 protected:
  virtual SparseVec compute_comp(int Z, int Y, int X, int a, int b) const = 0;
  void set_cached(bool on) { cache_ = on; }

 private:
  Field F_;
  std::vector<int> labels_;
  bool cache_ = true;
  detail::BilinearCache memo_;
};

// Explicit structure constants; also the target of materialization and JSON.
class TableMonad : public Monad {
 public:
  TableMonad(Field F, std::vector<int> labels) : Monad(std::move(F), std::move(labels)) { set_cached(false); }

  void set_cell(int Y, int X, int d, std::vector<std::string> names = {}) {
    if (names.empty())
      for (int i = 0; i < d; ++i) names.push_back("b" + std::to_string(i));
    if ((int)names.size() != d) throw DimensionMismatch("basis label count");
    cells_[{Y, X}] = std::move(names);
  }
  void set_comp(int Z, int Y, int X, int a, int b, SparseVec v) { table_[{Z, Y, X, a, b}] = std::move(v); }
  void set_unit(int X, SparseVec u) { units_[X] = std::move(u); }

  int dim(int Y, int X) const override {
    auto it = cells_.find({Y, X});
    return it == cells_.end() ? 0 : (int)it->second.size();
  }
  std::string basis_label(int Y, int X, int i) const override { return cells_.at({Y, X}).at(i); }
  SparseVec unit(int X) const override {
    auto it = units_.find(X);
    return it == units_.end() ? SparseVec{} : it->second;
  }
  const std::map<std::array<int, 5>, SparseVec>& table() const { return table_; }

 protected:
  SparseVec compute_comp(int Z, int Y, int X, int a, int b) const override {
    auto it = table_.find({Z, Y, X, a, b});
    return it == table_.end() ? SparseVec{} : it->second;
  }

 private:
  std::map<std::pair<int, int>, std::vector<std::string>> cells_;
  std::map<std::array<int, 5>, SparseVec> table_;
  std::map<int, SparseVec> units_;
};

// Copy all cells and constants among the given labels into a table.
inline std::unique_ptr<TableMonad> materialize(const Monad& T, const std::vector<int>& W) {
  auto out = std::make_unique<TableMonad>(T.field(), W);
  for (int Y : W)
    for (int X : W) {
      std::vector<std::string> names;
      for (int i = 0; i < T.dim(Y, X); ++i) names.push_back(T.basis_label(Y, X, i));
      out->set_cell(Y, X, T.dim(Y, X), names);
    }
  for (int X : W) out->set_unit(X, T.unit(X));
  for (int Z : W)
    for (int Y : W)
      for (int X : W)
        for (int a = 0; a < T.dim(Z, Y); ++a)
          for (int b = 0; b < T.dim(Y, X); ++b) {
            SparseVec v = T.comp(Z, Y, X, a, b);
            if (!v.empty()) out->set_comp(Z, Y, X, a, b, v);
          }
  return out;
}

// One-object monad (a finite-dimensional algebra), label 0.
inline std::unique_ptr<TableMonad> algebra_monad(const Field& F, int n,
                                                 const std::function<SparseVec(int, int)>& mult,
                                                 const SparseVec& one, std::vector<std::string> names = {}) {
  auto T = std::make_unique<TableMonad>(F, std::vector<int>{0});
  T->set_cell(0, 0, n, std::move(names));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      SparseVec v = mult(a, b);
      if (!v.empty()) T->set_comp(0, 0, 0, a, b, v);
    }
  T->set_unit(0, one);
  return T;
}

// M_k(F) with basis E_ij at index i*k + j.
inline std::unique_ptr<TableMonad> matrix_algebra(const Field& F, int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::map<int, Q> one;
  for (int i = 0; i < k; ++i) one[i * k + i] = 1;
  return algebra_monad(
      F, k * k,
      [k](int a, int b) {
        int i = a / k, j = a % k, l = b / k, m = b % k;
        return j == l ? SparseVec::unit(i * k + m) : SparseVec{};
      },
      from_map(F, one), names);
}

// F[C_n] with basis s^0..s^{n-1}.
inline std::unique_ptr<TableMonad> cyclic_group_algebra(const Field& F, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : (i == 1 ? "s" : "s^" + std::to_string(i)));
  return algebra_monad(
      F, n, [n](int a, int b) { return SparseVec::unit((a + b) % n); }, SparseVec::unit(0), names);
}

// T^op(Y,X) = T(X,Y).
class OppositeMonad : public Monad {
 public:
  explicit OppositeMonad(const Monad& T) : Monad(T.field(), T.labels()), T_(T) { set_cached(false); }
  int dim(int Y, int X) const override { return T_.dim(X, Y); }
  std::string basis_label(int Y, int X, int i) const override { return T_.basis_label(X, Y, i); }
  SparseVec unit(int X) const override { return T_.unit(X); }

 protected:
  SparseVec compute_comp(int Z, int Y, int X, int a, int b) const override { return T_.comp(X, Y, Z, b, a); }

 private:
  const Monad& T_;
};

// ------------------------------------------------------------- monad laws

struct LawReport {
  std::vector<std::string> violations;
  long checked = 0;
  bool exhaustive = true;
  bool ok() const { return violations.empty(); }
};

struct LawOptions {
  long max_per_block = -1;  // < 0: exhaustive; otherwise random sample size per (Z,Y,X,W)
  std::uint64_t seed = 1;
  std::size_t max_reported = 20;
};

inline LawReport check_monad_laws(const Monad& T, const std::vector<int>& W, const LawOptions& opt = {}) {
  LawReport rep;
  Rng rng(opt.seed);
  auto note = [&](const std::string& s) {
    if (rep.violations.size() < opt.max_reported) rep.violations.push_back(s);
    else if (rep.violations.size() == opt.max_reported) rep.violations.push_back("...");
  };
  auto cell = [](int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  for (int Y : W)
    for (int X : W)
      for (int a = 0; a < T.dim(Y, X); ++a) {
        SparseVec e = SparseVec::unit(a);
        ++rep.checked;
        if (T.compose(Y, Y, X, T.unit(Y), e) != e) note("left unit fails at " + cell(Y, X) + " basis " + std::to_string(a));
        if (T.compose(Y, X, X, e, T.unit(X)) != e) note("right unit fails at " + cell(Y, X) + " basis " + std::to_string(a));
      }
  for (int Z : W)
    for (int Y : W)
      for (int X : W)
        for (int V : W) {
          long na = T.dim(Z, Y), nb = T.dim(Y, X), nc = T.dim(X, V);
          long total = na * nb * nc;
          if (total == 0) continue;
          auto check = [&](int a, int b, int c) {
            ++rep.checked;
            SparseVec lhs = T.compose(Z, X, V, T.comp(Z, Y, X, a, b), SparseVec::unit(c));
            SparseVec rhs = T.compose(Z, Y, V, SparseVec::unit(a), T.comp(Y, X, V, b, c));
            if (lhs != rhs)
              note("associativity fails at objects (" + std::to_string(Z) + "," + std::to_string(Y) + "," +
                   std::to_string(X) + "," + std::to_string(V) + ") basis (" + T.basis_label(Z, Y, a) + ", " +
                   T.basis_label(Y, X, b) + ", " + T.basis_label(X, V, c) + ")");
          };
          if (opt.max_per_block < 0 || total <= opt.max_per_block) {
            for (int a = 0; a < na; ++a)
              for (int b = 0; b < nb; ++b)
                for (int c = 0; c < nc; ++c) check(a, b, c);
          } else {
            rep.exhaustive = false;
            for (long s = 0; s < opt.max_per_block; ++s)
              check((int)rng.below(na), (int)rng.below(nb), (int)rng.below(nc));
          }
        }
  return rep;
}

// ----------------------------------------------------------------- modules

class Module {
 public:
  explicit Module(const Monad& T) : T_(T) {}
  virtual ~Module() = default;
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const Monad& monad() const { return T_; }
  const Field& field() const { return T_.field(); }
  virtual int dim(int X) const = 0;

  // basis a of T(Y,X) acting on basis v of M(X)
  SparseVec act_basis(int Y, int X, int a, int v) const {
    if (!cache_) return compute_act(Y, X, a, v);
    return memo_.get({Y, X, a, v, 0}, [&] { return compute_act(Y, X, a, v); });
  }
  SparseVec act(int Y, int X, const SparseVec& t, const SparseVec& m) const {
    Accumulator acc(field());
    for (auto& [a, x] : t.e)
      for (auto& [v, y] : m.e) acc.add(field().mul(x, y), act_basis(Y, X, a, v));
    return acc.take();
  }

 protected:
  virtual SparseVec compute_act(int Y, int X, int a, int v) const = 0;
  void set_cached(bool on) { cache_ = on; }

 private:
  const Monad& T_;
  bool cache_ = true;
  detail::BilinearCache memo_;
};

class TableModule : public Module {
 public:
  explicit TableModule(const Monad& T) : Module(T) { set_cached(false); }
  void set_dim(int X, int d) { dims_[X] = d; }
  void set_act(int Y, int X, int a, int v, SparseVec w) { table_[{Y, X, a, v}] = std::move(w); }
  int dim(int X) const override {
    auto it = dims_.find(X);
    return it == dims_.end() ? 0 : it->second;
  }

 protected:
  SparseVec compute_act(int Y, int X, int a, int v) const override {
    auto it = table_.find({Y, X, a, v});
    return it == table_.end() ? SparseVec{} : it->second;
  }

 private:
  std::map<int, int> dims_;
  std::map<std::array<int, 4>, SparseVec> table_;
};

// A representation of a one-object monad: rho[a] is the matrix of basis a.
inline std::unique_ptr<TableModule> representation(const Monad& T, const std::vector<Mat>& rho) {
  auto M = std::make_unique<TableModule>(T);
  int d = rho.empty() ? 0 : rho[0].rows;
  M->set_dim(0, d);
  for (int a = 0; a < (int)rho.size(); ++a) {
    Mat tr = transpose(rho[a]);
    for (int v = 0; v < d; ++v) M->set_act(0, 0, a, v, tr.r[v]);
  }
  return M;
}

// Action matrix of t in T(Y,X) from M(X) to M(Y), as a Mat (rows = M(Y)).
inline Mat action_matrix(const Module& M, int Y, int X, const SparseVec& t) {
  Mat cols(M.field(), M.dim(X), M.dim(Y));
  for (int v = 0; v < M.dim(X); ++v) cols.r[v] = M.act(Y, X, t, SparseVec::unit(v));
  return transpose(cols);
}

// T(-,X) as a left T-module.
class ColumnModule : public Module {
 public:
  ColumnModule(const Monad& T, int X) : Module(T), X_(X) { set_cached(false); }
  int dim(int Z) const override { return monad().dim(Z, X_); }

 protected:
  SparseVec compute_act(int Y, int Z, int a, int v) const override { return monad().comp(Y, Z, X_, a, v); }

 private:
  int X_;
};

class DirectSumModule : public Module {
 public:
  DirectSumModule(const Module& A, const Module& B) : Module(A.monad()), A_(A), B_(B) { set_cached(false); }
  int dim(int X) const override { return A_.dim(X) + B_.dim(X); }

 protected:
  SparseVec compute_act(int Y, int X, int a, int v) const override {
    if (v < A_.dim(X)) return A_.act_basis(Y, X, a, v);
    return shift(B_.act_basis(Y, X, a, v - A_.dim(X)), A_.dim(Y));
  }

 private:
  const Module& A_;
  const Module& B_;
};

// ---------------------------------------------------------------- subgrids

struct SubGrid {
  std::map<std::pair<int, int>, Subspace> cell;
  int cap = -1;
  bool window_relative = true;

  const Subspace& at(int Y, int X) const {
    auto it = cell.find({Y, X});
    if (it == cell.end())
      throw IndexOutOfRange("subgrid cell (" + std::to_string(Y) + "," + std::to_string(X) + ")");
    return it->second;
  }
  bool has(int Y, int X) const { return cell.count({Y, X}) > 0; }
};

struct ModuleSub {
  std::map<int, Subspace> cell;
  const Subspace& at(int X) const {
    auto it = cell.find(X);
    if (it == cell.end()) throw IndexOutOfRange("module cell " + std::to_string(X));
    return it->second;
  }
};

inline int max_label(const Monad& T) {
  int c = -1;
  for (int x : T.labels()) c = std::max(c, x);
  return c;
}

struct Generator {
  int Y, X;
  SparseVec v;
};

// Smallest family J(Z,X), Z over all labels and X over `columns`, containing
// the generators and closed under left composition.
inline SubGrid left_ideal_closure(const Monad& T, const std::vector<Generator>& gens, std::vector<int> columns) {
  const Field& F = T.field();
  for (auto& g : gens)
    if (std::find(columns.begin(), columns.end(), g.X) == columns.end()) columns.push_back(g.X);
  std::map<std::pair<int, int>, EchelonBuilder> B;
  for (int Z : T.labels())
    for (int X : columns) B.emplace(std::make_pair(Z, X), EchelonBuilder(F, T.dim(Z, X)));
  std::deque<Generator> work;
  for (auto& g : gens)
    if (B.at({g.Y, g.X}).add(g.v)) work.push_back(g);
  while (!work.empty()) {
    Generator g = work.front();
    work.pop_front();
    for (int Z : T.labels())
      for (int a = 0; a < T.dim(Z, g.Y); ++a) {
        SparseVec w = T.compose(Z, g.Y, g.X, SparseVec::unit(a), g.v);
        if (B.at({Z, g.X}).add(w)) work.push_back({Z, g.X, w});
      }
  }
  SubGrid J;
  J.cap = max_label(T);
  for (auto& [k, b] : B) J.cell.emplace(k, Subspace::from_builder(b));
  return J;
}

// T(Z',Z) ∘ J(Z,X) ⊆ J(Z',X) for Z, Z', X in W.
inline void check_left_ideal(const Monad& T, const SubGrid& J, const std::vector<int>& W) {
  for (int X : W)
    for (int Z : W)
      for (int Zp : W) {
        const Subspace& tgt = J.at(Zp, X);
        for (int a = 0; a < T.dim(Zp, Z); ++a)
          for (auto& j : J.at(Z, X).basis())
            if (!tgt.member(T.compose(Zp, Z, X, SparseVec::unit(a), j)))
              throw NotALeftIdeal("cell (" + std::to_string(Zp) + "," + std::to_string(X) + ")");
      }
}

// I(Y,X) = {f in T(Y,X) : J(Z,Y) ∘ f ⊆ J(Z,X) for every label Z}, Y, X in W.
inline SubGrid idealizer(const Monad& T, const SubGrid& J, const std::vector<int>& W, bool check = true) {
  if (check) check_left_ideal(T, J, W);
  const Field& F = T.field();
  std::map<std::pair<int, int>, QuotientCoords> qc;
  for (int Z : T.labels())
    for (int X : W) qc.emplace(std::make_pair(Z, X), QuotientCoords(J.at(Z, X)));
  SubGrid I;
  I.cap = J.cap;
  for (int Y : W)
    for (int X : W) {
      int n = T.dim(Y, X);
      std::vector<std::map<int, Q>> cols(n);
      int off = 0;
      for (int Z : T.labels()) {
        const auto& q = qc.at({Z, X});
        for (auto& j : J.at(Z, Y).basis()) {
          for (int b = 0; b < n; ++b) {
            SparseVec r = q.project(T.compose(Z, Y, X, j, SparseVec::unit(b)));
            for (auto& [i, x] : r.e) cols[b][off + i] = x;
          }
          off += q.dim();
        }
      }
      std::vector<SparseVec> c;
      for (auto& m : cols) c.push_back(from_map(F, m));
      I.cell.emplace(std::make_pair(Y, X), kernel_of_columns(F, n, std::max(off, 1), c));
    }
  return I;
}

// ------------------------------------------------------------- eigenmonad

// E(Y,X) = I(Y,X)/J(Y,X) on window W.  Basis: RREF of the image of I in the
// quotient coordinates of J (complements of J's pivot columns).
class EigenMonad : public Monad {
 public:
  EigenMonad(const Monad& T, SubGrid J, SubGrid I, const std::vector<int>& W)
      : Monad(T.field(), W), T_(T), J_(std::move(J)), I_(std::move(I)) {
    for (int Z : T.labels())
      for (int X : W) qc_.emplace(std::make_pair(Z, X), QuotientCoords(J_.at(Z, X)));
    for (int Y : W)
      for (int X : W) {
        const auto& q = qc_.at({Y, X});
        std::vector<SparseVec> img;
        for (auto& f : I_.at(Y, X).basis()) img.push_back(q.project(f));
        Subspace S = Subspace::span(T.field(), q.dim(), img);
        std::vector<SparseVec> reps;
        for (auto& b : S.basis()) reps.push_back(q.lift(b));
        cells_.emplace(std::make_pair(Y, X), std::move(S));
        reps_.emplace(std::make_pair(Y, X), std::move(reps));
      }
  }

  const Monad& base() const { return T_; }
  const SubGrid& ideal() const { return J_; }
  const SubGrid& idealizer_grid() const { return I_; }
  const QuotientCoords& quotient(int Z, int X) const { return qc_.at({Z, X}); }

  int dim(int Y, int X) const override { return cells_.at({Y, X}).dim(); }
  std::string basis_label(int Y, int X, int i) const override {
    std::string s = "[";
    bool first = true;
    for (auto& [k, x] : reps_.at({Y, X})[i].e) {
      s += (first ? "" : " + ") + (x == 1 ? "" : to_string(x) + "*") + T_.basis_label(Y, X, k);
      first = false;
    }
    return s + "]";
  }
  SparseVec unit(int X) const override { return coords(X, X, qc_.at({X, X}).project(T_.unit(X))); }

  // representative in T(Y,X) of basis e of E(Y,X)
  const SparseVec& rep(int Y, int X, int e) const { return reps_.at({Y, X})[e]; }

  // coordinates of an element of (T/J)(Y,X) known to lie in I/J
  SparseVec coords(int Y, int X, const SparseVec& q) const {
    const Subspace& S = cells_.at({Y, X});
    if (!S.member(q)) throw NotASubspace("element outside the idealizer quotient");
    return to_sparse(field(), S.coordinates(q));
  }

  // Right action of E on the bimodule T/J: [t] ◁ e = [t̃ ∘ rep(e)].
  SparseVec right_act(int Z, int Y, int X, const SparseVec& t_quot, int e) const {
    SparseVec t = qc_.at({Z, Y}).lift(t_quot);
    return qc_.at({Z, X}).project(T_.compose(Z, Y, X, t, rep(Y, X, e)));
  }

 protected:
  SparseVec compute_comp(int Z, int Y, int X, int a, int b) const override {
    SparseVec t = T_.compose(Z, Y, X, rep(Z, Y, a), rep(Y, X, b));
    return coords(Z, X, qc_.at({Z, X}).project(t));
  }

 private:
  const Monad& T_;
  SubGrid J_, I_;
  std::map<std::pair<int, int>, QuotientCoords> qc_;
  std::map<std::pair<int, int>, Subspace> cells_;
  std::map<std::pair<int, int>, std::vector<SparseVec>> reps_;
};

inline std::unique_ptr<EigenMonad> make_eigenmonad(const Monad& T, const SubGrid& J, const std::vector<int>& W,
                                              bool check = true) {
  SubGrid I = idealizer(T, J, W, check);
  return std::make_unique<EigenMonad>(T, J, std::move(I), W);
}

// (T/J)(-,X) as a left T-module; coordinates are the quotient coordinates.
class QuotientColumnModule : public Module {
 public:
  QuotientColumnModule(const EigenMonad& E, int X) : Module(E.base()), E_(E), X_(X) {}
  int dim(int Z) const override { return E_.quotient(Z, X_).dim(); }

 protected:
  SparseVec compute_act(int Y, int Z, int a, int v) const override {
    SparseVec t = E_.quotient(Z, X_).lift(SparseVec::unit(v));
    return E_.quotient(Y, X_).project(monad().compose(Y, Z, X_, SparseVec::unit(a), t));
  }

 private:
  const EigenMonad& E_;
  int X_;
};

// ------------------------------------------------------- vanishing modules

// V_J(M)(X) = {m in M(X) : J(Z,X) ▷ m = 0 for every label Z}.
inline ModuleSub vanishing_subspaces(const SubGrid& J, const Module& M, const std::vector<int>& W) {
  const Monad& T = M.monad();
  const Field& F = T.field();
  ModuleSub V;
  for (int X : W) {
    int n = M.dim(X);
    std::vector<std::map<int, Q>> cols(n);
    int off = 0;
    for (int Z : T.labels()) {
      for (auto& j : J.at(Z, X).basis()) {
        for (int v = 0; v < n; ++v)
          for (auto& [i, x] : M.act(Z, X, j, SparseVec::unit(v)).e) cols[v][off + i] = x;
        off += M.dim(Z);
      }
    }
    std::vector<SparseVec> c;
    for (auto& m : cols) c.push_back(from_map(F, m));
    V.cell.emplace(X, kernel_of_columns(F, n, std::max(off, 1), c));
  }
  return V;
}

// V_J(M) with its induced E-action, coordinates w.r.t. the RREF basis of V(X).
class VanishingModule : public Module {
 public:
  VanishingModule(const EigenMonad& E, const Module& M)
      : Module(E), E_(E), M_(M), V_(vanishing_subspaces(E.ideal(), M, E.labels())) {}
  int dim(int X) const override { return V_.at(X).dim(); }
  const Subspace& space(int X) const { return V_.at(X); }

 protected:
  SparseVec compute_act(int Y, int X, int e, int v) const override {
    SparseVec w = M_.act(Y, X, E_.rep(Y, X, e), V_.at(X).basis()[v]);
    const Subspace& S = V_.at(Y);
    if (!S.member(w)) throw NotASubspace("eigenmonad action leaves the vanishing module");
    return to_sparse(field(), S.coordinates(w));
  }

 private:
  const EigenMonad& E_;
  const Module& M_;
  ModuleSub V_;
};

// ------------------------------------------------------------------- Hom_T

struct HomSpace {
  Subspace space;
  // variable offset for the block phi_X : M(X) -> N(X), stored row-major (N rows)
  std::map<int, int> offset;
};

// All families phi_X : M(X) -> N(X) over `labels` commuting with the action
// of every basis morphism between them.
inline HomSpace hom_T(const Module& M, const Module& N, const std::vector<int>& labels) {
  const Monad& T = M.monad();
  const Field& F = T.field();
  HomSpace H{Subspace::zero(F, 0), {}};
  int nv = 0;
  for (int X : labels) {
    H.offset[X] = nv;
    nv += N.dim(X) * M.dim(X);
  }
  auto var = [&](int X, int i, int j) { return H.offset.at(X) + i * M.dim(X) + j; };
  std::vector<SparseVec> rows;
  for (int Y : labels)
    for (int X : labels)
      for (int a = 0; a < T.dim(Y, X); ++a)
        for (int j = 0; j < M.dim(X); ++j) {
          // phi_Y(t ▷ e_j) − t ▷ phi_X(e_j) = 0 in N(Y)
          std::vector<std::map<int, Q>> eq(N.dim(Y));
          SparseVec tm = M.act_basis(Y, X, a, j);
          for (int l = 0; l < N.dim(Y); ++l)
            for (auto& [k, x] : tm.e) eq[l][var(Y, l, k)] += x;
          for (int i = 0; i < N.dim(X); ++i)
            for (auto& [l, x] : N.act_basis(Y, X, a, i).e) eq[l][var(X, i, j)] -= x;
          for (auto& e : eq) {
            SparseVec r = from_map(F, e);
            if (!r.empty()) rows.push_back(std::move(r));
          }
        }
  Mat A(F, (int)rows.size(), nv);
  A.r = std::move(rows);
  H.space = kernel(A);
  return H;
}

// ------------------------------------------------------ balanced tensor

// (T/J) ⊗_E N over all labels of T: the quotient of ⊕_{Y in W} (T/J)(Z,Y) ⊗ N(Y)
// by (b ◁ e) ⊗ n − b ⊗ (e ▷ n).
class BalancedTensor : public Module {
 public:
  BalancedTensor(const EigenMonad& E, const Module& N) : Module(E.base()), E_(E), N_(N) {}

  int dim(int Z) const override { return cell(Z).qc.dim(); }

  // total coordinate space dimension at Z and the relation subspace
  const Subspace& relations(int Z) const { return cell(Z).qc.sub(); }
  int summand_offset(int Z, int Y) const { return cell(Z).offset.at(Y); }

  // class of [b] ⊗ n with b in quotient coordinates of (T/J)(Z,Y)
  SparseVec pure(int Z, int Y, const SparseVec& b, const SparseVec& n) const {
    const Cell& c = cell(Z);
    return c.qc.project(raw_pure(c, Z, Y, b, n));
  }

 protected:
  SparseVec compute_act(int Zp, int Z, int a, int v) const override {
    const Cell& c = cell(Z);
    SparseVec x = c.qc.lift(SparseVec::unit(v));
    const Cell& cp = cell(Zp);
    Accumulator acc(field());
    for (auto& [idx, coef] : x.e) {
      auto [Y, bi, ni] = c.decode(idx, N_);
      const QuotientCoords& qZY = E_.quotient(Z, Y);
      SparseVec t = monad().compose(Zp, Z, Y, SparseVec::unit(a), qZY.lift(SparseVec::unit(bi)));
      SparseVec b2 = E_.quotient(Zp, Y).project(t);
      acc.add(coef, raw_pure(cp, Zp, Y, b2, SparseVec::unit(ni)));
    }
    return cp.qc.project(acc.take());
  }

 private:
  struct Cell {
    std::map<int, int> offset;
    std::map<int, int> bdim;
    int total = 0;
    QuotientCoords qc{Subspace::zero(Field::rationals(), 0)};
    std::tuple<int, int, int> decode(int idx, const Module& N) const {
      for (auto& [Y, off] : offset) {
        int size = bdim.at(Y) * N.dim(Y);
        if (idx >= off && idx < off + size) return {Y, (idx - off) / N.dim(Y), (idx - off) % N.dim(Y)};
      }
      throw IndexOutOfRange("balanced tensor coordinate");
    }
  };

  SparseVec raw_pure(const Cell& c, int, int Y, const SparseVec& b, const SparseVec& n) const {
    int off = c.offset.at(Y), nd = N_.dim(Y);
    std::map<int, Q> m;
    for (auto& [i, x] : b.e)
      for (auto& [k, y] : n.e) m[off + i * nd + k] += field().mul(x, y);
    return from_map(field(), m);
  }

  const Cell& cell(int Z) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cells_.find(Z);
    if (it != cells_.end()) return it->second;
    Cell c;
    for (int Y : E_.labels()) {
      c.offset[Y] = c.total;
      c.bdim[Y] = E_.quotient(Z, Y).dim();
      c.total += c.bdim[Y] * N_.dim(Y);
    }
    EchelonBuilder R(field(), c.total);
    for (int Yp : E_.labels())
      for (int Y : E_.labels())
        for (int e = 0; e < E_.dim(Yp, Y); ++e)
          for (int b = 0; b < c.bdim[Yp]; ++b)
            for (int n = 0; n < N_.dim(Y); ++n) {
              SparseVec lhs = raw_pure(c, Z, Y, E_.right_act(Z, Yp, Y, SparseVec::unit(b), e), SparseVec::unit(n));
              SparseVec rhs = raw_pure(c, Z, Yp, SparseVec::unit(b), N_.act_basis(Yp, Y, e, n));
              R.add(axpy(field(), lhs, Q(-1), rhs));
            }
    c.qc = QuotientCoords(Subspace::from_builder(R));
    return cells_.emplace(Z, std::move(c)).first->second;
  }

  const EigenMonad& E_;
  const Module& N_;
  mutable std::mutex mu_;
  mutable std::map<int, Cell> cells_;
};

// ------------------------------------------------------ adjunction checks

struct AdjunctionResult {
  bool counit_epi = false;
  bool unit_mono = false;
};

// Counit T/J ⊗_E V_J(M) -> M surjective on every cell of the window.
inline bool counit_epi(const EigenMonad& E, const Module& M) {
  const Field& F = E.field();
  ModuleSub V = vanishing_subspaces(E.ideal(), M, E.labels());
  for (int Z : E.labels()) {
    EchelonBuilder img(F, M.dim(Z));
    for (int Y : E.labels())
      for (int b = 0; b < E.quotient(Z, Y).dim(); ++b) {
        SparseVec t = E.quotient(Z, Y).lift(SparseVec::unit(b));
        for (auto& v : V.at(Y).basis()) img.add(M.act(Z, Y, t, v));
      }
    if (img.rank() != M.dim(Z)) return false;
  }
  return true;
}

// Unit N -> V_J(T/J ⊗_E N), n ↦ [1] ⊗ n, injective on every window cell.
inline bool unit_mono(const EigenMonad& E, const Module& N) {
  BalancedTensor P(E, N);
  for (int X : E.labels()) {
    SparseVec one = E.quotient(X, X).project(E.base().unit(X));
    std::vector<SparseVec> img;
    for (int n = 0; n < N.dim(X); ++n) img.push_back(P.pure(X, X, one, SparseVec::unit(n)));
    if (Subspace::span(E.field(), P.dim(X), img).dim() != N.dim(X)) return false;
  }
  return true;
}

inline AdjunctionResult adjunction_checks(const EigenMonad& E, const Module& M, const Module& N) {
  return {counit_epi(E, M), unit_mono(E, N)};
}

// Ann(M)(Y,X) = {t in T(Y,X) : t ▷ M(X) = 0}.
inline SubGrid annihilator(const Module& M, const std::vector<int>& W) {
  const Monad& T = M.monad();
  const Field& F = T.field();
  SubGrid A;
  A.cap = max_label(T);
  for (int Y : W)
    for (int X : W) {
      int n = T.dim(Y, X);
      std::vector<SparseVec> cols(n);
      for (int a = 0; a < n; ++a) {
        std::map<int, Q> m;
        for (int v = 0; v < M.dim(X); ++v)
          for (auto& [i, x] : M.act_basis(Y, X, a, v).e) m[v * M.dim(Y) + i] += x;
        cols[a] = from_map(F, m);
      }
      A.cell.emplace(std::make_pair(Y, X), kernel_of_columns(F, n, std::max(1, M.dim(X) * M.dim(Y)), cols));
    }
  return A;
}

}  // namespace eigenmonad
