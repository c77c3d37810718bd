#include <gtest/gtest.h>

#include "eigenmonad/primgr.hpp"

using namespace eigenmonad;

namespace {

const Field QQ = Field::rationals();

long long rising(int m, int n) {
  long long r = 1;
  for (int i = 0; i < n; ++i) r *= m + i;
  return r;
}

TensorPoly mono(int n, std::vector<std::string> f) { return TensorPoly::monomial(QQ, n, f, -1); }
std::string s(std::initializer_list<int> l) {
  std::string r;
  for (int x : l) r.push_back((char)x);
  return r;
}

TensorPoly random_multilinear(Rng& rng, int N, int m) {
  auto keys = component_basis(m, ones(N));
  TensorPoly p(QQ, N, m, -1);
  for (auto& k : keys)
    if (rng.below(2)) p.add(k, Q(rng.range(-3, 3)));
  return p;
}

SparseVec random_vec(Rng& rng, int dim) {
  std::map<int, Q> m;
  for (int i = 0; i < dim; ++i)
    if (rng.below(3) == 0) m[i] = rng.range(-2, 2);
  return from_map(QQ, m);
}

}  // namespace

TEST(Ass, DimsAreRisingFactorials) {
  AssMonad A(QQ, 4);
  EXPECT_EQ(A.dim(2, 2), 6);
  EXPECT_EQ(A.dim(2, 3), 24);
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(A.dim(m, 0), 1);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(A.dim(m, n), rising(m, n)) << m << "," << n;
}

TEST(Ass, CompositionSubstitutesWords) {
  AssMonad A(QQ, 3);
  // (x2x1) ∘ (x1 ⊗ x2x3) = x2x3x1
  int a = A.cell(1, 2).at(s({2, 1}));
  int b = A.cell(2, 3).at(join_factors({s({1}), s({2, 3})}));
  EXPECT_EQ(A.comp(1, 2, 3, a, b), SparseVec::unit(A.cell(1, 3).at(s({2, 3, 1}))));
  EXPECT_EQ(A.basis_label(2, 3, b), "x1⊗x2x3");
}

TEST(Lie, DimsMatchFormulaAndPrimitiveParts) {
  LieMonad L(QQ, 4);
  EXPECT_EQ(L.dim(1, 3), 2);
  EXPECT_EQ(L.dim(2, 3), 6);
  EXPECT_EQ(L.dim(3, 2), 0);
  EXPECT_EQ(L.dim(0, 0), 1);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(L.dim(m, n), lie_dim_formula(m, n));
      // independent count: primitives of each factor, inside the multilinear component
      EXPECT_EQ(L.dim(m, n), primitive_part(QQ, m, ones(n)).space.dim()) << m << "," << n;
    }
}

TEST(Lie, BetaExamples) {
  LieMonad L(QQ, 3);
  const auto& A = L.ass();
  // bijective f with leaves: a permutation word tuple
  auto& c22 = L.cell(2, 2);
  ASSERT_EQ(c22.basis.size(), 2u);
  EXPECT_EQ(c22.beta[1], SparseVec::unit(A.cell(2, 2).at(join_factors({s({2}), s({1})}))));
  auto& c12 = L.cell(1, 2);
  ASSERT_EQ(c12.basis.size(), 1u);
  EXPECT_EQ(c12.basis[0].str(), "(x1,x2)");
  TensorPoly bracket = mono(2, {s({1, 2})});
  bracket.add(mono(2, {s({2, 1})}), -1);
  EXPECT_EQ(A.poly(1, 2, c12.beta[0]), bracket);
}

TEST(Lie, BetaInjective) {
  LieMonad L(QQ, 4);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(L.beta_image(m, n).dim(), L.dim(m, n));
}

TEST(Laws, AssAndLie) {
  AssMonad A(QQ, 3);
  LieMonad L(QQ, 3);
  std::vector<int> W{0, 1, 2, 3};
  auto ra = check_monad_laws(A, W);
  EXPECT_TRUE(ra.ok()) << (ra.violations.empty() ? "" : ra.violations[0]);
  auto rl = check_monad_laws(L, W);
  EXPECT_TRUE(rl.ok()) << (rl.violations.empty() ? "" : rl.violations[0]);
  EXPECT_TRUE(rl.exhaustive);
}

TEST(Lie, BetaRespectsComposition) {
  LieMonad L(QQ, 3);
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    int Z = rng.range(1, 3), Y = rng.range(Z, 3), X = rng.range(Y, 3);
    SparseVec a = random_vec(rng, L.dim(Z, Y)), b = random_vec(rng, L.dim(Y, X));
    SparseVec lhs = L.beta(Z, X, L.compose(Z, Y, X, a, b));
    SparseVec rhs = L.ass().compose(Z, Y, X, L.beta(Z, Y, a), L.beta(Y, X, b));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(ExpAction, Examples) {
  Word x1 = Word::gen(1, 1);
  GrTuple diag(1, {x1, x1});
  TensorPoly delta = mono(1, {s({1}), ""});
  delta.add(mono(1, {"", s({1})}));
  EXPECT_EQ(exp_action(diag, mono(1, {s({1})})), delta);
  GrTuple mul(2, {Word(2, {1, 2})});
  EXPECT_EQ(exp_action(mul, mono(2, {s({1}), s({2})})), mono(2, {s({1, 2})}));
  GrTuple swap(2, {Word::gen(2, 2), Word::gen(2, 1)});
  EXPECT_EQ(exp_action(swap, mono(2, {s({1}), s({2})})), mono(2, {s({2}), s({1})}));
  // inverse letter: the antipode, S(X1X2) = X2X1
  GrTuple inv(1, {Word(1, {-1})});
  EXPECT_EQ(exp_action(inv, mono(2, {s({1, 2})})), mono(2, {s({2, 1})}));
  // a letter that does not occur applies the counit
  GrTuple drop(2, {Word::gen(2, 1)});
  EXPECT_TRUE(exp_action(drop, mono(2, {s({1}), s({2})})).is_zero());
  EXPECT_EQ(exp_action(drop, mono(1, {s({1}), ""})), mono(1, {s({1})}));
  EXPECT_THROW(exp_action(diag, mono(1, {s({1, 1})})), NotMultilinear);
  EXPECT_THROW(exp_action(swap, mono(1, {s({1})})), GeneratorMismatch);
}

TEST(ExpAction, Functorial) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    int n = rng.range(0, 3), m = rng.range(0, 3), l = rng.range(0, 3), N = rng.range(1, 3);
    GrTuple g = random_tuple(rng, n, m, 2), f = random_tuple(rng, m, l, 2);
    TensorPoly v = random_multilinear(rng, N, n);
    EXPECT_EQ(exp_action(compose(f, g), v), exp_action(f, exp_action(g, v))) << f.str() << " " << g.str();
  }
}

TEST(ExpAction, IdentityAndLinearity) {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    int n = rng.range(0, 3), N = rng.range(1, 3);
    TensorPoly v = random_multilinear(rng, N, n), w = random_multilinear(rng, N, n);
    EXPECT_EQ(exp_action(GrTuple::identity(n), v), v);
    GrTuple t = random_tuple(rng, n, 2, 3);
    TensorPoly vw = v;
    vw.add(w, 2);
    TensorPoly lhs = exp_action(t, vw), rhs = exp_action(t, v);
    rhs.add(exp_action(t, w), 2);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(EandR, Examples) {
  AssMonad A(QQ, 3);
  EXPECT_EQ(E_map(A, 3, 3, A.unit(3)), (GrElt{{GrTuple::identity(3), Q(1)}}));
  EXPECT_EQ(E_map(A, 2, 2, A.cell(2, 2).at(join_factors({s({2}), s({1})}))).str(), "[x2|x1]_2");
  EXPECT_EQ(E_map(A, 1, 2, A.cell(1, 2).at(s({1, 2}))).str(), "[x1x2]_2");
}

TEST(EandR, RightInverse) {
  AssMonad A(QQ, 3);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int a = 0; a < A.dim(m, n); ++a)
        EXPECT_EQ(R_map(A, m, n, {{E_map(A, m, n, a), Q(1)}}), SparseVec::unit(a)) << m << "," << n << "," << a;
}

TEST(EandR, EIsMonadHomomorphism) {
  AssMonad A(QQ, 3);
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    int Z = rng.range(0, 3), Y = rng.range(0, 3), X = rng.range(0, 3);
    if (!A.dim(Z, Y) || !A.dim(Y, X)) continue;
    int a = (int)rng.below(A.dim(Z, Y)), b = (int)rng.below(A.dim(Y, X));
    GrTuple lhs = compose(E_map(A, Z, Y, a), E_map(A, Y, X, b));
    EXPECT_EQ((GrElt{{lhs, Q(1)}}), E_map(A, Z, X, A.comp(Z, Y, X, a, b)));
  }
}

TEST(Theta, RVanishesOnIdeal) {
  AssMonad A(QQ, 4);
  EXPECT_EQ(theta_gr().size(), 3u);
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(R_map(A, n + 1, n, theta_dilation(n, i)).empty());
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    int n = rng.range(1, 3), i = rng.range(1, n), m = rng.range(0, 3);
    GrElt g{{random_tuple(rng, n + 1, m, 3), Q(1)}};
    EXPECT_TRUE(R_map(A, m, n, compose(QQ, g, theta_dilation(n, i))).empty());
  }
}

TEST(Theta, KernelIsLieImage) {
  LieMonad L(QQ, 5);
  EXPECT_EQ(theta_kernel(L.ass(), 1, 2).dim(), 1);
  EXPECT_EQ(theta_kernel(L.ass(), 1, 3).dim(), 2);
  EXPECT_EQ(theta_kernel(L.ass(), 2, 3).dim(), 6);
  EXPECT_EQ(theta_kernel(L.ass(), 3, 2).dim(), 0);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(theta_kernel(L.ass(), m, n), L.beta_image(m, n)) << m << "," << n;
}

TEST(Theta, TransportedComposition) {
  LieMonad L(QQ, 3);
  const auto& A = L.ass();
  Rng rng(13);
  int done = 0;
  while (done < 50) {
    int Z = rng.range(1, 3), Y = rng.range(Z, 3), X = rng.range(Y, 3);
    SparseVec a = random_vec(rng, L.dim(Z, Y)), b = random_vec(rng, L.dim(Y, X));
    GrElt ea = E_map(A, Z, Y, L.beta(Z, Y, a)), eb = E_map(A, Y, X, L.beta(Y, X, b));
    SparseVec lhs = ea.empty() || eb.empty() ? SparseVec{} : R_map(A, Z, X, compose(QQ, ea, eb));
    EXPECT_EQ(lhs, L.beta(Z, X, L.compose(Z, Y, X, a, b)));
    ++done;
  }
}

TEST(TensorFunctor, DegreeTwoNotOne) {
  TensorComponentFunctor T(QQ, {1, 1});
  EXPECT_EQ(T.dim(0), 0);
  EXPECT_EQ(T.dim(1), 2);
  EXPECT_EQ(T.dim(2), 6);
  std::vector<int> W{0, 1, 2, 3};
  EXPECT_TRUE(polynomial_degree_leq(T, 2, W));
  EXPECT_FALSE(polynomial_degree_leq(T, 1, W));
}
