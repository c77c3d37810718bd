#include <gtest/gtest.h>

#include "eigenmonad/grid_json.hpp"
#include "eigenmonad/monadcore.hpp"

using namespace eigenmonad;

namespace {

const Field QQ = Field::rationals();

SparseVec vec(std::vector<long> c) {
  std::map<int, Q> m;
  for (int i = 0; i < (int)c.size(); ++i)
    if (c[i]) m[i] = Q(c[i]);
  return from_map(QQ, m);
}

Mat dense(const std::vector<std::vector<long>>& a) {
  std::vector<std::vector<Q>> q;
  for (auto& r : a) {
    q.emplace_back();
    for (long x : r) q.back().push_back(Q(x));
  }
  return Mat::dense(QQ, q);
}

// Labels X, T(Y,X) = (Y+1)×(X+1) matrices, composition = matrix product.
class MatrixCategory : public Monad {
 public:
  explicit MatrixCategory(std::vector<int> labels) : Monad(QQ, std::move(labels)) {}
  int dim(int Y, int X) const override { return (Y + 1) * (X + 1); }
  SparseVec unit(int X) const override {
    std::map<int, Q> m;
    for (int i = 0; i <= X; ++i) m[i * (X + 1) + i] = 1;
    return from_map(QQ, m);
  }

 protected:
  SparseVec compute_comp(int, int Y, int X, int a, int b) const override {
    int i = a / (Y + 1), j = a % (Y + 1), k = b / (X + 1), l = b % (X + 1);
    return j == k ? SparseVec::unit(i * (X + 1) + l) : SparseVec{};
  }
};

// E11 = 0, E12 = 1, E21 = 2, E22 = 3
struct M2 {
  std::unique_ptr<TableMonad> T = matrix_algebra(QQ, 2);
  SubGrid J = left_ideal_closure(*T, {{0, 0, SparseVec::unit(0)}}, {0});
};

struct C2 {
  std::unique_ptr<TableMonad> T = cyclic_group_algebra(QQ, 2);
  SubGrid J = left_ideal_closure(*T, {{0, 0, vec({-1, 1})}}, {0});
};

}  // namespace

TEST(Laws, MatrixAlgebraHolds) {
  M2 m;
  auto r = check_monad_laws(*m.T, {0});
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_GT(r.checked, 64);
}

TEST(Laws, CorruptedConstantIsReported) {
  auto T = matrix_algebra(QQ, 2);
  T->set_comp(0, 0, 0, 1, 2, SparseVec::unit(3));  // E12·E21 should be E11
  auto r = check_monad_laws(*T, {0});
  ASSERT_FALSE(r.ok());
  bool named = false;
  for (auto& v : r.violations) named |= v.find("E12") != std::string::npos && v.find("E21") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(Laws, MatrixCategoryWindow) {
  MatrixCategory T({0, 1, 2});
  EXPECT_TRUE(check_monad_laws(T, {0, 1, 2}).ok());
  LawOptions o;
  o.max_per_block = 10;
  auto r = check_monad_laws(T, {0, 1, 2}, o);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.exhaustive);
}

TEST(LeftIdeal, Closures) {
  M2 m;
  EXPECT_EQ(m.J.at(0, 0), Subspace::span(QQ, 4, {SparseVec::unit(0), SparseVec::unit(2)}));
  auto J12 = left_ideal_closure(*m.T, {{0, 0, SparseVec::unit(1)}}, {0});
  EXPECT_EQ(J12.at(0, 0), Subspace::span(QQ, 4, {SparseVec::unit(1), SparseVec::unit(3)}));
  EXPECT_EQ(left_ideal_closure(*m.T, {{0, 0, m.T->unit(0)}}, {0}).at(0, 0).dim(), 4);
  EXPECT_EQ(left_ideal_closure(*m.T, {}, {0}).at(0, 0).dim(), 0);
}

TEST(LeftIdeal, RejectsNonIdeal) {
  M2 m;
  SubGrid bad;
  bad.cell.emplace(std::make_pair(0, 0), Subspace::span(QQ, 4, {SparseVec::unit(0)}));
  EXPECT_THROW(idealizer(*m.T, bad, {0}), NotALeftIdeal);
}

TEST(Eigenring, MatrixAlgebraColumnIdeal) {
  M2 m;
  auto E = make_eigenmonad(*m.T, m.J, {0});
  const Subspace& I = E->idealizer_grid().at(0, 0);
  EXPECT_EQ(I.dim(), 3);
  // lower triangular: E11, E21, E22
  EXPECT_EQ(I, Subspace::span(QQ, 4, {SparseVec::unit(0), SparseVec::unit(2), SparseVec::unit(3)}));
  EXPECT_EQ(E->dim(0, 0), 1);
  EXPECT_TRUE(check_monad_laws(*E, {0}).ok());
}

TEST(Eigenring, BalancedTensorGivesColumnModule) {
  M2 m;
  auto E = make_eigenmonad(*m.T, m.J, {0});
  ColumnModule Eself(*E, 0);
  BalancedTensor P(*E, Eself);
  ASSERT_EQ(P.dim(0), 2);
  // standard representation on column vectors
  std::vector<Mat> rho;
  for (int a = 0; a < 4; ++a) {
    std::vector<std::vector<long>> r(2, std::vector<long>(2, 0));
    r[a / 2][a % 2] = 1;
    rho.push_back(dense(r));
  }
  auto std2 = representation(*m.T, rho);
  std::vector<std::pair<Mat, Mat>> cons;
  for (int a = 0; a < 4; ++a)
    cons.push_back({action_matrix(P, 0, 0, SparseVec::unit(a)), action_matrix(*std2, 0, 0, SparseVec::unit(a))});
  Subspace H = solve_intertwiner(QQ, 2, 2, cons);
  ASSERT_EQ(H.dim(), 1);
  auto x = H.basis()[0];
  Q det = x.at(0) * x.at(3) - x.at(1) * x.at(2);
  EXPECT_NE(det, 0);
}

TEST(Eigenring, GroupAlgebraInvariants) {
  C2 c;
  EXPECT_EQ(c.J.at(0, 0).dim(), 1);
  auto E = make_eigenmonad(*c.T, c.J, {0});
  EXPECT_EQ(E->idealizer_grid().at(0, 0).dim(), 2);  // two-sided: idealizer is everything
  EXPECT_EQ(E->dim(0, 0), 1);
  ColumnModule reg(*c.T, 0);
  ModuleSub V = vanishing_subspaces(c.J, reg, {0});
  EXPECT_EQ(V.at(0), Subspace::span(QQ, 2, {vec({1, 1})}));
  EXPECT_FALSE(counit_epi(*E, reg));
  QuotientColumnModule TJ(*E, 0);
  EXPECT_TRUE(counit_epi(*E, TJ));
  ColumnModule Eself(*E, 0);
  EXPECT_TRUE(unit_mono(*E, Eself));
}

TEST(Eigenring, TrivialCases) {
  C2 c;
  SubGrid zero;
  zero.cell.emplace(std::make_pair(0, 0), Subspace::zero(QQ, 2));
  auto E0 = make_eigenmonad(*c.T, zero, {0});
  EXPECT_EQ(E0->dim(0, 0), 2);
  ColumnModule reg(*c.T, 0);
  EXPECT_EQ(vanishing_subspaces(zero, reg, {0}).at(0).dim(), 2);
  SubGrid all;
  all.cell.emplace(std::make_pair(0, 0), Subspace::full(QQ, 2));
  EXPECT_EQ(make_eigenmonad(*c.T, all, {0})->dim(0, 0), 0);
}

TEST(Annihilator, GroupAlgebra) {
  C2 c;
  auto triv = representation(*c.T, {dense({{1}}), dense({{1}})});
  auto sign = representation(*c.T, {dense({{1}}), dense({{-1}})});
  ColumnModule reg(*c.T, 0);
  EXPECT_EQ(annihilator(*triv, {0}).at(0, 0), c.J.at(0, 0));
  EXPECT_EQ(annihilator(reg, {0}).at(0, 0).dim(), 0);
  DirectSumModule both(*triv, *sign);
  EXPECT_EQ(annihilator(both, {0}).at(0, 0),
            intersect(annihilator(*triv, {0}).at(0, 0), annihilator(*sign, {0}).at(0, 0)));
}

TEST(Hom, YonedaAndVanishing) {
  MatrixCategory T({0, 1, 2});
  std::vector<int> L{0, 1, 2};
  for (int X : L)
    for (int Xp : L) {
      ColumnModule R(T, X), M(T, Xp);
      EXPECT_EQ(hom_T(R, M, L).space.dim(), M.dim(X));
    }
  C2 c;
  auto E = make_eigenmonad(*c.T, c.J, {0});
  QuotientColumnModule TJ(*E, 0);
  ColumnModule reg(*c.T, 0);
  auto triv = representation(*c.T, {dense({{1}}), dense({{1}})});
  for (const Module* M : std::vector<const Module*>{&reg, triv.get(), &TJ})
    EXPECT_EQ(hom_T(TJ, *M, {0}).space.dim(), vanishing_subspaces(c.J, *M, {0}).at(0).dim());
}

// dim E(Y,X) = dim V_J((T/J)(-,X))(Y) = dim Hom((T/J)(-,Y), (T/J)(-,X)).
void expect_four_descriptions(const Monad& T, const SubGrid& J, const std::vector<int>& W) {
  auto E = make_eigenmonad(T, J, W);
  EXPECT_TRUE(check_monad_laws(*E, W).ok());
  for (int X : W) {
    QuotientColumnModule QX(*E, X);
    ModuleSub V = vanishing_subspaces(J, QX, W);
    for (int Y : W) {
      QuotientColumnModule QY(*E, Y);
      EXPECT_EQ(E->dim(Y, X), V.at(Y).dim());
      EXPECT_EQ(E->dim(Y, X), hom_T(QY, QX, T.labels()).space.dim());
    }
  }
}

TEST(FourDescriptions, Examples) {
  M2 m;
  expect_four_descriptions(*m.T, m.J, {0});
  C2 c;
  expect_four_descriptions(*c.T, c.J, {0});
  MatrixCategory T({0, 1, 2});
  // first-row matrices out of object 1
  auto J = left_ideal_closure(T, {{0, 1, SparseVec::unit(0)}}, {0, 1, 2});
  expect_four_descriptions(T, J, {0, 1, 2});
}

TEST(Eigenmonad, MatrixCategoryLawsAndBimodule) {
  MatrixCategory T({0, 1, 2});
  auto J = left_ideal_closure(T, {{1, 2, SparseVec::unit(0)}, {0, 1, SparseVec::unit(1)}}, {0, 1, 2});
  auto E = make_eigenmonad(T, J, {0, 1, 2});
  EXPECT_TRUE(check_monad_laws(*E, {0, 1, 2}).ok());
  // the right action does not depend on the representative of t
  for (int Z : {0, 1, 2})
    for (int Y : {0, 1, 2})
      for (int X : {0, 1, 2})
        for (int e = 0; e < E->dim(Y, X); ++e)
          for (int b = 0; b < E->quotient(Z, Y).dim(); ++b) {
            SparseVec t = E->quotient(Z, Y).lift(SparseVec::unit(b));
            for (auto& j : J.at(Z, Y).basis()) {
              SparseVec t2 = axpy(QQ, t, Q(3), j);
              SparseVec via = E->quotient(Z, X).project(T.compose(Z, Y, X, t2, E->rep(Y, X, e)));
              EXPECT_EQ(via, E->right_act(Z, Y, X, SparseVec::unit(b), e));
            }
          }
}

TEST(Eigenmonad, TwoSidedGivesQuotient) {
  C2 c;
  auto E = make_eigenmonad(*c.T, c.J, {0});
  EXPECT_EQ(E->idealizer_grid().at(0, 0).dim(), c.T->dim(0, 0));
  // vanishingly generated iff V = M
  auto triv = representation(*c.T, {dense({{1}}), dense({{1}})});
  auto sign = representation(*c.T, {dense({{1}}), dense({{-1}})});
  for (const Module* M : std::vector<const Module*>{triv.get(), sign.get()}) {
    bool full = vanishing_subspaces(c.J, *M, {0}).at(0).dim() == M->dim(0);
    EXPECT_EQ(counit_epi(*E, *M), full);
  }
}

TEST(Eigenmonad, OppositeCompatibility) {
  C2 c;
  OppositeMonad Top(*c.T);
  auto E = make_eigenmonad(*c.T, c.J, {0});
  auto Eop = make_eigenmonad(Top, c.J, {0});
  EXPECT_EQ(E->dim(0, 0), Eop->dim(0, 0));
  MatrixCategory T({0, 1});
  // a two-sided ideal: all of T(-,0) and T(0,-)... the zero/whole pair suffices here
  SubGrid J;
  for (int Y : {0, 1})
    for (int X : {0, 1}) J.cell.emplace(std::make_pair(Y, X), Subspace::zero(QQ, T.dim(Y, X)));
  OppositeMonad Mop(T);
  auto A = make_eigenmonad(T, J, {0, 1});
  SubGrid Jt;
  for (int Y : {0, 1})
    for (int X : {0, 1}) Jt.cell.emplace(std::make_pair(Y, X), Subspace::zero(QQ, T.dim(X, Y)));
  auto B = make_eigenmonad(Mop, Jt, {0, 1});
  for (int Y : {0, 1})
    for (int X : {0, 1}) EXPECT_EQ(A->dim(Y, X), B->dim(X, Y));
}

TEST(Vanishing, MonotoneInTheIdeal) {
  MatrixCategory T({0, 1, 2});
  std::vector<int> W{0, 1, 2};
  auto J1 = left_ideal_closure(T, {{0, 2, SparseVec::unit(0)}}, W);
  auto J2 = left_ideal_closure(T, {{0, 2, SparseVec::unit(0)}, {1, 1, SparseVec::unit(3)}}, W);
  for (int X : W) {
    ColumnModule M(T, X);
    auto V1 = vanishing_subspaces(J1, M, W), V2 = vanishing_subspaces(J2, M, W);
    for (int Z : W) EXPECT_TRUE(contains(V1.at(Z), V2.at(Z)));
  }
}

TEST(Window, LargerCapNeverGrowsCells) {
  std::vector<int> W{0, 1};
  MatrixCategory small({0, 1}), big({0, 1, 2});
  std::vector<Generator> g{{0, 1, SparseVec::unit(0)}};
  auto Es = make_eigenmonad(small, left_ideal_closure(small, g, W), W);
  auto Eb = make_eigenmonad(big, left_ideal_closure(big, g, W), W);
  for (int Y : W)
    for (int X : W) EXPECT_LE(Eb->dim(Y, X), Es->dim(Y, X));
}

TEST(GridJson, RoundTripIsExact) {
  MatrixCategory T({0, 1});
  json j = grid_to_json(T, {0, 1});
  auto back = grid_from_json(j);
  EXPECT_EQ(grid_to_json(*back, {0, 1}).dump(), j.dump());
  EXPECT_TRUE(check_monad_laws(*back, {0, 1}).ok());
  M2 m;
  auto E = make_eigenmonad(*m.T, m.J, {0});
  json je = grid_to_json(*E, {0});
  EXPECT_EQ(grid_to_json(*grid_from_json(je), {0}).dump(), je.dump());
  auto F2 = cyclic_group_algebra(Field::prime(2), 2);
  json jf = grid_to_json(*F2, {0});
  EXPECT_EQ(jf["field"], "F_2");
  EXPECT_EQ(grid_to_json(*grid_from_json(jf), {0}).dump(), jf.dump());
}
