#include <gtest/gtest.h>

#include <random>

#include "eigenmonad/exactla.hpp"

using namespace eigenmonad;

namespace {

const Field QQ = Field::rationals();

Mat M(const std::vector<std::vector<long>>& a, const Field& F = QQ) {
  std::vector<std::vector<Q>> q;
  for (auto& r : a) {
    q.emplace_back();
    for (long x : r) q.back().push_back(Q(x));
  }
  return Mat::dense(F, q);
}

Mat random_mat(std::mt19937_64& g, int r, int c, const Field& F = QQ) {
  std::vector<std::vector<long>> a(r, std::vector<long>(c));
  for (auto& row : a)
    for (auto& x : row) x = (long)(g() % 7) - 3;
  // sparsify so that rank deficiency actually happens
  for (auto& row : a)
    for (auto& x : row)
      if (g() % 3 == 0) x = 0;
  return M(a, F);
}

}  // namespace

TEST(Rref, RankOneRows) {
  auto [r, piv] = rref(M({{2, 4}, {1, 2}}));
  EXPECT_EQ(r, M({{1, 2}}));
  EXPECT_EQ(piv, std::vector<int>{0});
}

TEST(Rref, IdentityIsFixed) {
  auto [r, piv] = rref(Mat::identity(QQ, 3));
  EXPECT_EQ(r, Mat::identity(QQ, 3));
  EXPECT_EQ(piv, (std::vector<int>{0, 1, 2}));
}

TEST(Rref, OverF2) {
  Field F2 = Field::prime(2);
  auto [r, piv] = rref(M({{1, 1}, {1, 1}}, F2));
  EXPECT_EQ(r, M({{1, 1}}, F2));
  EXPECT_EQ(piv, std::vector<int>{0});
}

TEST(Field, RejectsComposite) { EXPECT_THROW(Field::prime(6), std::invalid_argument); }

TEST(Field, InversesModP) {
  Field F7 = Field::prime(7);
  for (int a = 1; a < 7; ++a) EXPECT_EQ(F7.mul(Q(a), F7.inv(Q(a))), Q(1));
  EXPECT_EQ(F7.norm(Q(1, 2)), Q(4));
}

TEST(Kernel, ZeroMatrixGivesEverything) {
  Subspace k = kernel(Mat(QQ, 2, 3));
  EXPECT_EQ(k.dim(), 3);
  EXPECT_EQ(k, Subspace::full(QQ, 3));
}

TEST(Kernel, AntiDiagonal) {
  Subspace k = kernel(M({{1, -1}}));
  EXPECT_EQ(k, Subspace::span(QQ, 2, {SparseVec{{{0, Q(1)}, {1, Q(1)}}}}));
}

TEST(Kernel, RowOneTwoThree) {
  Mat m = M({{1, 2, 3}});
  Subspace k = kernel(m);
  ASSERT_EQ(k.dim(), 2);
  for (auto& v : k.basis()) EXPECT_TRUE(mat_vec(m, v).empty());
}

TEST(Lattice, SumIntersectQuotient) {
  auto e = [](int i) { return SparseVec::unit(i); };
  EXPECT_EQ(sum(Subspace::span(QQ, 3, {e(0)}), Subspace::span(QQ, 3, {e(1)})).dim(), 2);
  SparseVec d{{{0, Q(1)}, {1, Q(1)}}};
  auto a = Subspace::span(QQ, 3, {d});
  EXPECT_EQ(intersect(a, Subspace::span(QQ, 3, {e(0), e(1)})), a);
  EXPECT_EQ(quotient_dim(Subspace::span(QQ, 2, {e(0)}), Subspace::full(QQ, 2)), 1);
  EXPECT_THROW(quotient_dim(Subspace::full(QQ, 2), Subspace::span(QQ, 2, {e(0)})), NotASubspace);
  EXPECT_THROW(sum(Subspace::zero(QQ, 2), Subspace::zero(QQ, 3)), DimensionMismatch);
}

TEST(Intertwiner, Unconstrained) { EXPECT_EQ(solve_intertwiner(QQ, 2, 2, {}).dim(), 4); }

TEST(Intertwiner, DiagonalCommutant) {
  Mat d = M({{1, 0}, {0, 2}});
  Subspace s = solve_intertwiner(QQ, 2, 2, {{d, d}});
  EXPECT_EQ(s.dim(), 2);
  // X = diag(a, b): flattened coordinates 0 and 3
  EXPECT_TRUE(s.member(SparseVec::unit(0)));
  EXPECT_TRUE(s.member(SparseVec::unit(3)));
}

TEST(Intertwiner, SwapAgainstIdentity) {
  Subspace s = solve_intertwiner(QQ, 2, 2, {{M({{0, 1}, {1, 0}}), Mat::identity(QQ, 2)}});
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.member(SparseVec{{{0, Q(1)}, {2, Q(1)}}}));
  EXPECT_THROW(solve_intertwiner(QQ, 2, 2, {{Mat::identity(QQ, 3), Mat::identity(QQ, 2)}}), DimensionMismatch);
}

TEST(Quotient, CoordinatesRoundTrip) {
  SparseVec d{{{0, Q(1)}, {1, Q(1)}}};
  QuotientCoords qc(Subspace::span(QQ, 3, {d}));
  ASSERT_EQ(qc.dim(), 2);
  SparseVec v{{{0, Q(2)}, {2, Q(5)}}};
  SparseVec back = qc.lift(qc.project(v));
  // v and its lift differ by an element of the subspace
  EXPECT_TRUE(qc.sub().member(axpy(QQ, v, Q(-1), back)));
}

class RandomMatrices : public ::testing::TestWithParam<int> {};

TEST_P(RandomMatrices, RankNullityAndIdempotence) {
  std::mt19937_64 g(GetParam());
  for (const Field& F : {QQ, Field::prime(2), Field::prime(5)}) {
    for (int t = 0; t < 20; ++t) {
      int r = 1 + (int)(g() % 5), c = 1 + (int)(g() % 6);
      Mat m = random_mat(g, r, c, F);
      auto [e, piv] = rref(m);
      EXPECT_EQ(rank(m) + kernel(m).dim(), c);
      EXPECT_EQ(rref(e).first, e);
      Subspace ker = kernel(m);
      for (auto& v : ker.basis()) EXPECT_TRUE(mat_vec(m, v).empty());
    }
  }
}

TEST_P(RandomMatrices, DimensionFormula) {
  std::mt19937_64 g(GetParam() * 31 + 7);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + (int)(g() % 5);
    auto sub = [&]() {
      Mat m = random_mat(g, 1 + (int)(g() % n), n);
      return Subspace::span(QQ, n, m.r);
    };
    Subspace a = sub(), b = sub();
    Subspace s = sum(a, b), i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(contains(a, i));
    EXPECT_TRUE(contains(b, i));
    EXPECT_TRUE(contains(s, a));
  }
}

TEST_P(RandomMatrices, MembershipMatchesSolve) {
  std::mt19937_64 g(GetParam() * 101 + 3);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(g, 3, 4);
    Subspace a = Subspace::span(QQ, 4, m.r);
    // combinations are members; coordinates reproduce them
    SparseVec v;
    for (auto& row : m.r) v = axpy(QQ, v, Q((long)(g() % 5) - 2), row);
    ASSERT_TRUE(a.member(v));
    auto co = a.coordinates(v);
    SparseVec w;
    for (int k = 0; k < a.dim(); ++k) w = axpy(QQ, w, co[k], a.basis()[k]);
    EXPECT_EQ(w, v);
    // a vector outside the span: rank goes up when appended
    SparseVec u = SparseVec::unit((int)(g() % 4));
    EXPECT_EQ(a.member(u), Subspace::span(QQ, 4, [&] {
                             auto rows = m.r;
                             rows.push_back(u);
                             return rows;
                           }()).dim() == a.dim());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatrices, ::testing::Values(1, 2, 3));
