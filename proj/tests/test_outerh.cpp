#include <gtest/gtest.h>

#include "eigenmonad/outerh.hpp"

using namespace eigenmonad;

namespace {

const Field QQ = Field::rationals();

Word w(int n, std::vector<int> l) { return Word(n, std::move(l)); }

}  // namespace

TEST(Ad, Examples) {
  EXPECT_EQ(ad_action(w(1, {1}), GrTuple(1, {w(1, {1})})).str(), "[x1]_1");
  EXPECT_EQ(ad_action(w(2, {1}), GrTuple(2, {w(2, {2})})).str(), "[x1x2x1^-1]_2");
  EXPECT_THROW(ad_action(w(1, {1}), GrTuple(2, {w(2, {2})})), GeneratorMismatch);
}

TEST(Ad, GroupActionLaw) {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    int n = rng.range(1, 3), m = rng.range(0, 3);
    Word g = random_word(rng, n, 4), h = random_word(rng, n, 4);
    GrTuple t = random_tuple(rng, n, m, 4);
    EXPECT_EQ(ad_action(g, ad_action(h, t)), ad_action(word_mul(g, h), t));
    EXPECT_EQ(ad_action(Word::identity(n), t), t);
  }
}

TEST(Exchange, Examples) {
  GrTuple rho(2, {w(2, {2}), w(2, {1})});
  auto r = outer_exchange_check(w(2, {1}), rho);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.h.str(), "x2");
  EXPECT_EQ(r.lhs.str(), "[x2|x2x1x2^-1]_2");
  auto id = outer_exchange_check(w(3, {1, -2}), GrTuple::identity(3));
  EXPECT_EQ(id.lhs, ad_action(w(3, {1, -2}), GrTuple::identity(3)));
  EXPECT_TRUE(id.holds);
  auto e = outer_exchange_check(Word::identity(2), rho);
  EXPECT_EQ(e.lhs, rho);
  EXPECT_TRUE(e.holds);
}

TEST(Exchange, RandomSamples) {
  Rng rng(3);
  for (int k = 0; k < 500; ++k) {
    int n = rng.range(0, 3), m = rng.range(1, 3);
    GrTuple rho = random_tuple(rng, n, m, 4);
    EXPECT_TRUE(outer_exchange_check(random_word(rng, m, 4), rho).holds);
  }
}

TEST(H0, Examples) {
  GrTuple a(2, {w(2, {1, 2})}), b(2, {w(2, {2, 1})});
  auto r = h0_equal(a, b, 1);
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(r.conjugator.str(), "x1^-1");
  EXPECT_FALSE(h0_equal(GrTuple(2, {w(2, {1})}), GrTuple(2, {w(2, {2})}), 4).certified());
  auto same = h0_equal(a, a, 0);
  EXPECT_TRUE(same.certified());
  EXPECT_EQ(same.conjugator.length(), 0);
}

TEST(H0, CertificatesAreSoundAndSymmetric) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    int n = rng.range(1, 3), m = rng.range(1, 2);
    GrTuple a = random_tuple(rng, n, m, 3);
    Word c = random_word(rng, n, 2);
    GrTuple b = ad_action(c, a);
    auto r = h0_equal(a, b, 2);
    ASSERT_TRUE(r.certified());
    EXPECT_EQ(ad_action(r.conjugator, a), b);
    EXPECT_TRUE(h0_equal(b, a, 2).certified());
    EXPECT_EQ(h0_to_abelianization(a), h0_to_abelianization(b));
  }
}

TEST(H0, LocalMinimalRepresentatives) {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    int n = rng.range(1, 3), m = rng.range(1, 2);
    GrTuple t = random_tuple(rng, n, m, 4);
    GrTuple r = local_min_rep(ad_action(random_word(rng, n, 3), t));
    EXPECT_LE(r.total_length(), ad_action(random_word(rng, n, 0), r).total_length());
    for (int i = 1; i <= n; ++i)
      for (int s : {i, -i}) EXPECT_LE(r.total_length(), ad_action(Word(n, {s}), r).total_length());
  }
  GrElt e{{GrTuple(2, {w(2, {1, 2, -1})}), Q(1)}, {GrTuple(2, {w(2, {2})}), Q(-1)}};
  EXPECT_TRUE(conj_class_elt(QQ, e).empty());
}

TEST(Abelianization, KillsOuterGenerators) {
  EXPECT_EQ(h0_to_abelianization(GrTuple(2, {w(2, {1, 2, -1}), Word::identity(2)})).str(), "[0 0;1 0]");
  EXPECT_EQ(h0_to_abelianization(GrTuple::identity(3)), IntMat::identity(3));
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    int n = rng.range(1, 3);
    Word g = random_word(rng, n, 5);
    EXPECT_EQ(alpha(ad_action(g, GrTuple::identity(n))), alpha(GrTuple::identity(n)));
  }
}
