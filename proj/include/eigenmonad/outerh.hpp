#pragma once

// Outer modules: simultaneous conjugation of tuples, the exchange identity
// behind I^out, a bounded certificate for equality in H_0, and the map to
// the abelianization.

#include "passi.hpp"

namespace eigenmonad {

inline Word conjugate(const Word& g, const Word& w) { return word_mul(word_mul(g, w), word_inv(g)); }

// Ad_g([w_1|...|w_m]_n) = [g w_1 g^{-1}|...|g w_m g^{-1}]_n
inline GrTuple ad_action(const Word& g, const GrTuple& t) {
  if (g.n != t.n) throw GeneratorMismatch("ad_action: conjugator over " + std::to_string(g.n) + " generators");
  std::vector<Word> w;
  for (auto& x : t.w) w.push_back(conjugate(g, x));
  return GrTuple(t.n, w);
}

struct ExchangeResult {
  bool holds = false;
  Word h;  // ρ̂(g)
  GrTuple lhs, rhs;
};

// Ad_g(id_m) ∘ ρ = ρ ∘ Ad_h(id_n) with h = ρ̂(g), for ρ with m words over n letters and g ∈ F_m.
inline ExchangeResult outer_exchange_check(const Word& g, const GrTuple& rho) {
  if (g.n != rho.m()) throw GeneratorMismatch("outer_exchange_check: g must lie in F_m");
  ExchangeResult r;
  r.h = substitute(g, rho.w, rho.n);
  r.lhs = compose(ad_action(g, GrTuple::identity(rho.m())), rho);
  r.rhs = compose(rho, ad_action(r.h, GrTuple::identity(rho.n)));
  r.holds = r.lhs == r.rhs;
  return r;
}

// Conjugate by single generators while that shortens the tuple; the first
// improving generator in the order x1, x1^-1, x2, ... is taken.
inline GrTuple local_min_rep(const GrTuple& t) {
  GrTuple cur = t;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= t.n && !moved; ++i)
      for (int s : {i, -i}) {
        GrTuple c = ad_action(Word(t.n, {s}), cur);
        if (c.total_length() < cur.total_length()) {
          cur = c;
          moved = true;
          break;
        }
      }
  }
  return cur;
}

// Combination of tuples up to simultaneous conjugation, stored on local-minimal representatives.
inline GrElt conj_class_elt(const Field& F, const GrElt& e) {
  GrElt r;
  for (auto& [t, x] : e) elt_add(F, r, local_min_rep(t), x);
  return r;
}

enum class H0Verdict { EqualCertified, Inconclusive };

struct H0Result {
  H0Verdict verdict = H0Verdict::Inconclusive;
  Word conjugator;
  int bound = 0;
  bool certified() const { return verdict == H0Verdict::EqualCertified; }
};

// Search conjugators c with |c| ≤ B and Ad_c(a) = b.  Words are extended only
// while they stay reduced, shortest first, so the witness is a shortest one.
inline H0Result h0_equal(const GrTuple& a, const GrTuple& b, int B) {
  if (B < 0) throw std::invalid_argument("h0_equal: negative bound");
  H0Result r;
  r.bound = B;
  if (a.n != b.n || a.m() != b.m()) return r;
  // conjugation preserves exponent sums; distinct sums can never be certified
  if (!(alpha(a) == alpha(b))) return r;
  std::vector<Word> layer{Word::identity(a.n)};
  for (int len = 0; len <= B; ++len) {
    for (auto& c : layer)
      if (ad_action(c, a) == b) {
        r.verdict = H0Verdict::EqualCertified;
        r.conjugator = c;
        return r;
      }
    if (len == B) break;
    std::vector<Word> next;
    for (auto& c : layer)
      for (int i = 1; i <= a.n; ++i)
        for (int s : {i, -i}) {
          if (!c.l.empty() && c.l.back() == -s) continue;
          auto l = c.l;
          l.push_back(s);
          next.push_back(Word(a.n, l));
        }
    layer = std::move(next);
  }
  return r;
}

inline IntMat h0_to_abelianization(const GrTuple& t) { return alpha(t); }

}  // namespace eigenmonad
