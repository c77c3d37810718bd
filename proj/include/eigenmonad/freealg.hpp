#pragma once

// Free group words, truncated tensor and polynomial algebras, Magnus
// expansions, Hopf operations on tensor powers, Hall sets.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "exactla.hpp"

namespace eigenmonad {

struct GeneratorMismatch : std::runtime_error {
  explicit GeneratorMismatch(const std::string& w) : std::runtime_error("GeneratorMismatch: " + w) {}
};
struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& w) : std::runtime_error("IndexOutOfRange: " + w) {}
};
struct OrderViolation : std::runtime_error {
  explicit OrderViolation(const std::string& w) : std::runtime_error("OrderViolation: " + w) {}
};

// Deterministic across platforms: raw mt19937_64 output, modular draws.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : g() % n; }
  long range(long lo, long hi) { return lo + (long)below((std::uint64_t)(hi - lo + 1)); }
};

// ---------------------------------------------------------------- words

// Letters are ±i for generator i in 1..n.
struct Word {
  int n = 0;
  std::vector<int> l;

  Word() = default;
  Word(int gens, std::vector<int> letters) : n(gens), l(std::move(letters)) {
    for (int x : l)
      if (x == 0 || std::abs(x) > n) throw GeneratorMismatch("letter outside generator range");
    reduce();
  }
  static Word identity(int gens) { return Word(gens, {}); }
  static Word gen(int gens, int i) { return Word(gens, {i}); }

  void reduce() {
    std::vector<int> s;
    for (int x : l) {
      if (!s.empty() && s.back() == -x) s.pop_back();
      else s.push_back(x);
    }
    l.swap(s);
  }
  int length() const { return (int)l.size(); }
  bool empty() const { return l.empty(); }
  std::vector<long> exponent_sums() const {
    std::vector<long> v(n, 0);
    for (int x : l) v[std::abs(x) - 1] += x > 0 ? 1 : -1;
    return v;
  }
  bool operator==(const Word& o) const { return n == o.n && l == o.l; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const { return n != o.n ? n < o.n : l < o.l; }

  std::string str() const {
    if (l.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < l.size();) {
      std::size_t j = i;
      while (j < l.size() && l[j] == l[i]) ++j;
      s += "x" + std::to_string(std::abs(l[i]));
      long e = (long)(j - i) * (l[i] > 0 ? 1 : -1);
      if (e != 1) s += "^" + std::to_string(e);
      i = j;
    }
    return s;
  }
};

inline Word word_mul(const Word& a, const Word& b) {
  if (a.n != b.n) throw GeneratorMismatch("word_mul");
  std::vector<int> l = a.l;
  l.insert(l.end(), b.l.begin(), b.l.end());
  return Word(a.n, std::move(l));
}

inline Word word_inv(const Word& a) {
  std::vector<int> l(a.l.rbegin(), a.l.rend());
  for (int& x : l) x = -x;
  return Word(a.n, std::move(l));
}

inline Word word_pow(const Word& a, long k) {
  Word r = Word::identity(a.n), b = k < 0 ? word_inv(a) : a;
  for (long i = 0; i < std::abs(k); ++i) r = word_mul(r, b);
  return r;
}

// Substitute x_j -> images[j-1]; images are words in a common generator count.
inline Word substitute(const Word& w, const std::vector<Word>& images, int target_gens) {
  if ((int)images.size() != w.n) throw GeneratorMismatch("substitute: wrong number of images");
  std::vector<int> l;
  for (int x : w.l) {
    const Word& im = images[std::abs(x) - 1];
    if (im.n != target_gens) throw GeneratorMismatch("substitute: image generator count");
    if (x > 0) l.insert(l.end(), im.l.begin(), im.l.end());
    else
      for (auto it = im.l.rbegin(); it != im.l.rend(); ++it) l.push_back(-*it);
  }
  return Word(target_gens, std::move(l));
}

inline Word random_word(Rng& rng, int n, int maxlen) {
  if (n == 0) return Word::identity(0);
  int len = (int)rng.below(maxlen + 1);
  std::vector<int> l;
  while ((int)l.size() < len) {
    int x = (int)rng.below(n) + 1;
    if (rng.below(2)) x = -x;
    if (!l.empty() && l.back() == -x) continue;
    l.push_back(x);
  }
  return Word(n, l);
}

// [w_1|...|w_m]_n : the homomorphism F_m -> F_n with x_i -> w_i.
struct GrTuple {
  int n = 0;
  std::vector<Word> w;

  GrTuple() = default;
  GrTuple(int gens, std::vector<Word> words) : n(gens), w(std::move(words)) {
    for (auto& x : w)
      if (x.n != n) throw GeneratorMismatch("tuple word over wrong generator count");
  }
  int m() const { return (int)w.size(); }
  static GrTuple identity(int n) {
    std::vector<Word> w;
    for (int i = 1; i <= n; ++i) w.push_back(Word::gen(n, i));
    return GrTuple(n, w);
  }
  int total_length() const {
    int s = 0;
    for (auto& x : w) s += x.length();
    return s;
  }
  bool operator==(const GrTuple& o) const { return n == o.n && w == o.w; }
  bool operator!=(const GrTuple& o) const { return !(*this == o); }
  bool operator<(const GrTuple& o) const { return n != o.n ? n < o.n : w < o.w; }
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + w[i].str();
    return s + "]_" + std::to_string(n);
  }
};

// f in L(l,m) composed with g in L(m,n): substitute g into every word of f.
inline GrTuple compose(const GrTuple& f, const GrTuple& g) {
  if (f.n != g.m()) throw GeneratorMismatch("compose: f.n != g.m");
  std::vector<Word> out;
  for (auto& w : f.w) out.push_back(substitute(w, g.w, g.n));
  return GrTuple(g.n, out);
}

inline GrTuple random_tuple(Rng& rng, int n, int m, int maxlen) {
  std::vector<Word> w;
  for (int i = 0; i < m; ++i) w.push_back(random_word(rng, n, maxlen));
  return GrTuple(n, w);
}

// ------------------------------------------------- truncated tensor algebra

// Monomials of k<X_1..X_n>^{⊗m}: factors are byte strings (letter i is the
// byte i), joined by the separator byte.
constexpr char kSep = '|';

inline std::vector<std::string> split_factors(const std::string& key) {
  std::vector<std::string> f(1);
  for (char c : key) {
    if (c == kSep) f.emplace_back();
    else f.back().push_back(c);
  }
  return f;
}

inline std::string join_factors(const std::vector<std::string>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s.push_back(kSep);
    s += f[i];
  }
  return s;
}

inline int key_degree(const std::string& key) {
  int d = 0;
  for (char c : key)
    if (c != kSep) ++d;
  return d;
}

inline std::string factor_str(const std::string& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char c : w) s += "X" + std::to_string((int)c);
  return s;
}

inline std::string key_str(const std::string& key) {
  auto f = split_factors(key);
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "⊗" : "") + factor_str(f[i]);
  return s;
}

struct TensorPoly {
  Field F;
  int n = 0, m = 1, D = -1;  // D < 0 means untruncated
  std::map<std::string, Q> c;

  TensorPoly() = default;
  TensorPoly(const Field& f, int letters, int factors, int maxdeg) : F(f), n(letters), m(factors), D(maxdeg) {}

  static TensorPoly one(const Field& f, int letters, int factors, int maxdeg) {
    TensorPoly p(f, letters, factors, maxdeg);
    p.c[std::string(factors > 0 ? factors - 1 : 0, kSep)] = 1;
    if (factors == 0) p.c[""] = 1;
    return p;
  }
  static TensorPoly monomial(const Field& f, int letters, const std::vector<std::string>& factors, int maxdeg,
                             const Q& coef = 1) {
    TensorPoly p(f, letters, (int)factors.size(), maxdeg);
    p.add(join_factors(factors), coef);
    return p;
  }
  void add(const std::string& key, const Q& x) {
    if (D >= 0 && key_degree(key) > D) return;
    Q v = F.add(c[key], x);
    if (v == 0) c.erase(key);
    else c[key] = v;
  }
  void add(const TensorPoly& o, const Q& s = 1) {
    for (auto& [k, x] : o.c) add(k, F.mul(s, x));
  }
  bool is_zero() const { return c.empty(); }
  bool operator==(const TensorPoly& o) const { return m == o.m && c == o.c; }
  bool operator!=(const TensorPoly& o) const { return !(*this == o); }
  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, x] : c) {
      std::string cs = to_string(x);
      if (!first) s += (cs[0] == '-') ? " - " : " + ";
      else if (cs[0] == '-') s += "-";
      if (cs[0] == '-') cs = cs.substr(1);
      if (cs != "1") s += cs + "*";
      s += key_str(k);
      first = false;
    }
    return s;
  }
};

// Factorwise product in k<X>^{⊗m}, truncated at D.
inline TensorPoly tp_mul(const TensorPoly& a, const TensorPoly& b) {
  if (a.m != b.m) throw DimensionMismatch("tp_mul factor count");
  int D = a.D < 0 ? b.D : (b.D < 0 ? a.D : std::min(a.D, b.D));
  TensorPoly r(a.F, std::max(a.n, b.n), a.m, D);
  for (auto& [ka, xa] : a.c) {
    int da = key_degree(ka);
    auto fa = split_factors(ka);
    for (auto& [kb, xb] : b.c) {
      if (D >= 0 && da + key_degree(kb) > D) continue;
      auto fb = split_factors(kb);
      std::vector<std::string> f(a.m);
      for (int i = 0; i < a.m; ++i) f[i] = fa[i] + fb[i];
      r.add(join_factors(f), a.F.mul(xa, xb));
    }
  }
  return r;
}

// Outer tensor product: factor lists concatenated.
inline TensorPoly tp_tensor(const TensorPoly& a, const TensorPoly& b) {
  int D = a.D < 0 ? b.D : (b.D < 0 ? a.D : std::max(a.D, b.D));
  TensorPoly r(a.F, std::max(a.n, b.n), a.m + b.m, D);
  for (auto& [ka, xa] : a.c)
    for (auto& [kb, xb] : b.c) {
      if (D >= 0 && key_degree(ka) + key_degree(kb) > D) continue;
      std::string k = a.m == 0 ? kb : (b.m == 0 ? ka : ka + kSep + kb);
      r.add(k, a.F.mul(xa, xb));
    }
  return r;
}

inline TensorPoly truncate(const TensorPoly& a, int D) {
  TensorPoly r(a.F, a.n, a.m, D);
  for (auto& [k, x] : a.c) r.add(k, x);
  return r;
}

// x_i -> 1 + X_i,  x_i^{-1} -> sum_k (-X_i)^k, truncated at D.
inline TensorPoly magnus(const Field& F, const Word& w, int D) {
  TensorPoly r = TensorPoly::one(F, w.n, 1, D);
  for (int x : w.l) {
    TensorPoly f(F, w.n, 1, D);
    std::string letter(1, (char)std::abs(x));
    if (x > 0) {
      f.add("", 1);
      f.add(letter, 1);
    } else {
      std::string p;
      for (int k = 0; k <= D; ++k) {
        f.add(p, k % 2 ? -1 : 1);
        p += letter;
      }
    }
    r = tp_mul(r, f);
  }
  return r;
}

inline TensorPoly magnus_tuple(const Field& F, const GrTuple& t, int D) {
  TensorPoly r = TensorPoly::one(F, t.n, 0, D);
  for (auto& w : t.w) r = tp_tensor(r, magnus(F, w, D));
  r.m = t.m();
  return truncate(r, D);
}

// ---------------------------------------------- Hopf operations per factor

inline void check_factor(const TensorPoly& a, int j) {
  if (j < 0 || j >= a.m) throw IndexOutOfRange("factor " + std::to_string(j));
}

// Full comultiplication of factor j (deconcatenation shuffle on positions).
inline TensorPoly comul(const TensorPoly& a, int j) {
  check_factor(a, j);
  TensorPoly r(a.F, a.n, a.m + 1, a.D);
  for (auto& [k, x] : a.c) {
    auto f = split_factors(k);
    const std::string& w = f[j];
    int L = (int)w.size();
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
      std::string left, right;
      for (int i = 0; i < L; ++i) ((mask >> i) & 1u ? left : right).push_back(w[i]);
      std::vector<std::string> g;
      g.insert(g.end(), f.begin(), f.begin() + j);
      g.push_back(left);
      g.push_back(right);
      g.insert(g.end(), f.begin() + j + 1, f.end());
      r.add(join_factors(g), x);
    }
  }
  return r;
}

inline TensorPoly insert_unit_factor(const TensorPoly& a, int j) {
  if (j < 0 || j > a.m) throw IndexOutOfRange("insert position " + std::to_string(j));
  TensorPoly r(a.F, a.n, a.m + 1, a.D);
  for (auto& [k, x] : a.c) {
    auto f = a.m == 0 ? std::vector<std::string>{} : split_factors(k);
    f.insert(f.begin() + j, std::string());
    r.add(join_factors(f), x);
  }
  return r;
}

// Δ̄ = Δ − id⊗1 − 1⊗id on factor j.
inline TensorPoly comul_reduced(const TensorPoly& a, int j) {
  TensorPoly r = comul(a, j);
  r.add(insert_unit_factor(a, j + 1), -1);
  r.add(insert_unit_factor(a, j), -1);
  return r;
}

// Merge factors j and j+1 by multiplication.
inline TensorPoly multiply_factors(const TensorPoly& a, int j) {
  if (j < 0 || j + 1 >= a.m) throw IndexOutOfRange("multiply_factors " + std::to_string(j));
  TensorPoly r(a.F, a.n, a.m - 1, a.D);
  for (auto& [k, x] : a.c) {
    auto f = split_factors(k);
    f[j] += f[j + 1];
    f.erase(f.begin() + j + 1);
    r.add(join_factors(f), x);
  }
  return r;
}

// S(w) = (−1)^{|w|} reversed w.
inline TensorPoly antipode_factor(const TensorPoly& a, int j) {
  check_factor(a, j);
  TensorPoly r(a.F, a.n, a.m, a.D);
  for (auto& [k, x] : a.c) {
    auto f = split_factors(k);
    std::string w(f[j].rbegin(), f[j].rend());
    int sign = f[j].size() % 2 ? -1 : 1;
    f[j] = w;
    r.add(join_factors(f), a.F.mul(x, Q(sign)));
  }
  return r;
}

inline TensorPoly counit_factor(const TensorPoly& a, int j) {
  check_factor(a, j);
  TensorPoly r(a.F, a.n, a.m - 1, a.D);
  for (auto& [k, x] : a.c) {
    auto f = split_factors(k);
    if (!f[j].empty()) continue;
    f.erase(f.begin() + j);
    r.add(a.m == 1 ? std::string() : join_factors(f), x);
  }
  return r;
}

// ------------------------------------------- truncated commutative algebra

struct CommPolyTrunc {
  Field F;
  int n = 0, D = 0;
  std::map<std::vector<int>, Q> c;

  CommPolyTrunc() = default;
  CommPolyTrunc(const Field& f, int vars, int maxdeg) : F(f), n(vars), D(maxdeg) {}
  static CommPolyTrunc one(const Field& f, int vars, int maxdeg) {
    CommPolyTrunc p(f, vars, maxdeg);
    p.add(std::vector<int>(vars, 0), 1);
    return p;
  }
  void add(const std::vector<int>& e, const Q& x) {
    int d = 0;
    for (int v : e) d += v;
    if (d > D) return;
    Q v = F.add(c[e], x);
    if (v == 0) c.erase(e);
    else c[e] = v;
  }
  void add(const CommPolyTrunc& o, const Q& s = 1) {
    for (auto& [e, x] : o.c) add(e, F.mul(s, x));
  }
  bool operator==(const CommPolyTrunc& o) const { return c == o.c; }
  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto& [e, x] : c) {
      if (!s.empty()) s += " + ";
      s += to_string(x);
      for (int i = 0; i < n; ++i)
        if (e[i]) s += "*t" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return s;
  }
};

inline CommPolyTrunc cp_mul(const CommPolyTrunc& a, const CommPolyTrunc& b) {
  CommPolyTrunc r(a.F, a.n, std::min(a.D, b.D));
  for (auto& [ea, xa] : a.c)
    for (auto& [eb, xb] : b.c) {
      std::vector<int> e(a.n);
      for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
      r.add(e, a.F.mul(xa, xb));
    }
  return r;
}

// generalized binomial coefficient C(v, r)
inline Q binom_q(long v, int r) {
  Q x = 1;
  for (int i = 0; i < r; ++i) x = x * Q(v - i) / Q(i + 1);
  return x;
}

// v -> prod (1 + t_i)^{v_i}, truncated at total degree D.
inline CommPolyTrunc abelian_magnus(const Field& F, const std::vector<long>& v, int D) {
  int n = (int)v.size();
  CommPolyTrunc r = CommPolyTrunc::one(F, n, D);
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    CommPolyTrunc f(F, n, D);
    for (int k = 0; k <= D; ++k) {
      std::vector<int> e(n, 0);
      e[i] = k;
      f.add(e, F.norm(binom_q(v[i], k)));
    }
    r = cp_mul(r, f);
  }
  return r;
}

// --------------------------------------------------------------- Hall sets

struct HallNode;
using HallTree = std::shared_ptr<const HallNode>;

struct HallNode {
  int letter = 0;  // > 0 for a leaf
  HallTree left, right;
  std::vector<int> deg;  // multidegree, indexed by letter − 1
  int total = 0;
};

inline HallTree hall_leaf(int nletters, int letter) {
  auto t = std::make_shared<HallNode>();
  t->letter = letter;
  t->deg.assign(nletters, 0);
  t->deg[letter - 1] = 1;
  t->total = 1;
  return t;
}

inline HallTree hall_pair(const HallTree& a, const HallTree& b) {
  auto t = std::make_shared<HallNode>();
  t->left = a;
  t->right = b;
  t->deg = a->deg;
  for (std::size_t i = 0; i < t->deg.size(); ++i) t->deg[i] += b->deg[i];
  t->total = a->total + b->total;
  return t;
}

inline bool is_leaf(const HallTree& t) { return t->letter > 0; }

// Total order: larger total degree first, then leaf index, then (left, right).
inline int hall_cmp(const HallTree& a, const HallTree& b) {
  if (a->total != b->total) return a->total > b->total ? -1 : 1;
  if (is_leaf(a) && is_leaf(b)) return a->letter < b->letter ? -1 : (a->letter > b->letter ? 1 : 0);
  if (is_leaf(a) != is_leaf(b)) return is_leaf(a) ? -1 : 1;
  int c = hall_cmp(a->left, b->left);
  return c != 0 ? c : hall_cmp(a->right, b->right);
}
inline bool hall_less(const HallTree& a, const HallTree& b) { return hall_cmp(a, b) < 0; }

inline std::string hall_str(const HallTree& t) {
  if (is_leaf(t)) return "x" + std::to_string(t->letter);
  return "(" + hall_str(t->left) + "," + hall_str(t->right) + ")";
}

inline bool hall_condition(const HallTree& l, const HallTree& r) {
  if (!hall_less(l, r)) return false;
  return is_leaf(l) || !hall_less(l->right, r);
}

namespace detail {
struct HallMemo {
  std::mutex mu;
  std::map<std::vector<int>, std::vector<HallTree>> table;
};
inline HallMemo& hall_memo() {
  static HallMemo m;
  return m;
}
}  // namespace detail

// All Hall trees of multidegree delta over letters x_1 ≺ ... ≺ x_N (N = delta.size()).
inline std::vector<HallTree> hall_set(const std::vector<int>& delta) {
  const int N = (int)delta.size();
  int total = 0;
  for (int d : delta) total += d;
  if (total < 1) return {};
  {
    auto& memo = detail::hall_memo();
    std::lock_guard<std::mutex> lk(memo.mu);
    auto it = memo.table.find(delta);
    if (it != memo.table.end()) return it->second;
  }
  std::vector<HallTree> out;
  if (total == 1) {
    for (int i = 0; i < N; ++i)
      if (delta[i]) out.push_back(hall_leaf(N, i + 1));
  } else {
    // every split delta = a + b with a, b nonzero
    std::vector<int> a(N, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == N) {
        int ta = 0;
        for (int x : a) ta += x;
        if (ta == 0 || ta == total) return;
        std::vector<int> b(N);
        for (int k = 0; k < N; ++k) b[k] = delta[k] - a[k];
        auto L = hall_set(a), R = hall_set(b);
        for (auto& l : L)
          for (auto& r : R)
            if (hall_condition(l, r)) {
              auto t = hall_pair(l, r);
              if (!hall_less(t, r)) throw OrderViolation(hall_str(t));
              out.push_back(t);
            }
        return;
      }
      for (int v = 0; v <= delta[i]; ++v) {
        a[i] = v;
        rec(i + 1);
      }
      a[i] = 0;
    };
    rec(0);
  }
  std::sort(out.begin(), out.end(), hall_less);
  auto& memo = detail::hall_memo();
  std::lock_guard<std::mutex> lk(memo.mu);
  memo.table.emplace(delta, out);
  return out;
}

// g(leaf) = X_i, g((t', t'')) = [g(t'), g(t'')].
inline TensorPoly hall_expand(const Field& F, const HallTree& t) {
  const int N = (int)t->deg.size();
  if (is_leaf(t)) return TensorPoly::monomial(F, N, {std::string(1, (char)t->letter)}, -1);
  TensorPoly a = hall_expand(F, t->left), b = hall_expand(F, t->right);
  TensorPoly r = tp_mul(a, b);
  r.add(tp_mul(b, a), -1);
  return r;
}

// ------------------------------------------ multidegree components

// Basis of the δ-component of k<X_n>^{⊗m}: all ways to write each factor as
// a word so that letter i appears delta[i] times overall.
// Witt's formula: dim of the multidegree-δ part of the free Lie algebra,
// (1/|δ|) Σ_{e | gcd δ} μ(e) (|δ|/e)! / ∏ (δ_i/e)!.
inline long witt_dimension(const std::vector<int>& delta) {
  int g = 0, tot = 0;
  for (int d : delta) g = std::gcd(g, d), tot += d;
  if (tot == 0) return 0;
  auto mobius = [](int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
      }
    return n > 1 ? -r : r;
  };
  auto multinomial = [](const std::vector<int>& parts) {
    long r = 1;
    int seen = 0;
    for (int k : parts)
      for (int i = 1; i <= k; ++i) r = r * ++seen / i;
    return r;
  };
  long s = 0;
  for (int e = 1; e <= g; ++e)
    if (g % e == 0) {
      std::vector<int> parts;
      for (int d : delta) parts.push_back(d / e);
      s += mobius(e) * multinomial(parts);
    }
  return s / tot;
}

inline std::vector<std::string> component_basis(int m, const std::vector<int>& delta) {
  std::vector<std::string> out;
  std::vector<std::string> f(m);
  std::vector<int> left = delta;
  int remaining = 0;
  for (int d : delta) remaining += d;
  // fill factors left to right; within a factor choose letters in sequence
  std::function<void(int)> rec = [&](int j) {
    if (j == m) {
      if (remaining == 0) out.push_back(join_factors(f));
      return;
    }
    if (j == m - 1) {
      // last factor takes all remaining letters in every order
      std::function<void()> fill = [&]() {
        if (remaining == 0) {
          out.push_back(join_factors(f));
          return;
        }
        for (int i = 0; i < (int)left.size(); ++i)
          if (left[i]) {
            --left[i], --remaining;
            f[j].push_back((char)(i + 1));
            fill();
            f[j].pop_back();
            ++left[i], ++remaining;
          }
      };
      fill();
      return;
    }
    std::function<void()> grow = [&]() {
      rec(j + 1);
      for (int i = 0; i < (int)left.size(); ++i)
        if (left[i]) {
          --left[i], --remaining;
          f[j].push_back((char)(i + 1));
          grow();
          f[j].pop_back();
          ++left[i], ++remaining;
        }
    };
    grow();
  };
  if (m == 0) {
    if (remaining == 0) out.push_back("");
    return out;
  }
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct KeyIndex {
  std::vector<std::string> keys;
  std::map<std::string, int> index;
  explicit KeyIndex(std::vector<std::string> k = {}) : keys(std::move(k)) {
    for (int i = 0; i < (int)keys.size(); ++i) index[keys[i]] = i;
  }
  int size() const { return (int)keys.size(); }
  int at(const std::string& k) const {
    auto it = index.find(k);
    if (it == index.end()) throw IndexOutOfRange("monomial not in basis: " + key_str(k));
    return it->second;
  }
  SparseVec vec(const Field& F, const TensorPoly& p) const {
    std::map<int, Q> m;
    for (auto& [k, x] : p.c) m[at(k)] += x;
    return from_map(F, m);
  }
  TensorPoly poly(const Field& F, int n, int m, const SparseVec& v) const {
    TensorPoly p(F, n, m, -1);
    for (auto& [i, x] : v.e) p.add(keys[i], x);
    return p;
  }
};

// Intersection of the kernels of all reduced comultiplications, inside the
// δ-component of k<X_n>^{⊗m}.  Valid for any δ; the Lie identification needs char 0.
struct PrimitivePart {
  KeyIndex basis;
  Subspace space;
};

inline PrimitivePart primitive_part(const Field& F, int m, const std::vector<int>& delta) {
  const int n = (int)delta.size();
  KeyIndex B(component_basis(m, delta));
  KeyIndex C(component_basis(m + 1, delta));
  std::vector<SparseVec> cols(B.size());
  for (int i = 0; i < B.size(); ++i) {
    TensorPoly e = TensorPoly::monomial(F, n, split_factors(m == 0 ? std::string() : B.keys[i]), -1);
    if (m == 0) e = TensorPoly::one(F, n, 0, -1);
    std::map<int, Q> acc;
    for (int j = 0; j < m; ++j) {
      TensorPoly img = comul_reduced(e, j);
      for (auto& [k, x] : img.c) acc[j * C.size() + C.at(k)] += x;
    }
    cols[i] = from_map(F, acc);
  }
  return {B, kernel_of_columns(F, B.size(), std::max(1, m * C.size()), cols)};
}

// Span of ⊗_i hall_expand(t_i) over all ways to split supp δ into m nonempty
// multidegrees, one Hall tree per factor.
inline Subspace hall_tensor_span(const Field& F, int m, const std::vector<int>& delta, const KeyIndex& B) {
  const int n = (int)delta.size();
  std::vector<SparseVec> gens;
  std::vector<std::vector<int>> parts(m, std::vector<int>(n, 0));
  std::function<void(int, int)> split = [&](int letter, int copy) {
    if (letter == n) {
      for (auto& p : parts) {
        int t = 0;
        for (int x : p) t += x;
        if (t == 0) return;
      }
      std::vector<std::vector<HallTree>> choices;
      for (auto& p : parts) {
        choices.push_back(hall_set(p));
        if (choices.back().empty()) return;  // e.g. x_1^2: no Lie word of that multidegree
      }
      std::vector<int> idx(m, 0);
      while (true) {
        TensorPoly acc = TensorPoly::one(F, n, 0, -1);
        for (int i = 0; i < m; ++i) acc = tp_tensor(acc, hall_expand(F, choices[i][idx[i]]));
        acc.m = m;
        gens.push_back(B.vec(F, acc));
        int k = m - 1;
        while (k >= 0 && ++idx[k] == (int)choices[k].size()) idx[k--] = 0;
        if (k < 0) break;
      }
      return;
    }
    if (copy == delta[letter]) {
      split(letter + 1, 0);
      return;
    }
    for (int i = 0; i < m; ++i) {
      ++parts[i][letter];
      split(letter, copy + 1);
      --parts[i][letter];
    }
  };
  if (m == 0) {
    int t = 0;
    for (int d : delta) t += d;
    if (t == 0) gens.push_back(SparseVec::unit(0));
    return Subspace::span(F, B.size(), gens);
  }
  split(0, 0);
  return Subspace::span(F, B.size(), gens);
}

}  // namespace eigenmonad
