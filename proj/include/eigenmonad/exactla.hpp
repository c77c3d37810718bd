#pragma once

// Exact linear algebra over Q and F_p.  Vectors are sparse, subspaces are
// kept in reduced row-echelon form so that equality is syntactic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eigenmonad {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& w) : std::runtime_error("DimensionMismatch: " + w) {}
};
struct NotASubspace : std::runtime_error {
  explicit NotASubspace(const std::string& w) : std::runtime_error("NotASubspace: " + w) {}
};

inline std::string to_string(const Q& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline Q parse_q(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Q(Z(s));
  return Q(Z(s.substr(0, slash)), Z(s.substr(slash + 1)));
}

class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(long p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("field characteristic must be a prime");
    Field f;
    f.p_ = p;
    return f;
  }
  bool is_rational() const { return p_ == 0; }
  long characteristic() const { return p_; }
  std::string name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

  Q norm(const Q& a) const {
    if (p_ == 0) return a;
    Z n = boost::multiprecision::numerator(a) % p_;
    Z d = boost::multiprecision::denominator(a) % p_;
    if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
    long r = (long)((n * inv_mod(static_cast<long>(d))) % p_);
    if (r < 0) r += p_;
    return Q(r);
  }
  Q add(const Q& a, const Q& b) const { return p_ == 0 ? Q(a + b) : norm(a + b); }
  Q sub(const Q& a, const Q& b) const { return p_ == 0 ? Q(a - b) : norm(a - b); }
  Q mul(const Q& a, const Q& b) const { return p_ == 0 ? Q(a * b) : norm(a * b); }
  Q neg(const Q& a) const { return p_ == 0 ? Q(-a) : norm(-a); }
  Q inv(const Q& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (p_ == 0) return 1 / a;
    long v = static_cast<long>(boost::multiprecision::numerator(a));
    return Q(inv_mod(v));
  }
  Q div(const Q& a, const Q& b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  long inv_mod(long a) const {
    long t = 0, nt = 1, r = p_, nr = a % p_;
    if (nr < 0) nr += p_;
    while (nr != 0) {
      long q = r / nr, tmp = t - q * nt;
      t = nt, nt = tmp;
      tmp = r - q * nr;
      r = nr, nr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible");
    return t < 0 ? t + p_ : t;
  }
  long p_ = 0;
};

// Sorted by index, no zero entries.
struct SparseVec {
  std::vector<std::pair<int, Q>> e;

  bool empty() const { return e.empty(); }
  std::size_t nnz() const { return e.size(); }
  int lead() const { return e.empty() ? -1 : e.front().first; }
  Q at(int i) const {
    auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, int k) { return p.first < k; });
    return (it != e.end() && it->first == i) ? it->second : Q(0);
  }
  bool operator==(const SparseVec& o) const { return e == o.e; }
  bool operator!=(const SparseVec& o) const { return !(e == o.e); }
  static SparseVec unit(int i) {
    SparseVec v;
    v.e.emplace_back(i, Q(1));
    return v;
  }
};

inline SparseVec from_map(const Field& F, const std::map<int, Q>& m) {
  SparseVec v;
  for (auto& [k, c] : m) {
    Q x = F.norm(c);
    if (x != 0) v.e.emplace_back(k, std::move(x));
  }
  return v;
}

// y + c*x
inline SparseVec axpy(const Field& F, const SparseVec& y, const Q& c, const SparseVec& x) {
  if (c == 0) return y;
  SparseVec r;
  r.e.reserve(y.e.size() + x.e.size());
  std::size_t i = 0, j = 0;
  while (i < y.e.size() || j < x.e.size()) {
    if (j == x.e.size() || (i < y.e.size() && y.e[i].first < x.e[j].first)) {
      r.e.push_back(y.e[i++]);
    } else if (i == y.e.size() || x.e[j].first < y.e[i].first) {
      r.e.emplace_back(x.e[j].first, F.mul(c, x.e[j].second));
      ++j;
    } else {
      Q s = F.add(y.e[i].second, F.mul(c, x.e[j].second));
      if (s != 0) r.e.emplace_back(y.e[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return r;
}

inline SparseVec scale(const Field& F, const Q& c, const SparseVec& x) {
  SparseVec r;
  if (c == 0) return r;
  r.e.reserve(x.e.size());
  for (auto& [k, v] : x.e) r.e.emplace_back(k, F.mul(c, v));
  return r;
}

inline SparseVec shift(const SparseVec& x, int off) {
  SparseVec r = x;
  for (auto& p : r.e) p.first += off;
  return r;
}

// Accumulates many scaled sparse vectors; cheaper than repeated axpy.
class Accumulator {
 public:
  explicit Accumulator(const Field& F) : F_(F) {}
  void add(int i, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = m_.try_emplace(i, c);
    if (!fresh) it->second += c;
  }
  void add(const Q& c, const SparseVec& v) {
    if (c == 0) return;
    for (auto& [k, x] : v.e) add(k, c * x);
  }
  SparseVec take() {
    SparseVec v = from_map(F_, m_);
    m_.clear();
    return v;
  }

 private:
  Field F_;
  std::map<int, Q> m_;
};

// Matrix stored by sparse rows.
struct Mat {
  Field F;
  int rows = 0, cols = 0;
  std::vector<SparseVec> r;

  Mat() = default;
  Mat(const Field& f, int nr, int nc) : F(f), rows(nr), cols(nc), r(nr) {}
  static Mat dense(const Field& f, const std::vector<std::vector<Q>>& a) {
    Mat m(f, (int)a.size(), a.empty() ? 0 : (int)a[0].size());
    for (int i = 0; i < m.rows; ++i) {
      if ((int)a[i].size() != m.cols) throw DimensionMismatch("ragged dense matrix");
      for (int j = 0; j < m.cols; ++j) {
        Q x = f.norm(a[i][j]);
        if (x != 0) m.r[i].e.emplace_back(j, std::move(x));
      }
    }
    return m;
  }
  static Mat identity(const Field& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.r[i] = SparseVec::unit(i);
    return m;
  }
  Q at(int i, int j) const { return r[i].at(j); }
  std::vector<std::vector<Q>> to_dense() const {
    std::vector<std::vector<Q>> a(rows, std::vector<Q>(cols));
    for (int i = 0; i < rows; ++i)
      for (auto& [j, x] : r[i].e) a[i][j] = x;
    return a;
  }
  bool operator==(const Mat& o) const { return F == o.F && rows == o.rows && cols == o.cols && r == o.r; }
};

inline SparseVec mat_vec(const Mat& m, const SparseVec& v) {
  SparseVec out;
  for (int i = 0; i < m.rows; ++i) {
    Q s = 0;
    std::size_t a = 0, b = 0;
    const auto& row = m.r[i].e;
    while (a < row.size() && b < v.e.size()) {
      if (row[a].first < v.e[b].first) ++a;
      else if (v.e[b].first < row[a].first) ++b;
      else s += row[a++].second * v.e[b++].second;
    }
    s = m.F.norm(s);
    if (s != 0) out.e.emplace_back(i, std::move(s));
  }
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw DimensionMismatch("mat_mul");
  Mat c(a.F, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    Accumulator acc(a.F);
    for (auto& [k, x] : a.r[i].e) acc.add(x, b.r[k]);
    c.r[i] = acc.take();
  }
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(a.F, a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (auto& [j, x] : a.r[i].e) t.r[j].e.emplace_back(i, x);
  return t;
}

// Incremental RREF.  Rows stay fully reduced after every insertion.
class EchelonBuilder {
 public:
  EchelonBuilder(const Field& F, int ambient) : F_(F), n_(ambient) {}

  SparseVec reduce(const SparseVec& v) const {
    SparseVec w = v;
    // pivot rows vanish on the other pivots, so one sweep suffices
    std::vector<std::pair<int, Q>> hits;
    for (auto& [k, x] : v.e) {
      auto it = where_.find(k);
      if (it != where_.end()) hits.emplace_back(it->second, x);
    }
    if (hits.empty()) return w;
    if (hits.size() == 1) return axpy(F_, w, F_.neg(hits[0].second), rows_[hits[0].first]);
    Accumulator acc(F_);
    acc.add(Q(1), w);
    for (auto& [ri, x] : hits) acc.add(F_.neg(x), rows_[ri]);
    return acc.take();
  }

  // Returns true when v was independent of the current rows.
  bool add(const SparseVec& v) {
    for (auto& p : v.e)
      if (p.first < 0 || p.first >= n_) throw DimensionMismatch("vector index outside ambient space");
    SparseVec w = reduce(v);
    if (w.empty()) return false;
    int p = w.lead();
    w = scale(F_, F_.inv(w.e.front().second), w);
    for (auto& row : rows_) {
      Q c = row.at(p);
      if (c != 0) row = axpy(F_, row, F_.neg(c), w);
    }
    where_[p] = (int)rows_.size();
    rows_.push_back(std::move(w));
    return true;
  }

  int rank() const { return (int)rows_.size(); }
  int ambient() const { return n_; }
  const Field& field() const { return F_; }

  // Rows sorted by pivot.
  std::vector<SparseVec> rows() const {
    std::vector<std::pair<int, int>> order;
    for (auto& [p, i] : where_) order.emplace_back(p, i);
    std::vector<SparseVec> out;
    out.reserve(order.size());
    for (auto& [p, i] : order) out.push_back(rows_[i]);
    return out;
  }
  std::vector<int> pivots() const {
    std::vector<int> ps;
    for (auto& [p, i] : where_) ps.push_back(p);
    return ps;
  }

 private:
  Field F_;
  int n_;
  std::vector<SparseVec> rows_;
  std::map<int, int> where_;
};

class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& F, int ambient) : F_(F), n_(ambient) {}

  static Subspace span(const Field& F, int ambient, const std::vector<SparseVec>& vs) {
    EchelonBuilder b(F, ambient);
    for (auto& v : vs) b.add(v);
    return from_builder(b);
  }
  static Subspace from_builder(const EchelonBuilder& b) {
    Subspace s(b.field(), b.ambient());
    s.rows_ = b.rows();
    s.piv_ = b.pivots();
    return s;
  }
  static Subspace zero(const Field& F, int ambient) { return Subspace(F, ambient); }
  static Subspace full(const Field& F, int ambient) {
    Subspace s(F, ambient);
    for (int i = 0; i < ambient; ++i) {
      s.rows_.push_back(SparseVec::unit(i));
      s.piv_.push_back(i);
    }
    return s;
  }

  const Field& field() const { return F_; }
  int ambient() const { return n_; }
  int dim() const { return (int)rows_.size(); }
  const std::vector<SparseVec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  Mat basis_matrix() const {
    Mat m(F_, dim(), n_);
    m.r = rows_;
    return m;
  }

  // v minus its projection along the basis onto the pivot coordinates.
  SparseVec reduce(const SparseVec& v) const {
    if (rows_.empty()) return v;
    Accumulator acc(F_);
    acc.add(Q(1), v);
    bool hit = false;
    for (auto& [k, x] : v.e) {
      auto it = std::lower_bound(piv_.begin(), piv_.end(), k);
      if (it != piv_.end() && *it == k) {
        acc.add(F_.neg(x), rows_[it - piv_.begin()]);
        hit = true;
      }
    }
    if (!hit) return v;
    return acc.take();
  }
  bool member(const SparseVec& v) const { return reduce(v).empty(); }

  // Coefficients of v in the basis; v must be a member.
  std::vector<Q> coordinates(const SparseVec& v) const {
    if (!member(v)) throw NotASubspace("vector is not a member");
    std::vector<Q> c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v.at(piv_[i]);
    return c;
  }

  bool operator==(const Subspace& o) const {
    return F_ == o.F_ && n_ == o.n_ && rows_ == o.rows_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Field F_;
  int n_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<int> piv_;
};

inline void check_same(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field() || a.ambient() != b.ambient())
    throw DimensionMismatch("subspaces live in different spaces");
}

inline std::pair<Mat, std::vector<int>> rref(const Mat& m) {
  EchelonBuilder b(m.F, m.cols);
  for (auto& row : m.r) b.add(row);
  Mat out(m.F, b.rank(), m.cols);
  out.r = b.rows();
  return {out, b.pivots()};
}

inline int rank(const Mat& m) { return rref(m).first.rows; }

// Null space of m (column vectors v with m v = 0).
inline Subspace kernel(const Mat& m) {
  auto [R, piv] = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<SparseVec> gens;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::map<int, Q> v;
    v[f] = 1;
    for (int i = 0; i < R.rows; ++i) {
      Q c = R.r[i].at(f);
      if (c != 0) v[piv[i]] = m.F.neg(c);
    }
    gens.push_back(from_map(m.F, v));
  }
  return Subspace::span(m.F, m.cols, gens);
}

// Kernel of the map whose i-th column is images[i] (codomain of dim cod).
inline Subspace kernel_of_columns(const Field& F, int dom, int cod, const std::vector<SparseVec>& images) {
  if ((int)images.size() != dom) throw DimensionMismatch("kernel_of_columns");
  Mat m(F, cod, dom);
  for (int i = 0; i < dom; ++i)
    for (auto& [k, x] : images[i].e) {
      if (k >= cod) throw DimensionMismatch("image outside codomain");
      m.r[k].e.emplace_back(i, x);
    }
  return kernel(m);
}

inline Subspace image_of_columns(const Field& F, int cod, const std::vector<SparseVec>& images) {
  return Subspace::span(F, cod, images);
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  check_same(a, b);
  EchelonBuilder bl(a.field(), a.ambient());
  for (auto& v : a.basis()) bl.add(v);
  for (auto& v : b.basis()) bl.add(v);
  return Subspace::from_builder(bl);
}

// Zassenhaus: rows (a|a) and (b|0); rows whose left half vanishes give a∩b.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same(a, b);
  const int n = a.ambient();
  EchelonBuilder bl(a.field(), 2 * n);
  for (auto& v : a.basis()) {
    SparseVec w = v;
    for (auto& p : v.e) w.e.emplace_back(p.first + n, p.second);
    bl.add(w);
  }
  for (auto& v : b.basis()) bl.add(v);
  std::vector<SparseVec> out;
  for (auto& row : bl.rows())
    if (row.lead() >= n) out.push_back(shift(row, -n));
  return Subspace::span(a.field(), n, out);
}

// b ⊆ a
inline bool contains(const Subspace& a, const Subspace& b) {
  check_same(a, b);
  for (auto& v : b.basis())
    if (!a.member(v)) return false;
  return true;
}

inline bool member(const SparseVec& v, const Subspace& a) { return a.member(v); }

// dim b − dim a for a ⊆ b
inline int quotient_dim(const Subspace& a, const Subspace& b) {
  if (!contains(b, a)) throw NotASubspace("quotient_dim needs a inside b");
  return b.dim() - a.dim();
}

// Coordinates of the quotient V/S: the non-pivot columns of S.
class QuotientCoords {
 public:
  QuotientCoords() = default;
  explicit QuotientCoords(const Subspace& s) : S_(s), index_(s.ambient(), -1) {
    std::vector<bool> is_piv(s.ambient(), false);
    for (int p : s.pivots()) is_piv[p] = true;
    for (int i = 0; i < s.ambient(); ++i)
      if (!is_piv[i]) {
        index_[i] = (int)free_.size();
        free_.push_back(i);
      }
  }
  int dim() const { return (int)free_.size(); }
  const Subspace& sub() const { return S_; }
  // quotient coordinates of the class of v
  SparseVec project(const SparseVec& v) const {
    SparseVec r = S_.reduce(v), out;
    out.e.reserve(r.e.size());
    for (auto& [k, x] : r.e) out.e.emplace_back(index_[k], x);
    return out;
  }
  // canonical representative of quotient coordinate vector q
  SparseVec lift(const SparseVec& q) const {
    SparseVec out;
    out.e.reserve(q.e.size());
    for (auto& [k, x] : q.e) out.e.emplace_back(free_[k], x);
    return out;
  }
  int free_column(int i) const { return free_[i]; }

 private:
  Subspace S_;
  std::vector<int> index_, free_;
};

// Coordinates with respect to a fixed list of independent generators g_i:
// reduces (v | 0) against the echelon form of the rows (g_i | e_i).
class SpanCoordinates {
 public:
  SpanCoordinates(const Field& F, int ambient, const std::vector<SparseVec>& gens)
      : F_(F), n_(ambient), k_((int)gens.size()), B_(F, ambient + (int)gens.size()) {
    for (int i = 0; i < k_; ++i) {
      SparseVec row = gens[i];
      row.e.emplace_back(n_ + i, Q(1));
      B_.add(row);
    }
    for (int p : B_.pivots())
      if (p >= n_) throw DimensionMismatch("SpanCoordinates: generators are dependent");
  }
  int size() const { return k_; }
  // v = Σ c_i g_i; throws NotASubspace when v is outside the span
  SparseVec solve(const SparseVec& v) const {
    SparseVec r = B_.reduce(v);
    SparseVec c;
    for (auto& [i, x] : r.e) {
      if (i < n_) throw NotASubspace("vector outside the generator span");
      c.e.emplace_back(i - n_, F_.neg(x));
    }
    return c;
  }
  bool member(const SparseVec& v) const {
    SparseVec r = B_.reduce(v);
    return r.empty() || r.e.front().first >= n_;
  }

 private:
  Field F_;
  int n_, k_;
  EchelonBuilder B_;
};

// All X (p×q, flattened row-major) with A_i X = X B_i for every constraint.
inline Subspace solve_intertwiner(const Field& F, int p, int q, const std::vector<std::pair<Mat, Mat>>& constraints) {
  std::vector<SparseVec> rows;
  for (auto& [A, B] : constraints) {
    if (A.rows != p || A.cols != p || B.rows != q || B.cols != q) throw DimensionMismatch("solve_intertwiner shapes");
    auto Bt = transpose(B);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < q; ++c) {
        // (A X)[r][c] − (X B)[r][c]
        std::map<int, Q> row;
        for (auto& [k, a] : A.r[r].e) row[k * q + c] += a;
        for (auto& [k, b] : Bt.r[c].e) row[r * q + k] -= b;
        SparseVec v = from_map(F, row);
        if (!v.empty()) rows.push_back(std::move(v));
      }
  }
  Mat m(F, (int)rows.size(), p * q);
  m.r = std::move(rows);
  return kernel(m);
}

}  // namespace eigenmonad
