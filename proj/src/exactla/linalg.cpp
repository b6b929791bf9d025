#include "hopfcoh/exactla/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <numeric>
#include <queue>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::exactla {

namespace {

struct QOps {
  using E = Rational;
  static bool zero(const E& x) { return x.is_zero(); }
  static E mul(const E& a, const E& b) { return a * b; }
  static E sub(const E& a, const E& b) { return a - b; }
  static E inv(const E& a) { return a.inverse(); }
  static E from(const Rational& r) { return r; }
  static Rational back(const E& x) { return x; }
};

struct FpOps {
  using E = std::uint32_t;
  std::uint32_t p;
  static bool zero(E x) { return x == 0; }
  E mul(E a, E b) const { return static_cast<E>(static_cast<std::uint64_t>(a) * b % p); }
  E sub(E a, E b) const { return a >= b ? a - b : a + p - b; }
  E inv(E a) const {
    std::uint64_t base = a, e = p - 2, r = 1;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<E>(r);
  }
  E from(const Rational& r) const { return r.mod(p); }
  static Rational back(E x) { return Rational(static_cast<long long>(x)); }
};

template <class F>
class Eliminator {
 public:
  using E = typename F::E;
  using Row = std::vector<std::pair<std::uint32_t, E>>;

  Eliminator(F f, std::size_t ncols) : f_(f), ncols_(ncols), pivot_of_(ncols, -1), val_(ncols), mark_(ncols, 0) {}

  // Reduce row against current pivots; keep it as a new pivot if nonzero.
  bool insert(const Row& row) {
    for (const auto& [j, x] : row) touch(j, x);
    long lead = -1;
    while (!heap_.empty()) {
      std::uint32_t c = heap_.top();
      heap_.pop();
      if (F::zero(val_[c])) continue;
      long r = pivot_of_[c];
      if (r < 0) {
        lead = c;
        break;
      }
      E factor = val_[c];
      for (const auto& [j, x] : rows_[static_cast<std::size_t>(r)]) {
        if (!mark_[j]) touch(j, E{});
        val_[j] = f_.sub(val_[j], f_.mul(factor, x));
      }
    }
    bool added = false;
    if (lead >= 0) {
      std::sort(touched_.begin(), touched_.end());
      E inv = f_.inv(val_[static_cast<std::size_t>(lead)]);
      Row out;
      for (auto j : touched_)
        if (j >= static_cast<std::uint32_t>(lead) && !F::zero(val_[j])) out.emplace_back(j, f_.mul(val_[j], inv));
      pivot_of_[static_cast<std::size_t>(lead)] = static_cast<long>(rows_.size());
      lead_.push_back(static_cast<std::size_t>(lead));
      rows_.push_back(std::move(out));
      added = true;
    }
    clear();
    return added;
  }

  std::size_t rank() const { return rows_.size(); }

  // Back-substitute so that pivot rows with lead < limit have zeros in all
  // other pivot columns below limit. Returns indices of rows sorted by lead.
  std::vector<std::size_t> reduce_fully(std::size_t limit) {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead_[a] < lead_[b]; });
    for (std::size_t k = order.size(); k-- > 0;) {
      std::size_t r = order[k];
      if (lead_[r] >= limit) continue;
      const Row& row = rows_[r];
      bool needs = false;
      for (std::size_t t = 1; t < row.size(); ++t) {
        auto j = row[t].first;
        if (j < limit && pivot_of_[j] >= 0) {
          needs = true;
          break;
        }
      }
      if (!needs) continue;
      for (const auto& [j, x] : row) touch_noheap(j, x);
      for (const auto& [j, x] : row) {
        if (j == lead_[r] || j >= limit || pivot_of_[j] < 0) continue;
        E factor = x;
        for (const auto& [l, y] : rows_[static_cast<std::size_t>(pivot_of_[j])]) {
          if (!mark_[l]) touch_noheap(l, E{});
          val_[l] = f_.sub(val_[l], f_.mul(factor, y));
        }
      }
      std::sort(touched_.begin(), touched_.end());
      Row out;
      for (auto j : touched_)
        if (!F::zero(val_[j])) out.emplace_back(j, val_[j]);
      rows_[r] = std::move(out);
      clear();
    }
    return order;
  }

  const Row& row(std::size_t r) const { return rows_[r]; }
  std::size_t lead(std::size_t r) const { return lead_[r]; }

 private:
  void touch(std::uint32_t j, const E& x) {
    mark_[j] = 1;
    val_[j] = x;
    touched_.push_back(j);
    heap_.push(j);
  }
  void touch_noheap(std::uint32_t j, const E& x) {
    mark_[j] = 1;
    val_[j] = x;
    touched_.push_back(j);
  }
  void clear() {
    for (auto j : touched_) {
      mark_[j] = 0;
      val_[j] = E{};
    }
    touched_.clear();
    while (!heap_.empty()) heap_.pop();
  }

  F f_;
  std::size_t ncols_;
  std::vector<long> pivot_of_;
  std::vector<Row> rows_;
  std::vector<std::size_t> lead_;
  std::vector<E> val_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

template <class F>
std::vector<typename Eliminator<F>::Row> convert_rows(const F& f, const Matrix& m) {
  std::vector<typename Eliminator<F>::Row> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i)) {
      auto e = f.from(x);
      if (!F::zero(e)) out[i].emplace_back(j, e);
    }
  return out;
}

// rows processed sparsest first; the resulting echelon form does not depend
// on the order
std::vector<std::size_t> sparse_order(const Matrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  return order;
}

template <class F>
Echelon rref_impl(const F& f, const Matrix& m, const Ring& ring) {
  Eliminator<F> el(f, m.cols());
  auto rows = convert_rows(f, m);
  for (auto i : sparse_order(m)) {
    if (el.rank() == m.cols()) break;
    if (!rows[i].empty()) el.insert(rows[i]);
  }
  auto order = el.reduce_fully(m.cols());
  Echelon e;
  e.ring = ring;
  e.cols = m.cols();
  e.rows = Matrix(order.size(), m.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    e.pivots.push_back(el.lead(order[k]));
    SparseRow r;
    for (const auto& [j, x] : el.row(order[k])) r.emplace_back(j, F::back(x));
    e.rows.set_row(k, std::move(r));
  }
  return e;
}

template <class F>
std::size_t rank_impl(const F& f, const Matrix& m) {
  Eliminator<F> el(f, m.cols());
  auto rows = convert_rows(f, m);
  std::size_t cap = std::min(m.rows(), m.cols());
  for (auto i : sparse_order(m)) {
    if (el.rank() == cap) break;
    if (!rows[i].empty()) el.insert(rows[i]);
  }
  return el.rank();
}

template <class F>
std::optional<Matrix> solve_impl(const F& f, const Matrix& m, const Matrix& b) {
  std::size_t c = m.cols(), k = b.cols();
  Matrix aug = hstack({m, b});
  Eliminator<F> el(f, c + k);
  auto rows = convert_rows(f, aug);
  for (auto i : sparse_order(aug))
    if (!rows[i].empty()) el.insert(rows[i]);
  auto order = el.reduce_fully(c);
  Matrix x(c, k);
  for (auto r : order) {
    std::size_t lead = el.lead(r);
    if (lead >= c) return std::nullopt;  // a combination of rows gives 0 = nonzero
    SparseRow out;
    for (const auto& [j, v] : el.row(r))
      if (j >= c) out.emplace_back(static_cast<std::uint32_t>(j - c), F::back(v));
    x.set_row(lead, std::move(out));
  }
  return x;
}

template <class R>
decltype(auto) dispatch(const Ring& ring, R&& body) {
  if (ring.is_prime_field()) return body(FpOps{ring.p});
  return body(QOps{});
}

}  // namespace

Matrix reduce(const Matrix& m, const Ring& ring) { return ring.is_prime_field() ? m.mod_p(ring.p) : m; }

bool is_zero_in(const Matrix& m, const Ring& ring) {
  if (!ring.is_prime_field()) return m.is_zero();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i))
      if (e.second.mod(ring.p) != 0) return false;
  return true;
}

Echelon rref(const Matrix& rows, const Ring& ring) {
  return dispatch(ring, [&](auto f) { return rref_impl(f, rows, ring); });
}

Echelon column_echelon(const Matrix& cols, const Ring& ring) { return rref(cols.transpose(), ring); }

std::size_t rank(const Matrix& m, const Ring& ring) {
  const Matrix& use = m;
  if (m.rows() > m.cols()) {
    Matrix t = m.transpose();
    return dispatch(ring, [&](auto f) { return rank_impl(f, t); });
  }
  return dispatch(ring, [&](auto f) { return rank_impl(f, use); });
}

std::size_t rank_lower_bound(const Matrix& m, const Ring& ring) {
  if (ring.is_prime_field()) return rank(m, ring);
  constexpr std::uint32_t big_prime = 2147483629;
  try {
    return rank(m.mod_p(big_prime), Ring::prime_field(big_prime));
  } catch (const std::domain_error&) {
    return rank(m, ring);
  }
}

Matrix kernel_basis(const Matrix& m, const Ring& ring) {
  Echelon e = rref(m, ring);
  std::size_t c = m.cols();
  std::vector<long> free_index(c, -1);
  std::vector<char> is_pivot(c, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::size_t nfree = 0;
  for (std::size_t j = 0; j < c; ++j)
    if (!is_pivot[j]) free_index[j] = static_cast<long>(nfree++);
  Matrix k(c, nfree);
  for (std::size_t j = 0; j < c; ++j)
    if (!is_pivot[j]) k.set(j, static_cast<std::size_t>(free_index[j]), Rational(1));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    SparseRow out;
    for (const auto& [j, x] : e.rows.row(r)) {
      if (j == e.pivots[r]) continue;
      Rational v = -x;
      if (ring.is_prime_field()) v = Rational(static_cast<long long>(v.mod(ring.p)));
      out.emplace_back(static_cast<std::uint32_t>(free_index[j]), v);
    }
    k.set_row(e.pivots[r], std::move(out));
  }
  return k;
}

Matrix image_basis(const Matrix& m, const Ring& ring) { return column_echelon(m, ring).basis_columns(); }

std::optional<Vec> solve(const Matrix& m, const Vec& b, const Ring& ring) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length does not match row count");
  auto x = solve_many(m, Matrix::column_vector(b), ring);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve_many(const Matrix& m, const Matrix& b, const Ring& ring) {
  if (b.rows() != m.rows()) throw InputError("solve: right-hand side row count mismatch");
  return dispatch(ring, [&](auto f) { return solve_impl(f, m, b); });
}

Matrix inverse(const Matrix& m, const Ring& ring) {
  if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
  if (rank(m, ring) != m.rows()) throw PreconditionError("inverse of a singular matrix");
  auto x = solve_many(m, Matrix::identity(m.rows()), ring);
  return *x;
}

Vec Echelon::coords(const Vec& v) const {
  Vec c(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) c[r] = v[pivots[r]];
  return c;
}

bool Echelon::contains(const Vec& v) const {
  if (v.size() != cols) throw InputError("echelon membership: length mismatch");
  Vec w = v;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rational a = w[pivots[r]];
    if (a.is_zero()) continue;
    for (const auto& [j, x] : rows.row(r)) w[j] -= a * x;
  }
  if (ring.is_prime_field()) {
    for (const auto& x : w)
      if (x.mod(ring.p) != 0) return false;
    return true;
  }
  return is_zero(w);
}

bool Echelon::contains_columns(const Matrix& m) const {
  if (m.rows() != cols) throw InputError("echelon membership: length mismatch");
  if (m.cols() == 0) return true;
  // m ⊂ span iff rank([rows; m^T]) == rank
  Matrix stacked = vstack({rows, m.transpose()});
  return exactla::rank(stacked, ring) == pivots.size();
}

SubQuotient subquotient_basis(std::size_t space_dim, const Matrix& sub_gens, const Matrix& rel_gens,
                              const Ring& ring) {
  if (sub_gens.rows() != space_dim || rel_gens.rows() != space_dim)
    throw InputError("subquotient: generator length does not match space dimension");
  SubQuotient sq;
  sq.sub = column_echelon(sub_gens, ring);
  if (!sq.sub.contains_columns(rel_gens))
    throw PreconditionError("subquotient: relations are not contained in the subspace");
  std::size_t s = sq.sub.rank();
  // relations in subspace coordinates (restriction to the pivot columns)
  Matrix relc = rel_gens.transpose().select_columns(sq.sub.pivots);
  Echelon rc = rref(relc, ring);
  std::vector<char> is_rel_pivot(s, 0);
  for (auto p : rc.pivots) is_rel_pivot[p] = 1;
  std::vector<std::size_t> comp;
  std::vector<long> comp_index(s, -1);
  for (std::size_t j = 0; j < s; ++j)
    if (!is_rel_pivot[j]) {
      comp_index[j] = static_cast<long>(comp.size());
      comp.push_back(j);
    }
  sq.dim = comp.size();
  sq.section = sq.sub.rows.select_rows(comp).transpose();
  sq.projection = Matrix(sq.dim, space_dim);
  for (std::size_t t = 0; t < comp.size(); ++t) sq.projection.set(t, sq.sub.pivots[comp[t]], Rational(1));
  for (std::size_t r = 0; r < rc.rank(); ++r) {
    std::size_t amb = sq.sub.pivots[rc.pivots[r]];
    for (const auto& [j, y] : rc.rows.row(r)) {
      if (j == rc.pivots[r]) continue;
      Rational v = -y;
      if (ring.is_prime_field()) v = Rational(static_cast<long long>(v.mod(ring.p)));
      sq.projection.set(static_cast<std::size_t>(comp_index[j]), amb, v);
    }
  }
  // relations in ambient echelon form
  sq.rel = column_echelon(rel_gens, ring);
  return sq;
}

SubQuotient quotient_basis(std::size_t space_dim, const Matrix& rel_gens, const Ring& ring) {
  return subquotient_basis(space_dim, Matrix::identity(space_dim), rel_gens, ring);
}

SubQuotient subspace_basis(std::size_t space_dim, const Matrix& sub_gens, const Ring& ring) {
  return subquotient_basis(space_dim, sub_gens, Matrix(space_dim, 0), ring);
}

}  // namespace hopfcoh::exactla
