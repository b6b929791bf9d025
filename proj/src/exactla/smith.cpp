#include "hopfcoh/exactla/smith.hpp"

#include <algorithm>
#include <utility>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::exactla {

namespace {

ZMat zidentity(std::size_t n) {
  ZMat z(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = 1;
  return z;
}

// row_i -= q * row_k
void row_axpy(ZMat& a, std::size_t i, std::size_t k, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < a[i].size(); ++j)
    if (a[k][j] != 0) a[i][j] -= q * a[k][j];
}

// col_j -= q * col_k
void col_axpy(ZMat& a, std::size_t j, std::size_t k, const mpz_class& q) {
  if (q == 0) return;
  for (auto& row : a)
    if (row[k] != 0) row[j] -= q * row[k];
}

void swap_cols(ZMat& a, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (auto& row : a) std::swap(row[j], row[k]);
}

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ZMat to_zmat(const Matrix& m) {
  if (!m.is_integral()) throw InputError("integer operation on a matrix with non-integer entries");
  ZMat z(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i)) z[i][j] = x.numerator();
  return z;
}

Matrix from_zmat(const ZMat& z) {
  std::size_t r = z.size(), c = r ? z[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < c; ++j)
      if (z[i][j] != 0) row.emplace_back(static_cast<std::uint32_t>(j), Rational(z[i][j]));
    m.set_row(i, std::move(row));
  }
  return m;
}

mpz_class determinant(const ZMat& z0) {
  std::size_t n = z0.size();
  if (n == 0) return 1;
  if (z0[0].size() != n) throw InputError("determinant of a non-square matrix");
  ZMat a = z0;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SmithForm smith_normal_form(const Matrix& m, bool with_transforms) {
  ZMat a = to_zmat(m);
  std::size_t r = m.rows(), c = m.cols();
  ZMat L, R;
  if (with_transforms) {
    L = zidentity(r);
    R = zidentity(c);
  }
  auto rswap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    if (with_transforms) std::swap(L[i], L[k]);
  };
  auto cswap = [&](std::size_t j, std::size_t k) {
    swap_cols(a, j, k);
    if (with_transforms) swap_cols(R, j, k);
  };
  auto raxpy = [&](std::size_t i, std::size_t k, const mpz_class& q) {
    row_axpy(a, i, k, q);
    if (with_transforms) row_axpy(L, i, k, q);
  };
  auto caxpy = [&](std::size_t j, std::size_t k, const mpz_class& q) {
    col_axpy(a, j, k, q);
    if (with_transforms) col_axpy(R, j, k, q);
  };

  SmithForm sf;
  sf.rows = r;
  sf.cols = c;
  std::size_t t = 0;
  while (t < std::min(r, c)) {
    // minimal absolute value pivot in the trailing block
    std::size_t pi = r, pj = c;
    mpz_class best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a[i][j] != 0 && (pi == r || cmpabs(a[i][j], best) < 0)) {
          best = a[i][j];
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    rswap(t, pi);
    cswap(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i)
        if (a[i][t] != 0) {
          raxpy(i, t, floor_div(a[i][t], a[t][t]));
          if (a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (a[t][j] != 0) {
          caxpy(j, t, floor_div(a[t][j], a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) {
        // bring the smallest remainder of row/column t to the pivot
        std::size_t bi = t, bj = t;
        mpz_class b = a[t][t];
        for (std::size_t i = t + 1; i < r; ++i)
          if (a[i][t] != 0 && cmpabs(a[i][t], b) < 0) {
            b = a[i][t];
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[t][j] != 0 && cmpabs(a[t][j], b) < 0) {
            b = a[t][j];
            bi = t;
            bj = j;
          }
        rswap(t, bi);
        cswap(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == r) break;
      raxpy(t, bad, mpz_class(-1));
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      if (with_transforms)
        for (auto& x : L[t]) x = -x;
    }
    sf.invariant_factors.push_back(a[t][t]);
    ++t;
  }
  for (std::size_t k = 0; k + 1 < sf.invariant_factors.size(); ++k)
    if (!mpz_divisible_p(sf.invariant_factors[k + 1].get_mpz_t(), sf.invariant_factors[k].get_mpz_t()))
      throw InvariantError("Smith form divisibility chain violated");
  if (with_transforms) {
    sf.left = from_zmat(L);
    sf.right = from_zmat(R);
    if (r == 0) sf.left = Matrix(0, 0);
    if (c == 0) sf.right = Matrix(0, 0);
  }
  return sf;
}

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

Matrix SmithForm::diagonal() const {
  Matrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) d.set(i, i, Rational(invariant_factors[i]));
  return d;
}

std::vector<mpz_class> lattice_class(const SmithForm& sf, const Vec& v) {
  if (sf.left.rows() != v.size()) throw InputError("lattice_class: length mismatch or missing transforms");
  Vec w = sf.left.apply(v);
  std::vector<mpz_class> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_integer()) throw InputError("lattice_class: non-integer vector");
    mpz_class x = w[i].numerator();
    if (i < sf.invariant_factors.size()) {
      mpz_class m;
      mpz_fdiv_r(m.get_mpz_t(), x.get_mpz_t(), sf.invariant_factors[i].get_mpz_t());
      x = m;
    }
    out[i] = x;
  }
  return out;
}

}  // namespace hopfcoh::exactla
