#pragma once

// Independent dense reference implementations used as test oracles. They share
// no code with the library's sparse elimination or its Smith normal form.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using ZDense = std::vector<std::vector<mpz_class>>;
using QDense = std::vector<std::vector<mpq_class>>;

// fraction-free Gaussian elimination (Bareiss) rank of an integer matrix
inline std::size_t bareiss_rank(ZDense a) {
  std::size_t r = a.size(), c = r ? a[0].size() : 0, rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) {
        mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// rank over Q of a rational matrix by clearing denominators row by row
inline std::size_t dense_rank(const QDense& q) {
  ZDense z;
  for (const auto& row : q) {
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> zr;
    for (const auto& x : row) zr.push_back(mpz_class(x * l));
    z.push_back(zr);
  }
  return bareiss_rank(z);
}

// Row Hermite normal form with entries above each pivot reduced into [0, pivot).
inline ZDense hermite(ZDense a) {
  std::size_t r = a.size(), c = r ? a[0].size() : 0, row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    for (std::size_t i = row + 1; i < r; ++i) {
      if (a[i][col] == 0) continue;
      mpz_class g, s, u;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a[row][col].get_mpz_t(), a[i][col].get_mpz_t());
      mpz_class x = a[row][col] / g, y = a[i][col] / g;
      for (std::size_t j = 0; j < c; ++j) {
        mpz_class p = a[row][j], q = a[i][j];
        a[row][j] = s * p + u * q;
        a[i][j] = -y * p + x * q;
      }
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (auto& v : a[row]) v = -v;
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < c; ++j) a[i][j] -= q * a[row][j];
    }
    ++row;
  }
  return a;
}

inline ZDense transpose(const ZDense& a) {
  std::size_t r = a.size(), c = r ? a[0].size() : 0;
  ZDense t(c, std::vector<mpz_class>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
  return t;
}

// Textbook Smith normal form: alternate row and column Hermite forms until the
// matrix is diagonal, then turn the diagonal into a divisibility chain.
inline std::vector<mpz_class> textbook_smith(ZDense a) {
  for (;;) {
    a = transpose(hermite(transpose(hermite(a))));
    bool diagonal = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[i].size(); ++j)
        if (i != j && a[i][j] != 0) diagonal = false;
    if (diagonal) break;
  }
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(a.size(), a.empty() ? 0 : a[0].size()); ++i)
    if (a[i][i] != 0) d.push_back(abs(a[i][i]));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  return d;
}

inline ZDense random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi,
                                double density = 1.0) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ZDense a(r, std::vector<mpz_class>(c, 0));
  for (auto& row : a)
    for (auto& x : row)
      if (u(rng) < density) x = dist(rng);
  return a;
}

}  // namespace oracle
