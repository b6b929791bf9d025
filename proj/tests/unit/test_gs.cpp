#include <doctest.h>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/exactla/linalg.hpp"
#include "hopfcoh/exactla/smith.hpp"
#include "hopfcoh/gs/gs.hpp"
#include "support/oracles.hpp"

using namespace hopfcoh;
using namespace hopfcoh::gs;
using exactla::Rational;

namespace {

std::size_t ipow(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= d;
  return r;
}

// Hochschild coboundary evaluated tuple by tuple from the multiplication table
Matrix oracle_hochschild(const bialg::FinAlgebra& a, std::size_t m) {
  const std::size_t d = a.dim, dm = ipow(d, m), dm1 = dm * d;
  auto mu = [&](std::size_t x, std::size_t y) {  // column of x*y
    std::vector<Rational> v(d);
    for (std::size_t c = 0; c < d; ++c) v[c] = a.mult.get(c, x * d + y);
    return v;
  };
  Matrix out(d * dm1, d * dm);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < dm; ++c) {
      // f = e_{r,c}: f(tuple) = [tuple == c] e_r
      auto f = [&](const std::vector<std::size_t>& t) {
        std::size_t idx = 0;
        for (auto x : t) idx = idx * d + x;
        return idx == c;
      };
      for (std::size_t t = 0; t < dm1; ++t) {
        std::vector<std::size_t> tup(m + 1);
        for (std::size_t s = 0, rest = t; s <= m; ++s) {
          tup[m - s] = rest % d;
          rest /= d;
        }
        std::vector<Rational> val(d);
        std::vector<std::size_t> tail(tup.begin() + 1, tup.end()), head(tup.begin(), tup.end() - 1);
        if (f(tail)) {
          auto p = mu(tup[0], r);
          for (std::size_t q = 0; q < d; ++q) val[q] += p[q];
        }
        for (std::size_t i = 0; i < m; ++i) {
          auto p = mu(tup[i], tup[i + 1]);
          for (std::size_t z = 0; z < d; ++z) {
            if (p[z].is_zero()) continue;
            std::vector<std::size_t> merged;
            for (std::size_t s = 0; s <= m; ++s) {
              if (s == i) merged.push_back(z);
              else if (s != i + 1) merged.push_back(tup[s]);
            }
            if (f(merged)) val[r] += p[z] * Rational(i % 2 == 0 ? -1 : 1);
          }
        }
        if (f(head)) {
          auto p = mu(r, tup[m]);
          for (std::size_t q = 0; q < d; ++q) val[q] += p[q] * Rational(m % 2 == 0 ? -1 : 1);
        }
        for (std::size_t q = 0; q < d; ++q)
          if (!val[q].is_zero()) out.set(q * dm1 + t, r * dm + c, val[q]);
      }
    }
  return out;
}

// normalized cochains Hom(Ā^{⊗m}, A) with Ā spanned by basis vectors 1..d-1;
// requires basis vector 0 to be the unit
std::vector<std::size_t> reduced_bar_dims(const bialg::FinAlgebra& a, std::size_t max_degree) {
  const std::size_t d = a.dim, e = d - 1;
  std::vector<Matrix> ds;
  for (std::size_t m = 0; m <= max_degree + 1; ++m) {
    std::size_t em = ipow(e, m), em1 = em * e;
    Matrix full = oracle_hochschild(a, m);
    // restrict sources and targets to tuples avoiding the unit
    std::vector<std::size_t> cols, rows;
    auto avoids = [&](std::size_t idx, std::size_t len) {
      for (std::size_t s = 0; s < len; ++s, idx /= d)
        if (idx % d == 0) return false;
      return true;
    };
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < ipow(d, m); ++c)
        if (avoids(c, m)) cols.push_back(r * ipow(d, m) + c);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < ipow(d, m + 1); ++c)
        if (avoids(c, m + 1)) rows.push_back(r * ipow(d, m + 1) + c);
    REQUIRE(cols.size() == d * em);
    REQUIRE(rows.size() == d * em1);
    ds.push_back(full.select_columns(cols).select_rows(rows));
  }
  std::vector<std::size_t> dims;
  for (std::size_t m = 0; m <= max_degree; ++m) {
    std::size_t below = m ? exactla::rank(ds[m - 1]) : 0;
    dims.push_back(ds[m].cols() - exactla::rank(ds[m]) - below);
  }
  return dims;
}

bialg::FinBialgebra dual(const bialg::FinBialgebra& b) {
  bialg::FinBialgebra o = b;
  o.name = b.name + "*";
  o.mult = b.comult.transpose();
  o.comult = b.mult.transpose();
  o.unit = b.counit.transpose();
  o.counit = b.unit.transpose();
  if (b.antipode) o.antipode = b.antipode->transpose();
  return o;
}

// flattened Hom(A^{⊗p}, A^{⊗q}) -> Hom(A^{*⊗q}, A^{*⊗p}), Ψ -> Ψ^T
Matrix transpose_op(std::size_t d, std::size_t p, std::size_t q) {
  std::size_t dp = ipow(d, p), dq = ipow(d, q);
  Matrix t(dp * dq, dq * dp);
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t c = 0; c < dp; ++c) t.set(c * dq + r, r * dp + c, Rational(1));
  return t;
}

oracle::ZDense to_dense_z(const Matrix& m) {
  oracle::ZDense z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) z[i][j] = v.numerator();
  return z;
}

}  // namespace

TEST_CASE("gs differentials of the trivial bialgebra alternate") {
  auto k = bialg::trivial_bialgebra();
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(gs_d1(k, m, n) == Matrix::scalar(Rational(static_cast<int>(m % 2))));
      CHECK(gs_d2(k, m, n) == Matrix::scalar(Rational(static_cast<int>(n % 2))));
    }
}

TEST_CASE("bicomplex identities on the corpus") {
  std::vector<bialg::FinBialgebra> corpus = {bialg::trivial_bialgebra(), bialg::group_algebra(2),
                                             bialg::group_algebra(3), bialg::sweedler_h4(),
                                             bialg::group_algebra(2, exactla::Ring::integers()),
                                             bialg::truncated_additive_hopf(2), bialg::truncated_additive_hopf(3)};
  for (const auto& b : corpus) {
    auto v = check_gs_bicomplex(b, b.dim > 3 ? 5 : 6);
    INFO(b.name << ": " << v.summary());
    CHECK(v.ok());
  }
}

TEST_CASE("gs_d1 on the bottom row is the Hochschild differential") {
  auto dn = bialg::truncated_polynomial(2);
  for (std::size_t m = 0; m <= 4; ++m) CHECK(hochschild_differential(dn, m) == oracle_hochschild(dn, m));
  for (const auto& b : {bialg::group_algebra(2), bialg::sweedler_h4(), bialg::group_algebra(3)})
    for (std::size_t m = 0; m <= 3; ++m) {
      CHECK(gs_d1(b, m, 1) == hochschild_differential(b.algebra(), m));
      CHECK(gs_d1(b, m, 1) == oracle_hochschild(b.algebra(), m));
    }
}

TEST_CASE("gs_d2 at m = 1 is the transposed Hochschild differential of the dual") {
  for (const auto& b : {bialg::group_algebra(2), bialg::sweedler_h4(), bialg::group_algebra(3)}) {
    auto bd = dual(b);
    REQUIRE(bialg::check_axioms(bd).ok());
    for (std::size_t n = 0; n <= 3; ++n) {
      Matrix lhs = transpose_op(b.dim, 1, n + 1) * gs_d2(b, 1, n);
      Matrix rhs = oracle_hochschild(bd.algebra(), n) * transpose_op(b.dim, 1, n);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("power structures of A^{⊗n} satisfy the module laws") {
  auto b = bialg::sweedler_h4();
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t dn = ipow(4, n);
    Matrix l = power_left_action(b, n), r = power_right_action(b, n);
    CHECK(l * exactla::kron(b.mult, Matrix::identity(dn)) == l * exactla::kron(Matrix::identity(4), l));
    CHECK(r * exactla::kron(Matrix::identity(dn), b.mult) == r * exactla::kron(r, Matrix::identity(4)));
    Matrix cl = power_left_coaction(b, n), cr = power_right_coaction(b, n);
    CHECK(exactla::kron(b.comult, Matrix::identity(dn)) * cl == exactla::kron(Matrix::identity(4), cl) * cl);
    CHECK(exactla::kron(cr, Matrix::identity(4)) * cr == exactla::kron(Matrix::identity(dn), b.comult) * cr);
  }
}

TEST_CASE("gs cohomology in low degrees") {
  CHECK(gs_cohomology(bialg::trivial_bialgebra(), 4).dims() == std::vector<std::size_t>{1, 0, 0, 0, 0});
  auto c2 = gs_cohomology(bialg::group_algebra(2), 3);
  CHECK(c2.dims()[0] == 1);
  CHECK(c2.checks.ok());
  auto c2z = gs_cohomology(bialg::group_algebra(2, exactla::Ring::integers()), 3);
  CHECK(c2z.dims() == c2.dims());
  auto h4 = gs_cohomology(bialg::sweedler_h4(), 3);
  CHECK(h4.dims()[0] == 1);
  for (const auto& dr : h4.degrees) {
    CHECK(dr.torsion.empty());
    CHECK(dr.bidegrees.size() == dr.degree + 1);
  }
  auto f2 = gs_cohomology(bialg::truncated_additive_hopf(2), 3);
  CHECK(f2.dims()[0] == 1);
}

TEST_CASE("broken total sign is caught") {
  auto b = bialg::sweedler_h4();
  // d1 + d2 without the (-1)^m twist
  auto bad = [&](std::size_t k) {
    std::size_t s = ipow(4, k), t = 4 * s;
    Matrix out((k + 2) * t, (k + 1) * s);
    for (std::size_t m = 0; m <= k; ++m) {
      out.add_block((m + 1) * t, m * s, gs_d1(b, m, k - m));
      out.add_block(m * t, m * s, gs_d2(b, m, k - m));
    }
    return out;
  };
  CHECK_THROWS_AS(cochain_cohomology("bad", b.ring, {1, 8, 48}, {bad(0), bad(1), bad(2)}, 2), InvariantError);
  CHECK_NOTHROW(cochain_cohomology("good", b.ring, {1, 8, 48},
                                   {gs_total_differential(b, 0), gs_total_differential(b, 1), gs_total_differential(b, 2)},
                                   2));
}

TEST_CASE("Hochschild cohomology of the dual numbers") {
  auto a = bialg::truncated_polynomial(2);
  auto rep = hochschild_cohomology(a, 4);
  CHECK(rep.dims() == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(rep.dims() == reduced_bar_dims(a, 4));
  auto a3 = bialg::truncated_polynomial(3);
  CHECK(hochschild_cohomology(a3, 3).dims() == reduced_bar_dims(a3, 3));
}

TEST_CASE("integral Hochschild cohomology of Z[C2] has 2-torsion") {
  auto a = bialg::group_algebra(2, exactla::Ring::integers()).algebra();
  auto z = hochschild_cohomology(a, 4);
  auto q = hochschild_cohomology(a, 4, exactla::Ring::rationals());
  CHECK(z.dims() == q.dims());
  CHECK(q.dims() == std::vector<std::size_t>{2, 0, 0, 0, 0});
  bool some = false;
  for (std::size_t k = 1; k <= 4; ++k) {
    auto expected = oracle::textbook_smith(to_dense_z(hochschild_differential(a, k - 1)));
    std::vector<mpz_class> tors;
    for (auto& x : expected)
      if (x > 1) tors.push_back(x);
    CHECK(z.degrees[k].torsion == tors);
    some = some || !tors.empty();
  }
  CHECK(some);
  CHECK(z.degrees[2].torsion == std::vector<mpz_class>{2, 2});
  CHECK(z.degrees[1].torsion.empty());
}

TEST_CASE("cup product") {
  auto a = bialg::truncated_polynomial(2);
  Matrix one = a.unit;
  Matrix f = Matrix::from_dense(2, 2, {0, 0, 0, 1});  // the derivation x -> x
  CHECK(hochschild_coboundary(a, f).is_zero());
  CHECK(hochschild_cup(a, one, f) == f);
  CHECK(hochschild_cup(a, f, one) == f);
  CHECK_THROWS_AS(hochschild_cup(a, Matrix(3, 2), f), InputError);

  // graded commutativity on cocycle representatives up to coboundaries
  std::vector<std::vector<Matrix>> cocycles(3);
  for (std::size_t m = 0; m <= 2; ++m) {
    Matrix ker = exactla::kernel_basis(hochschild_differential(a, m));
    for (const auto& v : ker.columns()) cocycles[m].push_back(unflatten(v, 2, ipow(2, m)));
  }
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t mp = 0; m + mp <= 3 && mp <= 2; ++mp)
      for (const auto& x : cocycles[m])
        for (const auto& y : cocycles[mp]) {
          Matrix xy = hochschild_cup(a, x, y), yx = hochschild_cup(a, y, x);
          CHECK(hochschild_coboundary(a, xy).is_zero());
          Matrix diff = xy - yx.scaled(Rational((m * mp) % 2 ? -1 : 1));
          if (m + mp == 0) {
            CHECK(diff.is_zero());
            continue;
          }
          CHECK(exactla::solve(hochschild_differential(a, m + mp - 1), flatten(diff)).has_value());
        }

  // cocycle ∪ coboundary is a coboundary
  Matrix h = Matrix::from_dense(2, 2, {1, 2, 3, 4});
  Matrix dh = hochschild_coboundary(a, h);
  Matrix prod = hochschild_cup(a, f, dh);
  CHECK(exactla::solve(hochschild_differential(a, 2), flatten(prod)).has_value());

  auto c2 = bialg::group_algebra(2).algebra();
  Matrix z1 = exactla::kernel_basis(hochschild_differential(c2, 1));
  for (const auto& u : z1.columns())
    for (const auto& v : z1.columns()) {
      Matrix cup = hochschild_cup(c2, unflatten(u, 2, 2), unflatten(v, 2, 2));
      CHECK(hochschild_coboundary(c2, cup).is_zero());
    }
}
