#include <doctest.h>

#include <random>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/exactla/linalg.hpp"
#include "hopfcoh/exactla/smith.hpp"
#include "support/oracles.hpp"

using namespace hopfcoh;
using namespace hopfcoh::exactla;

namespace {

Matrix from_z(const oracle::ZDense& z) {
  std::vector<Vec> rows;
  for (const auto& r : z) {
    Vec v;
    for (const auto& x : r) v.emplace_back(x);
    rows.push_back(v);
  }
  if (rows.empty()) return Matrix();
  return Matrix::from_dense(rows);
}

oracle::QDense to_q(const Matrix& m) {
  oracle::QDense q(m.rows(), std::vector<mpq_class>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i)) q[i][j] = x.to_mpq();
  return q;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical across the overflow boundary") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK((a + Rational(3, 2)).is_zero());
  Rational big(1LL << 61);
  Rational sq = big * big;
  CHECK(!sq.is_small());
  Rational back = sq / big;
  CHECK(back.is_small());
  CHECK(back == big);
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
  CHECK(Rational(-7, 3).mod(5) == 1);  // -7 * 3^{-1} = -7*2 = -14 = 1 mod 5
  CHECK(Rational(3) < Rational(7, 2));
}

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix::from_dense(2, 2, {1, 1, 1, 1})) == 1);
  CHECK(rank(Matrix(4, 5)) == 0);
  CHECK(rank(Matrix::from_dense(2, 2, {1, 1, 1, 3}), Ring::prime_field(2)) == 1);
}

TEST_CASE("rank agrees with the dense fraction-free oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 12;
    auto z = oracle::random_int_matrix(rng, r, c, -3, 3, 0.5);
    CHECK(rank(from_z(z)) == oracle::bareiss_rank(z));
  }
  auto z = oracle::random_int_matrix(rng, 8, 11, -9, 9);
  CHECK(rank(from_z(z)) == oracle::bareiss_rank(z));
}

TEST_CASE("kernel basis") {
  SUBCASE("zero map") {
    Matrix k = kernel_basis(Matrix(2, 3));
    CHECK(k.cols() == 3);
    CHECK(rank(k) == 3);
  }
  SUBCASE("row [1, 1]") {
    Matrix k = kernel_basis(Matrix::from_dense(1, 2, {1, 1}));
    REQUIRE(k.cols() == 1);
    CHECK(k.get(0, 0) == -k.get(1, 0));
    CHECK(!k.get(0, 0).is_zero());
  }
  SUBCASE("random 6x9 against the oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      auto z = oracle::random_int_matrix(rng, 6, 9, -9, 9, 0.6);
      Matrix m = from_z(z);
      Matrix k = kernel_basis(m);
      CHECK(k.cols() == 9 - oracle::bareiss_rank(z));
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
    }
  }
  SUBCASE("prime field kernel") {
    Matrix m = Matrix::from_dense(2, 3, {1, 1, 0, 0, 1, 1});
    Matrix k = kernel_basis(m, Ring::prime_field(2));
    CHECK(k.cols() == 1);
    CHECK(is_zero_in(m * k, Ring::prime_field(2)));
  }
}

TEST_CASE("image basis") {
  CHECK(image_basis(Matrix::identity(4)).cols() == 4);
  CHECK(image_basis(Matrix(3, 3)).cols() == 0);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto z = oracle::random_int_matrix(rng, 7, 5, -9, 9, 0.5);
    Matrix m = from_z(z);
    Matrix im = image_basis(m);
    CHECK(im.cols() == oracle::bareiss_rank(z));
    for (std::size_t j = 0; j < im.cols(); ++j) CHECK(solve(m, im.column(j)).has_value());
  }
}

TEST_CASE("solve") {
  Vec b{Rational(3), Rational(-1, 2), Rational(0)};
  auto x = solve(Matrix::identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK(!solve(Matrix(2, 2), Vec{Rational(1), Rational(0)}).has_value());
  CHECK_THROWS_AS(solve(Matrix(2, 2), Vec{Rational(1)}), InputError);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto z = oracle::random_int_matrix(rng, 1 + rng() % 8, 1 + rng() % 8, -9, 9, 0.5);
    Matrix m = from_z(z);
    Vec x0(m.cols());
    for (auto& v : x0) v = Rational(static_cast<long long>(rng() % 7) - 3);
    Vec rhs = m.apply(x0);
    auto sol = solve(m, rhs);
    REQUIRE(sol);
    CHECK(m.apply(*sol) == rhs);
  }
}

TEST_CASE("inverse") {
  Matrix m = Matrix::from_dense(2, 2, {2, 1, 1, 1});
  CHECK(m * inverse(m) == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(Matrix::from_dense(2, 2, {1, 1, 1, 1})), PreconditionError);
}

TEST_CASE("Smith normal form") {
  SUBCASE("diag(2, 4)") {
    auto sf = smith_normal_form(Matrix::from_dense(2, 2, {2, 0, 0, 4}));
    CHECK(sf.invariant_factors == std::vector<mpz_class>{2, 4});
  }
  SUBCASE("diag(2, 3)") {
    auto sf = smith_normal_form(Matrix::from_dense(2, 2, {2, 0, 0, 3}));
    CHECK(sf.invariant_factors == std::vector<mpz_class>{1, 6});
    CHECK(sf.torsion() == std::vector<mpz_class>{6});
  }
  SUBCASE("random 10x12 against the textbook oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
      auto z = oracle::random_int_matrix(rng, 10, 12, -9, 9);
      Matrix m = from_z(z);
      auto sf = smith_normal_form(m);
      CHECK(sf.invariant_factors == oracle::textbook_smith(z));
      CHECK(sf.left * m * sf.right == sf.diagonal());
      CHECK(abs(determinant(to_zmat(sf.left))) == 1);
      CHECK(abs(determinant(to_zmat(sf.right))) == 1);
    }
  }
  SUBCASE("rank deficient with torsion") {
    Matrix m = Matrix::from_dense(3, 3, {2, 4, 6, 4, 8, 12, 0, 0, 2});
    auto sf = smith_normal_form(m);
    CHECK(sf.invariant_factors == std::vector<mpz_class>{2, 2});
    CHECK(sf.left * m * sf.right == sf.diagonal());
  }
  SUBCASE("non-integer input is rejected") {
    Matrix m(1, 1);
    m.set(0, 0, Rational(1, 2));
    CHECK_THROWS_AS(smith_normal_form(m), InputError);
  }
}

TEST_CASE("lattice classes modulo a column lattice") {
  Matrix d = Matrix::from_dense(2, 1, {2, 0});
  auto sf = smith_normal_form(d);
  auto c1 = lattice_class(sf, Vec{Rational(1), Rational(0)});
  auto c3 = lattice_class(sf, Vec{Rational(3), Rational(0)});
  auto c2 = lattice_class(sf, Vec{Rational(2), Rational(0)});
  CHECK(c1 == c3);
  CHECK(c1 != c2);
  CHECK(c2 == lattice_class(sf, Vec{Rational(0), Rational(0)}));
}

TEST_CASE("subquotient basis") {
  SUBCASE("whole space, no relations") {
    auto sq = quotient_basis(3, Matrix(3, 0));
    CHECK(sq.dim == 3);
    CHECK(sq.projection == Matrix::identity(3));
    CHECK(sq.section == Matrix::identity(3));
  }
  SUBCASE("2-dim space modulo (1, -1)") {
    auto sq = quotient_basis(2, Matrix::from_dense(2, 1, {1, -1}));
    CHECK(sq.dim == 1);
    CHECK((sq.projection * Matrix::from_dense(2, 1, {1, -1})).is_zero());
    CHECK(sq.projection * sq.section == Matrix::identity(1));
  }
  SUBCASE("relations outside the subspace") {
    CHECK_THROWS_AS(subquotient_basis(2, Matrix::from_dense(2, 1, {1, 0}), Matrix::from_dense(2, 1, {0, 1})),
                    PreconditionError);
  }
  SUBCASE("random sub and rel in 8 dimensions") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      auto sz = oracle::random_int_matrix(rng, 8, 5, -4, 4, 0.6);
      auto cz = oracle::random_int_matrix(rng, 5, 3, -4, 4, 0.6);
      Matrix sub = from_z(sz);
      Matrix rel = sub * from_z(cz);
      auto sq = subquotient_basis(8, sub, rel);
      std::size_t ds = oracle::dense_rank(to_q(sub.transpose()));
      std::size_t dr = oracle::dense_rank(to_q(rel.transpose()));
      CHECK(sq.dim == ds - dr);
      CHECK(sq.projection * sq.section == Matrix::identity(sq.dim));
      CHECK((sq.projection * rel).is_zero());
      CHECK(sq.sub.contains_columns(sq.section));
    }
  }
}

TEST_CASE("rank-nullity and slot permutations") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    auto z = oracle::random_int_matrix(rng, 1 + rng() % 10, 1 + rng() % 10, -2, 2, 0.4);
    Matrix m = from_z(z);
    CHECK(rank(m) + kernel_basis(m).cols() == m.cols());
  }
  Matrix p = slot_permutation({2, 3}, {1, 0});
  Matrix q = slot_permutation({3, 2}, {1, 0});
  CHECK(q * p == Matrix::identity(6));
  Matrix a = Matrix::from_dense(2, 2, {1, 2, 3, 4});
  Matrix b = Matrix::from_dense(3, 3, {1, 0, 1, 0, 2, 0, 5, 0, 1});
  CHECK(slot_permutation({2, 3}, {1, 0}) * kron(a, b) == kron(b, a) * slot_permutation({2, 3}, {1, 0}));
}
