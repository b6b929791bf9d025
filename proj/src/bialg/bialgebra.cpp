#include "hopfcoh/bialg/bialgebra.hpp"

#include "hopfcoh/errors.hpp"
#include "hopfcoh/exactla/linalg.hpp"

namespace hopfcoh::bialg {

using exactla::kron;
using exactla::Rational;

namespace {

Rational in_ring(long long v, const Ring& ring) {
  if (ring.is_prime_field()) {
    long long p = ring.p;
    return Rational(((v % p) + p) % p);
  }
  return Rational(v);
}

std::vector<std::string> group_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t a = 0; a < n; ++a) l.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
  return l;
}

}  // namespace

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw InputError("mixed ground rings: " + a.tag() + " vs " + b.tag());
}

Matrix swap(std::size_t dim) { return exactla::slot_permutation({dim, dim}, {1, 0}); }

Verdict check_algebra(const FinAlgebra& a) {
  Verdict v;
  std::size_t d = a.dim;
  Matrix I = Matrix::identity(d);
  if (a.mult.rows() != d || a.mult.cols() != d * d || a.unit.rows() != d || a.unit.cols() != 1)
    throw InputError("algebra structure maps have the wrong shape");
  v.add("associativity", a.mult * kron(a.mult, I) - a.mult * kron(I, a.mult), a.ring);
  v.add("left unit", a.mult * kron(a.unit, I) - I, a.ring);
  v.add("right unit", a.mult * kron(I, a.unit) - I, a.ring);
  return v;
}

Verdict check_axioms(const FinBialgebra& b) {
  std::size_t d = b.dim;
  if (b.comult.rows() != d * d || b.comult.cols() != d || b.counit.rows() != 1 || b.counit.cols() != d)
    throw InputError("coalgebra structure maps have the wrong shape");
  if (b.antipode && (b.antipode->rows() != d || b.antipode->cols() != d))
    throw InputError("antipode has the wrong shape");
  Verdict v = check_algebra(b.algebra());
  Matrix I = b.id();
  const Ring& R = b.ring;
  v.add("coassociativity", kron(b.comult, I) * b.comult - kron(I, b.comult) * b.comult, R);
  v.add("left counit", kron(b.counit, I) * b.comult - I, R);
  v.add("right counit", kron(I, b.counit) * b.comult - I, R);
  Matrix s23 = exactla::slot_permutation({d, d, d, d}, {0, 2, 1, 3});
  v.add("compatibility", b.comult * b.mult - kron(b.mult, b.mult) * s23 * kron(b.comult, b.comult), R);
  v.add("unit is grouplike", b.comult * b.unit - kron(b.unit, b.unit), R);
  v.add("counit is multiplicative", b.counit * b.mult - kron(b.counit, b.counit), R);
  v.add("counit of unit", b.counit * b.unit - Matrix::identity(1), R);
  if (b.antipode) {
    Matrix ue = b.unit * b.counit;
    v.add("antipode left", b.mult * kron(*b.antipode, I) * b.comult - ue, R);
    v.add("antipode right", b.mult * kron(I, *b.antipode) * b.comult - ue, R);
  }
  return v;
}

FinBialgebra trivial_bialgebra(const Ring& ring) {
  FinBialgebra b = group_algebra(1, ring);
  b.name = "k";
  return b;
}

FinBialgebra group_algebra(std::size_t n, const Ring& ring) {
  if (n == 0) throw InputError("group_algebra: n must be at least 1");
  FinBialgebra b;
  b.name = "group-algebra:" + std::to_string(n) + ":" + ring.tag();
  b.ring = ring;
  b.dim = n;
  b.labels = group_labels(n);
  b.mult = Matrix(n, n * n);
  b.comult = Matrix(n * n, n);
  b.unit = Matrix(n, 1);
  b.counit = Matrix(1, n);
  Matrix S(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) b.mult.set((a + c) % n, a * n + c, Rational(1));
    b.comult.set(a * n + a, a, Rational(1));
    b.counit.set(0, a, Rational(1));
    S.set((n - a) % n, a, Rational(1));
  }
  b.unit.set(0, 0, Rational(1));
  b.antipode = S;
  return b;
}

FinBialgebra sweedler_h4(const Ring& ring) {
  if (ring.characteristic() == 2) throw InputError("sweedler_h4 needs characteristic different from 2");
  // basis g^i x^j at index i + 2j: 1, g, x, gx
  FinBialgebra b;
  b.name = "sweedler-h4:" + ring.tag();
  b.ring = ring;
  b.dim = 4;
  b.labels = {"1", "g", "x", "gx"};
  b.mult = Matrix(4, 16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          if (j + l >= 2) continue;
          long long sign = (j * k) % 2 ? -1 : 1;
          std::size_t src = static_cast<std::size_t>((i + 2 * j) * 4 + (k + 2 * l));
          std::size_t dst = static_cast<std::size_t>((i + k) % 2 + 2 * (j + l));
          b.mult.set(dst, src, in_ring(sign, ring));
        }
  b.comult = Matrix(16, 4);
  b.comult.set(0 * 4 + 0, 0, Rational(1));  // 1 -> 1⊗1
  b.comult.set(1 * 4 + 1, 1, Rational(1));  // g -> g⊗g
  b.comult.set(2 * 4 + 0, 2, Rational(1));  // x -> x⊗1 + g⊗x
  b.comult.set(1 * 4 + 2, 2, Rational(1));
  b.comult.set(3 * 4 + 1, 3, Rational(1));  // gx -> gx⊗g + 1⊗gx
  b.comult.set(0 * 4 + 3, 3, Rational(1));
  b.unit = Matrix(4, 1);
  b.unit.set(0, 0, Rational(1));
  b.counit = Matrix(1, 4);
  b.counit.set(0, 0, Rational(1));
  b.counit.set(0, 1, Rational(1));
  Matrix S(4, 4);
  S.set(0, 0, Rational(1));
  S.set(1, 1, Rational(1));
  S.set(3, 2, in_ring(-1, ring));  // x -> -gx
  S.set(2, 3, Rational(1));        // gx -> x
  b.antipode = S;
  return b;
}

FinBialgebra truncated_additive_hopf(std::uint32_t p) {
  Ring ring = Ring::prime_field(p);  // throws for non-primes
  std::size_t n = p;
  FinBialgebra b;
  b.name = "truncated-additive:" + std::to_string(p);
  b.ring = ring;
  b.dim = n;
  for (std::size_t k = 0; k < n; ++k) b.labels.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
  b.mult = Matrix(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) b.mult.set(i + j, i * n + j, Rational(1));
  b.comult = Matrix(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    long long binom = 1;  // C(k, i) mod p, built incrementally in exact integers
    for (std::size_t i = 0; i <= k; ++i) {
      if (i > 0) binom = binom * static_cast<long long>(k - i + 1) / static_cast<long long>(i);
      Rational c = in_ring(binom, ring);
      if (!c.is_zero()) b.comult.set(i * n + (k - i), k, c);
    }
  }
  b.unit = Matrix(n, 1);
  b.unit.set(0, 0, Rational(1));
  b.counit = Matrix(1, n);
  b.counit.set(0, 0, Rational(1));
  Matrix S(n, n);
  for (std::size_t k = 0; k < n; ++k) S.set(k, k, in_ring(k % 2 ? -1 : 1, ring));
  b.antipode = S;
  return b;
}

FinBialgebra with_ring(const FinBialgebra& b, const Ring& ring) {
  FinBialgebra c = b;
  c.ring = ring;
  c.name = b.name + "@" + ring.tag();
  return c;
}

FinAlgebra truncated_polynomial(std::size_t n, const Ring& ring) {
  if (n == 0) throw InputError("truncated_polynomial: n must be at least 1");
  FinAlgebra a;
  a.name = "truncated-polynomial:" + std::to_string(n) + ":" + ring.tag();
  a.ring = ring;
  a.dim = n;
  for (std::size_t k = 0; k < n; ++k) a.labels.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
  a.mult = Matrix(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) a.mult.set(i + j, i * n + j, Rational(1));
  a.unit = Matrix(n, 1);
  a.unit.set(0, 0, Rational(1));
  return a;
}

Matrix iterated_coproduct(const FinBialgebra& b, std::size_t n) {
  if (n == 0) throw InputError("iterated_coproduct: n must be at least 1");
  Matrix m = b.id();
  for (std::size_t k = 1; k < n; ++k)
    m = kron(b.comult, Matrix::identity(exactla::tensor_size(std::vector<std::size_t>(k - 1, b.dim)))) * m;
  return exactla::reduce(m, b.ring);
}

Matrix iterated_coproduct_right(const FinBialgebra& b, std::size_t n) {
  if (n == 0) throw InputError("iterated_coproduct: n must be at least 1");
  Matrix m = b.id();
  for (std::size_t k = 1; k < n; ++k)
    m = kron(Matrix::identity(exactla::tensor_size(std::vector<std::size_t>(k - 1, b.dim))), b.comult) * m;
  return exactla::reduce(m, b.ring);
}

Matrix componentwise_product(const Matrix& mult, std::size_t dim, std::size_t n) {
  if (n == 0) return Matrix::identity(1);
  std::vector<std::size_t> dims(2 * n, dim), perm(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    perm[2 * k] = k;
    perm[2 * k + 1] = n + k;
  }
  return exactla::power_of(mult, n) * exactla::slot_permutation(dims, perm);
}

Matrix componentwise_product(const FinBialgebra& b, std::size_t n) {
  return exactla::reduce(componentwise_product(b.mult, b.dim, n), b.ring);
}

Matrix iterated_product(const Matrix& mult, const Matrix& unit, std::size_t dim, std::size_t m) {
  if (m == 0) return unit;
  Matrix r = Matrix::identity(dim);
  for (std::size_t k = 1; k < m; ++k) r = mult * kron(r, Matrix::identity(dim));
  return r;
}

bool is_commutative(const FinBialgebra& b) {
  return exactla::is_zero_in(b.mult * swap(b.dim) - b.mult, b.ring);
}

bool is_cocommutative(const FinBialgebra& b) {
  return exactla::is_zero_in(swap(b.dim) * b.comult - b.comult, b.ring);
}

}  // namespace hopfcoh::bialg
