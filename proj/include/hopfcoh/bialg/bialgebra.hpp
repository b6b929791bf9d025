#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/exactla/matrix.hpp"
#include "hopfcoh/exactla/ring.hpp"
#include "hopfcoh/verdict.hpp"

namespace hopfcoh::bialg {

using exactla::Matrix;
using exactla::Ring;

// Tensor convention used everywhere: the basis vector e_i ⊗ e_j of V ⊗ W has
// index i * dim(W) + j (slot 1 varies slowest). A linear map V -> W is a
// dim(W) x dim(V) matrix.

// Unital associative algebra by structure constants.
struct FinAlgebra {
  std::string name;
  Ring ring;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Matrix mult;  // dim x dim^2
  Matrix unit;  // dim x 1
};

struct FinBialgebra {
  std::string name;
  Ring ring;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Matrix mult;                      // dim x dim^2
  Matrix comult;                    // dim^2 x dim
  Matrix unit;                      // dim x 1
  Matrix counit;                    // 1 x dim
  std::optional<Matrix> antipode;   // dim x dim

  bool has_antipode() const { return antipode.has_value(); }
  FinAlgebra algebra() const { return {name, ring, dim, labels, mult, unit}; }
  Matrix id() const { return Matrix::identity(dim); }
};

// Checks associativity, coassociativity, unit and counit laws, compatibility
// of Δ with the product, unit and counit, and the antipode when present.
Verdict check_axioms(const FinBialgebra& b);
Verdict check_algebra(const FinAlgebra& a);

FinBialgebra trivial_bialgebra(const Ring& ring = Ring::rationals());
FinBialgebra group_algebra(std::size_t n, const Ring& ring = Ring::rationals());
FinBialgebra sweedler_h4(const Ring& ring = Ring::rationals());
FinBialgebra truncated_additive_hopf(std::uint32_t p);
// same constants, different ground ring (used for negative controls)
FinBialgebra with_ring(const FinBialgebra& b, const Ring& ring);

// k[x]/(x^n) as an algebra
FinAlgebra truncated_polynomial(std::size_t n, const Ring& ring = Ring::rationals());

// Δ^{n-1}: A -> A^{⊗n}, iterated on the left factor; n = 1 gives the identity
Matrix iterated_coproduct(const FinBialgebra& b, std::size_t n);
// the same iterate bracketed on the right factor
Matrix iterated_coproduct_right(const FinBialgebra& b, std::size_t n);
// slotwise product A^{⊗n} ⊗ A^{⊗n} -> A^{⊗n}; n = 0 is the 1x1 identity
Matrix componentwise_product(const FinBialgebra& b, std::size_t n);
Matrix componentwise_product(const Matrix& mult, std::size_t dim, std::size_t n);
// m-fold product A^{⊗m} -> A; m = 0 gives the unit
Matrix iterated_product(const Matrix& mult, const Matrix& unit, std::size_t dim, std::size_t m);

// flip A ⊗ A -> A ⊗ A
Matrix swap(std::size_t dim);
bool is_commutative(const FinBialgebra& b);
bool is_cocommutative(const FinBialgebra& b);

// reduce constants into the ground ring and reject mixed rings
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace hopfcoh::bialg
