#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hopfcoh/bialg/bialgebra.hpp"
#include "hopfcoh/exactla/matrix.hpp"
#include "hopfcoh/exactla/ring.hpp"
#include "hopfcoh/verdict.hpp"

namespace hopfcoh::gs {

using bialg::FinAlgebra;
using bialg::FinBialgebra;
using exactla::Matrix;
using exactla::Ring;
using exactla::Vec;

// Cochains Ψ: A^{⊗m} -> A^{⊗n} are dim^n x dim^m matrices, flattened row-major
// (entry (r, c) sits at r * dim^m + c). Bidegree (m, n) counts the tensor
// factors of source and target, m, n >= 0; the total degree is m + n, so that
// degree 0 is Hom(k, k) = Hom_Tetra(A, A).

Vec flatten(const Matrix& cochain);
Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

// Operators on flattened cochains Hom(X, Y). dim_x, dim_y are the sizes of
// source and target.
// Ψ -> L∘Ψ
Matrix post_compose(const Matrix& l, std::size_t dim_x);
// Ψ -> Ψ∘R
Matrix pre_compose(const Matrix& r, std::size_t dim_y);
// Ψ -> act∘(id_Z ⊗ Ψ) with act: Z⊗Y -> Y'
Matrix left_act(const Matrix& act, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y);
// Ψ -> act∘(Ψ ⊗ id_Z) with act: Y⊗Z -> Y'
Matrix right_act(const Matrix& act, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y);
// Ψ -> (id_Z ⊗ Ψ)∘coact with coact: X' -> Z⊗X
Matrix left_coact(const Matrix& coact, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y);
// Ψ -> (Ψ ⊗ id_Z)∘coact with coact: X' -> X⊗Z
Matrix right_coact(const Matrix& coact, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y);

// structure of A^{⊗n} as a tetramodule over A (diagonal actions, coactions
// by the product of the Sweedler legs). n = 0 gives the trivial module k.
Matrix power_left_action(const FinBialgebra& b, std::size_t n);    // A⊗A^{⊗n} -> A^{⊗n}
Matrix power_right_action(const FinBialgebra& b, std::size_t n);   // A^{⊗n}⊗A -> A^{⊗n}
Matrix power_left_coaction(const FinBialgebra& b, std::size_t n);  // A^{⊗n} -> A⊗A^{⊗n}
Matrix power_right_coaction(const FinBialgebra& b, std::size_t n); // A^{⊗n} -> A^{⊗n}⊗A

// (d_GS)_1: Hom(A^{⊗m}, A^{⊗n}) -> Hom(A^{⊗(m+1)}, A^{⊗n})
Matrix gs_d1(const FinBialgebra& b, std::size_t m, std::size_t n);
// (d_GS)_2: Hom(A^{⊗m}, A^{⊗n}) -> Hom(A^{⊗m}, A^{⊗(n+1)})
Matrix gs_d2(const FinBialgebra& b, std::size_t m, std::size_t n);

// d1∘d1, d2∘d2 and the commutator d1∘d2 - d2∘d1 on every slice whose
// targets stay within total degree max_total
Verdict check_gs_bicomplex(const FinBialgebra& b, std::size_t max_total);

struct DegreeReport {
  std::size_t degree = 0;
  std::size_t cochain_dim = 0;
  std::size_t free_rank = 0;               // dimension over a field, rank over Z
  std::vector<mpz_class> torsion;          // invariant factors > 1, divisibility order
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> bidegrees;  // ((m, n), dim)
};

struct CohomologyReport {
  std::string name;
  Ring ring;
  std::vector<DegreeReport> degrees;
  Verdict checks;  // d² = 0 for every differential used

  std::vector<std::size_t> dims() const;
};

// Cohomology of a cochain complex given by its differentials d[k]: C^k -> C^{k+1},
// for k = 0 .. max_degree. Over Z the torsion of H^k is read off the Smith
// form of d[k-1].
CohomologyReport cochain_cohomology(const std::string& name, const Ring& ring, const std::vector<std::size_t>& dims,
                                    const std::vector<Matrix>& d, std::size_t max_degree);

// total differential of degree k: ⊕_{m+n=k} slices, d1 + (-1)^m d2; slices
// ordered by m ascending
Matrix gs_total_differential(const FinBialgebra& b, std::size_t k);

// Throws InvariantError when d_total² != 0.
CohomologyReport gs_cohomology(const FinBialgebra& b, std::size_t max_degree, const Ring& ring);
CohomologyReport gs_cohomology(const FinBialgebra& b, std::size_t max_degree);  // ring of b

// Hochschild cochains Hom(A^{⊗m}, A) with the standard differential.
Matrix hochschild_differential(const FinAlgebra& a, std::size_t m);
CohomologyReport hochschild_cohomology(const FinAlgebra& a, std::size_t max_degree, const Ring& ring);
CohomologyReport hochschild_cohomology(const FinAlgebra& a, std::size_t max_degree);

// cochain degree of a dim x dim^m matrix; throws InputError if the shape is wrong
std::size_t hochschild_degree(const FinAlgebra& a, const Matrix& cochain);
// (f ∪ g)(a_1..a_{m+m'}) = f(a_1..a_m) g(a_{m+1}..a_{m+m'})
Matrix hochschild_cup(const FinAlgebra& a, const Matrix& f, const Matrix& g);
// d applied to a single cochain
Matrix hochschild_coboundary(const FinAlgebra& a, const Matrix& f);

}  // namespace hopfcoh::gs
