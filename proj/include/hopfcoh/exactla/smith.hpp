#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "hopfcoh/exactla/matrix.hpp"

namespace hopfcoh::exactla {

using ZMat = std::vector<std::vector<mpz_class>>;

struct SmithForm {
  std::vector<mpz_class> invariant_factors;  // d_1 | d_2 | ... | d_r, all positive
  Matrix left;                                // rows x rows, unimodular
  Matrix right;                               // cols x cols, unimodular
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const { return invariant_factors.size(); }
  // invariant factors greater than one
  std::vector<mpz_class> torsion() const;
  // left * m * right for checking
  Matrix diagonal() const;
};

// Requires integer entries (InputError otherwise). Transforms are skipped when
// with_transforms is false; left/right are then empty.
SmithForm smith_normal_form(const Matrix& m, bool with_transforms = true);

ZMat to_zmat(const Matrix& m);
Matrix from_zmat(const ZMat& z);
mpz_class determinant(const ZMat& z);  // Bareiss, square input

// Coordinates of an integer vector modulo the column lattice of d, read in the
// basis given by the Smith form of d: entry i < rank is reduced modulo d_i
// (zero when d_i = 1), entries i >= rank are taken as they are. Two vectors
// differ by an element of the lattice exactly when their coordinates agree.
std::vector<mpz_class> lattice_class(const SmithForm& sf_of_d, const Vec& v);

}  // namespace hopfcoh::exactla
