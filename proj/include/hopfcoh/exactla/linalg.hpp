#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfcoh/exactla/matrix.hpp"
#include "hopfcoh/exactla/ring.hpp"

namespace hopfcoh::exactla {

// Linear algebra over a field. Integer-ring arguments are computed over Q;
// prime-field arguments reduce entries modulo p first.

// Reduced row echelon form of the row space of a matrix. pivots[r] is the
// leading column of rows.row(r); pivots are strictly increasing.
struct Echelon {
  Ring ring;
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  Matrix rows;

  std::size_t rank() const { return pivots.size(); }
  // coordinates of v in the basis rows (assumes v lies in the span)
  Vec coords(const Vec& v) const;
  bool contains(const Vec& v) const;
  // every column of m lies in the span
  bool contains_columns(const Matrix& m) const;
  Matrix basis_columns() const { return rows.transpose(); }
};

Echelon rref(const Matrix& rows, const Ring& ring = Ring::rationals());
// RREF of the span of the columns
Echelon column_echelon(const Matrix& cols, const Ring& ring = Ring::rationals());

std::size_t rank(const Matrix& m, const Ring& ring = Ring::rationals());
// a lower bound for rank(m, ring): over Q the rank modulo a large prime,
// which avoids coefficient growth; exact for prime fields
std::size_t rank_lower_bound(const Matrix& m, const Ring& ring = Ring::rationals());

// columns form a basis of {x : m x = 0}; one vector per free column, ascending
Matrix kernel_basis(const Matrix& m, const Ring& ring = Ring::rationals());

// columns form a basis of the column space (reduced echelon basis)
Matrix image_basis(const Matrix& m, const Ring& ring = Ring::rationals());

std::optional<Vec> solve(const Matrix& m, const Vec& b, const Ring& ring = Ring::rationals());
// X with m X = b, or nothing if some column of b is not in the image
std::optional<Matrix> solve_many(const Matrix& m, const Matrix& b, const Ring& ring = Ring::rationals());

// inverse of a square invertible matrix; throws PreconditionError otherwise
Matrix inverse(const Matrix& m, const Ring& ring = Ring::rationals());

// entries reduced into the ring (mod p for prime fields, unchanged otherwise)
Matrix reduce(const Matrix& m, const Ring& ring);
// true when the matrix is zero in the ring
bool is_zero_in(const Matrix& m, const Ring& ring);

// span(sub)/span(rel) for generators given as columns of ambient dimension
// space_dim. section: space_dim x dim with image in span(sub). projection:
// dim x space_dim, kills rel, projection * section = I.
struct SubQuotient {
  std::size_t dim = 0;
  Matrix section;
  Matrix projection;
  Echelon sub;  // echelon basis of the subspace
  Echelon rel;  // echelon basis of the relations
};

SubQuotient subquotient_basis(std::size_t space_dim, const Matrix& sub_gens, const Matrix& rel_gens,
                              const Ring& ring = Ring::rationals());
SubQuotient quotient_basis(std::size_t space_dim, const Matrix& rel_gens, const Ring& ring = Ring::rationals());
SubQuotient subspace_basis(std::size_t space_dim, const Matrix& sub_gens, const Ring& ring = Ring::rationals());

}  // namespace hopfcoh::exactla
