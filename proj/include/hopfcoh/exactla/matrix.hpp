#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/exactla/rational.hpp"

namespace hopfcoh::exactla {

using Vec = std::vector<Rational>;
using Entry = std::pair<std::uint32_t, Rational>;
using SparseRow = std::vector<Entry>;  // sorted by column, no zero entries

// Sparse row-major matrix with exact rational entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_dense(const std::vector<Vec>& rows);
  static Matrix from_dense(std::size_t rows, std::size_t cols, const std::vector<long long>& entries);
  static Matrix column_vector(const Vec& v);
  static Matrix row_vector(const Vec& v);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Matrix scalar(const Rational& s) {
    Matrix m(1, 1);
    m.set(0, 0, s);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Rational get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& v);
  void add_to(std::size_t i, std::size_t j, const Rational& v);

  const SparseRow& row(std::size_t i) const { return data_[i]; }
  // caller guarantees sortedness and no zeros
  void set_row(std::size_t i, SparseRow r) { data_[i] = std::move(r); }

  Vec column(std::size_t j) const;
  Vec dense_row(std::size_t i) const;
  std::vector<Vec> to_dense() const;
  std::vector<Vec> columns() const;

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;
  Vec apply(const Vec& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  // writes m into this matrix at offset (r0, c0), adding to existing entries
  void add_block(std::size_t r0, std::size_t c0, const Matrix& m);

  // reduce every entry modulo p into [0, p)
  Matrix mod_p(std::uint32_t p) const;
  bool is_integral() const;

  // first nonzero entry in row-major order, or none
  bool first_nonzero(std::size_t& i, std::size_t& j, Rational& v) const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

// Collects entries in any order (duplicates add up) and assembles a Matrix.
class MatrixBuilder {
 public:
  MatrixBuilder(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  void add(std::size_t i, std::size_t j, const Rational& v) { rows_[i].emplace_back(static_cast<std::uint32_t>(j), v); }
  Matrix finish();

 private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(const std::vector<Matrix>& ms);
Matrix hstack(const std::vector<Matrix>& ms);
Matrix vstack(const std::vector<Matrix>& ms);
Matrix block_diag(const std::vector<Matrix>& ms);
Matrix power_of(const Matrix& m, std::size_t k);  // m ⊗ ... ⊗ m, k ≥ 0 factors

// Permutation of tensor slots. dims[s] is the dimension of source slot s; the
// result maps e_{i_0} ⊗ ... ⊗ e_{i_{k-1}} to the tensor whose slot t holds
// i_{perm[t]}. Slot 0 is the slowest index.
Matrix slot_permutation(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);

// index helpers for row-major tensor indices
std::size_t tensor_size(const std::vector<std::size_t>& dims);
std::vector<std::size_t> unravel(std::size_t idx, const std::vector<std::size_t>& dims);
std::size_t ravel(const std::vector<std::size_t>& multi, const std::vector<std::size_t>& dims);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
bool is_zero(const Vec& v);

}  // namespace hopfcoh::exactla
