#include "hopfcoh/gs/gs.hpp"

#include <algorithm>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/exactla/linalg.hpp"
#include "hopfcoh/exactla/smith.hpp"

namespace hopfcoh::gs {

using exactla::kron;
using exactla::Rational;

namespace {

using Builder = exactla::MatrixBuilder;

std::size_t ipow(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= d;
  return r;
}

Matrix eye(std::size_t n) { return Matrix::identity(n); }

// (a, b, c, e) -> (a, c, b, e) on a four-slot tensor
Matrix swap_middle(std::size_t d0, std::size_t d1, std::size_t d2, std::size_t d3) {
  return exactla::slot_permutation({d0, d1, d2, d3}, {0, 2, 1, 3});
}

int sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

Vec flatten(const Matrix& cochain) {
  Vec v(cochain.rows() * cochain.cols());
  for (std::size_t i = 0; i < cochain.rows(); ++i)
    for (const auto& [j, x] : cochain.row(i)) v[i * cochain.cols() + j] = x;
  return v;
}

Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw InputError("unflatten: size mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!v[i * cols + j].is_zero()) m.set(i, j, v[i * cols + j]);
  return m;
}

Matrix post_compose(const Matrix& l, std::size_t dim_x) { return kron(l, eye(dim_x)); }

Matrix pre_compose(const Matrix& r, std::size_t dim_y) { return kron(eye(dim_y), r.transpose()); }

Matrix left_act(const Matrix& act, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y) {
  if (act.cols() != dim_z * dim_y) throw InputError("left_act: shape");
  Builder out(act.rows() * dim_z * dim_x, dim_y * dim_x);
  for (std::size_t yp = 0; yp < act.rows(); ++yp)
    for (const auto& [col, v] : act.row(yp)) {
      std::size_t z = col / dim_y, y = col % dim_y;
      for (std::size_t x = 0; x < dim_x; ++x) out.add(yp * dim_z * dim_x + z * dim_x + x, y * dim_x + x, v);
    }
  return out.finish();
}

Matrix right_act(const Matrix& act, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y) {
  if (act.cols() != dim_z * dim_y) throw InputError("right_act: shape");
  Builder out(act.rows() * dim_x * dim_z, dim_y * dim_x);
  for (std::size_t yp = 0; yp < act.rows(); ++yp)
    for (const auto& [col, v] : act.row(yp)) {
      std::size_t y = col / dim_z, z = col % dim_z;
      for (std::size_t x = 0; x < dim_x; ++x) out.add(yp * dim_x * dim_z + x * dim_z + z, y * dim_x + x, v);
    }
  return out.finish();
}

Matrix left_coact(const Matrix& coact, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y) {
  if (coact.rows() != dim_z * dim_x) throw InputError("left_coact: shape");
  std::size_t dxp = coact.cols();
  Builder out(dim_z * dim_y * dxp, dim_y * dim_x);
  for (std::size_t row = 0; row < coact.rows(); ++row) {
    std::size_t z = row / dim_x, x = row % dim_x;
    for (const auto& [xp, v] : coact.row(row))
      for (std::size_t y = 0; y < dim_y; ++y) out.add((z * dim_y + y) * dxp + xp, y * dim_x + x, v);
  }
  return out.finish();
}

Matrix right_coact(const Matrix& coact, std::size_t dim_z, std::size_t dim_x, std::size_t dim_y) {
  if (coact.rows() != dim_x * dim_z) throw InputError("right_coact: shape");
  std::size_t dxp = coact.cols();
  Builder out(dim_y * dim_z * dxp, dim_y * dim_x);
  for (std::size_t row = 0; row < coact.rows(); ++row) {
    std::size_t x = row / dim_z, z = row % dim_z;
    for (const auto& [xp, v] : coact.row(row))
      for (std::size_t y = 0; y < dim_y; ++y) out.add((y * dim_z + z) * dxp + xp, y * dim_x + x, v);
  }
  return out.finish();
}

// a·(x_1 ⊗ rest) = a' x_1 ⊗ a''·rest
Matrix power_left_action(const FinBialgebra& b, std::size_t n) {
  const std::size_t d = b.dim;
  if (n == 0) return b.counit;
  Matrix prev = power_left_action(b, n - 1);
  std::size_t rest = ipow(d, n - 1);
  return kron(b.mult, prev) * swap_middle(d, d, d, rest) * kron(b.comult, eye(d * rest));
}

// (x_1 ⊗ rest)·a = x_1 a' ⊗ rest·a''
Matrix power_right_action(const FinBialgebra& b, std::size_t n) {
  const std::size_t d = b.dim;
  if (n == 0) return b.counit;
  Matrix prev = power_right_action(b, n - 1);
  std::size_t rest = ipow(d, n - 1);
  return kron(b.mult, prev) * swap_middle(d, rest, d, d) * kron(eye(d * rest), b.comult);
}

// x_1 ⊗ rest -> x_1' rest_(-1) ⊗ x_1'' ⊗ rest_(0)
Matrix power_left_coaction(const FinBialgebra& b, std::size_t n) {
  const std::size_t d = b.dim;
  if (n == 0) return b.unit;
  Matrix prev = power_left_coaction(b, n - 1);
  std::size_t rest = ipow(d, n - 1);
  return kron(b.mult, eye(d * rest)) * swap_middle(d, d, d, rest) * kron(b.comult, prev);
}

// x_1 ⊗ rest -> x_1' ⊗ rest_(0) ⊗ x_1'' rest_(1)
Matrix power_right_coaction(const FinBialgebra& b, std::size_t n) {
  const std::size_t d = b.dim;
  if (n == 0) return b.unit;
  Matrix prev = power_right_coaction(b, n - 1);
  std::size_t rest = ipow(d, n - 1);
  return kron(eye(d * rest), b.mult) * swap_middle(d, d, rest, d) * kron(b.comult, prev);
}

Matrix gs_d1(const FinBialgebra& b, std::size_t m, std::size_t n) {
  const std::size_t d = b.dim, dm = ipow(d, m), dn = ipow(d, n);
  Matrix out = left_act(power_left_action(b, n), d, dm, dn);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix r = kron(kron(eye(ipow(d, i)), b.mult), eye(ipow(d, m - 1 - i)));
    out += pre_compose(r, dn).scaled(sign(i + 1));
  }
  out += right_act(power_right_action(b, n), d, dm, dn).scaled(sign(m + 1));
  return out;
}

Matrix gs_d2(const FinBialgebra& b, std::size_t m, std::size_t n) {
  const std::size_t d = b.dim, dm = ipow(d, m), dn = ipow(d, n);
  Matrix out = left_coact(power_left_coaction(b, m), d, dm, dn);
  for (std::size_t i = 1; i <= n; ++i) {
    Matrix l = kron(kron(eye(ipow(d, i - 1)), b.comult), eye(ipow(d, n - i)));
    out += post_compose(l, dm).scaled(sign(i));
  }
  out += right_coact(power_right_coaction(b, m), d, dm, dn).scaled(sign(n + 1));
  return out;
}

Verdict check_gs_bicomplex(const FinBialgebra& b, std::size_t max_total) {
  Verdict v;
  const std::string sfx = " on Hom(A^";
  for (std::size_t t = 0; t + 2 <= max_total; ++t)
    for (std::size_t m = 0; m <= t; ++m) {
      std::size_t n = t - m;
      std::string at = sfx + std::to_string(m) + ",A^" + std::to_string(n) + ")";
      Matrix d1 = gs_d1(b, m, n), d2 = gs_d2(b, m, n);
      v.add("d1∘d1" + at, gs_d1(b, m + 1, n) * d1, b.ring);
      v.add("d2∘d2" + at, gs_d2(b, m, n + 1) * d2, b.ring);
      v.add("d1∘d2 - d2∘d1" + at, gs_d1(b, m, n + 1) * d2 - gs_d2(b, m + 1, n) * d1, b.ring);
    }
  return v;
}

std::vector<std::size_t> CohomologyReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.free_rank);
  return out;
}

CohomologyReport cochain_cohomology(const std::string& name, const Ring& ring, const std::vector<std::size_t>& dims,
                                    const std::vector<Matrix>& d, std::size_t max_degree) {
  if (d.size() < max_degree + 1 || dims.size() < max_degree + 1) throw InputError("cochain_cohomology: too few terms");
  CohomologyReport rep;
  rep.name = name;
  rep.ring = ring;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (d[k].cols() != dims[k]) throw InputError("cochain_cohomology: differential " + std::to_string(k) + " shape");
    if (k > 0) rep.checks.add("d" + std::to_string(k) + "∘d" + std::to_string(k - 1), d[k] * d[k - 1], ring);
  }
  if (!rep.checks.ok())
    throw InvariantError("differential does not square to zero: " + rep.checks.first_failure()->describe());

  const Ring rank_ring = ring.is_field() ? ring : Ring::rationals();
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k <= max_degree; ++k) ranks.push_back(exactla::rank(d[k], rank_ring));
  for (std::size_t k = 0; k <= max_degree; ++k) {
    DegreeReport dr;
    dr.degree = k;
    dr.cochain_dim = dims[k];
    std::size_t below = k > 0 ? ranks[k - 1] : 0;
    dr.free_rank = dims[k] - ranks[k] - below;
    if (!ring.is_field() && k > 0) {
      auto snf = exactla::smith_normal_form(d[k - 1], false);
      if (snf.rank() != below) throw InvariantError("Smith rank differs from rank over Q");
      dr.torsion = snf.torsion();
    }
    rep.degrees.push_back(std::move(dr));
  }
  return rep;
}

Matrix gs_total_differential(const FinBialgebra& b, std::size_t k) {
  const std::size_t d = b.dim, slice = ipow(d, k), next = ipow(d, k + 1);
  Matrix out((k + 2) * next, (k + 1) * slice);
  for (std::size_t m = 0; m <= k; ++m) {
    out.add_block((m + 1) * next, m * slice, gs_d1(b, m, k - m));
    out.add_block(m * next, m * slice, gs_d2(b, m, k - m).scaled(sign(m)));
  }
  return out;
}

CohomologyReport gs_cohomology(const FinBialgebra& b, std::size_t max_degree, const Ring& ring) {
  std::vector<std::size_t> dims;
  std::vector<Matrix> ds;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    dims.push_back((k + 1) * ipow(b.dim, k));
    ds.push_back(gs_total_differential(b, k));
  }
  auto rep = cochain_cohomology("GS(" + b.name + ")", ring, dims, ds, max_degree);
  for (auto& dr : rep.degrees)
    for (std::size_t m = 0; m <= dr.degree; ++m) dr.bidegrees.push_back({{m, dr.degree - m}, ipow(b.dim, dr.degree)});
  return rep;
}

CohomologyReport gs_cohomology(const FinBialgebra& b, std::size_t max_degree) {
  return gs_cohomology(b, max_degree, b.ring);
}

Matrix hochschild_differential(const FinAlgebra& a, std::size_t m) {
  const std::size_t d = a.dim, dm = ipow(d, m);
  Matrix out = left_act(a.mult, d, dm, d);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix r = kron(kron(eye(ipow(d, i)), a.mult), eye(ipow(d, m - 1 - i)));
    out += pre_compose(r, d).scaled(sign(i + 1));
  }
  out += right_act(a.mult, d, dm, d).scaled(sign(m + 1));
  return out;
}

CohomologyReport hochschild_cohomology(const FinAlgebra& a, std::size_t max_degree, const Ring& ring) {
  std::vector<std::size_t> dims;
  std::vector<Matrix> ds;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    dims.push_back(ipow(a.dim, k + 1));
    ds.push_back(hochschild_differential(a, k));
  }
  auto rep = cochain_cohomology("HH(" + a.name + ")", ring, dims, ds, max_degree);
  for (auto& dr : rep.degrees) dr.bidegrees.push_back({{dr.degree, 1}, dr.cochain_dim});
  return rep;
}

CohomologyReport hochschild_cohomology(const FinAlgebra& a, std::size_t max_degree) {
  return hochschild_cohomology(a, max_degree, a.ring);
}

std::size_t hochschild_degree(const FinAlgebra& a, const Matrix& cochain) {
  if (cochain.rows() != a.dim) throw InputError("Hochschild cochain must have dim(A) rows");
  std::size_t m = 0, c = 1;
  while (c < cochain.cols()) {
    c *= a.dim;
    ++m;
  }
  if (c != cochain.cols() || (a.dim == 1 && cochain.cols() != 1))
    throw InputError("Hochschild cochain columns are not a power of dim(A)");
  return m;
}

Matrix hochschild_cup(const FinAlgebra& a, const Matrix& f, const Matrix& g) {
  hochschild_degree(a, f);
  hochschild_degree(a, g);
  return a.mult * kron(f, g);
}

Matrix hochschild_coboundary(const FinAlgebra& a, const Matrix& f) {
  std::size_t m = hochschild_degree(a, f);
  Vec v = hochschild_differential(a, m).apply(flatten(f));
  return unflatten(v, a.dim, f.cols() * a.dim);
}

}  // namespace hopfcoh::gs
