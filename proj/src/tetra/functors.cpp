#include "hopfcoh/tetra/functors.hpp"

#include <functional>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::tetra {

using exactla::kron;
using exactla::Rational;
using exactla::slot_permutation;

namespace {
const std::vector<std::size_t> kMid = {0, 2, 1, 3};
}

Tetramodule box1(const Tetramodule& m1, const Tetramodule& m2) {
  require_same_base(m1, m2);
  const auto& A = *m1.base;
  const Ring& R = A.ring;
  std::size_t d = A.dim, n1 = m1.dim, n2 = m2.dim;
  Tetramodule r;
  r.base = m1.base;
  r.dim = n1 * n2;
  r.name = "(" + m1.name + "⊠1" + m2.name + ")";
  Matrix I1 = Matrix::identity(n1), I2 = Matrix::identity(n2);
  if (m1.m_left) r.m_left = kron(*m1.m_left, I2);
  if (m2.m_right) r.m_right = kron(I1, *m2.m_right);
  if (m1.delta_left && m2.delta_left)
    r.delta_left = exactla::reduce(
        kron(A.mult, Matrix::identity(n1 * n2)) * slot_permutation({d, n1, d, n2}, kMid) *
            kron(*m1.delta_left, *m2.delta_left),
        R);
  if (m1.delta_right && m2.delta_right)
    r.delta_right = exactla::reduce(
        kron(Matrix::identity(n1 * n2), A.mult) * slot_permutation({n1, d, n2, d}, kMid) *
            kron(*m1.delta_right, *m2.delta_right),
        R);
  return r;
}

Tetramodule box2(const Tetramodule& m1, const Tetramodule& m2) {
  require_same_base(m1, m2);
  const auto& A = *m1.base;
  const Ring& R = A.ring;
  std::size_t d = A.dim, n1 = m1.dim, n2 = m2.dim;
  Tetramodule r;
  r.base = m1.base;
  r.dim = n1 * n2;
  r.name = "(" + m1.name + "⊠2" + m2.name + ")";
  Matrix I1 = Matrix::identity(n1), I2 = Matrix::identity(n2);
  if (m1.m_left && m2.m_left)
    r.m_left = exactla::reduce(kron(*m1.m_left, *m2.m_left) * slot_permutation({d, d, n1, n2}, kMid) *
                                   kron(A.comult, Matrix::identity(n1 * n2)),
                               R);
  if (m1.m_right && m2.m_right)
    r.m_right = exactla::reduce(kron(*m1.m_right, *m2.m_right) * slot_permutation({n1, n2, d, d}, kMid) *
                                    kron(Matrix::identity(n1 * n2), A.comult),
                                R);
  if (m1.delta_left) r.delta_left = kron(*m1.delta_left, I2);
  if (m2.delta_right) r.delta_right = kron(I1, *m2.delta_right);
  return r;
}

Tetramodule induced(const BialgPtr& b, const Tetramodule& n) {
  if (!n.has_coactions()) throw PreconditionError("induced: argument is not a bicomodule");
  if (!check_bicomodule(n).ok()) throw PreconditionError("induced: invalid bicomodule");
  Tetramodule A = tautological(b);
  Tetramodule N = forget_to_bicomodule(n);
  N.base = b;
  require_same_base(A, n);
  Tetramodule r = box1(box1(A, N), A);
  r.name = "L(" + n.name + ")";
  return r;
}

Tetramodule coinduced(const BialgPtr& b, const Tetramodule& m) {
  if (!m.has_actions()) throw PreconditionError("coinduced: argument is not a bimodule");
  if (!check_bimodule(m).ok()) throw PreconditionError("coinduced: invalid bimodule");
  Tetramodule A = tautological(b);
  Tetramodule M = forget_to_bimodule(m);
  M.base = b;
  require_same_base(A, m);
  Tetramodule r = box2(box2(A, M), A);
  r.name = "R(" + m.name + ")";
  return r;
}

Matrix coeff_x_f_y(const Matrix& x, const Matrix& y) { return kron(x, y.transpose()); }

Matrix coeff_x_ifi(const Matrix& x, std::size_t p, std::size_t q, std::size_t fr, std::size_t fc) {
  if (x.cols() != p * fr * q) throw InputError("coeff_x_ifi: shape mismatch");
  std::size_t zc = p * fc * q;
  Matrix out(x.rows() * zc, fr * fc);
  for (std::size_t t = 0; t < x.rows(); ++t)
    for (const auto& [col, v] : x.row(t)) {
      std::size_t c = col % q, ai = col / q, i = ai % fr, a = ai / fr;
      for (std::size_t j = 0; j < fc; ++j) out.add_to(t * zc + (a * fc + j) * q + c, i * fc + j, v);
    }
  return out;
}

Matrix coeff_ifi_y(std::size_t p, std::size_t q, std::size_t fr, std::size_t fc, const Matrix& y) {
  if (y.rows() != p * fc * q) throw InputError("coeff_ifi_y: shape mismatch");
  std::size_t s = y.cols();
  Matrix out(p * fr * q * s, fr * fc);
  for (std::size_t row = 0; row < y.rows(); ++row) {
    std::size_t c = row % q, aj = row / q, j = aj % fc, a = aj / fc;
    for (const auto& [u, v] : y.row(row))
      for (std::size_t i = 0; i < fr; ++i) out.add_to(((a * fr + i) * q + c) * s + u, i * fc + j, v);
  }
  return out;
}

Matrix vectorize(const Matrix& f) {
  Matrix v(f.rows() * f.cols(), 1);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (const auto& [c, x] : f.row(r)) v.set(r * f.cols() + c, 0, x);
  return v;
}

Matrix HomSpace::element(std::size_t k) const {
  Matrix f(target_dim, source_dim);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Rational x = basis.get(r, k);
    if (!x.is_zero()) f.set(r / source_dim, r % source_dim, x);
  }
  return f;
}

Matrix HomSpace::combine(const exactla::Vec& c) const {
  Matrix col = basis * Matrix::column_vector(c);
  Matrix f(target_dim, source_dim);
  for (std::size_t r = 0; r < col.rows(); ++r)
    for (const auto& [cc, x] : col.row(r)) f.set(r / source_dim, r % source_dim, x);
  return f;
}

exactla::Vec HomSpace::coords(const Matrix& f) const {
  exactla::Vec c(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) c[k] = f.get(free[k] / source_dim, free[k] % source_dim);
  return c;
}

HomSpace hom_space(const Tetramodule& s, const Tetramodule& t) {
  require_same_base(s, t);
  std::size_t d = s.base_dim(), ns = s.dim, nt = t.dim;
  std::vector<Matrix> blocks;
  Matrix It = Matrix::identity(nt), Is = Matrix::identity(ns);
  if (s.m_left && t.m_left)  // f m_ℓ = m_ℓ (1⊗f)
    blocks.push_back(coeff_x_f_y(It, s.ml()) - coeff_x_ifi(t.ml(), d, 1, nt, ns));
  if (s.m_right && t.m_right)  // f m_r = m_r (f⊗1)
    blocks.push_back(coeff_x_f_y(It, s.mr()) - coeff_x_ifi(t.mr(), 1, d, nt, ns));
  if (s.delta_left && t.delta_left)  // Δ_ℓ f = (1⊗f) Δ_ℓ
    blocks.push_back(coeff_x_f_y(t.dl(), Is) - coeff_ifi_y(d, 1, nt, ns, s.dl()));
  if (s.delta_right && t.delta_right)
    blocks.push_back(coeff_x_f_y(t.dr(), Is) - coeff_ifi_y(1, d, nt, ns, s.dr()));
  HomSpace h;
  h.source_dim = ns;
  h.target_dim = nt;
  Matrix sys = blocks.empty() ? Matrix(0, nt * ns) : exactla::vstack(blocks);
  const Ring& R = s.ring();
  h.basis = exactla::kernel_basis(sys, R);
  // each kernel vector ends at its own free column (pivots sit to its left)
  Matrix bt = h.basis.transpose();
  for (std::size_t k = 0; k < bt.rows(); ++k) h.free.push_back(bt.row(k).back().first);
  if (h.free.size() != h.basis.cols()) throw InvariantError("hom_space: kernel basis lacks free coordinates");
  return h;
}

Matrix random_element(const HomSpace& h, std::mt19937_64& rng, const Ring& ring) {
  std::uniform_int_distribution<int> dist(-3, 3);
  exactla::Vec c(h.dim());
  for (auto& x : c) x = Rational(dist(rng));
  return exactla::reduce(h.combine(c), ring);
}

Matrix induced_unit_slot(const BialgPtr& b, std::size_t n_dim) {
  return kron(kron(b->unit, Matrix::identity(n_dim)), b->unit);
}

Matrix coinduced_counit_slot(const BialgPtr& b, std::size_t m_dim) {
  return kron(kron(b->counit, Matrix::identity(m_dim)), b->counit);
}

namespace {

Matrix coordinate_map(const HomSpace& from, const HomSpace& to, const std::function<Matrix(const Matrix&)>& f,
                      const Ring& R) {
  Matrix out(to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    Matrix img = exactla::reduce(f(from.element(k)), R);
    auto c = to.coords(img);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) out.set(i, k, c[i]);
    // verify the image actually lies in the target hom-space
    if (!exactla::is_zero_in(to.combine(c) - img, R))
      throw InvariantError("adjunction: image is not a morphism of the expected kind");
  }
  return out;
}

}  // namespace

Adjunction adjunction_left(const Tetramodule& n, const Tetramodule& t) {
  require_same_base(n, t);
  if (!t.is_tetra()) throw PreconditionError("adjunction_left: second argument must be a tetramodule");
  const BialgPtr& b = t.base;
  const Ring& R = t.ring();
  Tetramodule N = forget_to_bicomodule(n);
  Tetramodule L = induced(b, N);
  Adjunction adj;
  adj.lhs = hom_space(N, forget_to_bicomodule(t));
  adj.rhs = hom_space(L, t);
  Matrix iota = induced_unit_slot(b, n.dim);
  Matrix IA = b->id();
  adj.forward = coordinate_map(adj.rhs, adj.lhs, [&](const Matrix& g) { return g * iota; }, R);
  adj.backward = coordinate_map(
      adj.lhs, adj.rhs, [&](const Matrix& h) { return t.ml() * kron(IA, t.mr()) * kron(kron(IA, h), IA); }, R);
  adj.round_trip_ok = exactla::is_zero_in(adj.forward * adj.backward - Matrix::identity(adj.lhs.dim()), R) &&
                      exactla::is_zero_in(adj.backward * adj.forward - Matrix::identity(adj.rhs.dim()), R);
  return adj;
}

Adjunction adjunction_right(const Tetramodule& t, const Tetramodule& m) {
  require_same_base(t, m);
  if (!t.is_tetra()) throw PreconditionError("adjunction_right: first argument must be a tetramodule");
  const BialgPtr& b = t.base;
  const Ring& R = t.ring();
  Tetramodule M = forget_to_bimodule(m);
  Tetramodule Rm = coinduced(b, M);
  Adjunction adj;
  adj.lhs = hom_space(forget_to_bimodule(t), M);
  adj.rhs = hom_space(t, Rm);
  Matrix pi = coinduced_counit_slot(b, m.dim);
  Matrix IA = b->id();
  Matrix spread = kron(IA, t.dr()) * t.dl();  // t -> t_{-1}⊗t_0⊗t_1
  adj.forward = coordinate_map(adj.rhs, adj.lhs, [&](const Matrix& g) { return pi * g; }, R);
  adj.backward =
      coordinate_map(adj.lhs, adj.rhs, [&](const Matrix& h) { return kron(kron(IA, h), IA) * spread; }, R);
  adj.round_trip_ok = exactla::is_zero_in(adj.forward * adj.backward - Matrix::identity(adj.lhs.dim()), R) &&
                      exactla::is_zero_in(adj.backward * adj.forward - Matrix::identity(adj.rhs.dim()), R);
  return adj;
}

TetraMap canonical_epi(const Tetramodule& m) {
  if (!m.is_tetra()) throw PreconditionError("canonical_epi: needs a tetramodule");
  Matrix IA = m.base->id();
  TetraMap f;
  f.source = share(induced(m.base, forget_to_bicomodule(m)));
  f.target = share(m);
  f.matrix = exactla::reduce(m.ml() * kron(IA, m.mr()), m.ring());
  return f;
}

TetraMap canonical_mono(const Tetramodule& m) {
  if (!m.is_tetra()) throw PreconditionError("canonical_mono: needs a tetramodule");
  Matrix IA = m.base->id();
  TetraMap f;
  f.source = share(m);
  f.target = share(coinduced(m.base, forget_to_bimodule(m)));
  f.matrix = exactla::reduce(kron(IA, m.dr()) * m.dl(), m.ring());
  return f;
}

FreenessWitness hopf_freeness_witness(const Tetramodule& m) {
  if (!m.base->has_antipode()) throw PreconditionError("hopf_freeness_witness: base has no antipode");
  const Ring& R = m.ring();
  FreenessWitness w;
  Matrix coinv_eq = m.dl() - kron(m.base->unit, Matrix::identity(m.dim));
  w.coinvariants = exactla::kernel_basis(coinv_eq, R);
  w.coinvariant_dim = w.coinvariants.cols();
  w.action = exactla::reduce(m.ml() * kron(m.base->id(), w.coinvariants), R);
  w.bijective = w.action.rows() == w.action.cols() && exactla::rank(w.action, R) == m.dim;
  if (!w.bijective) throw InvariantError("hopf_freeness_witness: action map A⊗coinvariants -> M is not bijective");
  return w;
}

}  // namespace hopfcoh::tetra
