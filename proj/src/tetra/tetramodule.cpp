#include "hopfcoh/tetra/tetramodule.hpp"

#include "hopfcoh/errors.hpp"

namespace hopfcoh::tetra {

using exactla::kron;
using exactla::slot_permutation;

BialgPtr share(FinBialgebra b) { return std::make_shared<const FinBialgebra>(std::move(b)); }
TetraPtr share(Tetramodule m) { return std::make_shared<const Tetramodule>(std::move(m)); }

Tetramodule::Kind Tetramodule::kind() const {
  if (is_tetra()) return Kind::Tetra;
  if (has_actions() && !delta_left && !delta_right) return Kind::Bimodule;
  if (has_coactions() && !m_left && !m_right) return Kind::Bicomodule;
  return Kind::Partial;
}

namespace {
const Matrix& need(const std::optional<Matrix>& m, const char* what) {
  if (!m) throw PreconditionError(std::string("tetramodule has no ") + what);
  return *m;
}
}  // namespace

const Matrix& Tetramodule::ml() const { return need(m_left, "left action"); }
const Matrix& Tetramodule::mr() const { return need(m_right, "right action"); }
const Matrix& Tetramodule::dl() const { return need(delta_left, "left coaction"); }
const Matrix& Tetramodule::dr() const { return need(delta_right, "right coaction"); }

bool same_base(const Tetramodule& a, const Tetramodule& b) {
  if (a.base == b.base) return true;
  if (!a.base || !b.base) return false;
  const auto& x = *a.base;
  const auto& y = *b.base;
  return x.ring == y.ring && x.dim == y.dim && x.mult == y.mult && x.comult == y.comult && x.unit == y.unit &&
         x.counit == y.counit;
}

void require_same_base(const Tetramodule& a, const Tetramodule& b) {
  if (!same_base(a, b)) throw InputError("tetramodules over different bialgebras");
}

namespace {
void check_shapes(const Tetramodule& m) {
  if (!m.base) throw InputError("tetramodule without base bialgebra");
  std::size_t d = m.base_dim(), n = m.dim;
  auto shape = [&](const std::optional<Matrix>& x, std::size_t r, std::size_t c, const char* what) {
    if (x && (x->rows() != r || x->cols() != c)) throw InputError(std::string(what) + " has the wrong shape");
  };
  shape(m.m_left, n, d * n, "left action");
  shape(m.m_right, n, n * d, "right action");
  shape(m.delta_left, d * n, n, "left coaction");
  shape(m.delta_right, n * d, n, "right coaction");
}
}  // namespace

Verdict check_bimodule(const Tetramodule& m) {
  check_shapes(m);
  Verdict v;
  const auto& A = *m.base;
  const Ring& R = A.ring;
  Matrix I = Matrix::identity(m.dim), IA = A.id();
  if (m.m_left) {
    const Matrix& l = *m.m_left;
    v.add("left action associativity", l * kron(A.mult, I) - l * kron(IA, l), R);
    v.add("left unit acts trivially", l * kron(A.unit, I) - I, R);
  }
  if (m.m_right) {
    const Matrix& r = *m.m_right;
    v.add("right action associativity", r * kron(r, IA) - r * kron(I, A.mult), R);
    v.add("right unit acts trivially", r * kron(I, A.unit) - I, R);
  }
  if (m.m_left && m.m_right)
    v.add("actions commute", *m.m_right * kron(*m.m_left, IA) - *m.m_left * kron(IA, *m.m_right), R);
  return v;
}

Verdict check_bicomodule(const Tetramodule& m) {
  check_shapes(m);
  Verdict v;
  const auto& A = *m.base;
  const Ring& R = A.ring;
  Matrix I = Matrix::identity(m.dim), IA = A.id();
  if (m.delta_left) {
    const Matrix& l = *m.delta_left;
    v.add("left coaction coassociativity", kron(A.comult, I) * l - kron(IA, l) * l, R);
    v.add("left counit law", kron(A.counit, I) * l - I, R);
  }
  if (m.delta_right) {
    const Matrix& r = *m.delta_right;
    v.add("right coaction coassociativity", kron(r, IA) * r - kron(I, A.comult) * r, R);
    v.add("right counit law", kron(I, A.counit) * r - I, R);
  }
  if (m.delta_left && m.delta_right)
    v.add("coactions commute", kron(*m.delta_left, IA) * *m.delta_right - kron(IA, *m.delta_right) * *m.delta_left,
          R);
  return v;
}

Verdict check_compatibilities(const Tetramodule& m) {
  check_shapes(m);
  Verdict v;
  const auto& A = *m.base;
  const Ring& R = A.ring;
  std::size_t d = A.dim, n = m.dim;
  const std::vector<std::size_t> mid = {0, 2, 1, 3};
  if (m.m_left && m.delta_left)  // Δ_ℓ(am) = a1 m_{-1} ⊗ a2 m_0
    v.add("left coaction of left action",
          m.dl() * m.ml() - kron(A.mult, m.ml()) * slot_permutation({d, d, d, n}, mid) * kron(A.comult, m.dl()), R);
  if (m.m_right && m.delta_left)  // Δ_ℓ(ma) = m_{-1} a1 ⊗ m_0 a2
    v.add("left coaction of right action",
          m.dl() * m.mr() - kron(A.mult, m.mr()) * slot_permutation({d, n, d, d}, mid) * kron(m.dl(), A.comult), R);
  if (m.m_left && m.delta_right)  // Δ_r(am) = a1 m_0 ⊗ a2 m_1
    v.add("right coaction of left action",
          m.dr() * m.ml() - kron(m.ml(), A.mult) * slot_permutation({d, d, n, d}, mid) * kron(A.comult, m.dr()), R);
  if (m.m_right && m.delta_right)  // Δ_r(ma) = m_0 a1 ⊗ m_1 a2
    v.add("right coaction of right action",
          m.dr() * m.mr() - kron(m.mr(), A.mult) * slot_permutation({n, d, d, d}, mid) * kron(m.dr(), A.comult), R);
  return v;
}

Verdict check_tetramodule(const Tetramodule& m) {
  Verdict v;
  v.merge("bimodule", check_bimodule(m));
  v.merge("bicomodule", check_bicomodule(m));
  v.merge("compatibility", check_compatibilities(m));
  return v;
}

Verdict check_map(const Tetramodule& s, const Tetramodule& t, const Matrix& f) {
  require_same_base(s, t);
  if (f.rows() != t.dim || f.cols() != s.dim) throw InputError("map has the wrong shape");
  Verdict v;
  const Ring& R = s.ring();
  Matrix IA = s.base->id();
  if (s.m_left && t.m_left) v.add("left action", f * s.ml() - t.ml() * kron(IA, f), R);
  if (s.m_right && t.m_right) v.add("right action", f * s.mr() - t.mr() * kron(f, IA), R);
  if (s.delta_left && t.delta_left) v.add("left coaction", t.dl() * f - kron(IA, f) * s.dl(), R);
  if (s.delta_right && t.delta_right) v.add("right coaction", t.dr() * f - kron(f, IA) * s.dr(), R);
  return v;
}

Verdict check_map(const TetraMap& f) { return check_map(*f.source, *f.target, f.matrix); }

Tetramodule tautological(const BialgPtr& b) {
  Tetramodule m;
  m.base = b;
  m.dim = b->dim;
  m.name = "A";
  m.m_left = b->mult;
  m.m_right = b->mult;
  m.delta_left = b->comult;
  m.delta_right = b->comult;
  return m;
}

Tetramodule trivial_bimodule(const BialgPtr& b) {
  Tetramodule m;
  m.base = b;
  m.dim = 1;
  m.name = "k";
  m.m_left = b->counit;
  m.m_right = b->counit;
  return m;
}

Tetramodule trivial_bicomodule(const BialgPtr& b) {
  Tetramodule m;
  m.base = b;
  m.dim = 1;
  m.name = "k";
  m.delta_left = b->unit;
  m.delta_right = b->unit;
  return m;
}

Tetramodule forget_to_bicomodule(const Tetramodule& m) {
  Tetramodule r = m;
  r.m_left.reset();
  r.m_right.reset();
  r.name = "F1(" + m.name + ")";
  return r;
}

Tetramodule forget_to_bimodule(const Tetramodule& m) {
  Tetramodule r = m;
  r.delta_left.reset();
  r.delta_right.reset();
  r.name = "F2(" + m.name + ")";
  return r;
}

Tetramodule transport(const Tetramodule& m, const Matrix& p) {
  if (p.rows() != m.dim || p.cols() != m.dim) throw InputError("transport: change of basis has the wrong shape");
  const Ring& R = m.ring();
  Matrix q = exactla::inverse(p, R);
  Matrix IA = m.base->id();
  Tetramodule r = m;
  if (m.m_left) r.m_left = exactla::reduce(p * *m.m_left * kron(IA, q), R);
  if (m.m_right) r.m_right = exactla::reduce(p * *m.m_right * kron(q, IA), R);
  if (m.delta_left) r.delta_left = exactla::reduce(kron(IA, p) * *m.delta_left * q, R);
  if (m.delta_right) r.delta_right = exactla::reduce(kron(p, IA) * *m.delta_right * q, R);
  return r;
}

DirectSum direct_sum(const std::vector<Tetramodule>& parts) {
  if (parts.empty()) throw InputError("direct_sum of no modules");
  for (const auto& p : parts) require_same_base(parts[0], p);
  const BialgPtr& base = parts[0].base;
  std::size_t d = base->dim;
  DirectSum out;
  Tetramodule& s = out.sum;
  s.base = base;
  std::vector<std::size_t> off;
  for (const auto& p : parts) {
    off.push_back(s.dim);
    s.dim += p.dim;
    s.name += (s.name.empty() ? "" : "⊕") + p.name;
  }
  std::size_t n = s.dim;
  bool ml = true, mr = true, dl = true, dr = true;
  for (const auto& p : parts) {
    ml = ml && p.m_left.has_value();
    mr = mr && p.m_right.has_value();
    dl = dl && p.delta_left.has_value();
    dr = dr && p.delta_right.has_value();
  }
  Matrix L(n, d * n), Rr(n, n * d), DL(d * n, n), DR(n * d, n);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    std::size_t o = off[k], pn = p.dim;
    Matrix inj(n, pn), proj(pn, n);
    for (std::size_t i = 0; i < pn; ++i) {
      inj.set(o + i, i, exactla::Rational(1));
      proj.set(i, o + i, exactla::Rational(1));
    }
    out.injections.push_back(inj);
    out.projections.push_back(proj);
    // A⊗P at (a, i) sits at (a, o+i) in A⊗S; P⊗A at (i, a) sits at (o+i, a)
    if (ml)
      for (std::size_t r = 0; r < pn; ++r)
        for (const auto& [c, val] : p.ml().row(r)) L.set(o + r, (c / pn) * n + o + c % pn, val);
    if (mr)
      for (std::size_t r = 0; r < pn; ++r)
        for (const auto& [c, val] : p.mr().row(r)) Rr.set(o + r, (o + c / d) * d + c % d, val);
    if (dl)
      for (std::size_t r = 0; r < d * pn; ++r)
        for (const auto& [c, val] : p.dl().row(r)) DL.set((r / pn) * n + o + r % pn, o + c, val);
    if (dr)
      for (std::size_t r = 0; r < pn * d; ++r)
        for (const auto& [c, val] : p.dr().row(r)) DR.set((o + r / d) * d + r % d, o + c, val);
  }
  if (ml) s.m_left = L;
  if (mr) s.m_right = Rr;
  if (dl) s.delta_left = DL;
  if (dr) s.delta_right = DR;
  return out;
}

Matrix span_projector(const exactla::Echelon& e) {
  // B * Sel where B = echelon rows as columns and Sel picks the pivot coordinates
  Matrix sel(e.rank(), e.cols);
  for (std::size_t r = 0; r < e.rank(); ++r) sel.set(r, e.pivots[r], exactla::Rational(1));
  return e.basis_columns() * sel;
}

Tetramodule subquotient_module(const Tetramodule& m, const exactla::SubQuotient& sq, const std::string& name) {
  const Ring& R = m.ring();
  std::size_t n = m.dim;
  Matrix IA = m.base->id(), I = Matrix::identity(n);
  Matrix Bs = sq.sub.basis_columns(), Br = sq.rel.basis_columns();
  Matrix Ps = I - span_projector(sq.sub), Pr = I - span_projector(sq.rel);
  auto require = [&](const Matrix& residual, const std::string& what) {
    if (!exactla::is_zero_in(residual, R)) throw InvariantError("subquotient: " + what + " does not descend");
  };
  Tetramodule q;
  q.base = m.base;
  q.dim = sq.dim;
  q.name = name.empty() ? "subquotient(" + m.name + ")" : name;
  const Matrix& S = sq.section;
  const Matrix& P = sq.projection;
  if (m.m_left) {
    require(Ps * m.ml() * kron(IA, Bs), "left action on sub");
    if (sq.rel.rank()) require(Pr * m.ml() * kron(IA, Br), "left action on relations");
    q.m_left = exactla::reduce(P * m.ml() * kron(IA, S), R);
  }
  if (m.m_right) {
    require(Ps * m.mr() * kron(Bs, IA), "right action on sub");
    if (sq.rel.rank()) require(Pr * m.mr() * kron(Br, IA), "right action on relations");
    q.m_right = exactla::reduce(P * m.mr() * kron(S, IA), R);
  }
  if (m.delta_left) {
    require(kron(IA, Ps) * m.dl() * Bs, "left coaction on sub");
    if (sq.rel.rank()) require(kron(IA, Pr) * m.dl() * Br, "left coaction on relations");
    q.delta_left = exactla::reduce(kron(IA, P) * m.dl() * S, R);
  }
  if (m.delta_right) {
    require(kron(Ps, IA) * m.dr() * Bs, "right coaction on sub");
    if (sq.rel.rank()) require(kron(Pr, IA) * m.dr() * Br, "right coaction on relations");
    q.delta_right = exactla::reduce(kron(P, IA) * m.dr() * S, R);
  }
  return q;
}

}  // namespace hopfcoh::tetra
