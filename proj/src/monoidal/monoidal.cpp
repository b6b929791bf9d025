#include "hopfcoh/monoidal/monoidal.hpp"

#include <random>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::monoidal {

using exactla::kron;
using exactla::Rational;
using exactla::Ring;
using tetra::share;
using tetra::span_projector;

namespace {

TensorWitness trivial_witness(TensorKind kind, Tetramodule amb) {
  TensorWitness w;
  w.kind = kind;
  std::size_t n = amb.dim;
  w.sq = exactla::quotient_basis(n, Matrix(n, 0), amb.ring());
  w.result = amb;
  w.ambient = std::move(amb);
  w.to_result = Matrix::identity(n);
  w.from_result = Matrix::identity(n);
  w.relations = Matrix(n, 0);
  return w;
}

bool is_quotient(TensorKind k) { return k == TensorKind::Otimes1; }
bool is_subspace(TensorKind k) { return k == TensorKind::Otimes2; }

}  // namespace

TensorWitness box1_witness(const Tetramodule& m, const Tetramodule& n) {
  return trivial_witness(TensorKind::Box1, box1(m, n));
}

TensorWitness box2_witness(const Tetramodule& m, const Tetramodule& n) {
  return trivial_witness(TensorKind::Box2, box2(m, n));
}

TensorWitness otimes1(const Tetramodule& m, const Tetramodule& n) {
  tetra::require_same_base(m, n);
  const Ring& R = m.ring();
  TensorWitness w;
  w.kind = TensorKind::Otimes1;
  w.ambient = box1(m, n);
  w.relations = exactla::reduce(kron(m.mr(), Matrix::identity(n.dim)) - kron(Matrix::identity(m.dim), n.ml()), R);
  w.sq = exactla::quotient_basis(w.ambient.dim, w.relations, R);
  w.result = tetra::subquotient_module(w.ambient, w.sq, "(" + m.name + "⊗1" + n.name + ")");
  w.to_result = w.sq.projection;
  w.from_result = w.sq.section;
  return w;
}

TensorWitness otimes2(const Tetramodule& m, const Tetramodule& n) {
  tetra::require_same_base(m, n);
  const Ring& R = m.ring();
  TensorWitness w;
  w.kind = TensorKind::Otimes2;
  w.ambient = box2(m, n);
  Matrix eq = kron(m.dr(), Matrix::identity(n.dim)) - kron(Matrix::identity(m.dim), n.dl());
  w.sq = exactla::subspace_basis(w.ambient.dim, exactla::kernel_basis(eq, R), R);
  w.result = tetra::subquotient_module(w.ambient, w.sq, "(" + m.name + "⊗2" + n.name + ")");
  w.to_result = w.sq.projection;
  w.from_result = w.sq.section;
  w.relations = Matrix(w.ambient.dim, 0);
  return w;
}

Matrix tensor_maps(const TensorWitness& src, const TensorWitness& tgt, const Matrix& f, const Matrix& g) {
  const Ring& R = src.ambient.ring();
  Matrix fg = kron(f, g);
  if (fg.cols() != src.ambient.dim || fg.rows() != tgt.ambient.dim)
    throw InputError("tensor_maps: maps do not match the tensor factors");
  Matrix lifted = fg * src.from_result;  // lands in tgt.ambient
  if (is_quotient(src.kind) && src.relations.cols() &&
      !exactla::is_zero_in(tgt.to_result * (fg * src.relations), R))
    throw InvariantError("tensor_maps: f⊗g does not descend to the quotient");
  if (is_subspace(tgt.kind)) {
    Matrix off = lifted - span_projector(tgt.sq.sub) * lifted;
    if (!exactla::is_zero_in(off, R)) throw InvariantError("tensor_maps: f⊗g leaves the equalizer");
  }
  return exactla::reduce(tgt.to_result * lifted, R);
}

UnitIsos unit_isos(const Tetramodule& m) {
  const Ring& R = m.ring();
  Tetramodule A = tetra::tautological(m.base);
  const auto& B = *m.base;
  Matrix I = Matrix::identity(m.dim);
  UnitIsos u;
  u.a_m1 = otimes1(A, m);
  u.m_a1 = otimes1(m, A);
  u.a_m2 = otimes2(A, m);
  u.m_a2 = otimes2(m, A);
  Verdict& v = u.checks;
  v.add("left action kills relations", m.ml() * u.a_m1.relations, R);
  v.add("right action kills relations", m.mr() * u.m_a1.relations, R);
  u.lambda1 = exactla::reduce(m.ml() * u.a_m1.from_result, R);
  u.rho1 = exactla::reduce(m.mr() * u.m_a1.from_result, R);
  u.lambda1_inv = exactla::reduce(u.a_m1.to_result * kron(B.unit, I), R);
  u.rho1_inv = exactla::reduce(u.m_a1.to_result * kron(I, B.unit), R);
  Matrix dl = m.dl(), dr = m.dr();
  v.add("left coaction lands in the equalizer", dl - span_projector(u.a_m2.sq.sub) * dl, R);
  v.add("right coaction lands in the equalizer", dr - span_projector(u.m_a2.sq.sub) * dr, R);
  u.lambda2 = exactla::reduce(u.a_m2.to_result * dl, R);
  u.rho2 = exactla::reduce(u.m_a2.to_result * dr, R);
  u.lambda2_inv = exactla::reduce(kron(B.counit, I) * u.a_m2.from_result, R);
  u.rho2_inv = exactla::reduce(kron(I, B.counit) * u.m_a2.from_result, R);
  v.merge("lambda1", tetra::check_map(u.a_m1.result, m, u.lambda1));
  v.merge("rho1", tetra::check_map(u.m_a1.result, m, u.rho1));
  v.merge("lambda2", tetra::check_map(m, u.a_m2.result, u.lambda2));
  v.merge("rho2", tetra::check_map(m, u.m_a2.result, u.rho2));
  auto inverse_pair = [&](const std::string& name, const Matrix& f, const Matrix& g) {
    v.add(name + " then inverse", g * f - Matrix::identity(f.cols()), R);
    v.add(name + " inverse then map", f * g - Matrix::identity(f.rows()), R);
  };
  inverse_pair("lambda1", u.lambda1, u.lambda1_inv);
  inverse_pair("rho1", u.rho1, u.rho1_inv);
  inverse_pair("lambda2", u.lambda2, u.lambda2_inv);
  inverse_pair("rho2", u.rho2, u.rho2_inv);
  return u;
}

Associator associator1(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p) {
  const Ring& R = m.ring();
  Matrix Im = Matrix::identity(m.dim), Ip = Matrix::identity(p.dim);
  Associator a;
  a.inner_left = otimes1(m, n);
  a.outer_left = otimes1(a.inner_left.result, p);
  a.inner_right = otimes1(n, p);
  a.outer_right = otimes1(m, a.inner_right.result);
  // on M⊗N⊗P both sides are the quotient by all relations, so go through the raw triple
  Matrix to_right = a.outer_right.to_result * kron(Im, a.inner_right.to_result);
  Matrix to_left = a.outer_left.to_result * kron(a.inner_left.to_result, Ip);
  a.checks.add("forward kills inner relations", to_right * kron(a.inner_left.relations, Ip), R);
  a.checks.add("backward kills inner relations", to_left * kron(Im, a.inner_right.relations), R);
  a.forward = exactla::reduce(to_right * kron(a.inner_left.from_result, Ip) * a.outer_left.from_result, R);
  a.backward = exactla::reduce(to_left * kron(Im, a.inner_right.from_result) * a.outer_right.from_result, R);
  a.checks.add("forward then backward", a.backward * a.forward - Matrix::identity(a.outer_left.result.dim), R);
  a.checks.add("backward then forward", a.forward * a.backward - Matrix::identity(a.outer_right.result.dim), R);
  a.checks.merge("forward", tetra::check_map(a.outer_left.result, a.outer_right.result, a.forward));
  return a;
}

Associator associator2(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p) {
  const Ring& R = m.ring();
  Matrix Im = Matrix::identity(m.dim), Ip = Matrix::identity(p.dim);
  Associator a;
  a.inner_left = otimes2(m, n);
  a.outer_left = otimes2(a.inner_left.result, p);
  a.inner_right = otimes2(n, p);
  a.outer_right = otimes2(m, a.inner_right.result);
  // both sides are subspaces of M⊗N⊗P; compare them there
  Matrix emb_left = kron(a.inner_left.from_result, Ip) * a.outer_left.from_result;
  Matrix emb_right = kron(Im, a.inner_right.from_result) * a.outer_right.from_result;
  Matrix coord_right = a.outer_right.to_result * kron(Im, a.inner_right.to_result);
  Matrix coord_left = a.outer_left.to_result * kron(a.inner_left.to_result, Ip);
  a.forward = exactla::reduce(coord_right * emb_left, R);
  a.backward = exactla::reduce(coord_left * emb_right, R);
  a.checks.add("forward preserves the element", emb_right * a.forward - emb_left, R);
  a.checks.add("backward preserves the element", emb_left * a.backward - emb_right, R);
  a.checks.add("forward then backward", a.backward * a.forward - Matrix::identity(a.outer_left.result.dim), R);
  a.checks.add("backward then forward", a.forward * a.backward - Matrix::identity(a.outer_right.result.dim), R);
  a.checks.merge("forward", tetra::check_map(a.outer_left.result, a.outer_right.result, a.forward));
  return a;
}

TetraMap phi0(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p, const Tetramodule& q) {
  TetraMap f;
  f.source = share(box1(box2(m, n), box2(p, q)));
  f.target = share(box2(box1(m, p), box1(n, q)));
  f.matrix = exactla::slot_permutation({m.dim, n.dim, p.dim, q.dim}, {0, 2, 1, 3});
  return f;
}

Eta eta(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p, const Tetramodule& q) {
  const Ring& R = m.ring();
  Eta e;
  e.mn = otimes2(m, n);
  e.pq = otimes2(p, q);
  e.source = otimes1(e.mn.result, e.pq.result);
  e.mp = otimes1(m, p);
  e.nq = otimes1(n, q);
  e.target = otimes2(e.mp.result, e.nq.result);
  Matrix perm = exactla::slot_permutation({m.dim, n.dim, p.dim, q.dim}, {0, 2, 1, 3});
  // φ1 on (M⊗2N)⊠1(P⊗2Q): include, permute, project both ⊗1 factors
  Matrix f = exactla::reduce(kron(e.mp.to_result, e.nq.to_result) * perm * kron(e.mn.from_result, e.pq.from_result), R);
  e.checks.add("descent", f * e.source.relations, R);
  e.checks.add("corestriction", f - span_projector(e.target.sq.sub) * f, R);
  e.matrix = exactla::reduce(e.target.to_result * f * e.source.from_result, R);
  e.checks.merge("morphism", tetra::check_map(e.source.result, e.target.result, e.matrix));
  if (!e.checks.ok()) throw InvariantError("eta: " + e.checks.summary());
  return e;
}

Comparison comparison_maps(const Tetramodule& m, const Tetramodule& n) {
  Tetramodule A = tetra::tautological(m.base);
  const Ring& R = m.ring();
  UnitIsos um = unit_isos(m), un = unit_isos(n);
  Comparison c;
  c.m1n = otimes1(m, n);
  c.m2n = otimes2(m, n);
  c.n2m = otimes2(n, m);
  Eta e = eta(m, A, A, n);
  Matrix pre = tensor_maps(c.m1n, e.source, um.rho2, un.lambda2);
  Matrix post = tensor_maps(e.target, c.m2n, um.rho1, un.lambda1);
  c.phi = exactla::reduce(post * e.matrix * pre, R);
  Eta e2 = eta(A, m, n, A);
  Matrix pre2 = tensor_maps(c.m1n, e2.source, um.lambda2, un.rho2);
  Matrix post2 = tensor_maps(e2.target, c.n2m, un.lambda1, um.rho1);
  c.theta = exactla::reduce(post2 * e2.matrix * pre2, R);
  c.checks.merge("phi", tetra::check_map(c.m1n.result, c.m2n.result, c.phi));
  c.checks.merge("theta", tetra::check_map(c.m1n.result, c.n2m.result, c.theta));
  return c;
}

namespace {

struct Verifier {
  const std::vector<Tetramodule>& corpus;
  TwoFoldOptions opts;
  std::mt19937_64 rng;
  Verdict out;

  Eta get_eta(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p, const Tetramodule& q) {
    Eta e = eta(m, n, p, q);
    if (opts.corrupt_eta && e.matrix.rows() && e.matrix.cols()) e.matrix.add_to(0, 0, Rational(1));
    return e;
  }

  const Tetramodule& pick() {
    std::uniform_int_distribution<std::size_t> d(0, corpus.size() - 1);
    return corpus[d(rng)];
  }

  std::string tuple_name(const std::vector<const Tetramodule*>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i]->name;
    return s + ")";
  }

  void naturality(std::size_t idx) {
    std::vector<const Tetramodule*> src, tgt;
    std::vector<Matrix> f;
    for (int i = 0; i < 4; ++i) {
      src.push_back(&pick());
      tgt.push_back(&pick());
      auto h = tetra::hom_space(*src.back(), *tgt.back());
      f.push_back(tetra::random_element(h, rng, src.back()->ring()));
    }
    const Ring& R = src[0]->ring();
    Eta e = get_eta(*src[0], *src[1], *src[2], *src[3]);
    Eta e2 = get_eta(*tgt[0], *tgt[1], *tgt[2], *tgt[3]);
    Matrix before = tensor_maps(e.source, e2.source, tensor_maps(e.mn, e2.mn, f[0], f[1]),
                                tensor_maps(e.pq, e2.pq, f[2], f[3]));
    Matrix after = tensor_maps(e.target, e2.target, tensor_maps(e.mp, e2.mp, f[0], f[2]),
                               tensor_maps(e.nq, e2.nq, f[1], f[3]));
    out.add("naturality #" + std::to_string(idx) + " " + tuple_name(src) + "->" + tuple_name(tgt),
            e2.matrix * before - after * e.matrix, R);
  }

  void unit_conditions(std::size_t idx) {
    const Tetramodule& m = pick();
    const Tetramodule& n = pick();
    const Ring& R = m.ring();
    Tetramodule A = tetra::tautological(m.base);
    UnitIsos ua = unit_isos(A), um = unit_isos(m), un = unit_isos(n);
    std::string tag = " #" + std::to_string(idx) + " (" + m.name + "," + n.name + ")";
    Matrix e_unit = ua.lambda2 * A.base->unit;  // Δ(1) in A⊗2A
    {
      Eta e = get_eta(m, n, A, A);  // η_{M,N,℧,℧} = id of M⊗2N
      Matrix Ix = Matrix::identity(e.mn.result.dim);
      Matrix js = e.source.to_result * kron(Ix, e_unit);
      Matrix jt = tensor_maps(e.mn, e.target, um.rho1_inv, un.rho1_inv);
      out.add("internal unit right" + tag, e.matrix * js - jt, R);
    }
    {
      Eta e = get_eta(A, A, m, n);  // η_{℧,℧,M,N} = id of M⊗2N
      Matrix Ix = Matrix::identity(e.pq.result.dim);
      Matrix js = e.source.to_result * kron(e_unit, Ix);
      Matrix jt = tensor_maps(e.pq, e.target, um.lambda1_inv, un.lambda1_inv);
      out.add("internal unit left" + tag, e.matrix * js - jt, R);
    }
    TensorWitness z = otimes1(m, n);
    UnitIsos uz = unit_isos(z.result);
    {
      Eta e = get_eta(m, A, n, A);  // η_{M,℧,N,℧} = id of M⊗1N
      Matrix js = tensor_maps(z, e.source, um.rho2, un.rho2);
      Matrix jt = tensor_maps(uz.m_a2, e.target, Matrix::identity(z.result.dim), ua.lambda1_inv) * uz.rho2;
      out.add("external unit right" + tag, e.matrix * js - jt, R);
    }
    {
      Eta e = get_eta(A, m, A, n);  // η_{℧,M,℧,N} = id of M⊗1N
      Matrix js = tensor_maps(z, e.source, um.lambda2, un.lambda2);
      Matrix jt = tensor_maps(uz.a_m2, e.target, ua.lambda1_inv, Matrix::identity(z.result.dim)) * uz.lambda2;
      out.add("external unit left" + tag, e.matrix * js - jt, R);
    }
  }

  void internal_associativity(std::size_t idx) {
    const Tetramodule &u = pick(), &v = pick(), &w = pick(), &x = pick(), &y = pick(), &z = pick();
    const Ring& R = u.ring();
    std::string tag = " #" + std::to_string(idx) + " " + tuple_name({&u, &v, &w, &x, &y, &z});
    Eta e1 = get_eta(u, v, w, x);
    TensorWitness yz = otimes2(y, z);
    TensorWitness top_src = otimes1(e1.source.result, yz.result);
    TensorWitness top_tgt = otimes1(e1.target.result, yz.result);
    Matrix Iyz = Matrix::identity(yz.result.dim);
    Matrix top = tensor_maps(top_src, top_tgt, e1.matrix, Iyz);
    Eta e2 = get_eta(e1.mp.result, e1.nq.result, y, z);
    Matrix right_path = e2.matrix * top;

    Associator a = associator1(e1.mn.result, e1.pq.result, yz.result);
    Eta e3 = get_eta(w, x, y, z);
    TensorWitness mid_tgt = otimes1(e1.mn.result, e3.target.result);
    Matrix mid = tensor_maps(a.outer_right, mid_tgt, Matrix::identity(e1.mn.result.dim), e3.matrix);
    Eta e4 = get_eta(u, v, e3.mp.result, e3.nq.result);
    Associator au = associator1(u, w, y), av = associator1(v, x, z);
    Matrix fix = tensor_maps(e4.target, e2.target, au.backward, av.backward);
    Matrix left_path = fix * e4.matrix * mid * a.forward;
    out.add("internal associativity" + tag, right_path - left_path, R);
  }

  void external_associativity(std::size_t idx) {
    const Tetramodule &u = pick(), &v = pick(), &w = pick(), &x = pick(), &y = pick(), &z = pick();
    const Ring& R = u.ring();
    std::string tag = " #" + std::to_string(idx) + " " + tuple_name({&u, &v, &w, &x, &y, &z});
    TensorWitness uv = otimes2(u, v), xy = otimes2(x, y);
    Eta e1 = get_eta(uv.result, w, xy.result, z);  // ((UV)W)⊗1((XY)Z) -> ((UV)⊗1(XY))⊗2(W⊗1Z)
    Eta e2 = get_eta(u, v, x, y);
    Matrix right_path = tensor_maps(e1.target, otimes2(e2.target.result, e1.nq.result), e2.matrix,
                                    Matrix::identity(e1.nq.result.dim)) *
                        e1.matrix;

    Associator a1 = associator2(u, v, w), a2 = associator2(x, y, z);
    TensorWitness src_right = otimes1(a1.outer_right.result, a2.outer_right.result);
    Matrix assoc = tensor_maps(e1.source, src_right, a1.forward, a2.forward);
    Eta e3 = get_eta(u, a1.inner_right.result, x, a2.inner_right.result);
    Eta e4 = get_eta(v, w, y, z);
    TensorWitness after4 = otimes2(e3.mp.result, e4.target.result);
    Matrix step = tensor_maps(e3.target, after4, Matrix::identity(e3.mp.result.dim), e4.matrix);
    Associator back = associator2(e3.mp.result, e4.mp.result, e4.nq.result);
    Matrix left_path = back.backward * step * e3.matrix * assoc;
    out.add("external associativity" + tag, right_path - left_path, R);
  }
};

}  // namespace

Verdict verify_two_fold(const std::vector<Tetramodule>& corpus, const TwoFoldOptions& opts) {
  if (corpus.empty()) throw InputError("verify_two_fold: empty corpus");
  for (const auto& m : corpus) {
    tetra::require_same_base(corpus[0], m);
    if (!m.is_tetra()) throw InputError("verify_two_fold: corpus members must be tetramodules");
  }
  Verifier ver{corpus, opts, std::mt19937_64(opts.seed), {}};
  auto guarded = [&](const std::string& what, std::size_t s, void (Verifier::*fn)(std::size_t)) {
    try {
      (ver.*fn)(s);
    } catch (const std::exception& ex) {
      // a corrupted map may fail to descend; that is a failure of the diagram, not of the run
      ver.out.add_flag(what + " #" + std::to_string(s), false, ex.what());
    }
  };
  for (std::size_t s = 0; s < opts.sample; ++s) {
    guarded("naturality", s, &Verifier::naturality);
    guarded("unit conditions", s, &Verifier::unit_conditions);
    guarded("internal associativity", s, &Verifier::internal_associativity);
    guarded("external associativity", s, &Verifier::external_associativity);
  }
  return ver.out;
}

}  // namespace hopfcoh::monoidal
