#include "hopfcoh/extcat/schwede.hpp"

#include <algorithm>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::extcat {

using exactla::kron;

namespace {

int sgn(std::size_t e) { return e % 2 ? -1 : 1; }

Matrix signed_(const Matrix& m, int s) { return s < 0 ? -m : m; }

Matrix sub_block(const Matrix& m, const std::vector<std::size_t>& ro, std::size_t r, const std::vector<std::size_t>& co,
                 std::size_t c) {
  return m.block(ro[r], co[c], ro[r + 1] - ro[r], co[c + 1] - co[c]);
}

std::vector<std::size_t> witness_offsets(const std::vector<TensorWitness>& ws) {
  std::vector<std::size_t> o{0};
  for (const auto& w : ws) o.push_back(o.back() + w.result.dim);
  return o;
}

// offsets of position s in the extension produced by a Schwede tensor
std::vector<std::size_t> ext_offsets(const SchwedeTensor& t, std::size_t s) { return t.ext->offsets(s); }

void require_product(const ExtensionComplex& e, Product p) {
  if (e.category == Category::Bimodules && p != Product::One)
    throw InputError("bimodule extensions have a single tensor product");
}

}  // namespace

TensorWitness tensor_witness(const Tetramodule& x, const Tetramodule& y, Product p) {
  return p == Product::One ? monoidal::otimes1(x, y) : monoidal::otimes2(x, y);
}

Matrix left_unit(const TensorWitness& a_x, const Tetramodule& x, Product p) {
  Matrix I = Matrix::identity(x.dim);
  const auto& B = *x.base;
  Matrix m = p == Product::One ? x.ml() * a_x.from_result : kron(B.counit, I) * a_x.from_result;
  return exactla::reduce(m, x.ring());
}

Matrix left_unit_inv(const TensorWitness& a_x, const Tetramodule& x, Product p) {
  Matrix I = Matrix::identity(x.dim);
  const auto& B = *x.base;
  Matrix m = p == Product::One ? a_x.to_result * kron(B.unit, I) : a_x.to_result * x.dl();
  return exactla::reduce(m, x.ring());
}

Matrix right_unit(const TensorWitness& x_a, const Tetramodule& x, Product p) {
  Matrix I = Matrix::identity(x.dim);
  const auto& B = *x.base;
  Matrix m = p == Product::One ? x.mr() * x_a.from_result : kron(I, B.counit) * x_a.from_result;
  return exactla::reduce(m, x.ring());
}

Matrix right_unit_inv(const TensorWitness& x_a, const Tetramodule& x, Product p) {
  Matrix I = Matrix::identity(x.dim);
  const auto& B = *x.base;
  Matrix m = p == Product::One ? x_a.to_result * kron(I, B.unit) : x_a.to_result * x.dr();
  return exactla::reduce(m, x.ring());
}

std::size_t SchwedeTensor::find(std::size_t s, const BlockRef& r) const {
  const auto& row = table.at(s);
  auto it = std::find(row.begin(), row.end(), r);
  if (it == row.end()) throw InvariantError("SchwedeTensor: missing block");
  return static_cast<std::size_t>(it - row.begin());
}

SchwedeTensor schwede_tensor(const ExtPtr& e, const ExtPtr& f, Product p, int extra_last_sign) {
  const auto& E = *e;
  const auto& F = *f;
  if (E.category != F.category || !tetra::same_base(E.unit, F.unit)) throw InputError("schwede_tensor: base mismatch");
  require_product(E, p);
  if (E.category == Category::Tetramodules && !E.unit.base->has_antipode())
    throw PreconditionError("schwede_tensor: tetramodule extensions need a Hopf base");
  const Ring& R = E.ring();
  std::size_t k = E.degree(), l = F.degree();
  SchwedeTensor t;
  t.left = e;
  t.right = f;
  t.product = p;
  t.extra_last_sign = extra_last_sign;
  for (std::size_t s = 0; s <= k + l; ++s) {
    t.table.emplace_back();
    t.witness.emplace_back();
    for (std::size_t a = s > l ? s - l : 0; a <= std::min(k, s); ++a) {
      std::size_t b = s - a;
      for (std::size_t i = 0; i < E.blocks[a].size(); ++i)
        for (std::size_t j = 0; j < F.blocks[b].size(); ++j) {
          t.table.back().push_back({a, i, b, j});
          t.witness.back().push_back(tensor_witness(E.blocks[a][i], F.blocks[b][j], p));
        }
    }
  }
  const Tetramodule& A = E.unit;
  const TensorWitness& waa = t.witness[0][0];
  ExtensionComplex out;
  out.category = E.category;
  out.unit = A;
  out.name = E.name + "⊗" + (p == Product::One ? "1" : "2") + F.name;
  if (k + l == 0) {
    out.blocks = {{A}, {A}};
    Matrix only = left_unit(waa, A, p) * monoidal::tensor_maps(waa, waa, E.maps[0], F.maps[0]) *
                  left_unit_inv(waa, A, p);
    out.maps = {exactla::reduce(signed_(only, extra_last_sign), R)};
    t.ext = share(std::move(out));
    return t;
  }
  // total differential T_s -> T_{s+1}
  std::vector<Matrix> D;
  for (std::size_t s = 0; s < k + l; ++s) {
    auto so = witness_offsets(t.witness[s]), to = witness_offsets(t.witness[s + 1]);
    Matrix d(to.back(), so.back());
    for (std::size_t x = 0; x < t.table[s].size(); ++x) {
      const auto& r = t.table[s][x];
      const auto& w = t.witness[s][x];
      if (r.a < k) {
        auto eo = E.offsets(r.a + 1), ei = E.offsets(r.a);
        for (std::size_t i2 = 0; i2 < E.blocks[r.a + 1].size(); ++i2) {
          Matrix fe = sub_block(E.maps[r.a], eo, i2, ei, r.i);
          if (fe.is_zero()) continue;
          std::size_t y = t.find(s + 1, {r.a + 1, i2, r.b, r.j});
          Matrix g = Matrix::identity(F.blocks[r.b][r.j].dim);
          d.add_block(to[y], so[x], monoidal::tensor_maps(w, t.witness[s + 1][y], fe, g));
        }
      }
      if (r.b < l) {
        auto fo = F.offsets(r.b + 1), fi = F.offsets(r.b);
        for (std::size_t j2 = 0; j2 < F.blocks[r.b + 1].size(); ++j2) {
          Matrix ff = sub_block(F.maps[r.b], fo, j2, fi, r.j);
          if (ff.is_zero()) continue;
          std::size_t y = t.find(s + 1, {r.a, r.i, r.b + 1, j2});
          Matrix g = Matrix::identity(E.blocks[r.a][r.i].dim);
          d.add_block(to[y], so[x], signed_(monoidal::tensor_maps(w, t.witness[s + 1][y], g, ff), sgn(r.a)));
        }
      }
    }
    D.push_back(exactla::reduce(d, R));
  }
  out.blocks.push_back({A});
  for (std::size_t s = 1; s <= k + l; ++s) {
    out.blocks.emplace_back();
    for (const auto& w : t.witness[s]) out.blocks.back().push_back(w.result);
  }
  out.blocks.push_back({A});
  out.maps.push_back(exactla::reduce(D[0] * left_unit_inv(waa, A, p), R));
  for (std::size_t s = 1; s < k + l; ++s) out.maps.push_back(D[s]);
  {
    std::size_t s = k + l;
    auto so = witness_offsets(t.witness[s]);
    auto eo = E.offsets(k), fo = F.offsets(l);
    Matrix u = left_unit(waa, A, p);
    Matrix last(A.dim, so.back());
    for (std::size_t x = 0; x < t.table[s].size(); ++x) {
      const auto& r = t.table[s][x];
      Matrix pe = E.last_map().block(0, eo[r.i], A.dim, eo[r.i + 1] - eo[r.i]);
      Matrix pf = F.last_map().block(0, fo[r.j], A.dim, fo[r.j + 1] - fo[r.j]);
      last.add_block(0, so[x], u * monoidal::tensor_maps(t.witness[s][x], waa, pe, pf));
    }
    out.maps.push_back(exactla::reduce(signed_(last, sgn(k * l) * extra_last_sign), R));
  }
  t.ext = share(std::move(out));
  return t;
}

ExtensionMorphism schwede_projection_left(const SchwedeTensor& t) {
  const auto& E = *t.left;
  const auto& F = *t.right;
  const Ring& R = E.ring();
  std::size_t k = E.degree(), l = F.degree();
  auto target = yoneda_splice(E, F);
  if (t.extra_last_sign < 0) target = negate_map(target, target.maps.size() - 1);
  ExtensionMorphism m;
  m.source = t.ext;
  m.target = share(std::move(target));
  const Tetramodule& A = E.unit;
  m.components.push_back(Matrix::identity(A.dim));
  for (std::size_t s = 1; s <= k + l; ++s) {
    auto so = ext_offsets(t, s), to = m.target->offsets(s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < t.table[s].size(); ++x) {
      const auto& r = t.table[s][x];
      const auto& w = t.witness[s][x];
      if (s <= k) {
        if (r.b != 0) continue;
        c.add_block(to[r.i], so[x], right_unit(w, E.blocks[s][r.i], t.product));
      } else {
        if (r.a != k) continue;
        const Tetramodule& Y = F.blocks[r.b][r.j];
        auto eo = E.offsets(k);
        Matrix pe = E.last_map().block(0, eo[r.i], A.dim, eo[r.i + 1] - eo[r.i]);
        auto way = tensor_witness(A, Y, t.product);
        Matrix blk = left_unit(way, Y, t.product) *
                     monoidal::tensor_maps(w, way, pe, Matrix::identity(Y.dim));
        c.add_block(to[r.j], so[x], signed_(blk, sgn(k * (s - k))));
      }
    }
    m.components.push_back(exactla::reduce(c, R));
  }
  m.components.push_back(Matrix::identity(A.dim));
  return m;
}

ExtensionMorphism schwede_projection_right(const SchwedeTensor& t) {
  const auto& E = *t.left;
  const auto& F = *t.right;
  const Ring& R = E.ring();
  std::size_t k = E.degree(), l = F.degree();
  auto target = yoneda_splice(F, E, sgn(k * l));
  if (t.extra_last_sign < 0) target = negate_map(target, target.maps.size() - 1);
  ExtensionMorphism m;
  m.source = t.ext;
  m.target = share(std::move(target));
  const Tetramodule& A = E.unit;
  m.components.push_back(Matrix::identity(A.dim));
  for (std::size_t s = 1; s <= k + l; ++s) {
    auto so = ext_offsets(t, s), to = m.target->offsets(s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < t.table[s].size(); ++x) {
      const auto& r = t.table[s][x];
      const auto& w = t.witness[s][x];
      if (s <= l) {
        if (r.a != 0) continue;
        c.add_block(to[r.j], so[x], left_unit(w, F.blocks[s][r.j], t.product));
      } else {
        if (r.b != l) continue;
        const Tetramodule& X = E.blocks[r.a][r.i];
        auto fo = F.offsets(l);
        Matrix pf = F.last_map().block(0, fo[r.j], A.dim, fo[r.j + 1] - fo[r.j]);
        auto wxa = tensor_witness(X, A, t.product);
        Matrix blk = right_unit(wxa, X, t.product) *
                     monoidal::tensor_maps(w, wxa, Matrix::identity(X.dim), pf);
        c.add_block(to[r.i], so[x], signed_(blk, sgn(k * l)));
      }
    }
    m.components.push_back(exactla::reduce(c, R));
  }
  m.components.push_back(Matrix::identity(A.dim));
  return m;
}

ExtensionMorphism tensor_morphisms(const SchwedeTensor& src, const SchwedeTensor& tgt, const ExtensionMorphism& f,
                                   const ExtensionMorphism& g) {
  if (!same_complex(*src.left, *f.source) || !same_complex(*src.right, *g.source) ||
      !same_complex(*tgt.left, *f.target) || !same_complex(*tgt.right, *g.target))
    throw PreconditionError("tensor_morphisms: factors do not match");
  const Ring& R = src.ext->ring();
  std::size_t P = src.ext->positions();
  ExtensionMorphism m;
  m.source = src.ext;
  m.target = tgt.ext;
  std::size_t a_dim = src.ext->unit.dim;
  m.components.push_back(Matrix::identity(a_dim));
  for (std::size_t s = 1; s + 1 < P; ++s) {
    auto so = ext_offsets(src, s), to = ext_offsets(tgt, s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < src.table[s].size(); ++x) {
      const auto& r = src.table[s][x];
      auto fso = f.source->offsets(r.a), fto = f.target->offsets(r.a);
      auto gso = g.source->offsets(r.b), gto = g.target->offsets(r.b);
      for (std::size_t i2 = 0; i2 < f.target->blocks[r.a].size(); ++i2) {
        Matrix fa = sub_block(f.components[r.a], fto, i2, fso, r.i);
        if (fa.is_zero()) continue;
        for (std::size_t j2 = 0; j2 < g.target->blocks[r.b].size(); ++j2) {
          Matrix gb = sub_block(g.components[r.b], gto, j2, gso, r.j);
          if (gb.is_zero()) continue;
          std::size_t y = tgt.find(s, {r.a, i2, r.b, j2});
          c.add_block(to[y], so[x], monoidal::tensor_maps(src.witness[s][x], tgt.witness[s][y], fa, gb));
        }
      }
    }
    m.components.push_back(exactla::reduce(c, R));
  }
  m.components.push_back(Matrix::identity(a_dim));
  return m;
}

ExtAssociator associator_ext(const ExtPtr& e, const ExtPtr& f, const ExtPtr& g, Product p) {
  ExtAssociator as;
  as.ef = schwede_tensor(e, f, p);
  as.left = schwede_tensor(as.ef.ext, g, p);
  as.fg = schwede_tensor(f, g, p);
  as.right = schwede_tensor(e, as.fg.ext, p);
  const Ring& R = e->ring();
  const Tetramodule& A = e->unit;
  auto& m = as.map;
  m.source = as.left.ext;
  m.target = as.right.ext;
  std::size_t P = m.source->positions();
  m.components.push_back(Matrix::identity(A.dim));
  for (std::size_t s = 1; s + 1 < P; ++s) {
    auto so = ext_offsets(as.left, s), to = ext_offsets(as.right, s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < as.left.table[s].size(); ++x) {
      const auto& r = as.left.table[s][x];  // (a', i', c, l)
      const auto& w = as.left.witness[s][x];
      if (r.a == 0) {
        std::size_t fgi = as.fg.find(r.b, {0, 0, r.b, r.j});
        std::size_t y = as.right.find(s, {0, 0, r.b, fgi});
        const auto& wag = as.fg.witness[r.b][fgi];
        Matrix inner = left_unit_inv(wag, g->blocks[r.b][r.j], p);
        c.add_block(to[y], so[x],
                    monoidal::tensor_maps(w, as.right.witness[s][y], Matrix::identity(A.dim), inner));
        continue;
      }
      const auto& q = as.ef.table[r.a][r.i];  // (a, i, b, j)
      if (q.b + r.b == 0) {
        std::size_t y = as.right.find(s, {q.a, q.i, 0, 0});
        c.add_block(to[y], so[x], right_unit(w, as.ef.witness[r.a][r.i].result, p));
        continue;
      }
      std::size_t fgi = as.fg.find(q.b + r.b, {q.b, q.j, r.b, r.j});
      std::size_t y = as.right.find(s, {q.a, q.i, q.b + r.b, fgi});
      const auto& X = e->blocks[q.a][q.i];
      const auto& Y = f->blocks[q.b][q.j];
      const auto& Z = g->blocks[r.b][r.j];
      auto assoc = p == Product::One ? monoidal::associator1(X, Y, Z) : monoidal::associator2(X, Y, Z);
      c.add_block(to[y], so[x], assoc.forward);
    }
    m.components.push_back(exactla::reduce(c, R));
  }
  m.components.push_back(Matrix::identity(A.dim));
  return as;
}

EtaExt eta_ext(const ExtPtr& m, const ExtPtr& n, const ExtPtr& p, const ExtPtr& q, Product pr, int s1, int s2,
               int extra_last_sign) {
  const Ring& R = m->ring();
  const Tetramodule& A = m->unit;
  std::size_t dm = m->degree(), dn = n->degree(), dp = p->degree();
  EtaExt out;
  auto mn = share(yoneda_splice(*m, *n, s1));
  auto pq = share(yoneda_splice(*p, *q, s2));
  out.source = schwede_tensor(mn, pq, pr, extra_last_sign);
  out.mp = schwede_tensor(m, p, pr);
  out.nq = schwede_tensor(n, q, pr, extra_last_sign);
  out.target_sign = s1 * s2 * sgn(dn * dp);
  int e0 = sgn(dm * dp + dn * dp);
  auto& f = out.map;
  f.source = out.source.ext;
  f.target = share(yoneda_splice(*out.mp.ext, *out.nq.ext, out.target_sign));
  std::size_t P = f.source->positions();
  auto mo = m->offsets(dm);
  auto po = p->offsets(dp);
  f.components.push_back(Matrix::identity(A.dim));
  for (std::size_t s = 1; s + 1 < P; ++s) {
    auto so = ext_offsets(out.source, s), to = f.target->offsets(s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < out.source.table[s].size(); ++x) {
      const auto& r = out.source.table[s][x];
      const auto& w = out.source.witness[s][x];
      if (r.a <= dm && r.b <= dp) {
        std::size_t y = out.mp.find(s, r);
        c.add_block(to[y], so[x], Matrix::identity(w.result.dim));
      } else if (r.a > dm && r.b > dp) {
        std::size_t cc = r.a - dm, d = r.b - dp;
        std::size_t y = out.nq.find(cc + d, {cc, r.i, d, r.j});
        c.add_block(to[y], so[x], signed_(Matrix::identity(w.result.dim), e0 * sgn(dm * d)));
      } else if (r.a == dm && r.b > dp) {
        std::size_t d = r.b - dp;
        std::size_t y = out.nq.find(d, {0, 0, d, r.j});
        Matrix pm = m->last_map().block(0, mo[r.i], A.dim, mo[r.i + 1] - mo[r.i]);
        Matrix blk = monoidal::tensor_maps(w, out.nq.witness[d][y], pm, Matrix::identity(q->blocks[d][r.j].dim));
        c.add_block(to[y], so[x], signed_(blk, s1 * e0 * sgn(dm * d)));
      } else if (r.a > dm && r.b == dp) {
        std::size_t cc = r.a - dm;
        std::size_t y = out.nq.find(cc, {cc, r.i, 0, 0});
        Matrix pp = p->last_map().block(0, po[r.j], A.dim, po[r.j + 1] - po[r.j]);
        Matrix blk = monoidal::tensor_maps(w, out.nq.witness[cc][y], Matrix::identity(n->blocks[cc][r.i].dim), pp);
        c.add_block(to[y], so[x], signed_(blk, s2 * e0));
      }
    }
    f.components.push_back(exactla::reduce(c, R));
  }
  f.components.push_back(Matrix::identity(A.dim));
  out.checks = check_morphism(f);
  return out;
}

Eta12Ext eta12_ext(const ExtPtr& e, const ExtPtr& f, const ExtPtr& g, const ExtPtr& h) {
  require_product(*e, Product::Two);
  const Ring& R = e->ring();
  const Tetramodule& A = e->unit;
  Eta12Ext out;
  out.ef = schwede_tensor(e, f, Product::Two);
  out.gh = schwede_tensor(g, h, Product::Two);
  out.source = schwede_tensor(out.ef.ext, out.gh.ext, Product::One);
  out.eg = schwede_tensor(e, g, Product::One);
  out.fh = schwede_tensor(f, h, Product::One);
  out.target = schwede_tensor(out.eg.ext, out.fh.ext, Product::Two, sgn(f->degree() * g->degree()));
  auto& m = out.map;
  m.source = out.source.ext;
  m.target = out.target.ext;
  std::size_t P = m.source->positions();
  BlockRef unit_ref{0, 0, 0, 0};
  m.components.push_back(Matrix::identity(A.dim));
  for (std::size_t s = 1; s + 1 < P; ++s) {
    auto so = ext_offsets(out.source, s), to = ext_offsets(out.target, s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < out.source.table[s].size(); ++x) {
      const auto& r = out.source.table[s][x];
      const auto& w = out.source.witness[s][x];
      BlockRef lr = r.a == 0 ? unit_ref : out.ef.table[r.a][r.i];
      BlockRef rr = r.b == 0 ? unit_ref : out.gh.table[r.b][r.j];
      const auto& X = e->blocks[lr.a][lr.i];
      const auto& Y = f->blocks[lr.b][lr.j];
      const auto& Z = g->blocks[rr.a][rr.i];
      const auto& W = h->blocks[rr.b][rr.j];
      auto et = monoidal::eta(X, Y, Z, W);
      // expand A to A⊗2A where τ collapsed it
      Matrix el = r.a == 0 ? left_unit_inv(out.ef.witness[0][0], A, Product::Two)
                           : Matrix::identity(out.ef.witness[r.a][r.i].result.dim);
      Matrix er = r.b == 0 ? left_unit_inv(out.gh.witness[0][0], A, Product::Two)
                           : Matrix::identity(out.gh.witness[r.b][r.j].result.dim);
      Matrix expand = monoidal::tensor_maps(w, et.source, el, er);
      std::size_t pl = lr.a + rr.a, pr = lr.b + rr.b;
      std::size_t il = pl == 0 ? 0 : out.eg.find(pl, {lr.a, lr.i, rr.a, rr.i});
      std::size_t ir = pr == 0 ? 0 : out.fh.find(pr, {lr.b, lr.j, rr.b, rr.j});
      Matrix kl = pl == 0 ? left_unit(et.mp, A, Product::One) : Matrix::identity(et.mp.result.dim);
      Matrix kr = pr == 0 ? left_unit(et.nq, A, Product::One) : Matrix::identity(et.nq.result.dim);
      std::size_t y = out.target.find(s, {pl, il, pr, ir});
      Matrix contract = monoidal::tensor_maps(et.target, out.target.witness[s][y], kl, kr);
      c.add_block(to[y], so[x], signed_(contract * et.matrix * expand, sgn(lr.b * rr.a)));
    }
    m.components.push_back(exactla::reduce(c, R));
  }
  m.components.push_back(Matrix::identity(A.dim));
  return out;
}

ComparisonExt phi12_ext(const ExtPtr& e, const ExtPtr& f) {
  require_product(*e, Product::Two);
  const Ring& R = e->ring();
  ComparisonExt out;
  out.source = schwede_tensor(e, f, Product::One);
  out.target = schwede_tensor(e, f, Product::Two);
  auto& m = out.map;
  m.source = out.source.ext;
  m.target = out.target.ext;
  std::size_t P = m.source->positions();
  m.components.push_back(Matrix::identity(e->unit.dim));
  for (std::size_t s = 1; s + 1 < P; ++s) {
    auto so = ext_offsets(out.source, s), to = ext_offsets(out.target, s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < out.source.table[s].size(); ++x) {
      const auto& r = out.source.table[s][x];
      auto cm = monoidal::comparison_maps(e->blocks[r.a][r.i], f->blocks[r.b][r.j]);
      c.add_block(to[out.target.find(s, r)], so[x], cm.phi);
    }
    m.components.push_back(exactla::reduce(c, R));
  }
  m.components.push_back(Matrix::identity(e->unit.dim));
  return out;
}

ComparisonExt theta12_ext(const ExtPtr& e, const ExtPtr& f) {
  require_product(*e, Product::Two);
  const Ring& R = e->ring();
  std::size_t k = e->degree(), l = f->degree();
  ComparisonExt out;
  out.source = schwede_tensor(e, f, Product::One);
  out.target = schwede_tensor(f, e, Product::Two, sgn(k * l));
  auto& m = out.map;
  m.source = out.source.ext;
  m.target = out.target.ext;
  std::size_t P = m.source->positions();
  m.components.push_back(Matrix::identity(e->unit.dim));
  for (std::size_t s = 1; s + 1 < P; ++s) {
    auto so = ext_offsets(out.source, s), to = ext_offsets(out.target, s);
    Matrix c(to.back(), so.back());
    for (std::size_t x = 0; x < out.source.table[s].size(); ++x) {
      const auto& r = out.source.table[s][x];
      auto cm = monoidal::comparison_maps(e->blocks[r.a][r.i], f->blocks[r.b][r.j]);
      std::size_t y = out.target.find(s, {r.b, r.j, r.a, r.i});
      c.add_block(to[y], so[x], signed_(cm.theta, sgn(r.a * r.b)));
    }
    m.components.push_back(exactla::reduce(c, R));
  }
  m.components.push_back(Matrix::identity(e->unit.dim));
  return out;
}

}  // namespace hopfcoh::extcat
