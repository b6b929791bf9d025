#include "hopfcoh/extcat/extension.hpp"

#include "hopfcoh/errors.hpp"

namespace hopfcoh::extcat {

using exactla::Rational;

tetra::BialgPtr algebra_base(const bialg::FinAlgebra& a) {
  bialg::FinBialgebra b;
  b.name = a.name;
  b.ring = a.ring;
  b.dim = a.dim;
  b.labels = a.labels;
  b.mult = a.mult;
  b.unit = a.unit;
  b.comult = Matrix(a.dim * a.dim, a.dim);
  b.counit = Matrix(1, a.dim);
  return tetra::share(std::move(b));
}

Tetramodule regular_bimodule(const tetra::BialgPtr& base) {
  return tetra::forget_to_bimodule(tetra::tautological(base));
}

ExtPtr share(ExtensionComplex e) { return std::make_shared<const ExtensionComplex>(std::move(e)); }

std::size_t ExtensionComplex::dim(std::size_t s) const {
  std::size_t n = 0;
  for (const auto& b : blocks.at(s)) n += b.dim;
  return n;
}

std::vector<std::size_t> ExtensionComplex::offsets(std::size_t s) const {
  std::vector<std::size_t> o{0};
  for (const auto& b : blocks.at(s)) o.push_back(o.back() + b.dim);
  return o;
}

Tetramodule ExtensionComplex::term(std::size_t s) const {
  const auto& bl = blocks.at(s);
  if (bl.size() == 1) return bl[0];
  if (bl.empty()) throw PreconditionError("ExtensionComplex: empty position");
  return tetra::direct_sum(bl).sum;
}

ExtensionComplex make_extension(Category cat, const Tetramodule& unit, const std::vector<Tetramodule>& terms,
                                const std::vector<Matrix>& maps, const std::string& name) {
  if (maps.size() != terms.size() + 1) throw InputError("make_extension: need one more map than middle terms");
  ExtensionComplex e;
  e.category = cat;
  e.name = name;
  e.unit = unit;
  e.blocks.push_back({unit});
  for (const auto& t : terms) e.blocks.push_back({t});
  e.blocks.push_back({unit});
  e.maps = maps;
  for (std::size_t s = 0; s < e.maps.size(); ++s)
    if (e.maps[s].rows() != e.dim(s + 1) || e.maps[s].cols() != e.dim(s))
      throw InputError("make_extension: map " + std::to_string(s) + " has the wrong shape");
  return e;
}

ExtensionComplex unit_extension(Category cat, const Tetramodule& unit) {
  return make_extension(cat, unit, {}, {Matrix::identity(unit.dim)}, "U");
}

ExtensionComplex split_extension(Category cat, const Tetramodule& unit) {
  auto s = tetra::direct_sum({unit, unit});
  return make_extension(cat, unit, {s.sum}, {s.injections[0], s.projections[1]}, "split");
}

namespace {
Verdict structure_check(Category cat, const Tetramodule& m) {
  return cat == Category::Bimodules ? tetra::check_bimodule(m) : tetra::check_tetramodule(m);
}
}  // namespace

Verdict check_extension(const ExtensionComplex& e) {
  Verdict v;
  const Ring& R = e.ring();
  std::size_t P = e.positions();
  if (P < 2 || e.maps.size() != P - 1) {
    v.add_flag("shape", false, "positions and maps disagree");
    return v;
  }
  for (std::size_t s : {std::size_t{0}, P - 1}) {
    bool ok = e.blocks[s].size() == 1 && e.blocks[s][0].dim == e.unit.dim;
    v.add_flag("end " + std::to_string(s) + " is the unit", ok);
  }
  for (std::size_t s = 0; s < P; ++s)
    for (std::size_t i = 0; i < e.blocks[s].size(); ++i)
      v.merge("term " + std::to_string(s) + "." + std::to_string(i), structure_check(e.category, e.blocks[s][i]));
  std::vector<Tetramodule> terms;
  for (std::size_t s = 0; s < P; ++s) terms.push_back(e.term(s));
  std::vector<std::size_t> rk;
  for (std::size_t s = 0; s + 1 < P; ++s) {
    const Matrix& d = e.maps[s];
    if (d.rows() != terms[s + 1].dim || d.cols() != terms[s].dim) {
      v.add_flag("map " + std::to_string(s) + " shape", false);
      return v;
    }
    v.merge("map " + std::to_string(s), tetra::check_map(terms[s], terms[s + 1], d));
    if (s + 2 < P) v.add("d" + std::to_string(s + 1) + "∘d" + std::to_string(s), e.maps[s + 1] * d, R);
    rk.push_back(exactla::rank(d, R));
  }
  for (std::size_t s = 0; s < P; ++s) {
    std::size_t in = s == 0 ? 0 : rk[s - 1];
    std::size_t out = s + 1 < P ? rk[s] : 0;
    bool ok = in + out == terms[s].dim;
    v.add_flag("exact at " + std::to_string(s), ok,
               ok ? "" : "rank in " + std::to_string(in) + " + rank out " + std::to_string(out) + " != dim " +
                             std::to_string(terms[s].dim));
  }
  return v;
}

bool same_complex(const ExtensionComplex& a, const ExtensionComplex& b) {
  if (a.positions() != b.positions()) return false;
  for (std::size_t s = 0; s < a.positions(); ++s)
    if (a.dim(s) != b.dim(s)) return false;
  for (std::size_t s = 0; s < a.maps.size(); ++s)
    if (!exactla::is_zero_in(a.maps[s] - b.maps[s], a.ring())) return false;
  return true;
}

ExtensionComplex negate_map(const ExtensionComplex& e, std::size_t s) {
  ExtensionComplex r = e;
  r.maps.at(s) = -r.maps.at(s);
  return r;
}

ExtensionComplex yoneda_splice(const ExtensionComplex& e, const ExtensionComplex& f, int central_sign) {
  if (e.category != f.category || !tetra::same_base(e.unit, f.unit)) throw InputError("yoneda_splice: base mismatch");
  std::size_t k = e.degree(), l = f.degree();
  ExtensionComplex r;
  r.category = e.category;
  r.unit = e.unit;
  r.name = e.name + "♯" + f.name;
  for (std::size_t s = 0; s <= k; ++s) r.blocks.push_back(e.blocks[s]);
  for (std::size_t s = 1; s <= l + 1; ++s) r.blocks.push_back(f.blocks[s]);
  for (std::size_t s = 0; s < k; ++s) r.maps.push_back(e.maps[s]);
  Matrix central = f.maps[0] * e.maps[k];
  r.maps.push_back(central_sign < 0 ? -central : central);
  for (std::size_t s = 1; s <= l; ++s) r.maps.push_back(f.maps[s]);
  return r;
}

Verdict check_morphism(const ExtensionMorphism& f) {
  Verdict v;
  const auto& S = *f.source;
  const auto& T = *f.target;
  const Ring& R = S.ring();
  if (S.positions() != T.positions() || f.components.size() != S.positions()) {
    v.add_flag("degrees", false, "source, target and components disagree");
    return v;
  }
  std::size_t P = S.positions();
  for (std::size_t s = 0; s < P; ++s)
    if (f.components[s].rows() != T.dim(s) || f.components[s].cols() != S.dim(s)) {
      v.add_flag("component " + std::to_string(s) + " shape", false);
      return v;
    }
  v.add("identity on the first end", f.components[0] - Matrix::identity(S.dim(0)), R);
  v.add("identity on the last end", f.components[P - 1] - Matrix::identity(S.dim(P - 1)), R);
  for (std::size_t s = 0; s + 1 < P; ++s)
    v.add("square " + std::to_string(s),
          T.maps[s] * f.components[s] - f.components[s + 1] * S.maps[s], R);
  for (std::size_t s = 1; s + 1 < P; ++s)
    v.merge("component " + std::to_string(s), tetra::check_map(S.term(s), T.term(s), f.components[s]));
  return v;
}

ExtensionMorphism identity_morphism(const ExtPtr& e) {
  ExtensionMorphism f;
  f.source = e;
  f.target = e;
  for (std::size_t s = 0; s < e->positions(); ++s) f.components.push_back(Matrix::identity(e->dim(s)));
  return f;
}

ExtensionMorphism compose(const ExtensionMorphism& g, const ExtensionMorphism& f) {
  if (!same_complex(*f.target, *g.source)) throw PreconditionError("compose: target and source differ");
  ExtensionMorphism h;
  h.source = f.source;
  h.target = g.target;
  const Ring& R = f.source->ring();
  for (std::size_t s = 0; s < f.components.size(); ++s)
    h.components.push_back(exactla::reduce(g.components[s] * f.components[s], R));
  return h;
}

ExtensionMorphism splice_morphisms(const ExtensionMorphism& f, const ExtensionMorphism& g, int central_sign) {
  ExtensionMorphism h;
  h.source = share(yoneda_splice(*f.source, *g.source, central_sign));
  h.target = share(yoneda_splice(*f.target, *g.target, central_sign));
  std::size_t k = f.source->degree();
  for (std::size_t s = 0; s <= k; ++s) h.components.push_back(f.components[s]);
  for (std::size_t s = 1; s < g.components.size(); ++s) h.components.push_back(g.components[s]);
  return h;
}

namespace {
// signs c_s with to.maps[s] = (c_{s+1}/c_s) from.maps[s]; empty when impossible
std::vector<int> sign_ladder(const ExtensionComplex& a, const ExtensionComplex& b) {
  if (a.positions() != b.positions()) return {};
  for (std::size_t s = 0; s < a.positions(); ++s)
    if (a.dim(s) != b.dim(s)) return {};
  const Ring& R = a.ring();
  std::vector<int> c{1};
  for (std::size_t s = 0; s < a.maps.size(); ++s) {
    int eps;
    if (exactla::is_zero_in(b.maps[s] - a.maps[s], R))
      eps = 1;
    else if (exactla::is_zero_in(b.maps[s] + a.maps[s], R))
      eps = -1;
    else
      return {};
    c.push_back(c.back() * eps);
  }
  if (c.back() != 1) return {};
  return c;
}
}  // namespace

bool sign_equivalent(const ExtensionComplex& a, const ExtensionComplex& b) { return !sign_ladder(a, b).empty(); }

ExtensionMorphism sign_change_iso(const ExtPtr& from, const ExtPtr& to) {
  auto c = sign_ladder(*from, *to);
  if (c.empty()) throw PreconditionError("sign_change_iso: complexes are not related by signs with product one");
  ExtensionMorphism f;
  f.source = from;
  f.target = to;
  for (std::size_t s = 0; s < c.size(); ++s) {
    Matrix I = Matrix::identity(from->dim(s));
    f.components.push_back(c[s] < 0 ? -I : I);
  }
  return f;
}

Matrix morphism_difference(const ExtensionMorphism& f, const ExtensionMorphism& g) {
  if (f.components.size() != g.components.size()) throw PreconditionError("morphism_difference: degrees differ");
  std::vector<Matrix> cols;
  for (std::size_t s = 0; s < f.components.size(); ++s) {
    Matrix d = f.components[s] - g.components[s];
    Matrix v(d.rows() * d.cols(), 1);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (const auto& [c, x] : d.row(r)) v.set(r * d.cols() + c, 0, x);
    cols.push_back(v);
  }
  return exactla::vstack(cols);
}

TruncatedComplex truncate(const ExtPtr& e) {
  TruncatedComplex t;
  t.source = e;
  for (std::size_t s = 0; s <= e->degree(); ++s) t.dims.push_back(e->dim(s));
  for (std::size_t s = 0; s < e->degree(); ++s) t.maps.push_back(e->maps[s]);
  return t;
}

std::vector<std::size_t> homology_dims(const TruncatedComplex& t) {
  const Ring& R = t.source->ring();
  std::vector<std::size_t> rk;
  for (const auto& m : t.maps) rk.push_back(exactla::rank(m, R));
  std::vector<std::size_t> h;
  for (std::size_t s = 0; s < t.dims.size(); ++s) {
    std::size_t in = s == 0 ? 0 : rk[s - 1];
    std::size_t out = s < rk.size() ? rk[s] : 0;
    h.push_back(t.dims[s] - in - out);
  }
  return h;
}

Verdict check_truncated(const TruncatedComplex& t) {
  Verdict v;
  const Ring& R = t.source->ring();
  for (std::size_t s = 0; s + 1 < t.maps.size(); ++s)
    v.add("d" + std::to_string(s + 1) + "∘d" + std::to_string(s), t.maps[s + 1] * t.maps[s], R);
  auto h = homology_dims(t);
  for (std::size_t s = 0; s < h.size(); ++s) {
    std::size_t want = s + 1 == h.size() ? t.source->unit.dim : 0;
    v.add_flag("homology at " + std::to_string(s), h[s] == want,
               "dimension " + std::to_string(h[s]) + ", expected " + std::to_string(want));
  }
  return v;
}

ExtensionComplex baer_sum(const ExtensionComplex& e, const ExtensionComplex& f) {
  if (e.category != f.category || !tetra::same_base(e.unit, f.unit)) throw InputError("baer_sum: base mismatch");
  std::size_t k = e.degree();
  if (k != f.degree()) throw InputError("baer_sum: degrees differ");
  if (k == 0) return e;
  const Ring& R = e.ring();
  std::size_t a = e.unit.dim;
  // X_s = E_s ⊕ F_s cut down: pullback at s = k, pushout at s = 1
  std::vector<Tetramodule> sums;
  std::vector<exactla::SubQuotient> sq;
  for (std::size_t s = 1; s <= k; ++s) {
    Tetramodule es = e.term(s), fs = f.term(s);
    Tetramodule sum = tetra::direct_sum({es, fs}).sum;
    std::size_t n = sum.dim;
    Matrix sub = Matrix::identity(n), rel(n, 0);
    if (s == k) sub = exactla::kernel_basis(exactla::hstack({e.last_map(), -f.last_map()}), R);
    if (s == 1) rel = exactla::vstack({e.first_map(), -f.first_map()});
    sq.push_back(exactla::subquotient_basis(n, sub, rel, R));
    sums.push_back(sum);
  }
  ExtensionComplex r;
  r.category = e.category;
  r.unit = e.unit;
  r.name = "(" + e.name + "+" + f.name + ")";
  r.blocks.push_back({e.unit});
  for (std::size_t s = 0; s < k; ++s) r.blocks.push_back({tetra::subquotient_module(sums[s], sq[s])});
  r.blocks.push_back({e.unit});
  r.maps.push_back(exactla::reduce(sq[0].projection * exactla::vstack({e.first_map(), Matrix(f.dim(1), a)}), R));
  for (std::size_t s = 1; s < k; ++s) {
    Matrix d = exactla::block_diag({e.maps[s], f.maps[s]});
    r.maps.push_back(exactla::reduce(sq[s].projection * d * sq[s - 1].section, R));
  }
  r.maps.push_back(
      exactla::reduce(exactla::hstack({e.last_map(), Matrix(a, f.dim(k))}) * sq[k - 1].section, R));
  return r;
}

}  // namespace hopfcoh::extcat
