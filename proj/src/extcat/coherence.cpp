#include "hopfcoh/extcat/coherence.hpp"

#include <random>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::extcat {

namespace {

EtaExt eta_of(const ExtPtr& m, const ExtPtr& n, const ExtPtr& p, const ExtPtr& q, Product pr, bool corrupt,
              int s1 = 1, int s2 = 1, int extra = 1) {
  auto e = eta_ext(m, n, p, q, pr, s1, s2, extra);
  if (corrupt && e.map.components.size() > 2) {
    auto& c = e.map.components[1];
    if (c.rows() && c.cols()) c.add_to(0, 0, exactla::Rational(1));
  }
  return e;
}

ExtPtr splice_ptr(const ExtPtr& a, const ExtPtr& b, int sign = 1) { return share(yoneda_splice(*a, *b, sign)); }

}  // namespace

Verdict compare_paths(const std::string& name, const ExtensionMorphism& lhs, const ExtensionMorphism& rhs) {
  Verdict v;
  if (!same_complex(*lhs.source, *rhs.source)) {
    v.add_flag(name + " sources agree", false);
    return v;
  }
  const Ring& R = lhs.source->ring();
  if (same_complex(*lhs.target, *rhs.target)) {
    v.add(name, morphism_difference(lhs, rhs), R);
    return v;
  }
  if (!sign_equivalent(*rhs.target, *lhs.target)) {
    v.add_flag(name + " targets agree up to signs", false, "targets differ by an odd total sign");
    return v;
  }
  v.add(name, morphism_difference(lhs, compose(sign_change_iso(rhs.target, lhs.target), rhs)), R);
  return v;
}

namespace {

Verdict extexpl_unguarded(const std::vector<ExtPtr>& x, Product p, bool corrupt) {
  const auto &U = x.at(0), &V = x.at(1), &W = x.at(2), &X = x.at(3), &Y = x.at(4), &Z = x.at(5);
  auto uv = splice_ptr(U, V), xy = splice_ptr(X, Y), vw = splice_ptr(V, W), yz = splice_ptr(Y, Z);
  // ((U♯V)♯W)⊗((X♯Y)♯Z) -> ((U♯V)⊗(X♯Y))♯(W⊗Z) -> ((U⊗X)♯(V⊗Y))♯(W⊗Z)
  auto e1 = eta_of(uv, W, xy, Z, p, corrupt);
  auto e2 = eta_of(U, V, X, Y, p, corrupt);
  auto left = compose(splice_morphisms(e2.map, identity_morphism(e1.nq.ext), e1.target_sign), e1.map);
  // (U♯(V♯W))⊗(X♯(Y♯Z)) -> (U⊗X)♯((V♯W)⊗(Y♯Z)) -> (U⊗X)♯((V⊗Y)♯(W⊗Z))
  auto e3 = eta_of(U, vw, X, yz, p, corrupt);
  auto e4 = eta_of(V, W, Y, Z, p, corrupt);
  auto right = compose(splice_morphisms(identity_morphism(e3.mp.ext), e4.map, e3.target_sign), e3.map);
  Verdict v = compare_paths("extexpl", left, right);
  v.merge("eta", e1.checks);
  return v;
}

Verdict intexpl_unguarded(const std::vector<ExtPtr>& x, Product p, bool corrupt) {
  const auto &U = x.at(0), &V = x.at(1), &W = x.at(2), &X = x.at(3), &Y = x.at(4), &Z = x.at(5);
  auto uv = splice_ptr(U, V), wx = splice_ptr(W, X), yz = splice_ptr(Y, Z);
  // ((U♯V)⊗(W♯X))⊗(Y♯Z) -> ((U⊗W)♯(V⊗X))⊗(Y♯Z) -> ((U⊗W)⊗Y)♯((V⊗X)⊗Z) -> (U⊗(W⊗Y))♯(V⊗(X⊗Z))
  auto e1 = eta_of(U, V, W, X, p, corrupt);
  auto src = schwede_tensor(e1.source.ext, yz, p);
  auto mid = schwede_tensor(e1.map.target, yz, p);
  auto f1 = tensor_morphisms(src, mid, e1.map, identity_morphism(yz));
  auto e2 = eta_of(e1.mp.ext, e1.nq.ext, Y, Z, p, corrupt, e1.target_sign, 1);
  auto al = associator_ext(U, W, Y, p), ar = associator_ext(V, X, Z, p);
  auto left = compose(splice_morphisms(al.map, ar.map, e2.target_sign), compose(e2.map, f1));
  // α, then (U♯V)⊗((W⊗Y)♯(X⊗Z)), then (U⊗(W⊗Y))♯(V⊗(X⊗Z))
  auto a = associator_ext(uv, wx, yz, p);
  auto e3 = eta_of(W, X, Y, Z, p, corrupt);
  auto mid2 = schwede_tensor(uv, e3.map.target, p);
  auto f2 = tensor_morphisms(a.right, mid2, identity_morphism(uv), e3.map);
  auto e4 = eta_of(U, V, e3.mp.ext, e3.nq.ext, p, corrupt, 1, e3.target_sign);
  auto right = compose(e4.map, compose(f2, a.map));
  return compare_paths("intexpl", left, right);
}

Verdict compexpl_unguarded(const std::vector<ExtPtr>& x, bool corrupt) {
  const auto &A1 = x.at(0), &A2 = x.at(1), &B1 = x.at(2), &B2 = x.at(3);
  const auto &C1 = x.at(4), &C2 = x.at(5), &D1 = x.at(6), &D2 = x.at(7);
  auto a12 = splice_ptr(A1, A2), b12 = splice_ptr(B1, B2), c12 = splice_ptr(C1, C2), d12 = splice_ptr(D1, D2);
  // η^{jk} ⊗1 η^{jk}, then η^{ik}, then η^{ij} ♯ η^{ij}
  auto eab = eta_of(A1, A2, B1, B2, Product::Two, corrupt);
  auto ecd = eta_of(C1, C2, D1, D2, Product::Two, corrupt);
  auto src = schwede_tensor(eab.source.ext, ecd.source.ext, Product::One);
  auto mid = schwede_tensor(eab.map.target, ecd.map.target, Product::One);
  auto f1 = tensor_morphisms(src, mid, eab.map, ecd.map);
  auto e1 = eta_of(eab.mp.ext, eab.nq.ext, ecd.mp.ext, ecd.nq.ext, Product::One, corrupt, eab.target_sign,
                   ecd.target_sign);
  auto ga = eta12_ext(A1, B1, C1, D1), gb = eta12_ext(A2, B2, C2, D2);
  auto left = compose(splice_morphisms(ga.map, gb.map, e1.target_sign), compose(e1.map, f1));
  // η^{ij}, then η^{ik} ⊗2 η^{ik}, then η^{jk}
  auto g = eta12_ext(a12, b12, c12, d12);
  auto eac = eta_of(A1, A2, C1, C2, Product::One, corrupt);
  auto ebd = eta_of(B1, B2, D1, D2, Product::One, corrupt);
  auto mid2 = schwede_tensor(eac.map.target, ebd.map.target, Product::Two, g.target.extra_last_sign);
  auto f2 = tensor_morphisms(g.target, mid2, eac.map, ebd.map);
  auto e2 = eta_of(eac.mp.ext, eac.nq.ext, ebd.mp.ext, ebd.nq.ext, Product::Two, corrupt, eac.target_sign,
                   ebd.target_sign, g.target.extra_last_sign);
  auto right = compose(e2.map, compose(f2, g.map));
  return compare_paths("compexpl", left, right);
}

template <class F>
Verdict guard(const std::string& name, F&& fn) {
  try {
    return fn();
  } catch (const std::exception& ex) {
    Verdict v;
    v.add_flag(name, false, ex.what());
    return v;
  }
}
}  // namespace

Verdict extexpl_instance(const std::vector<ExtPtr>& x, Product p, bool corrupt) {
  return guard("extexpl", [&] { return extexpl_unguarded(x, p, corrupt); });
}
Verdict intexpl_instance(const std::vector<ExtPtr>& x, Product p, bool corrupt) {
  return guard("intexpl", [&] { return intexpl_unguarded(x, p, corrupt); });
}
Verdict compexpl_instance(const std::vector<ExtPtr>& x, bool corrupt) {
  return guard("compexpl", [&] { return compexpl_unguarded(x, corrupt); });
}

Verdict verify_ext_coherence(const std::vector<ExtPtr>& corpus, const ExtCoherenceOptions& opts) {
  Verdict v;
  if (corpus.empty()) throw InputError("verify_ext_coherence: empty corpus");
  bool tetra = corpus[0]->category == Category::Tetramodules;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  auto draw = [&](std::size_t n) {
    std::vector<ExtPtr> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(corpus[pick(rng)]);
    return out;
  };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      v.merge(name, fn());
    } catch (const std::exception& ex) {
      v.add_flag(name, false, ex.what());
    }
  };
  std::vector<Product> products{Product::One};
  if (tetra) products.push_back(Product::Two);
  for (std::size_t s = 0; s < opts.sample; ++s) {
    std::string tag = "sample " + std::to_string(s);
    for (auto p : products) {
      std::string pt = p == Product::One ? " ⊗1" : " ⊗2";
      if (opts.extexpl) {
        auto t = draw(6);
        guarded(tag + pt + " extexpl", [&] { return extexpl_instance(t, p, opts.corrupt_eta); });
      }
      if (opts.intexpl) {
        auto t = draw(6);
        guarded(tag + pt + " intexpl", [&] { return intexpl_instance(t, p, opts.corrupt_eta); });
      }
    }
    if (tetra && opts.compexpl) {
      auto t = draw(8);
      guarded(tag + " compexpl", [&] { return compexpl_instance(t, opts.corrupt_eta); });
    }
  }
  return v;
}

Octahedron octahedron(const ExtPtr& m, const ExtPtr& n) {
  if (m->category != Category::Tetramodules) throw PreconditionError("octahedron: tetramodule extensions only");
  Octahedron o;
  o.vertices = {"M♯N", "N♯M", "M⊗1N", "M⊗2N", "N⊗1M", "N⊗2M"};
  struct Side {
    ExtPtr x, y;
    std::string xn, yn;
  };
  for (const auto& sd : {Side{m, n, "M", "N"}, Side{n, m, "N", "M"}}) {
    std::string xy = sd.xn + "♯" + sd.yn, yx = sd.yn + "♯" + sd.xn;
    std::string t1 = sd.xn + "⊗1" + sd.yn, t2 = sd.xn + "⊗2" + sd.yn, t2r = sd.yn + "⊗2" + sd.xn;
    auto phi = phi12_ext(sd.x, sd.y);
    auto theta = theta12_ext(sd.x, sd.y);
    auto l1 = schwede_projection_left(phi.source), r1 = schwede_projection_right(phi.source);
    auto l2 = schwede_projection_left(phi.target), r2 = schwede_projection_right(phi.target);
    auto lt = schwede_projection_left(theta.target), rt = schwede_projection_right(theta.target);
    for (const auto& [name, f] : std::vector<std::pair<std::string, const ExtensionMorphism*>>{
             {"φ12 " + t1 + "→" + t2, &phi.map},
             {"θ12 " + t1 + "→" + t2r, &theta.map},
             {"π " + t1 + "→" + xy, &l1},
             {"π " + t1 + "→" + yx, &r1},
             {"π " + t2 + "→" + xy, &l2},
             {"π " + t2 + "→" + yx, &r2}})
      o.checks.merge("edge " + name, check_morphism(*f));
    auto face = [&](const std::string& nm, std::vector<std::string> path, const ExtensionMorphism& direct,
                    const ExtensionMorphism& composite) {
      OctahedronFace fc{nm, std::move(path), {}};
      try {
        fc.checks = compare_paths(nm, direct, composite);
      } catch (const std::exception& ex) {
        fc.checks.add_flag(nm, false, ex.what());
      }
      o.checks.merge("face", fc.checks);
      o.faces.push_back(std::move(fc));
    };
    face(t1 + "→" + t2 + "→" + xy, {t1, t2, xy}, l1, compose(l2, phi.map));
    face(t1 + "→" + t2 + "→" + yx, {t1, t2, yx}, r1, compose(r2, phi.map));
    face(t1 + "→" + t2r + "→" + xy, {t1, t2r, xy}, l1, compose(rt, theta.map));
    face(t1 + "→" + t2r + "→" + yx, {t1, t2r, yx}, r1, compose(lt, theta.map));
  }
  return o;
}

}  // namespace hopfcoh::extcat
