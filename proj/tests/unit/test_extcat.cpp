#include <doctest.h>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/extcat/coherence.hpp"
#include "support/fixtures.hpp"

using namespace hopfcoh;
using namespace hopfcoh::extcat;
using exactla::Rational;
using namespace hopfcoh::fixtures;

namespace {

tetra::BialgPtr c2() { return tetra::share(bialg::group_algebra(2)); }
tetra::BialgPtr h4() { return tetra::share(bialg::sweedler_h4()); }

}  // namespace

TEST_CASE("unit, split and derivation extensions are exact") {
  for (auto b : {c2(), h4()}) {
    auto A = tetra::tautological(b);
    CHECK(check_extension(unit_extension(Category::Tetramodules, A)).ok());
    auto s = split_extension(Category::Tetramodules, A);
    CHECK(s.degree() == 1);
    CHECK_MESSAGE(check_extension(s).ok(), check_extension(s).summary());
    auto r = rebased_split(Category::Tetramodules, A, generic_basis(b->dim), "S");
    CHECK_MESSAGE(check_extension(*r).ok(), check_extension(*r).summary());
  }
  auto d = dual_numbers();
  auto e = derivation_extension(d);
  CHECK_MESSAGE(check_extension(*e).ok(), check_extension(*e).summary());
  // reversed maps are not even a complex
  auto bad = *e;
  std::swap(bad.maps[0], bad.maps[1]);
  bad.maps[0] = bad.maps[0].transpose();
  bad.maps[1] = bad.maps[1].transpose();
  CHECK(!check_extension(bad).ok());
  // a zero first map breaks exactness at A
  auto z = *e;
  z.maps[0] = Matrix(4, 2);
  auto v = check_extension(z);
  CHECK(!v.ok());
  CHECK(v.first_failure()->name.find("exact") != std::string::npos);
}

TEST_CASE("Yoneda splice") {
  auto b = c2();
  auto A = tetra::tautological(b);
  auto u = share(unit_extension(Category::Tetramodules, A));
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto f = share(split_extension(Category::Tetramodules, A));
  auto ef = yoneda_splice(*e, *f);
  CHECK(ef.degree() == 2);
  CHECK_MESSAGE(check_extension(ef).ok(), check_extension(ef).summary());
  CHECK(same_complex(yoneda_splice(*u, *e), *e));
  CHECK(same_complex(yoneda_splice(*e, *u), *e));
  CHECK(yoneda_splice(*u, *u).degree() == 0);
  auto eff = yoneda_splice(ef, *f);
  CHECK(eff.degree() == 3);
  CHECK(check_extension(eff).ok());
  CHECK(same_complex(eff, yoneda_splice(*e, yoneda_splice(*f, *f))));
  // the central arrow is the composite E_1 -> A -> F_1
  CHECK(ef.maps[1] == f->maps[0] * e->maps[1]);
}

TEST_CASE("sign change isomorphisms") {
  auto b = c2();
  auto A = tetra::tautological(b);
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto ee = share(yoneda_splice(*e, *e));
  auto two = share(negate_map(negate_map(*ee, 0), 2));
  auto iso = sign_change_iso(ee, two);
  CHECK_MESSAGE(check_morphism(iso).ok(), check_morphism(iso).summary());
  CHECK(iso.components[1] == -Matrix::identity(4));
  CHECK(iso.components[2] == -Matrix::identity(4));
  auto one = share(negate_map(*ee, 1));
  CHECK(!sign_equivalent(*ee, *one));
  CHECK_THROWS_AS(sign_change_iso(ee, one), PreconditionError);
  CHECK(check_morphism(identity_morphism(ee)).ok());
}

TEST_CASE("Schwede tensor and its projections") {
  struct Case {
    tetra::BialgPtr b;
    Category cat;
    std::vector<Product> products;
  };
  for (const auto& cs : {Case{c2(), Category::Tetramodules, {Product::One, Product::Two}},
                         Case{h4(), Category::Tetramodules, {Product::One, Product::Two}},
                         Case{dual_numbers(), Category::Bimodules, {Product::One}}}) {
    INFO(cs.b->name);
    ExtPtr e, f;
    Tetramodule A;
    if (cs.cat == Category::Bimodules) {
      e = derivation_extension(cs.b);
      A = e->unit;
      f = rebased_split(cs.cat, A, generic_basis(2), "S");
    } else {
      A = tetra::tautological(cs.b);
      e = rebased_split(cs.cat, A, generic_basis(cs.b->dim), "E");
      f = share(split_extension(cs.cat, A));
    }
    auto u = share(unit_extension(cs.cat, A));
    auto ef = share(yoneda_splice(*e, *f));
    for (auto p : cs.products) {
      for (const auto& [x, y] : std::vector<std::pair<ExtPtr, ExtPtr>>{{e, f}, {e, e}, {u, e}, {e, u}, {u, u}, {ef, e}}) {
        auto t = schwede_tensor(x, y, p);
        CAPTURE(x->degree());
        CAPTURE(y->degree());
        CHECK(t.ext->degree() == x->degree() + y->degree());
        auto v = check_extension(*t.ext);
        CHECK_MESSAGE(v.ok(), v.summary());
        auto pl = schwede_projection_left(t);
        CHECK_MESSAGE(check_morphism(pl).ok(), check_morphism(pl).summary());
        auto pr = schwede_projection_right(t);
        CHECK_MESSAGE(check_morphism(pr).ok(), check_morphism(pr).summary());
      }
    }
  }
}

TEST_CASE("bimodule extensions have one product") {
  auto e = derivation_extension(dual_numbers());
  CHECK_THROWS_AS(schwede_tensor(e, e, Product::Two), InputError);
  auto A = tetra::tautological(c2());
  auto t = share(split_extension(Category::Tetramodules, A));
  CHECK_THROWS_AS(schwede_tensor(e, t, Product::One), InputError);
}

TEST_CASE("eta on extensions is a morphism") {
  auto b = c2();
  auto A = tetra::tautological(b);
  auto u = share(unit_extension(Category::Tetramodules, A));
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto f = share(split_extension(Category::Tetramodules, A));
  for (auto p : {Product::One, Product::Two})
    for (const auto& ms : std::vector<std::vector<ExtPtr>>{
             {e, f, e, f}, {u, e, e, u}, {e, u, u, e}, {u, u, e, f}, {e, f, u, u}, {e, e, f, u}, {u, u, u, u}})
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          auto r = eta_ext(ms[0], ms[1], ms[2], ms[3], p, s1, s2);
          CAPTURE(s1);
          CAPTURE(s2);
          CAPTURE(ms[0]->degree() * 1000 + ms[1]->degree() * 100 + ms[2]->degree() * 10 + ms[3]->degree());
          CHECK_MESSAGE(r.checks.ok(), r.checks.summary());
        }
  auto d = dual_numbers();
  auto ed = derivation_extension(d);
  auto sd = rebased_split(Category::Bimodules, ed->unit, generic_basis(2), "S");
  auto r = eta_ext(ed, sd, ed, ed, Product::One);
  CHECK_MESSAGE(r.checks.ok(), r.checks.summary());
  CHECK(r.map.target->degree() == 4);
}

TEST_CASE("associator, comparison maps and eta12 on extensions") {
  auto b = c2();
  auto A = tetra::tautological(b);
  auto u = share(unit_extension(Category::Tetramodules, A));
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto f = share(split_extension(Category::Tetramodules, A));
  for (auto p : {Product::One, Product::Two}) {
    auto as = associator_ext(e, f, e, p);
    CHECK_MESSAGE(check_morphism(as.map).ok(), check_morphism(as.map).summary());
    auto as2 = associator_ext(u, e, u, p);
    CHECK_MESSAGE(check_morphism(as2.map).ok(), check_morphism(as2.map).summary());
  }
  for (const auto& [x, y] : std::vector<std::pair<ExtPtr, ExtPtr>>{{e, f}, {u, e}, {e, u}}) {
    auto phi = phi12_ext(x, y);
    CHECK_MESSAGE(check_morphism(phi.map).ok(), check_morphism(phi.map).summary());
    auto th = theta12_ext(x, y);
    CHECK_MESSAGE(check_morphism(th.map).ok(), check_morphism(th.map).summary());
  }
  auto et = eta12_ext(e, f, e, u);
  CHECK_MESSAGE(check_morphism(et.map).ok(), check_morphism(et.map).summary());
}

TEST_CASE("Baer sum") {
  auto d = dual_numbers();
  auto e = derivation_extension(d);
  auto s = baer_sum(*e, *e);
  CHECK(s.degree() == 1);
  CHECK_MESSAGE(check_extension(s).ok(), check_extension(s).summary());
  auto A = tetra::tautological(c2());
  auto f = share(split_extension(Category::Tetramodules, A));
  auto ff = share(yoneda_splice(*f, *f));
  auto s2 = baer_sum(*ff, *ff);
  CHECK(s2.degree() == 2);
  CHECK_MESSAGE(check_extension(s2).ok(), check_extension(s2).summary());
}

TEST_CASE("eta on extensions with unit arguments") {
  auto A = tetra::tautological(c2());
  auto u = share(unit_extension(Category::Tetramodules, A));
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto f = share(split_extension(Category::Tetramodules, A));
  for (auto p : {Product::One, Product::Two}) {
    auto all = eta_ext(u, u, u, u, p);
    CHECK(all.map.components.size() == 2);
    CHECK(all.map.components[0] == Matrix::identity(2));
    // m = p = unit: the identity of N⊗τQ
    auto r = eta_ext(u, e, u, f, p);
    CHECK(same_complex(*r.map.source, *r.map.target));
    for (std::size_t s = 0; s < r.map.components.size(); ++s)
      CHECK(r.map.components[s] == Matrix::identity(r.map.source->dim(s)));
  }
}

TEST_CASE("truncated complexes") {
  auto A = tetra::tautological(c2());
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto ee = share(yoneda_splice(*e, *e));
  auto t = truncate(ee);
  CHECK(t.dims == std::vector<std::size_t>{2, 4, 4});
  CHECK(homology_dims(t) == std::vector<std::size_t>{0, 0, 2});
  CHECK(check_truncated(t).ok());
  auto st = schwede_tensor(ee, e, Product::Two);
  CHECK(check_truncated(truncate(st.ext)).ok());
}

TEST_CASE("coherence of eta on extensions") {
  auto b = c2();
  auto A = tetra::tautological(b);
  auto u = share(unit_extension(Category::Tetramodules, A));
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto f = share(split_extension(Category::Tetramodules, A));
  SUBCASE("unit tuples") {
    ExtCoherenceOptions o;
    o.sample = 1;
    auto v = verify_ext_coherence({u}, o);
    CHECK_MESSAGE(v.ok(), v.summary());
  }
  SUBCASE("fixed degree-1 instances") {
    for (auto p : {Product::One, Product::Two}) {
      auto v1 = extexpl_instance({e, f, e, e, u, f}, p);
      CHECK_MESSAGE(v1.ok(), v1.summary());
      auto v2 = intexpl_instance({e, f, u, e, f, e}, p);
      CHECK_MESSAGE(v2.ok(), v2.summary());
    }
    auto v3 = compexpl_instance({e, u, u, f, f, u, u, e});
    CHECK_MESSAGE(v3.ok(), v3.summary());
    auto v4 = compexpl_instance({e, f, e, f, e, f, e, f});
    CHECK_MESSAGE(v4.ok(), v4.summary());
  }
  SUBCASE("sampled corpus") {
    ExtCoherenceOptions o;
    o.sample = 2;
    o.seed = 7;
    auto v = verify_ext_coherence({u, e, f}, o);
    CHECK_MESSAGE(v.ok(), v.summary());
    CHECK(v.checks.size() >= 2 * 5);
  }
  SUBCASE("corrupted eta is caught") {
    auto v = extexpl_instance({e, f, e, e, f, f}, Product::One, true);
    CHECK(!v.ok());
    CHECK(!compexpl_instance({e, f, e, f, e, f, e, f}, true).ok());
    ExtCoherenceOptions o;
    o.sample = 1;
    o.corrupt_eta = true;
    CHECK(!verify_ext_coherence({e, f}, o).ok());
  }
}

TEST_CASE("octahedron faces") {
  auto A = tetra::tautological(c2());
  auto u = share(unit_extension(Category::Tetramodules, A));
  auto e = rebased_split(Category::Tetramodules, A, generic_basis(2), "E");
  auto f = share(split_extension(Category::Tetramodules, A));
  for (const auto& [m, n] : std::vector<std::pair<ExtPtr, ExtPtr>>{{u, u}, {e, f}, {e, u}, {e, e}}) {
    auto o = octahedron(m, n);
    CHECK(o.vertices.size() == 6);
    CHECK(o.faces.size() == 8);
    CHECK_MESSAGE(o.checks.ok(), o.checks.summary());
  }
  auto bad = share(split_extension(Category::Bimodules, regular_bimodule(dual_numbers())));
  CHECK_THROWS_AS(octahedron(bad, bad), PreconditionError);
}
