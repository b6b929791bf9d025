#include <doctest.h>

#include <random>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/monoidal/monoidal.hpp"

using namespace hopfcoh;
using namespace hopfcoh::monoidal;
using exactla::kron;
using exactla::Rational;
using exactla::Ring;
using exactla::slot_permutation;
using tetra::share;
using tetra::tautological;

namespace {

tetra::BialgPtr c2() { return share(bialg::group_algebra(2)); }
tetra::BialgPtr h4() { return share(bialg::sweedler_h4()); }

Tetramodule induced_k(const tetra::BialgPtr& b) {
  auto L = tetra::induced(b, tetra::trivial_bicomodule(b));
  L.name = "L(k)";
  return L;
}

Tetramodule rebased_a(const tetra::BialgPtr& b) {
  Matrix p = Matrix::from_dense(4, 4, {1, 1, 0, 0, 0, 1, 2, 0, 0, 0, 1, 0, 1, 0, 0, 1});
  auto t = tetra::transport(tautological(b), p);
  t.name = "A'";
  return t;
}

// m⊗n -> m_0 n_{-1} ⊗ m_1 n_0, read directly off the structure maps
Matrix phi12_oracle(const Tetramodule& m, const Tetramodule& n) {
  std::size_t d = m.base_dim();
  return kron(m.mr(), n.ml()) * slot_permutation({m.dim, d, d, n.dim}, {0, 2, 1, 3}) * kron(m.dr(), n.dl());
}

// m⊗n -> m_{-1} n_0 ⊗ m_0 n_1 in N⊗M
Matrix theta_oracle(const Tetramodule& m, const Tetramodule& n) {
  std::size_t d = m.base_dim();
  return kron(n.ml(), m.mr()) * slot_permutation({d, m.dim, n.dim, d}, {0, 2, 1, 3}) * kron(m.dl(), n.dr());
}

}  // namespace

TEST_CASE("otimes1 and otimes2 of A with itself") {
  auto b = c2();
  auto A = tautological(b);
  auto t1 = otimes1(A, A);
  CHECK(t1.result.dim == 2);
  CHECK(t1.ambient.dim == 4);
  CHECK(t1.result.dim == t1.ambient.dim - exactla::rank(t1.relations));
  CHECK(check_tetramodule(t1.result).ok());
  auto t2 = otimes2(A, A);
  CHECK(t2.result.dim == 2);
  CHECK(t2.result.dim <= t2.ambient.dim);
  CHECK(check_tetramodule(t2.result).ok());
  CHECK(exactla::is_zero_in(t1.to_result * t1.from_result - Matrix::identity(2), b->ring));
  CHECK(exactla::is_zero_in(t2.to_result * t2.from_result - Matrix::identity(2), b->ring));
}

TEST_CASE("internal products over the corpus") {
  for (auto b : {c2(), h4(), share(bialg::group_algebra(3)), share(bialg::truncated_additive_hopf(3))}) {
    INFO(b->name);
    auto A = tautological(b);
    auto L = induced_k(b);
    std::size_t d = b->dim;
    for (const auto* m : {&A, &L})
      for (const auto* n : {&A, &L}) {
        auto t1 = otimes1(*m, *n), t2 = otimes2(*m, *n);
        CHECK(check_tetramodule(t1.result).ok());
        CHECK(check_tetramodule(t2.result).ok());
        // Hopf modules: dims are d times the product of coinvariant dims
        CHECK(t1.result.dim * d == m->dim * n->dim);
        CHECK(t2.result.dim * d == m->dim * n->dim);
      }
  }
}

TEST_CASE("unit isomorphisms") {
  for (auto b : {share(bialg::trivial_bialgebra()), c2(), h4(), share(bialg::group_algebra(2, Ring::integers()))}) {
    INFO(b->name);
    auto A = tautological(b);
    for (const auto& m : std::vector<Tetramodule>{A, induced_k(b), tetra::coinduced(b, tetra::trivial_bimodule(b))}) {
      auto u = unit_isos(m);
      CHECK_MESSAGE(u.checks.ok(), u.checks.summary());
      CHECK(u.lambda1.rows() == u.lambda1.cols());
      CHECK(exactla::rank(u.rho2, b->ring) == m.dim);
    }
  }
  auto k = tautological(share(bialg::trivial_bialgebra()));
  auto u = unit_isos(k);
  for (const auto* m : {&u.lambda1, &u.rho1, &u.lambda2, &u.rho2}) CHECK(*m == Matrix::identity(1));
}

TEST_CASE("associators are bijective morphisms") {
  std::mt19937_64 rng(3);
  for (auto b : {c2(), h4()}) {
    std::vector<Tetramodule> corpus = {tautological(b), induced_k(b)};
    if (b->dim == 4) corpus = {tautological(b), rebased_a(b)};
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    for (int i = 0; i < 3; ++i) {
      const auto &m = corpus[pick(rng)], &n = corpus[pick(rng)], &p = corpus[pick(rng)];
      auto a1 = associator1(m, n, p);
      CHECK_MESSAGE(a1.checks.ok(), a1.checks.summary());
      CHECK(a1.outer_left.result.dim == a1.outer_right.result.dim);
      auto a2 = associator2(m, n, p);
      CHECK_MESSAGE(a2.checks.ok(), a2.checks.summary());
      CHECK(a2.outer_left.result.dim == a2.outer_right.result.dim);
    }
  }
}

TEST_CASE("phi0 is a morphism") {
  auto b = c2();
  auto A = tautological(b);
  auto f = phi0(A, A, A, A);
  CHECK(f.source->dim == 16);
  CHECK(f.target->dim == 16);
  auto v = tetra::check_map(f);
  CHECK(v.checks.size() == 4);
  CHECK_MESSAGE(v.ok(), v.summary());
  // the reverse slot swap undoes it
  Matrix back = slot_permutation({2, 2, 2, 2}, {0, 2, 1, 3});
  CHECK(back * f.matrix == Matrix::identity(16));
  auto h = h4();
  auto H = tautological(h), L = induced_k(b);
  CHECK(tetra::check_map(phi0(H, H, H, H)).ok());
  CHECK(tetra::check_map(phi0(A, L, L, A)).ok());
  CHECK(phi0(A, L, L, A).source->dim == 64);
}

TEST_CASE("eta and comparison maps") {
  for (auto b : {c2(), h4()}) {
    INFO(b->name);
    auto A = tautological(b);
    std::vector<Tetramodule> mods = {A, b->dim == 2 ? induced_k(b) : rebased_a(b)};
    for (const auto& m : mods)
      for (const auto& n : mods) {
        auto c = comparison_maps(m, n);
        CHECK_MESSAGE(c.checks.ok(), c.checks.summary());
        Matrix phi_direct = c.m2n.to_result * phi12_oracle(m, n) * c.m1n.from_result;
        CHECK(exactla::is_zero_in(c.phi - phi_direct, b->ring));
        Matrix theta_direct = c.n2m.to_result * theta_oracle(m, n) * c.m1n.from_result;
        CHECK(exactla::is_zero_in(c.theta - theta_direct, b->ring));
      }
    auto e = eta(A, A, A, A);
    CHECK(e.checks.ok());
    CHECK(e.source.result.dim == b->dim);
  }
  // unit arguments: A⊗1A -> A⊗2A is an isomorphism for a Hopf algebra
  auto A = tautological(c2());
  auto c = comparison_maps(A, A);
  CHECK(exactla::rank(c.phi) == 2);
}

TEST_CASE("two-fold monoidal coherence") {
  SUBCASE("group algebra, sample 20") {
    auto b = c2();
    TwoFoldOptions o;
    o.sample = 20;
    o.seed = 5;
    auto v = verify_two_fold({tautological(b), induced_k(b)}, o);
    CHECK_MESSAGE(v.ok(), v.summary());
    CHECK(v.checks.size() == 20 * 7);
  }
  SUBCASE("Sweedler algebra, sample 5") {
    auto b = h4();
    TwoFoldOptions o;
    o.sample = 5;
    auto v = verify_two_fold({tautological(b), rebased_a(b)}, o);
    CHECK_MESSAGE(v.ok(), v.summary());
  }
  SUBCASE("corrupted eta is caught") {
    auto b = c2();
    TwoFoldOptions o;
    o.sample = 3;
    o.corrupt_eta = true;
    auto v = verify_two_fold({tautological(b), induced_k(b)}, o);
    CHECK(!v.ok());
    const auto* f = v.first_failure();
    REQUIRE(f != nullptr);
    CHECK((!f->residual.is_zero() || !f->detail.empty()));
  }
}
