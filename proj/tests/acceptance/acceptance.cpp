// Acceptance criteria 1-10. One PASS/FAIL line per criterion; every
// comparison is exact (tolerance 0). Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hopfcoh/exactla/smith.hpp"
#include "hopfcoh/extcat/coherence.hpp"
#include "hopfcoh/gs/gs.hpp"
#include "hopfcoh/resolve/resolve.hpp"
#include "hopfcoh/tetra/functors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hopfcoh;
using exactla::Matrix;
using exactla::Rational;
using exactla::Ring;
using extcat::Category;
using extcat::ExtPtr;
using extcat::Product;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %d: %s [%s] (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str(), s);
  std::fflush(stdout);
  failures += !o.pass;
}

tetra::BialgPtr share(bialg::FinBialgebra b) { return tetra::share(std::move(b)); }

std::string dims_str(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

std::vector<std::size_t> free_ranks(const gs::CohomologyReport& r) {
  std::vector<std::size_t> out;
  for (const auto& d : r.degrees) out.push_back(d.free_rank);
  return out;
}

// tetramodule extensions over b: split, and split rebased in three bases
std::vector<ExtPtr> split_family(const tetra::BialgPtr& b, const std::string& tag) {
  auto A = tetra::tautological(b);
  std::vector<ExtPtr> out{extcat::share(extcat::split_extension(Category::Tetramodules, A))};
  for (long long s = 0; s < 3; ++s)
    out.push_back(fixtures::rebased_split(Category::Tetramodules, A, fixtures::generic_basis(b->dim, s),
                                          tag + "_S" + std::to_string(s)));
  return out;
}

// bimodule extensions over the dual numbers
std::vector<ExtPtr> dual_family(const tetra::BialgPtr& d) {
  return {fixtures::derivation_extension(d, 1), fixtures::derivation_extension(d, 2), fixtures::periodic_extension(d),
          fixtures::rebased_split(Category::Bimodules, extcat::regular_bimodule(d), fixtures::generic_basis(2), "S")};
}

exactla::ZMat random_z(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  return oracle::random_int_matrix(rng, r, c, -9, 9);
}

}  // namespace

int main() {
  std::printf("tolerance: exact equality throughout (0)\n");
  const auto c2 = share(bialg::group_algebra(2)), c3 = share(bialg::group_algebra(3)), h4 = share(bialg::sweedler_h4());
  const auto dual = fixtures::dual_numbers();

  criterion(1, "GS d_total^2 = 0 for m+n <= 7 on the corpus", [&](Outcome& o) {
    std::vector<tetra::BialgPtr> corpus{share(bialg::trivial_bialgebra()),
                                        c2,
                                        c3,
                                        share(bialg::group_algebra(2, Ring::integers())),
                                        share(bialg::group_algebra(3, Ring::integers())),
                                        h4,
                                        share(bialg::truncated_additive_hopf(2)),
                                        share(bialg::truncated_additive_hopf(3))};
    std::size_t checks = 0;
    for (const auto& b : corpus) {
      auto v = gs::check_gs_bicomplex(*b, 7);
      checks += v.checks.size();
      o.require(v.ok(), b->name + ": " + v.summary());
    }
    o.detail << corpus.size() << " bialgebras, " << checks << " identities";
  });

  criterion(2, "gs = ext_tetra = ext_via_pq(bar, injective), degrees 0-3, C2 C3 H4 over Q", [&](Outcome& o) {
    for (const auto& b : {c2, c3, h4}) {
      auto g = free_ranks(gs::gs_cohomology(*b, 3));
      auto t = free_ranks(resolve::ext_tetra(b, 3));
      auto p = resolve::bar_resolution(b, 3);
      auto q = resolve::injective_coinduced_resolution(b, 3);
      o.require(p.checks.ok() && q.checks.ok(), b->name + ": resolution checks");
      auto x = free_ranks(resolve::ext_via_pq(p, q, 3));
      o.require(g == t && g == x, b->name + ": gs " + dims_str(g) + " tetra " + dims_str(t) + " pq " + dims_str(x));
      o.detail << b->name << " " << dims_str(g) << "; ";
    }
  });

  criterion(3, "koszul_sv dims (1,2,1) and (1,4,6,4,1)", [&](Outcome& o) {
    auto k1 = resolve::koszul_sv(1, 3);
    auto k2 = resolve::koszul_sv(2, 4);
    o.require(k1.checks.ok() && k2.checks.ok(), "Koszul validation checks");
    auto d1 = free_ranks(k1.cohomology), d2 = free_ranks(k2.cohomology);
    d1.resize(3);
    d2.resize(5);
    o.require(d1 == std::vector<std::size_t>{1, 2, 1}, "dimV = 1 gives " + dims_str(d1));
    o.require(d2 == std::vector<std::size_t>{1, 4, 6, 4, 1}, "dimV = 2 gives " + dims_str(d2));
    o.detail << dims_str(d1) << " " << dims_str(d2);
  });

  criterion(4, "eta_ext is a morphism on >= 20 tuples; ext coherence over C2", [&](Outcome& o) {
    std::mt19937_64 rng(4);
    struct Family {
      std::vector<ExtPtr> exts;
      std::vector<Product> products;
      std::size_t tuples;
    };
    std::vector<Family> families{{split_family(c2, "C2"), {Product::One, Product::Two}, 12},
                                 {split_family(h4, "H4"), {Product::One, Product::Two}, 6},
                                 {dual_family(dual), {Product::One}, 6}};
    std::size_t n = 0;
    for (const auto& f : families) {
      std::uniform_int_distribution<std::size_t> pick(0, f.exts.size() - 1);
      for (std::size_t s = 0; s < f.tuples; ++s) {
        auto pr = f.products[s % f.products.size()];
        auto m = f.exts[pick(rng)], nn = f.exts[pick(rng)], p = f.exts[pick(rng)], q = f.exts[pick(rng)];
        auto eta = extcat::eta_ext(m, nn, p, q, pr);
        auto mv = extcat::check_morphism(eta.map);
        o.require(eta.checks.ok() && mv.ok(), "eta on " + m->name + "," + nn->name + "," + p->name + "," + q->name);
        ++n;
      }
    }
    extcat::ExtCoherenceOptions opts;
    opts.seed = 4;
    auto coh = extcat::verify_ext_coherence(split_family(c2, "C2"), opts);
    o.require(coh.ok(), "coherence: " + coh.summary());
    for (const char* kind : {"extexpl", "intexpl", "compexpl"}) {
      bool seen = false;
      for (const auto& c : coh.checks) seen = seen || c.name.find(kind) != std::string::npos;
      o.require(seen, std::string("no ") + kind + " instance ran");
    }
    o.detail << n << " tuples, " << coh.checks.size() << " coherence identities";
  });

  criterion(5, "octahedron faces commute on >= 10 pairs over a Hopf base", [&](Outcome& o) {
    std::size_t pairs = 0, faces = 0;
    // all pairs of the C2 family, the first two of the H4 family
    for (const auto& [fam, lim] : {std::pair{split_family(c2, "C2"), std::size_t{4}},
                                   std::pair{split_family(h4, "H4"), std::size_t{2}}}) {
      for (std::size_t i = 0; i < lim; ++i)
        for (std::size_t j = i; j < lim; ++j) {
          auto oct = extcat::octahedron(fam[i], fam[j]);
          o.require(oct.checks.ok() && oct.faces.size() == 8, fam[i]->name + " / " + fam[j]->name);
          faces += oct.faces.size();
          ++pairs;
        }
    }
    o.detail << pairs << " pairs, " << faces << " faces";
  });

  criterion(6, "Schwede projections exist; class(E#F) = (-1)^{kl} class(F#E) over Q[x]/(x^2)", [&](Outcome& o) {
    resolve::ClassOracle oracle(Category::Bimodules, dual, 4);
    auto fam = dual_family(dual);
    auto rebased = fixtures::rebase(fam[0], 1, fixtures::generic_basis(2, 1)).first;
    std::vector<std::pair<ExtPtr, ExtPtr>> pairs{{fam[0], fam[1]}, {fam[0], fam[2]}, {fam[2], fam[1]},
                                                 {fam[2], fam[2]}, {rebased, fam[2]}, {fam[3], fam[0]}};
    std::size_t nonzero = 0;
    for (const auto& [e, f] : pairs) {
      auto t = extcat::schwede_tensor(e, f, Product::One);
      auto l = extcat::schwede_projection_left(t), r = extcat::schwede_projection_right(t);
      o.require(extcat::check_morphism(l).ok() && extcat::check_morphism(r).ok(), "projections " + e->name + "," + f->name);
      auto ef = oracle.of(extcat::yoneda_splice(*e, *f)).coords;
      auto fe = oracle.of(extcat::yoneda_splice(*f, *e)).coords;
      const bool odd = (e->degree() * f->degree()) % 2 == 1;
      bool match = ef.size() == fe.size();
      for (std::size_t i = 0; match && i < ef.size(); ++i) match = ef[i] == (odd ? -fe[i] : fe[i]);
      o.require(match, "graded commutativity " + e->name + "," + f->name);
      for (const auto& x : ef) nonzero += !x.is_zero();
    }
    o.detail << pairs.size() << " pairs, " << nonzero << " nonzero class coordinates";
  });

  criterion(7, "hopf_freeness_witness bijective on the corpus, dim M = dim A * dim coinv", [&](Outcome& o) {
    std::vector<tetra::BialgPtr> bases{share(bialg::trivial_bialgebra()), c2, c3,
                                       share(bialg::group_algebra(2, Ring::integers())), h4,
                                       share(bialg::truncated_additive_hopf(2)),
                                       share(bialg::truncated_additive_hopf(3))};
    std::size_t n = 0;
    for (const auto& b : bases) {
      if (!b->has_antipode()) continue;
      auto mods = cli::standard_modules(cli::Base{b, false});
      mods.push_back(tetra::direct_sum({mods[0], mods[1]}).sum);
      mods.push_back(tetra::box1(mods[0], mods[0]));
      mods.push_back(tetra::box2(mods[0], mods[0]));
      for (const auto& m : mods) {
        if (!m.is_tetra()) continue;
        auto w = tetra::hopf_freeness_witness(m);
        o.require(w.bijective && m.dim == b->dim * w.coinvariant_dim, b->name + " / " + m.name);
        ++n;
      }
    }
    o.detail << n << " tetramodules";
  });

  criterion(8, "Z[C2] Hochschild torsion matches a dense Smith oracle; Q ranks = Z ranks", [&](Outcome& o) {
    auto az = bialg::group_algebra(2, Ring::integers()).algebra();
    auto aq = bialg::group_algebra(2).algebra();
    auto rz = gs::hochschild_cohomology(az, 4, Ring::integers());
    auto rq = gs::hochschild_cohomology(aq, 4, Ring::rationals());
    bool some_torsion = false;
    for (std::size_t k = 0; k <= 4; ++k) {
      std::vector<mpz_class> expect;
      if (k > 0)
        for (const auto& x : oracle::textbook_smith(exactla::to_zmat(gs::hochschild_differential(az, k - 1))))
          if (x > 1) expect.push_back(x);
      o.require(rz.degrees[k].torsion == expect, "torsion in degree " + std::to_string(k));
      o.require(rz.degrees[k].free_rank == rq.degrees[k].free_rank, "free rank in degree " + std::to_string(k));
      some_torsion = some_torsion || !expect.empty();
      std::string t;
      for (const auto& x : rz.degrees[k].torsion) t += (t.empty() ? "" : " ") + x.get_str();
      o.detail << "H" << k << ": rank " << rz.degrees[k].free_rank << " torsion {" << t << "}; ";
    }
    o.require(some_torsion, "no torsion in degrees <= 4");
  });

  criterion(9, "classes: invariant under morphisms, zero on splits, additive under Baer sum", [&](Outcome& o) {
    resolve::ClassOracle od(Category::Bimodules, dual, 4);
    auto fam = dual_family(dual);
    std::vector<extcat::ExtensionMorphism> morphisms;
    for (long long s = 0; s < 3; ++s) {
      morphisms.push_back(fixtures::rebase(fam[0], 1, fixtures::generic_basis(2, s)).second);
      morphisms.push_back(fixtures::rebase(fam[1], 1, fixtures::generic_basis(2, s + 3)).second);
      morphisms.push_back(fixtures::rebase(fam[2], 1 + s % 2, fixtures::generic_basis(2, s)).second);
    }
    // E ⊗τ F -> E ♯ F and -> ±F ♯ E
    for (const auto& [e, f] : std::vector<std::pair<ExtPtr, ExtPtr>>{{fam[0], fam[1]}, {fam[0], fam[2]}}) {
      auto t = extcat::schwede_tensor(e, f, Product::One);
      morphisms.push_back(extcat::schwede_projection_left(t));
      morphisms.push_back(extcat::schwede_projection_right(t));
    }
    std::size_t nonzero = 0;
    for (const auto& m : morphisms) {
      o.require(extcat::check_morphism(m).ok(), "morphism " + m.source->name + " -> " + m.target->name);
      auto a = od.of(*m.source).coords, b = od.of(*m.target).coords;
      o.require(a == b, "class changed along " + m.source->name + " -> " + m.target->name);
      for (const auto& x : a) nonzero += !x.is_zero();
    }
    // split extensions, in several bases and categories
    auto zero = [](const std::vector<Rational>& v) {
      for (const auto& x : v)
        if (!x.is_zero()) return false;
      return true;
    };
    o.require(zero(od.of(*fam[3]).coords), "rebased split over the dual numbers");
    o.require(zero(od.of(extcat::split_extension(Category::Bimodules, extcat::regular_bimodule(dual))).coords),
              "split over the dual numbers");
    std::size_t splits = 2;
    for (const auto& b : {c2, h4}) {
      resolve::ClassOracle ot(Category::Tetramodules, b, 1);
      for (const auto& s : split_family(b, b->name)) {
        o.require(zero(ot.of(*s).coords), "split over " + b->name);
        ++splits;
      }
    }
    // Baer sums
    std::size_t sums = 0;
    for (const auto& [e, f] : std::vector<std::pair<ExtPtr, ExtPtr>>{
             {fam[0], fam[1]}, {fam[0], fam[3]}, {fam[1], fam[1]}, {fam[2], fam[2]}}) {
      auto s = od.of(extcat::baer_sum(*e, *f)).coords, a = od.of(*e).coords, b = od.of(*f).coords;
      bool add = s.size() == a.size() && a.size() == b.size();
      for (std::size_t i = 0; add && i < s.size(); ++i) add = s[i] == a[i] + b[i];
      o.require(add, "Baer sum " + e->name + " + " + f->name);
      ++sums;
    }
    o.detail << morphisms.size() << " morphisms (" << nonzero << " nonzero coords), " << splits << " splits, " << sums
             << " Baer sums";
  });

  criterion(10, "rank/kernel/image/SNF vs dense oracles on 200 random matrices", [&](Outcome& o) {
    std::mt19937_64 rng(10);
    std::size_t chains = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
      auto z = random_z(rng, r, c);
      Matrix m = exactla::from_zmat(z);
      const std::size_t rk = oracle::bareiss_rank(z);
      const std::string tag = "matrix " + std::to_string(t);
      o.require(exactla::rank(m) == rk, tag + ": rank");
      Matrix k = exactla::kernel_basis(m);
      o.require(k.cols() == c - rk && exactla::rank(k) == k.cols() && exactla::is_zero_in(m * k, Ring::rationals()),
                tag + ": kernel");
      Matrix im = exactla::image_basis(m);
      o.require(im.cols() == rk && exactla::rank(exactla::hstack({m, im})) == rk, tag + ": image");
      auto sf = exactla::smith_normal_form(m);
      o.require(sf.invariant_factors == oracle::textbook_smith(z), tag + ": invariant factors");
      for (std::size_t i = 1; i < sf.invariant_factors.size(); ++i)
        o.require(sf.invariant_factors[i] % sf.invariant_factors[i - 1] == 0, tag + ": divisibility");
      Matrix d = sf.left * m * sf.right;
      o.require(d == sf.diagonal(), tag + ": left * m * right");
      auto dl = exactla::determinant(exactla::to_zmat(sf.left)), dr = exactla::determinant(exactla::to_zmat(sf.right));
      o.require(abs(dl) == 1 && abs(dr) == 1, tag + ": unimodular transforms");
      chains += sf.invariant_factors.size() > 1;
    }
    o.detail << "200 matrices, " << chains << " with a nontrivial divisibility chain";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
