#include <algorithm>
#include <random>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/exactla/linalg.hpp"
#include "hopfcoh/resolve/resolve.hpp"

namespace hopfcoh::resolve {

using exactla::kron;
using exactla::MatrixBuilder;
using exactla::Rational;
using exactla::Ring;

namespace {

constexpr std::uint32_t kCheckPrime = 2147483629;

std::size_t ipow(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= d;
  return r;
}

Matrix eye(std::size_t n) { return Matrix::identity(n); }

// alternating sum of op inserted at each slot of A^{⊗slots}
Matrix alternating(const Matrix& op, std::size_t d, std::size_t slots) {
  Matrix out;
  for (std::size_t k = 0; k < slots; ++k) {
    Matrix t = kron(kron(eye(ipow(d, k)), op), eye(ipow(d, slots - 1 - k)));
    if (k % 2) t = -t;
    out = k == 0 ? t : out + t;
  }
  return out;
}

Tetramodule power_bicomodule(const BialgPtr& b, std::size_t i) {
  Tetramodule n;
  n.base = b;
  n.dim = ipow(b->dim, i);
  n.name = "A^" + std::to_string(i);
  n.delta_left = gs::power_left_coaction(*b, i);
  n.delta_right = gs::power_right_coaction(*b, i);
  return n;
}

Tetramodule power_bimodule(const BialgPtr& b, std::size_t j) {
  Tetramodule n;
  n.base = b;
  n.dim = ipow(b->dim, j);
  n.name = "A^" + std::to_string(j);
  n.m_left = gs::power_left_action(*b, j);
  n.m_right = gs::power_right_action(*b, j);
  return n;
}

Tetramodule plain_space(const BialgPtr& b, std::size_t dim, const std::string& name) {
  Tetramodule v;
  v.base = b;
  v.dim = dim;
  v.name = name;
  return v;
}

// Hom_k(A⊗A, k^r) with (a f)(x⊗y) = f(xa⊗y), (f b)(x⊗y) = f(x⊗by);
// coordinate (x, y, v) sits at (x d + y) r + v
Tetramodule cofree_bimodule(const BialgPtr& b, std::size_t r) {
  const std::size_t d = b->dim, n = d * d * r;
  MatrixBuilder ml(n, d * n), mr(n, n * d);
  const Matrix mt = b->mult.transpose();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& [xp, c] : mt.row(x * d + a))
        for (std::size_t y = 0; y < d; ++y)
          for (std::size_t v = 0; v < r; ++v) ml.add((x * d + y) * r + v, a * n + (xp * d + y) * r + v, c);
  for (std::size_t bb = 0; bb < d; ++bb)
    for (std::size_t y = 0; y < d; ++y)
      for (const auto& [yp, c] : mt.row(bb * d + y))
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t v = 0; v < r; ++v) mr.add((x * d + y) * r + v, ((x * d + yp) * r + v) * d + bb, c);
  Tetramodule m;
  m.base = b;
  m.dim = n;
  m.name = "Hom(A⊗A,k^" + std::to_string(r) + ")";
  m.m_left = ml.finish();
  m.m_right = mr.finish();
  return m;
}

// m -> m_{-1} ⊗ m_0 ⊗ m_1
Matrix two_sided_coaction(const Tetramodule& m) { return kron(eye(m.base_dim()), m.dr()) * m.dl(); }
// a ⊗ m ⊗ b -> a m b
Matrix two_sided_action(const Tetramodule& m) { return m.ml() * kron(eye(m.base_dim()), m.mr()); }

// the map q -> (x⊗y -> h(x q y)) into Hom(A⊗A, k^r)
Matrix cofree_embedding(const Tetramodule& cur, const Matrix& h) {
  const std::size_t d = cur.base_dim(), n = cur.dim;
  std::vector<Matrix> blocks;
  for (std::size_t x = 0; x < d; ++x) {
    std::vector<std::size_t> lc(n);
    for (std::size_t q = 0; q < n; ++q) lc[q] = x * n + q;
    Matrix lx = cur.ml().select_columns(lc);
    for (std::size_t y = 0; y < d; ++y) {
      std::vector<std::size_t> rc(n);
      for (std::size_t q = 0; q < n; ++q) rc[q] = q * d + y;
      blocks.push_back(h * lx * cur.mr().select_columns(rc));
    }
  }
  return exactla::vstack(blocks);
}

}  // namespace

std::string certificate_name(Certificate c) {
  switch (c) {
    case Certificate::Induced: return "induced";
    case Certificate::FreeInduced: return "free-induced";
    case Certificate::FreeBimodule: return "free-bimodule";
    case Certificate::Coinduced: return "coinduced";
  }
  return "?";
}

Matrix ResolutionComplex::slot(std::size_t i) const {
  std::size_t n = cores.at(i).dim;
  if (direction == Direction::Projective) {
    if (category == Category::Bimodules) return kron(kron(base->unit, eye(n)), base->unit);
    return tetra::induced_unit_slot(base, n);
  }
  return tetra::coinduced_counit_slot(base, n);
}

Verdict check_resolution(const ResolutionComplex& r) {
  Verdict v;
  const Ring& ring = r.base->ring;
  const bool proj = r.direction == Direction::Projective;
  const std::size_t len = r.differentials.size();
  if (r.objects.size() != len + 1) throw InvariantError("resolution: object and map counts disagree");
  auto name = [](const std::string& s, std::size_t i) { return s + " " + std::to_string(i); };
  if (proj)
    v.merge("augmentation: ", tetra::check_map(r.objects[0], r.resolved, r.augmentation));
  else
    v.merge("augmentation: ", tetra::check_map(r.resolved, r.objects[0], r.augmentation));
  for (std::size_t i = 0; i < len; ++i) {
    if (proj)
      v.merge(name("d", i) + ": ", tetra::check_map(r.objects[i + 1], r.objects[i], r.differentials[i]));
    else
      v.merge(name("d", i) + ": ", tetra::check_map(r.objects[i], r.objects[i + 1], r.differentials[i]));
  }
  // composites and ranks, with the augmentation as the map at the end
  std::vector<std::size_t> ranks;
  for (const auto& d : r.differentials) ranks.push_back(exactla::rank(d, ring));
  std::size_t aug_rank = exactla::rank(r.augmentation, ring);
  v.add_flag(proj ? "augmentation onto" : "augmentation into", aug_rank == r.resolved.dim);
  if (len > 0) {
    v.add("aug∘d0", proj ? r.augmentation * r.differentials[0] : r.differentials[0] * r.augmentation, ring);
    v.add_flag("exact at 0", ranks[0] + aug_rank == r.objects[0].dim,
               std::to_string(ranks[0]) + " + " + std::to_string(aug_rank) + " vs " + std::to_string(r.objects[0].dim));
  }
  for (std::size_t i = 1; i < len; ++i) {
    v.add(name("d∘d at", i), proj ? r.differentials[i - 1] * r.differentials[i] : r.differentials[i] * r.differentials[i - 1],
          ring);
    v.add_flag(name("exact at", i), ranks[i] + ranks[i - 1] == r.objects[i].dim,
               std::to_string(ranks[i]) + " + " + std::to_string(ranks[i - 1]) + " vs " +
                   std::to_string(r.objects[i].dim));
  }
  return v;
}

ResolutionComplex bar_resolution(const BialgPtr& b, std::size_t length) {
  if (length < 1) throw InputError("bar_resolution: length must be at least 1");
  const std::size_t d = b->dim;
  ResolutionComplex r;
  r.direction = Direction::Projective;
  r.base = b;
  r.resolved = tetra::tautological(b);
  for (std::size_t i = 0; i <= length; ++i) {
    r.cores.push_back(power_bicomodule(b, i));
    r.objects.push_back(tetra::induced(b, r.cores.back()));
    r.certificates.push_back(Certificate::Induced);
    if (i > 0) r.differentials.push_back(alternating(b->mult, d, i + 1));
  }
  r.augmentation = b->mult;
  r.checks = check_resolution(r);
  return r;
}

ResolutionComplex bimodule_bar_resolution(const BialgPtr& base, std::size_t length) {
  if (length < 1) throw InputError("bimodule_bar_resolution: length must be at least 1");
  const std::size_t d = base->dim;
  ResolutionComplex r;
  r.direction = Direction::Projective;
  r.category = Category::Bimodules;
  r.base = base;
  r.resolved = extcat::regular_bimodule(base);
  for (std::size_t i = 0; i <= length; ++i) {
    std::size_t n = ipow(d, i);
    r.cores.push_back(plain_space(base, n, "A^" + std::to_string(i)));
    Tetramodule p = plain_space(base, d * n * d, "A⊗A^" + std::to_string(i) + "⊗A");
    p.m_left = kron(base->mult, eye(n * d));
    p.m_right = kron(eye(d * n), base->mult);
    r.objects.push_back(std::move(p));
    r.certificates.push_back(Certificate::FreeBimodule);
    r.generators.push_back(n);
    if (i > 0) r.differentials.push_back(alternating(base->mult, d, i + 1));
  }
  r.augmentation = base->mult;
  r.checks = check_resolution(r);
  return r;
}

ResolutionComplex cobar_coresolution(const BialgPtr& b, std::size_t length) {
  if (length < 1) throw InputError("cobar_coresolution: length must be at least 1");
  const std::size_t d = b->dim;
  ResolutionComplex r;
  r.direction = Direction::Injective;
  r.base = b;
  r.resolved = tetra::tautological(b);
  for (std::size_t j = 0; j <= length; ++j) {
    Tetramodule core = j == 0 ? tetra::trivial_bimodule(b) : power_bimodule(b, j);
    r.cores.push_back(core);
    r.objects.push_back(tetra::coinduced(b, core));
    r.certificates.push_back(Certificate::Coinduced);
    if (j > 0) r.differentials.push_back(alternating(b->comult, d, j + 1));
  }
  r.augmentation = b->comult;
  r.checks = check_resolution(r);
  return r;
}

ResolutionComplex injective_coinduced_resolution(const BialgPtr& b, std::size_t length, std::uint64_t seed) {
  if (length < 1) throw InputError("injective_coinduced_resolution: length must be at least 1");
  const Ring& ring = b->ring;
  std::mt19937_64 rng(seed);
  ResolutionComplex r;
  r.direction = Direction::Injective;
  r.base = b;
  r.resolved = tetra::tautological(b);

  Tetramodule cur = r.resolved;
  Matrix prev(cur.dim, 0);  // image of the previous map inside cur
  for (std::size_t j = 0; j <= length; ++j) {
    auto quot = exactla::quotient_basis(cur.dim, prev, ring);
    const std::size_t c = quot.dim;
    // Greedy choice of quotient coordinates h: cur/prev -> k^r. While the
    // tetramodule map cur/prev -> R(Hom(A⊗A, k^r)) has a kernel (found mod a
    // large prime), add a coordinate that is nonzero on some kernel vector.
    // Coordinate functionals keep the entries of the maps small.
    const Matrix coact = two_sided_coaction(cur);
    auto tetra_map = [&](const Matrix& h) {
      Matrix g = cofree_embedding(cur, h);
      return exactla::reduce(kron(kron(eye(b->dim), g), eye(b->dim)) * coact, ring);
    };
    Matrix into(0, cur.dim);
    std::size_t rdim = 0;
    if (c > 0) {
      const Ring fp = Ring::prime_field(kCheckPrime);
      const Matrix proj_p = quot.projection.mod_p(kCheckPrime);
      std::vector<std::size_t> chosen;
      for (;;) {
        Matrix h(chosen.size(), c);
        for (std::size_t i = 0; i < chosen.size(); ++i) h.set(i, chosen[i], Rational(1));
        Matrix m = tetra_map(h * quot.projection);
        if (!chosen.empty() && exactla::rank_lower_bound(m, ring) == c) {  // rank ≤ c, since prev ⊆ ker
          into = m;
          break;
        }
        // quotient coordinates of a kernel vector outside prev
        Matrix extra = exactla::reduce(proj_p * exactla::kernel_basis(m.mod_p(kCheckPrime), fp), fp);
        std::vector<std::size_t> candidates;
        for (std::size_t col = 0; col < extra.cols() && candidates.empty(); ++col)
          for (std::size_t k = 0; k < c; ++k)
            if (!extra.get(k, col).is_zero()) candidates.push_back(k);
        if (candidates.empty()) throw InvariantError("injective resolution: embedding search stalled");
        chosen.push_back(candidates[rng() % candidates.size()]);
      }
      rdim = chosen.size();
    }
    Tetramodule core = cofree_bimodule(b, rdim);
    Tetramodule q;
    if (rdim) {
      q = tetra::coinduced(b, core);
    } else {
      q.base = b;
      q.name = "0";
      q.m_left = q.m_right = q.delta_left = q.delta_right = Matrix(0, 0);
    }
    if (j == 0)
      r.augmentation = into;
    else
      r.differentials.push_back(into);
    r.cores.push_back(core);
    r.objects.push_back(q);
    r.certificates.push_back(Certificate::Coinduced);
    r.generators.push_back(rdim);
    prev = into;
    cur = q;
  }
  r.checks = check_resolution(r);
  return r;
}

Tetramodule free_bicomodule(const BialgPtr& b) {
  const std::size_t d = b->dim, n = d * d;
  const Matrix& c = b->comult;  // c[p d + q, x] = coefficient of e_p ⊗ e_q in Δ(e_x)
  std::vector<Rational> eps(d);
  for (std::size_t a = 0; a < d; ++a) eps[a] = b->counit.get(0, a);
  // coef(x, p, a) = c^x_{pa}, coef(y, b, s) = c^y_{bs}
  MatrixBuilder dl(d * n, n), dr(n * d, n);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Vec cx = c.column(x), cy = c.column(y);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t a = 0; a < d; ++a) {
          const Rational& u = cx[p * d + a];
          if (u.is_zero()) continue;
          for (std::size_t bb = 0; bb < d; ++bb)
            for (std::size_t s = 0; s < d; ++s) {
              const Rational& w = cy[bb * d + s];
              if (w.is_zero()) continue;
              Rational uw = u * w;
              if (!eps[bb].is_zero()) dl.add(a * n + x * d + y, p * d + s, uw * eps[bb]);
              if (!eps[a].is_zero()) dr.add((x * d + y) * d + bb, p * d + s, uw * eps[a]);
            }
        }
    }
  Tetramodule m;
  m.base = b;
  m.dim = n;
  m.name = "(A⊗A^cop)*";
  m.delta_left = exactla::reduce(dl.finish(), b->ring);
  m.delta_right = exactla::reduce(dr.finish(), b->ring);
  return m;
}

Vec free_generator(const BialgPtr& b) {
  const std::size_t d = b->dim;
  Vec v(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) v[x * d + y] = b->counit.get(0, x) * b->counit.get(0, y);
  return v;
}

namespace {

// U with U[:, u d + v] = (δ2 m)_{uv}, the image of the free bicomodule under
// the map sending its generator to m
Matrix generator_image(const Tetramodule& x, const Matrix& coact2, const Vec& m) {
  const std::size_t d = x.base_dim(), n = x.dim;
  Vec full = coact2.apply(m);
  Matrix u(n, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t bb = 0; bb < d; ++bb) {
        const Rational& val = full[(a * n + k) * d + bb];
        if (!val.is_zero()) u.set(k, a * d + bb, val);
      }
  return u;
}

}  // namespace

ResolutionComplex free_tetra_resolution(const BialgPtr& b, std::size_t length) {
  if (length < 1) throw InputError("free_tetra_resolution: length must be at least 1");
  const std::size_t d = b->dim;
  const Ring& ring = b->ring;
  ResolutionComplex r;
  r.direction = Direction::Projective;
  r.base = b;
  r.resolved = tetra::tautological(b);
  const Tetramodule p0 = free_bicomodule(b);

  const Ring fp = Ring::prime_field(kCheckPrime);
  Tetramodule target = r.resolved;
  Matrix kernel = eye(target.dim);  // basis of the part of target still to be covered
  std::size_t prev_kernel = target.dim + 1;
  for (std::size_t i = 0; i <= length; ++i) {
    Matrix act = two_sided_action(target), coact = two_sided_coaction(target);
    std::vector<Matrix> images;
    const std::size_t want = kernel.cols();
    if (want >= prev_kernel && want > 0 && r.note.empty())
      r.note = "kernel dimension not decreasing from stage " + std::to_string(i);
    prev_kernel = want;
    // Cover the kernel by submodules generated by kernel basis vectors, taking
    // them in order and skipping those already covered. Ranks are taken mod a
    // large prime; the images lie in the kernel exactly, so full rank mod p
    // certifies the cover.
    Matrix covered(target.dim, 0);  // echelon basis mod p
    std::size_t covered_rank = 0;
    for (std::size_t k = 0; k < want && covered_rank < want; ++k) {
      Vec col = kernel.column(k);
      Vec col_p(col.size());
      for (std::size_t t = 0; t < col.size(); ++t) col_p[t] = Rational(static_cast<long long>(col[t].mod(kCheckPrime)));
      if (covered_rank > 0 && exactla::column_echelon(covered, fp).contains(col_p)) continue;
      Matrix u = generator_image(target, coact, col);
      Matrix span = act * kron(kron(eye(d), u), eye(d));
      Matrix basis = exactla::image_basis(exactla::hstack({covered, span.mod_p(kCheckPrime)}), fp);
      if (basis.cols() == covered_rank) continue;
      covered = basis;
      covered_rank = basis.cols();
      images.push_back(u);
    }
    if (covered_rank != want) {
      r.complete = false;
      r.note = "stalled at stage " + std::to_string(i);
      break;
    }
    const std::size_t g = images.size();
    Tetramodule core;
    if (g > 0) {
      core = tetra::direct_sum(std::vector<Tetramodule>(g, p0)).sum;
    } else {
      core = p0;
      core.dim = 0;
      core.delta_left = Matrix(0, 0);
      core.delta_right = Matrix(0, 0);
    }
    core.name = "P0^" + std::to_string(g);
    Matrix phi = g ? exactla::hstack(images) : Matrix(target.dim, 0);
    Matrix map = exactla::reduce(act * kron(kron(eye(d), phi), eye(d)), ring);
    Tetramodule obj;
    if (g > 0) {
      obj = tetra::induced(b, core);
    } else {
      obj = core;
      obj.m_left = Matrix(0, 0);
      obj.m_right = Matrix(0, 0);
      obj.name = "0";
    }
    if (i == 0)
      r.augmentation = map;
    else
      r.differentials.push_back(map);
    r.cores.push_back(core);
    r.objects.push_back(obj);
    r.certificates.push_back(Certificate::FreeInduced);
    r.generators.push_back(g);
    target = obj;
    kernel = exactla::kernel_basis(map, ring);
  }
  r.checks = check_resolution(r);
  return r;
}

}  // namespace hopfcoh::resolve
