#include "hopfcoh/errors.hpp"
#include "hopfcoh/exactla/linalg.hpp"
#include "hopfcoh/resolve/resolve.hpp"

namespace hopfcoh::resolve {

using exactla::kron;
using exactla::MatrixBuilder;
using exactla::Rational;
using exactla::Ring;

namespace {

Matrix eye(std::size_t n) { return Matrix::identity(n); }

Matrix two_sided_coaction(const Tetramodule& m) { return kron(eye(m.base_dim()), m.dr()) * m.dl(); }
Matrix two_sided_action(const Tetramodule& m) { return m.ml() * kron(eye(m.base_dim()), m.mr()); }

// vec f -> vec(X (I_p ⊗ f ⊗ I_q) Y) for f of shape fr x fc, row-major
Matrix sandwich(const Matrix& x, std::size_t p, std::size_t q, std::size_t fr, std::size_t fc, const Matrix& y) {
  if (x.cols() != p * fr * q || y.rows() != p * fc * q) throw InvariantError("sandwich: shape mismatch");
  const std::size_t cols = y.cols();
  MatrixBuilder out(x.rows() * cols, fr * fc);
  for (std::size_t u = 0; u < x.rows(); ++u)
    for (const auto& [col, xv] : x.row(u)) {
      std::size_t b = col % q, as = col / q, s = as % fr, a = as / fr;
      for (std::size_t t = 0; t < fc; ++t)
        for (const auto& [c, yv] : y.row((a * fc + t) * q + b)) out.add(u * cols + c, s * fc + t, xv * yv);
    }
  return out.finish();
}

bool is_free(Certificate c) { return c == Certificate::FreeInduced || c == Certificate::FreeBimodule; }

// generator vectors of P_i as columns
Matrix generator_columns(const ResolutionComplex& p, std::size_t i) {
  const std::size_t g = p.generators.at(i), n = p.cores.at(i).dim;
  Matrix gens(n, g);
  if (p.certificates.at(i) == Certificate::FreeBimodule) {
    gens = eye(n);
  } else {
    Vec e = free_generator(p.base);
    const std::size_t d2 = e.size();
    for (std::size_t k = 0; k < g; ++k)
      for (std::size_t t = 0; t < d2; ++t)
        if (!e[t].is_zero()) gens.set(k * d2 + t, k, e[t]);
  }
  return p.slot(i) * gens;
}

// vec y (dim X x g) -> vec Φ(y) (dim X x dim core), where Φ(y) is the core map
// sending generator k to y_k
Matrix core_map_operator(const ResolutionComplex& p, std::size_t i, const Tetramodule& x) {
  const std::size_t g = p.generators.at(i), n = x.dim;
  if (p.certificates.at(i) == Certificate::FreeBimodule) return eye(n * g);
  const std::size_t d = x.base_dim(), d2 = d * d, cols = g * d2;
  Matrix coact = two_sided_coaction(x);  // rows (a, m, b)
  MatrixBuilder out(n * cols, n * g);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t b = 0; b < d; ++b)
        for (const auto& [s, v] : coact.row((a * n + m) * d + b))
          for (std::size_t k = 0; k < g; ++k) out.add(m * cols + k * d2 + a * d + b, s * g + k, v);
  return out.finish();
}

// basis of ker(P_top -> P_top-1) (of the augmentation for length 0)
Matrix top_kernel(const ResolutionComplex& p) {
  const std::size_t t = p.length();
  return exactla::kernel_basis(t ? p.differentials[t - 1] : p.augmentation, p.base->ring);
}

// projection of Q^top onto its cokernel by the incoming map
Matrix top_cokernel(const ResolutionComplex& q) {
  const std::size_t t = q.length();
  Matrix in = t ? q.differentials[t - 1] : q.augmentation;
  return exactla::quotient_basis(q.objects[t].dim, exactla::image_basis(in, q.base->ring), q.base->ring).projection;
}

}  // namespace

Matrix extend_from_generators(const ResolutionComplex& p, std::size_t i, const Tetramodule& x, const Matrix& y) {
  if (!is_free(p.certificates.at(i))) throw PreconditionError("extend_from_generators: object is not free");
  const std::size_t g = p.generators.at(i), nc = p.cores.at(i).dim;
  if (y.rows() != x.dim || y.cols() != g) throw InputError("extend_from_generators: data shape");
  Vec phi = core_map_operator(p, i, x).apply(gs::flatten(y));
  Matrix core = gs::unflatten(phi, x.dim, nc);
  const std::size_t d = x.base_dim();
  return exactla::reduce(two_sided_action(x) * kron(kron(eye(d), core), eye(d)), x.ring());
}

HomComplex hom_complex(const ResolutionComplex& p, const Tetramodule& x, std::size_t max_degree) {
  if (p.direction != Direction::Projective) throw PreconditionError("hom_complex: needs a projective resolution");
  if (p.length() < max_degree) throw InputError("hom_complex: resolution too short");
  const std::size_t d = x.base_dim();
  Matrix act = two_sided_action(x);
  HomComplex h;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    const bool top = i == p.length();
    if (!is_free(p.certificates[i]) || (!top && !is_free(p.certificates[i + 1])))
      throw PreconditionError("hom_complex: objects must be free");
    const std::size_t g = p.generators[i], nc = p.cores[i].dim;
    h.dims.push_back(x.dim * g);
    // images of the next generators inside P_i, or the whole kernel at the top
    Matrix gens = top ? top_kernel(p) : p.differentials[i] * generator_columns(p, i + 1);
    Matrix op = sandwich(act, d, d, x.dim, nc, gens) * core_map_operator(p, i, x);
    h.d.push_back(exactla::reduce(op, x.ring()));
  }
  return h;
}

std::vector<Matrix> pq_differentials(const ResolutionComplex& p, const ResolutionComplex& q, std::size_t max_degree) {
  if (p.direction != Direction::Projective || q.direction != Direction::Injective)
    throw PreconditionError("ext_via_pq: needs a projective and an injective resolution");
  for (auto c : p.certificates)
    if (c != Certificate::Induced && c != Certificate::FreeInduced)
      throw PreconditionError("ext_via_pq: projective side lacks induced certificates");
  for (auto c : q.certificates)
    if (c != Certificate::Coinduced) throw PreconditionError("ext_via_pq: injective side lacks coinduced certificates");
  if (p.length() < max_degree || q.length() < max_degree) throw InputError("ext_via_pq: resolutions too short");
  const std::size_t d = p.base->dim;
  const Ring& ring = p.base->ring;

  auto nd = [&](std::size_t i) { return p.cores[i].dim; };
  auto id = [&](std::size_t j) { return q.cores[j].dim; };
  // horizontal: φ -> act_I (1⊗φ⊗1) d_P ι, vertical: φ -> π d_Q (1⊗φ⊗1) coact_N
  Matrix p_top = p.length() == max_degree ? top_kernel(p) : Matrix();
  Matrix q_top = q.length() == max_degree ? top_cokernel(q) : Matrix();
  auto horizontal = [&](std::size_t i, std::size_t j) {
    Matrix dp = i == p.length() ? p_top : p.differentials[i] * p.slot(i + 1);
    Matrix act = id(j) ? two_sided_action(q.cores[j]) : Matrix(0, 0);
    return sandwich(act, d, d, id(j), nd(i), dp);
  };
  auto vertical = [&](std::size_t i, std::size_t j) {
    Matrix e = j == q.length() ? q_top : q.slot(j + 1) * q.differentials[j];
    Matrix coact = nd(i) ? two_sided_coaction(p.cores[i]) : Matrix(0, 0);
    return sandwich(e, d, d, id(j), nd(i), coact);
  };

  std::vector<Matrix> out;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::vector<std::size_t> src_off(n + 2, 0), tgt_off(n + 3, 0);
    for (std::size_t i = 0; i <= n; ++i) src_off[i + 1] = src_off[i] + nd(i) * id(n - i);
    // target block sizes; at the top the outer blocks become test spaces
    auto tgt_size = [&](std::size_t i) -> std::size_t {
      const std::size_t j = n + 1 - i;
      if (i > p.length()) return id(j) * p_top.cols();
      if (j > q.length()) return q_top.rows() * nd(i);
      return nd(i) * id(j);
    };
    for (std::size_t i = 0; i <= n + 1; ++i) tgt_off[i + 1] = tgt_off[i] + tgt_size(i);
    Matrix dn(tgt_off[n + 2], src_off[n + 1]);
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t j = n - i;
      dn.add_block(tgt_off[i + 1], src_off[i], horizontal(i, j));
      Matrix v = vertical(i, j);
      dn.add_block(tgt_off[i], src_off[i], i % 2 ? -v : v);
    }
    out.push_back(exactla::reduce(dn, ring));
  }
  return out;
}

CohomologyReport ext_via_pq(const ResolutionComplex& p, const ResolutionComplex& q, std::size_t max_degree) {
  auto ds = pq_differentials(p, q, max_degree);
  std::vector<std::size_t> dims;
  for (const auto& m : ds) dims.push_back(m.cols());
  auto rep = gs::cochain_cohomology("Ext(P,Q)", p.base->ring, dims, ds, max_degree);
  for (auto& dr : rep.degrees)
    for (std::size_t i = 0; i <= dr.degree; ++i)
      dr.bidegrees.push_back({{i, dr.degree - i}, p.cores[i].dim * q.cores[dr.degree - i].dim});
  return rep;
}

CohomologyReport ext_tetra(const BialgPtr& b, std::size_t max_degree) {
  auto res = free_tetra_resolution(b, max_degree);
  if (!res.checks.ok()) throw InvariantError("ext_tetra: resolution check failed: " + res.checks.summary());
  auto h = hom_complex(res, res.resolved, max_degree);
  auto rep = gs::cochain_cohomology("Ext_Tetra(A,A)", b->ring, h.dims, h.d, max_degree);
  for (auto& dr : rep.degrees) dr.bidegrees.push_back({{dr.degree, 0}, dr.cochain_dim});
  return rep;
}

ClassOracle::ClassOracle(Category cat, const BialgPtr& base, std::size_t max_degree)
    : cat_(cat), base_(base), max_degree_(max_degree) {
  res_ = cat == Category::Bimodules ? bimodule_bar_resolution(base, max_degree)
                                    : free_tetra_resolution(base, max_degree);
  if (!res_.checks.ok()) throw InvariantError("class oracle: resolution check failed: " + res_.checks.summary());
  unit_ = res_.resolved;
  hom_ = hom_complex(res_, unit_, max_degree);
  const Ring& ring = base->ring;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Matrix z = exactla::kernel_basis(hom_.d[k], ring);
    Matrix b = k ? hom_.d[k - 1] : Matrix(hom_.dims[0], 0);
    cohomology_.push_back(exactla::subquotient_basis(hom_.dims[k], z, b, ring));
  }
}

std::size_t ClassOracle::cohomology_dim(std::size_t k) const { return cohomology_.at(k).dim; }

ClassOracle::Class ClassOracle::of(const extcat::ExtensionComplex& e) const {
  const std::size_t k = e.degree();
  if (k > max_degree_) throw InputError("class oracle: degree above the prepared range");
  if (e.category != cat_) throw InputError("class oracle: category mismatch");
  if (!tetra::same_base(e.unit, unit_)) throw InputError("class oracle: base mismatch");
  const Ring& ring = base_->ring;
  // f_j: P_j -> X_{k-j}, lifting f_{j-1} d_{j-1} (the augmentation for j = 0)
  Matrix f;
  Matrix y;
  for (std::size_t j = 0; j <= k; ++j) {
    Matrix gens = generator_columns(res_, j);
    Matrix target = j == 0 ? res_.augmentation * gens : f * res_.differentials[j - 1] * gens;
    const std::size_t s = k - j;
    auto sol = exactla::solve_many(e.maps[s], target, ring);
    if (!sol) throw InvariantError("class oracle: lifting failed at step " + std::to_string(j));
    y = exactla::reduce(*sol, ring);
    f = extend_from_generators(res_, j, e.term(s), y);
  }
  Class c;
  c.degree = k;
  c.cocycle = y;
  try {
    c.coords = coordinates(k, y);
  } catch (const InputError&) {
    throw InvariantError("class oracle: lifted map is not a cocycle");
  }
  return c;
}

Vec ClassOracle::coordinates(std::size_t k, const Matrix& cocycle) const {
  if (k > max_degree_) throw InputError("class oracle: degree above the prepared range");
  const Ring& ring = base_->ring;
  Vec flat = gs::flatten(cocycle);
  if (flat.size() != hom_.dims[k]) throw InputError("class oracle: cocycle shape");
  if (!exactla::is_zero_in(Matrix::column_vector(hom_.d[k].apply(flat)), ring))
    throw InputError("class oracle: not a cocycle");
  Vec coords = cohomology_[k].projection.apply(flat);
  for (auto& x : coords) x = exactla::reduce(Matrix::scalar(x), ring).get(0, 0);
  return coords;
}

ClassOracle::Class class_of_extension(const extcat::ExtensionComplex& e) {
  ClassOracle o(e.category, e.unit.base, e.degree());
  return o.of(e);
}

}  // namespace hopfcoh::resolve
