#include <map>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/exactla/linalg.hpp"
#include "hopfcoh/resolve/resolve.hpp"

namespace hopfcoh::resolve {

using exactla::kron;
using exactla::MatrixBuilder;
using exactla::Rational;
using exactla::Ring;

namespace {

using Mono = std::vector<std::size_t>;  // exponent vector
using Subset = std::vector<std::size_t>;

// all monomials in n variables of total degree exactly w
std::vector<Mono> monomials(std::size_t n, std::size_t w) {
  std::vector<Mono> out;
  Mono cur(n, 0);
  auto rec = [&](auto& self, std::size_t var, std::size_t left) -> void {
    if (var + 1 == n) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var + 1, left - e);
    }
  };
  if (n == 0) {
    if (w == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, w);
  return out;
}

std::vector<Subset> subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Subset s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (s.size() == k) out.push_back(s);
  }
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) { return k > n ? 0 : subsets(n, k).size(); }

// basis of (S ⊗ Λ^i ⊗ S) with |a| + |b| = poly
struct Piece {
  std::vector<std::tuple<Mono, Subset, Mono>> basis;
  std::map<std::tuple<Mono, Subset, Mono>, std::size_t> index;

  Piece(std::size_t n, std::size_t i, std::size_t poly) {
    auto sets = subsets(n, i);
    for (std::size_t da = 0; da <= poly; ++da)
      for (const auto& a : monomials(n, da))
        for (const auto& s : sets)
          for (const auto& b : monomials(n, poly - da)) {
            index[{a, s, b}] = basis.size();
            basis.emplace_back(a, s, b);
          }
  }
  std::size_t dim() const { return basis.size(); }
  std::size_t at(const Mono& a, const Subset& s, const Mono& b) const { return index.at({a, s, b}); }
};

Rational sgn(std::size_t k) { return Rational(k % 2 ? -1 : 1); }

// P_i -> P_{i-1}, weight |a|+|b|+i preserved
Matrix koszul_d(std::size_t i, const Piece& src, const Piece& tgt) {
  MatrixBuilder out(tgt.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    const auto& [a, s, b] = src.basis[c];
    for (std::size_t r = 0; r < i; ++r) {
      Subset t = s;
      t.erase(t.begin() + static_cast<long>(r));
      Mono a2 = a, b2 = b;
      ++a2[s[r]];
      ++b2[s[r]];
      out.add(tgt.at(a2, t, b), c, sgn(r));
      out.add(tgt.at(a, t, b2), c, -sgn(r));
    }
  }
  return out.finish();
}

// e_k ∧ ξ_T, returning false when k ∈ T
bool wedge_front(std::size_t k, const Subset& t, Subset& out, Rational& sign) {
  std::size_t before = 0;
  for (auto x : t) {
    if (x == k) return false;
    if (x < k) ++before;
  }
  out = t;
  out.insert(out.begin() + static_cast<long>(before), k);
  sign = sgn(before);
  return true;
}

// Q^j -> Q^{j+1}, weight |a|+|b|+j preserved
Matrix koszul_delta(std::size_t n, const Piece& src, const Piece& tgt) {
  MatrixBuilder out(tgt.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    const auto& [a, t, b] = src.basis[c];
    for (std::size_t k = 0; k < n; ++k) {
      Subset u;
      Rational sign;
      if (!wedge_front(k, t, u, sign)) continue;
      if (a[k] > 0) {
        Mono a2 = a;
        --a2[k];
        out.add(tgt.at(a2, u, b), c, sign * Rational(static_cast<long long>(a[k])));
      }
      if (b[k] > 0) {
        Mono b2 = b;
        --b2[k];
        out.add(tgt.at(a, u, b2), c, -sign * Rational(static_cast<long long>(b[k])));
      }
    }
  }
  return out.finish();
}

// S_w -> S ⊗ S, x^α -> Σ C(α, β) x^β ⊗ x^{α-β}
Matrix coproduct(std::size_t n, std::size_t w, const Piece& tgt) {
  auto src = monomials(n, w);
  MatrixBuilder out(tgt.dim(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Mono& al = src[c];
    std::vector<Mono> betas{Mono{}};
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Mono> next;
      for (const auto& be : betas)
        for (std::size_t e = 0; e <= al[v]; ++e) {
          Mono x = be;
          x.push_back(e);
          next.push_back(x);
        }
      betas = std::move(next);
    }
    for (const auto& be : betas) {
      Mono rest(n);
      mpz_class coeff = 1;
      for (std::size_t v = 0; v < n; ++v) {
        rest[v] = al[v] - be[v];
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), al[v], be[v]);
        coeff *= bin;
      }
      out.add(tgt.at(be, {}, rest), c, Rational(static_cast<long long>(coeff.get_si())));
    }
  }
  return out.finish();
}

// S ⊗ S (weight w) -> S_w
Matrix multiplication(std::size_t n, std::size_t w, const Piece& src) {
  auto tgt = monomials(n, w);
  std::map<Mono, std::size_t> idx;
  for (std::size_t i = 0; i < tgt.size(); ++i) idx[tgt[i]] = i;
  MatrixBuilder out(tgt.size(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    const auto& [a, s, b] = src.basis[c];
    Mono ab(n);
    for (std::size_t v = 0; v < n; ++v) ab[v] = a[v] + b[v];
    out.add(idx.at(ab), c, Rational(1));
  }
  return out.finish();
}

// rank-checks exactness of a complex given by consecutive maps
void check_exact(Verdict& v, const std::string& name, const std::vector<Matrix>& maps) {
  const Ring q = Ring::rationals();
  for (std::size_t t = 0; t + 1 < maps.size(); ++t)
    v.add(name + " d∘d at " + std::to_string(t), maps[t + 1] * maps[t], q);
  for (std::size_t t = 0; t + 1 < maps.size(); ++t) {
    std::size_t mid = maps[t].rows();
    std::size_t ker = mid - exactla::rank(maps[t + 1], q);
    std::size_t img = exactla::rank(maps[t], q);
    v.add_flag(name + " exact at " + std::to_string(t + 1), ker == img,
               "kernel " + std::to_string(ker) + ", image " + std::to_string(img));
  }
}

// the component of a map on 1 ⊗ Λ ⊗ 1 (constant outer monomials)
Matrix counit_component(std::size_t n, std::size_t src_deg, std::size_t tgt_deg, const Piece& image_piece,
                        const Matrix& m) {
  auto src = subsets(n, src_deg), tgt = subsets(n, tgt_deg);
  Mono one(n, 0);
  Matrix out(tgt.size(), src.size());
  for (std::size_t r = 0; r < tgt.size(); ++r) {
    auto it = image_piece.index.find({one, tgt[r], one});
    if (it == image_piece.index.end()) continue;
    for (const auto& [c, v] : m.row(it->second)) out.set(r, c, v);
  }
  return out;
}

}  // namespace

KoszulReport koszul_sv(std::size_t n, std::size_t top) {
  if (n < 1 || n > 3) throw InputError("koszul-sv: dim V must be 1, 2 or 3");
  if (top < n + 1) throw InputError("koszul-sv: truncation degree must be at least dim V + 1");
  KoszulReport rep;
  for (std::size_t i = 0; i <= n; ++i) {
    rep.p_cores.push_back({n, i, subsets(n, i), false, top});
    rep.q_cores.push_back({n, i, subsets(n, i), true, top});
  }

  // P: 0 -> P_n -> ... -> P_0 -> S -> 0 in each weight w ≤ top
  for (std::size_t w = 0; w <= top; ++w) {
    std::vector<Matrix> maps;  // from the left end: P_min(n,w) -> ... -> P_0 -> S_w
    const std::size_t imax = std::min(n, w);
    maps.push_back(Matrix(Piece(n, imax, w - imax).dim(), 0));
    for (std::size_t i = imax; i >= 1; --i)
      maps.push_back(koszul_d(i, Piece(n, i, w - i), Piece(n, i - 1, w - i + 1)));
    maps.push_back(multiplication(n, w, Piece(n, 0, w)));
    maps.push_back(Matrix(0, monomials(n, w).size()));
    check_exact(rep.checks, "P weight " + std::to_string(w), maps);
  }

  // Q: 0 -> S_w -> Q^0 -> ... -> Q^min(n,w) -> 0 with |a|+|b| = w - j
  for (std::size_t w = 0; w <= top; ++w) {
    const std::size_t jmax = std::min(n, w);
    std::vector<Matrix> maps;
    maps.push_back(Matrix(monomials(n, w).size(), 0));
    maps.push_back(coproduct(n, w, Piece(n, 0, w)));
    for (std::size_t j = 0; j < jmax; ++j)
      maps.push_back(koszul_delta(n, Piece(n, j, w - j), Piece(n, j + 1, w - j - 1)));
    maps.push_back(Matrix(0, Piece(n, jmax, w - jmax).dim()));
    check_exact(rep.checks, "Q weight " + std::to_string(w), maps);
  }

  // reduced differentials on Hom(Λ^i V, Λ^j V^*)
  std::vector<Matrix> hor, ver;  // hor[i]: Λ^{i+1} -> Λ^i, ver[j]: Λ^j -> Λ^{j+1}
  for (std::size_t i = 0; i < n; ++i)
    hor.push_back(counit_component(n, i + 1, i, Piece(n, i, 1),
                                   koszul_d(i + 1, Piece(n, i + 1, 0), Piece(n, i, 1))));
  for (std::size_t j = 0; j < n; ++j)
    ver.push_back(counit_component(n, j, j + 1, Piece(n, j + 1, 0),
                                   koszul_delta(n, Piece(n, j, 0), Piece(n, j + 1, 0))));

  const std::size_t max_degree = 2 * n + 1;
  auto block = [&](std::size_t i, std::size_t j) { return binom(n, i) * binom(n, j); };
  std::vector<std::size_t> dims;
  std::vector<Matrix> ds;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    std::vector<std::size_t> src_off{0}, tgt_off{0};
    for (std::size_t i = 0; i <= k; ++i) src_off.push_back(src_off.back() + block(i, k - i));
    for (std::size_t i = 0; i <= k + 1; ++i) tgt_off.push_back(tgt_off.back() + block(i, k + 1 - i));
    Matrix dk(tgt_off.back(), src_off.back());
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t j = k - i;
      if (i > n || j > n) continue;
      // φ: Λ^i -> Λ^j (binom(n,j) x binom(n,i)), φ -> φ∘hor[i]
      if (i < n && block(i + 1, j))
        dk.add_block(tgt_off[i + 1], src_off[i], kron(Matrix::identity(binom(n, j)), hor[i].transpose()));
      // φ -> ver[j]∘φ
      if (j < n && block(i, j + 1)) {
        Matrix v = kron(ver[j], Matrix::identity(binom(n, i)));
        dk.add_block(tgt_off[i], src_off[i], i % 2 ? -v : v);
      }
    }
    dims.push_back(src_off.back());
    ds.push_back(dk);
  }
  rep.cohomology = gs::cochain_cohomology("Ext_Tetra(S,S) via Koszul", Ring::rationals(), dims, ds, max_degree);
  for (auto& dr : rep.cohomology.degrees)
    for (std::size_t i = 0; i <= dr.degree; ++i)
      if (i <= n && dr.degree - i <= n) dr.bidegrees.push_back({{i, dr.degree - i}, block(i, dr.degree - i)});
  return rep;
}

}  // namespace hopfcoh::resolve
