#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "hopfcoh/tetra/tetramodule.hpp"

namespace hopfcoh::tetra {

// External products on M1 ⊗ M2. Each structure map of the result is built when
// the pieces it needs are present, so half-structures go through unchanged.
//   box1: a(m1⊠m2) = (am1)⊠m2, (m1⊠m2)a = m1⊠(m2a), coactions multiply the
//         outer legs.
//   box2: actions go through Δ(a), Δ_ℓ reads m1 only, Δ_r reads m2 only.
Tetramodule box1(const Tetramodule& m1, const Tetramodule& m2);
Tetramodule box2(const Tetramodule& m1, const Tetramodule& m2);

// L(N) = A ⊠1 N ⊠1 A for a bicomodule N
Tetramodule induced(const BialgPtr& b, const Tetramodule& n);
// R(M) = A ⊠2 M ⊠2 A for a bimodule M
Tetramodule coinduced(const BialgPtr& b, const Tetramodule& m);

// Linear-coordinate matrices for building intertwining systems in the entries
// of an unknown f (fr x fc, vectorized row-major).
// vec(X f Y)
Matrix coeff_x_f_y(const Matrix& x, const Matrix& y);
// vec(X (I_p ⊗ f ⊗ I_q))
Matrix coeff_x_ifi(const Matrix& x, std::size_t p, std::size_t q, std::size_t fr, std::size_t fc);
// vec((I_p ⊗ f ⊗ I_q) Y)
Matrix coeff_ifi_y(std::size_t p, std::size_t q, std::size_t fr, std::size_t fc, const Matrix& y);

// Hom-space as the kernel of the stacked intertwining conditions for every
// structure map present on both sides.
struct HomSpace {
  std::size_t source_dim = 0, target_dim = 0;
  Matrix basis;                    // columns: vec(f), row-major
  std::vector<std::size_t> free;   // coordinates of a kernel vector are its entries here

  std::size_t dim() const { return basis.cols(); }
  Matrix element(std::size_t k) const;             // k-th basis map
  Matrix combine(const exactla::Vec& c) const;     // Σ c_k f_k
  exactla::Vec coords(const Matrix& f) const;      // assumes f lies in the space
};
HomSpace hom_space(const Tetramodule& s, const Tetramodule& t);
Matrix vectorize(const Matrix& f);
Matrix random_element(const HomSpace& h, std::mt19937_64& rng, const Ring& ring);

struct Adjunction {
  HomSpace lhs;     // the side with the forgetful functor
  HomSpace rhs;     // the Tetra side
  Matrix forward;   // rhs coordinates -> lhs coordinates
  Matrix backward;  // lhs coordinates -> rhs coordinates
  bool round_trip_ok = false;
};
// Hom_Bicomod(N, F1 T) vs Hom_Tetra(L N, T): restrict to 1⊠N⊠1, extend by a·h(n)·b
Adjunction adjunction_left(const Tetramodule& n, const Tetramodule& t);
// Hom_Bimod(F2 T, M) vs Hom_Tetra(T, R M): compose with ε⊗id⊗ε, extend by t_{-1}⊗h(t_0)⊗t_1
Adjunction adjunction_right(const Tetramodule& t, const Tetramodule& m);

// unit-slot maps N -> L(N), n -> 1⊠n⊠1 and R(M) -> M, a⊠m⊠b -> ε(a)mε(b)
Matrix induced_unit_slot(const BialgPtr& b, std::size_t n_dim);
Matrix coinduced_counit_slot(const BialgPtr& b, std::size_t m_dim);

TetraMap canonical_epi(const Tetramodule& m);   // L(F1 m) -> m, a⊠m⊠b -> amb
TetraMap canonical_mono(const Tetramodule& m);  // m -> R(F2 m), m -> m_{-1}⊠m_0⊠m_1

struct FreenessWitness {
  Matrix coinvariants;  // columns span {m : Δ_ℓ m = 1⊗m}
  Matrix action;        // A ⊗ coinv -> M
  std::size_t coinvariant_dim = 0;
  bool bijective = false;
};
FreenessWitness hopf_freeness_witness(const Tetramodule& m);

}  // namespace hopfcoh::tetra
