#pragma once

#include <cstdint>
#include <vector>

#include "hopfcoh/tetra/functors.hpp"
#include "hopfcoh/tetra/tetramodule.hpp"

namespace hopfcoh::monoidal {

using exactla::Matrix;
using tetra::TetraMap;
using tetra::Tetramodule;
using tetra::box1;
using tetra::box2;

enum class TensorKind { Box1, Box2, Otimes1, Otimes2 };

// A tensor product together with the way it sits in the external product.
// Otimes1 is a quotient of box1 and Otimes2 a subspace of box2.
struct TensorWitness {
  TensorKind kind = TensorKind::Box1;
  Tetramodule result;
  Tetramodule ambient;
  Matrix to_result;    // ambient -> result (projection)
  Matrix from_result;  // result -> ambient (section, or the inclusion)
  Matrix relations;    // Otimes1: generators (m a)⊠n - m⊠(a n) as columns
  exactla::SubQuotient sq;
};

TensorWitness box1_witness(const Tetramodule& m, const Tetramodule& n);
TensorWitness box2_witness(const Tetramodule& m, const Tetramodule& n);
TensorWitness otimes1(const Tetramodule& m, const Tetramodule& n);
TensorWitness otimes2(const Tetramodule& m, const Tetramodule& n);

// f ⊗ g between two witnesses of the same kind. Throws InvariantError if
// f ⊗ g does not descend (quotients) or does not corestrict (subspaces).
Matrix tensor_maps(const TensorWitness& src, const TensorWitness& tgt, const Matrix& f, const Matrix& g);

struct UnitIsos {
  TensorWitness a_m1, m_a1, a_m2, m_a2;  // A⊗1M, M⊗1A, A⊗2M, M⊗2A
  Matrix lambda1, rho1;                  // A⊗1M -> M, M⊗1A -> M
  Matrix lambda2, rho2;                  // M -> A⊗2M, M -> M⊗2A
  Matrix lambda1_inv, rho1_inv, lambda2_inv, rho2_inv;
  Verdict checks;  // morphism checks and two-sided inverse identities
};
UnitIsos unit_isos(const Tetramodule& m);

// (M⊗N)⊗P -> M⊗(N⊗P) for either internal product, with its inverse
struct Associator {
  TensorWitness inner_left, outer_left, inner_right, outer_right;
  Matrix forward, backward;
  Verdict checks;
};
Associator associator1(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p);
Associator associator2(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p);

// (M⊠2N)⊠1(P⊠2Q) -> (M⊠1P)⊠2(N⊠1Q), m⊗n⊗p⊗q -> m⊗p⊗n⊗q
TetraMap phi0(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p, const Tetramodule& q);

struct Eta {
  TensorWitness mn, pq, source;  // M⊗2N, P⊗2Q, (M⊗2N)⊗1(P⊗2Q)
  TensorWitness mp, nq, target;  // M⊗1P, N⊗1Q, (M⊗1P)⊗2(N⊗1Q)
  Matrix matrix;
  Verdict checks;  // descent, corestriction, morphism
};
Eta eta(const Tetramodule& m, const Tetramodule& n, const Tetramodule& p, const Tetramodule& q);

struct Comparison {
  TensorWitness m1n, m2n, n2m;
  Matrix phi;    // M⊗1N -> M⊗2N, from η_{M,A,A,N}
  Matrix theta;  // M⊗1N -> N⊗2M, from η_{A,M,N,A}
  Verdict checks;
};
Comparison comparison_maps(const Tetramodule& m, const Tetramodule& n);

struct TwoFoldOptions {
  std::size_t sample = 5;
  std::uint64_t seed = 1;
  bool corrupt_eta = false;  // negative control: perturb one entry of every η
};
Verdict verify_two_fold(const std::vector<Tetramodule>& corpus, const TwoFoldOptions& opts = {});

}  // namespace hopfcoh::monoidal
