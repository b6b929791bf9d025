#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfcoh/extcat/extension.hpp"
#include "hopfcoh/gs/gs.hpp"
#include "hopfcoh/tetra/functors.hpp"

namespace hopfcoh::resolve {

using exactla::Matrix;
using exactla::Vec;
using extcat::Category;
using gs::CohomologyReport;
using tetra::BialgPtr;
using tetra::Tetramodule;

enum class Direction { Projective, Injective };

// How an object of a resolution was built from its core.
//   Induced:      L(N) for a bicomodule N
//   FreeInduced:  L(P0^g), P0 = (A ⊗ A^cop)^* the free bicomodule of rank one
//   FreeBimodule: A ⊗ V ⊗ A for a vector space V (bimodules only)
//   Coinduced:    R(I) for a bimodule I
enum class Certificate { Induced, FreeInduced, FreeBimodule, Coinduced };
std::string certificate_name(Certificate c);

// Projective: ... -> P_1 -> P_0 -> M, differentials[i]: P_{i+1} -> P_i,
// augmentation P_0 -> M. Injective: M -> Q^0 -> Q^1 -> ..., differentials[j]:
// Q^j -> Q^{j+1}, augmentation M -> Q^0.
struct ResolutionComplex {
  Direction direction = Direction::Projective;
  Category category = Category::Tetramodules;
  BialgPtr base;
  Tetramodule resolved;
  std::vector<Tetramodule> objects;
  std::vector<Tetramodule> cores;  // N_i, V_i or I_j
  std::vector<Certificate> certificates;
  std::vector<std::size_t> generators;  // g_i for FreeInduced objects, dim V_i for FreeBimodule
  std::vector<Matrix> differentials;
  Matrix augmentation;
  Verdict checks;  // morphism checks, d² = 0, exactness by ranks
  bool complete = true;
  std::string note;

  std::size_t length() const { return objects.empty() ? 0 : objects.size() - 1; }
  // core -> object (n -> 1⊠n⊠1) for projective resolutions; object -> core
  // (ε⊗id⊗ε) for injective ones
  Matrix slot(std::size_t i) const;
};

// Rank-verifies exactness and the morphism property of every map.
Verdict check_resolution(const ResolutionComplex& r);

// P_i = A ⊠1 A^{⊗i} ⊠1 A = L(A^{⊗i}) with the bar differential, augmentation
// the multiplication A⊠1A -> A
ResolutionComplex bar_resolution(const BialgPtr& b, std::size_t length);
// the same complex of free A-bimodules, resolving A in bimodules
ResolutionComplex bimodule_bar_resolution(const BialgPtr& base, std::size_t length);
// Q^j = R(A^{⊗j}) with the cobar differential, coaugmentation Δ: A -> A⊠2A
ResolutionComplex cobar_coresolution(const BialgPtr& b, std::size_t length);
// Q^j = R(I_j) with I_j = Hom_k(A⊗A, V_j) cofree bimodules; each step embeds
// the cokernel of the previous map. V_j is spanned by coordinate functionals
// on the cokernel, added one at a time (seeded choice among the coordinates of
// a surviving kernel vector) until the induced tetramodule map is injective.
ResolutionComplex injective_coinduced_resolution(const BialgPtr& b, std::size_t length, std::uint64_t seed = 1);
// projective resolution of A by L(P0^g), generators chosen greedily from
// kernel bases
ResolutionComplex free_tetra_resolution(const BialgPtr& b, std::size_t length);

// The free bicomodule (A ⊗ A^cop)^*: coordinates indexed by (x, y), coactions
// from the convolution product. unit_generator() is ε ⊗ ε.
Tetramodule free_bicomodule(const BialgPtr& b);
Vec free_generator(const BialgPtr& b);

// Hom complex Hom(P_•, X) of a FreeInduced or FreeBimodule resolution in
// generator coordinates (C^i = X^{g_i}, flattened dim X x g_i row-major).
// max_degree may equal p.length(): the last d is then restriction to
// ker(P_top -> P_top-1), which has the right kernel.
struct HomComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;  // d[i]: C^i -> C^{i+1}
};
HomComplex hom_complex(const ResolutionComplex& p, const Tetramodule& x, std::size_t max_degree);
// the map P_i -> X determined by generator data y (dim X x g_i)
Matrix extend_from_generators(const ResolutionComplex& p, std::size_t i, const Tetramodule& x, const Matrix& y);

// H(Hom_Tetra(P_•, Q^•)) through Hom_Tetra(L N, R I) = Hom_k(N, I).
// Both resolutions need length >= max_degree. At the top, maps out of the last
// P are tested on the kernel of its differential and maps into the last Q on
// the cokernel of the incoming one, so no further objects are required.
CohomologyReport ext_via_pq(const ResolutionComplex& p, const ResolutionComplex& q, std::size_t max_degree);
// total differentials of that double complex (for block comparisons)
std::vector<Matrix> pq_differentials(const ResolutionComplex& p, const ResolutionComplex& q, std::size_t max_degree);

// Ext_Tetra(A, A) from free_tetra_resolution
CohomologyReport ext_tetra(const BialgPtr& b, std::size_t max_degree);

// Class of an extension in Ext^k(A, A): lift id_A along the free resolution
// (bimodule bar for bimodules, free_tetra_resolution for tetramodules) and
// read off the cocycle in a fixed basis of the cohomology.
class ClassOracle {
 public:
  ClassOracle(Category cat, const BialgPtr& base, std::size_t max_degree);
  struct Class {
    std::size_t degree = 0;
    Vec coords;      // in the chosen basis of H^degree
    Matrix cocycle;  // generator data of the lifted map P_k -> A
  };
  Class of(const extcat::ExtensionComplex& e) const;
  // coordinates of a cocycle given as generator data; throws InputError when
  // it is not a cocycle
  Vec coordinates(std::size_t k, const Matrix& cocycle) const;
  std::size_t cohomology_dim(std::size_t k) const;
  const ResolutionComplex& resolution() const { return res_; }

 private:
  Category cat_;
  BialgPtr base_;
  std::size_t max_degree_;
  ResolutionComplex res_;
  Tetramodule unit_;
  HomComplex hom_;
  std::vector<exactla::SubQuotient> cohomology_;
};
ClassOracle::Class class_of_extension(const extcat::ExtensionComplex& e);

// S(V) for dim V = n, truncated at polynomial degree D
struct KoszulCore {
  std::size_t dim_v = 0;
  std::size_t degree = 0;                      // i (exterior degree)
  std::vector<std::vector<std::size_t>> basis;  // increasing index subsets
  bool dual = false;                            // Λ^i V^* with trivial action
  std::size_t truncation = 0;
};
struct KoszulReport {
  CohomologyReport cohomology;
  std::vector<KoszulCore> p_cores, q_cores;
  Verdict checks;  // complex property, truncated exactness on both sides
};
KoszulReport koszul_sv(std::size_t dim_v, std::size_t max_internal_degree);

}  // namespace hopfcoh::resolve
