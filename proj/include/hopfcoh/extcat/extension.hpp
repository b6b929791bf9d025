#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcoh/tetra/tetramodule.hpp"

namespace hopfcoh::extcat {

using exactla::Matrix;
using exactla::Ring;
using tetra::Tetramodule;

// Bimodule extensions carry Tetramodule values with the coactions absent.
enum class Category { Bimodules, Tetramodules };

// An algebra seen as a base for bimodules: comultiplication and counit are
// zero and never consulted.
tetra::BialgPtr algebra_base(const bialg::FinAlgebra& a);
// A as a bimodule over itself
Tetramodule regular_bimodule(const tetra::BialgPtr& base);

// 0 -> A -> F_1 -> ... -> F_k -> A -> 0. Position s holds a direct sum of
// blocks; positions 0 and k+1 hold the single block A. maps[s] goes from
// position s to s+1 in the concatenated block bases. Degree 0 is the unit
// 0 -> A -> A -> 0 with maps = {id}.
struct ExtensionComplex {
  Category category = Category::Tetramodules;
  std::string name;
  Tetramodule unit;
  std::vector<std::vector<Tetramodule>> blocks;
  std::vector<Matrix> maps;

  std::size_t degree() const { return blocks.size() - 2; }
  std::size_t positions() const { return blocks.size(); }
  std::size_t dim(std::size_t s) const;
  std::vector<std::size_t> offsets(std::size_t s) const;  // block starts, plus the total
  Tetramodule term(std::size_t s) const;                  // direct sum of the blocks
  const Matrix& first_map() const { return maps.front(); }
  const Matrix& last_map() const { return maps.back(); }
  const Ring& ring() const { return unit.ring(); }
};
using ExtPtr = std::shared_ptr<const ExtensionComplex>;
ExtPtr share(ExtensionComplex e);

// one block per middle term
ExtensionComplex make_extension(Category cat, const Tetramodule& unit, const std::vector<Tetramodule>& terms,
                                const std::vector<Matrix>& maps, const std::string& name = "E");
ExtensionComplex unit_extension(Category cat, const Tetramodule& unit);
// 0 -> A -> A⊕A -> A -> 0
ExtensionComplex split_extension(Category cat, const Tetramodule& unit);

// exactness by ranks, structure of every block, morphism property of every map
Verdict check_extension(const ExtensionComplex& e);
bool same_complex(const ExtensionComplex& a, const ExtensionComplex& b);

// multiply maps[s] by -1
ExtensionComplex negate_map(const ExtensionComplex& e, std::size_t s);

// E ♯ F; the central arrow E_k -> A -> F_1 is multiplied by central_sign
ExtensionComplex yoneda_splice(const ExtensionComplex& e, const ExtensionComplex& f, int central_sign = 1);

// components[s] for every position, ends included (they must be identities)
struct ExtensionMorphism {
  ExtPtr source;
  ExtPtr target;
  std::vector<Matrix> components;
};
Verdict check_morphism(const ExtensionMorphism& f);
ExtensionMorphism identity_morphism(const ExtPtr& e);
// g ∘ f; throws if f's target and g's source differ
ExtensionMorphism compose(const ExtensionMorphism& g, const ExtensionMorphism& f);
// f ♯ g between splices carrying the same central sign
ExtensionMorphism splice_morphisms(const ExtensionMorphism& f, const ExtensionMorphism& g, int central_sign = 1);
// componentwise ±1 isomorphism between complexes with equal terms whose maps
// agree up to signs with product 1; throws PreconditionError otherwise
ExtensionMorphism sign_change_iso(const ExtPtr& from, const ExtPtr& to);
bool sign_equivalent(const ExtensionComplex& a, const ExtensionComplex& b);
// residual of two parallel morphisms, all positions stacked
Matrix morphism_difference(const ExtensionMorphism& f, const ExtensionMorphism& g);

// τ(E) = 0 -> A -> E_1 -> ... -> E_k -> 0
struct TruncatedComplex {
  ExtPtr source;
  std::vector<std::size_t> dims;  // positions 0..k
  std::vector<Matrix> maps;       // the first k maps of E
};
TruncatedComplex truncate(const ExtPtr& e);
// homology dimensions of τ(E), position by position
std::vector<std::size_t> homology_dims(const TruncatedComplex& t);
// homology is A in the top position and zero elsewhere
Verdict check_truncated(const TruncatedComplex& t);

// pullback along the last maps, pushout along the first maps
ExtensionComplex baer_sum(const ExtensionComplex& e, const ExtensionComplex& f);

}  // namespace hopfcoh::extcat
