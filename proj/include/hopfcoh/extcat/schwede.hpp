#pragma once

#include <vector>

#include "hopfcoh/extcat/extension.hpp"
#include "hopfcoh/monoidal/monoidal.hpp"

namespace hopfcoh::extcat {

using monoidal::TensorWitness;

// ⊗1 or ⊗2. Bimodules only have One (the tensor product over A).
enum class Product { One, Two };

TensorWitness tensor_witness(const Tetramodule& x, const Tetramodule& y, Product p);
// unit isomorphisms of one internal product, written against a given witness
Matrix left_unit(const TensorWitness& a_x, const Tetramodule& x, Product p);      // A⊗X -> X
Matrix left_unit_inv(const TensorWitness& a_x, const Tetramodule& x, Product p);  // X -> A⊗X
Matrix right_unit(const TensorWitness& x_a, const Tetramodule& x, Product p);     // X⊗A -> X
Matrix right_unit_inv(const TensorWitness& x_a, const Tetramodule& x, Product p);

// block i at position a of τ(E) tensored with block j at position b of τ(F)
struct BlockRef {
  std::size_t a = 0, i = 0, b = 0, j = 0;
  bool operator==(const BlockRef&) const = default;
};

// E ⊗τ F: the total complex of τ(E)⊗τ(F) closed off by A ≅ A⊗A on the left
// and (-1)^{kl} (p_E⊗p_F) on the right, times extra_last_sign.
struct SchwedeTensor {
  ExtPtr left, right;
  Product product = Product::One;
  int extra_last_sign = 1;
  ExtPtr ext;
  std::vector<std::vector<BlockRef>> table;  // positions 0..k+l of the total complex
  std::vector<std::vector<TensorWitness>> witness;
  std::size_t find(std::size_t s, const BlockRef& r) const;  // throws if absent
};
SchwedeTensor schwede_tensor(const ExtPtr& e, const ExtPtr& f, Product p, int extra_last_sign = 1);

// E⊗τF -> E♯F, and E⊗τF -> (-1)^{kl} F♯E (central arrow negated when kl is odd).
// An extra last sign on the tensor is carried over to the target's last map.
ExtensionMorphism schwede_projection_left(const SchwedeTensor& t);
ExtensionMorphism schwede_projection_right(const SchwedeTensor& t);

// f ⊗τ g between two Schwede tensors whose factors are the ends of f and g
ExtensionMorphism tensor_morphisms(const SchwedeTensor& src, const SchwedeTensor& tgt, const ExtensionMorphism& f,
                                   const ExtensionMorphism& g);

// (E⊗τF)⊗τG -> E⊗τ(F⊗τG)
struct ExtAssociator {
  SchwedeTensor ef, left, fg, right;
  ExtensionMorphism map;
};
ExtAssociator associator_ext(const ExtPtr& e, const ExtPtr& f, const ExtPtr& g, Product p);

// η_{M,N,P,Q}: (M♯N)⊗τ(P♯Q) -> (M⊗τP)♯(N⊗τQ). The source splices carry the
// central signs s1, s2; the target's central arrow carries s1 s2 (-1)^{np}.
// An extra last sign on the source tensor moves to the last map of N⊗τQ.
struct EtaExt {
  SchwedeTensor source, mp, nq;
  int target_sign = 1;
  ExtensionMorphism map;
  Verdict checks;
};
EtaExt eta_ext(const ExtPtr& m, const ExtPtr& n, const ExtPtr& p, const ExtPtr& q, Product pr, int s1 = 1,
               int s2 = 1, int extra_last_sign = 1);

// termwise η of modules with Koszul sign (-1)^{bc}:
// (E⊗2τF)⊗1τ(G⊗2τH) -> (E⊗1τG)⊗2τ(F⊗1τH), the target's last map twisted by
// (-1)^{fg} so that the ends stay identities
struct Eta12Ext {
  SchwedeTensor ef, gh, source, eg, fh, target;
  ExtensionMorphism map;
};
Eta12Ext eta12_ext(const ExtPtr& e, const ExtPtr& f, const ExtPtr& g, const ExtPtr& h);

// termwise comparison maps: E⊗1τF -> E⊗2τF, and E⊗1τF -> F⊗2τE with sign
// (-1)^{ab} on block (a,b) and last map of the target twisted by (-1)^{kl}
struct ComparisonExt {
  SchwedeTensor source, target;
  ExtensionMorphism map;
};
ComparisonExt phi12_ext(const ExtPtr& e, const ExtPtr& f);
ComparisonExt theta12_ext(const ExtPtr& e, const ExtPtr& f);

}  // namespace hopfcoh::extcat
