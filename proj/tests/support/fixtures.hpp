#pragma once

// Extensions shared by the unit and acceptance tests.

#include <utility>

#include "hopfcoh/cli/builtins.hpp"

namespace hopfcoh::fixtures {

using cli::derivation_extension;
using cli::generic_basis;
using cli::periodic_extension;
using cli::rebased_split;
using exactla::Matrix;
using extcat::ExtPtr;

inline tetra::BialgPtr dual_numbers() { return extcat::algebra_base(bialg::truncated_polynomial(2)); }

// e with the middle term at position s rewritten in the basis p, and the
// morphism e -> rebased
inline std::pair<ExtPtr, extcat::ExtensionMorphism> rebase(const ExtPtr& e, std::size_t s, const Matrix& p) {
  auto r = *e;
  Matrix q = exactla::inverse(p);
  r.blocks[s] = {tetra::transport(e->term(s), p)};
  r.maps[s - 1] = p * r.maps[s - 1];
  r.maps[s] = r.maps[s] * q;
  r.name = e->name + "'";
  auto rp = extcat::share(std::move(r));
  extcat::ExtensionMorphism m{e, rp, {}};
  for (std::size_t t = 0; t < e->positions(); ++t) m.components.push_back(t == s ? p : Matrix::identity(e->dim(t)));
  return {rp, m};
}

}  // namespace hopfcoh::fixtures
