#pragma once

#include <string>

#include "hopfcoh/extcat/extension.hpp"

namespace hopfcoh::cli {

using exactla::Matrix;
using extcat::ExtPtr;
using tetra::BialgPtr;
using tetra::Tetramodule;

// A base for the loaders: a bialgebra, or an algebra whose bimodules are the
// only modules of interest (coproduct and counit zero, see algebra_base).
struct Base {
  BialgPtr bialgebra;
  bool algebra_only = false;
  bialg::FinAlgebra algebra() const { return bialgebra->algebra(); }
};

// trivial[:R], group-algebra:n[:R] (also group-ring), sweedler-h4[:R],
// truncated-additive:p, truncated-polynomial:n[:R] (algebra only).
// R is q, z or f<p>; the default is q. Throws InputError for anything else.
Base base_alias(const std::string& alias);
bool is_base_alias(const std::string& alias);

// A itself: the tautological tetramodule, or the regular bimodule
Tetramodule unit_object(const Base& b);
extcat::Category unit_category(const Base& b);

// tautological:<base>, induced-trivial:<base>, coinduced-trivial:<base>,
// regular:<base>
Tetramodule module_alias(const std::string& alias);
bool is_module_alias(const std::string& alias);
// tautological, induced-trivial and coinduced-trivial for a bialgebra,
// the regular bimodule for an algebra
std::vector<Tetramodule> standard_modules(const Base& b);

// invertible 2d x 2d matrix with small entries
Matrix generic_basis(std::size_t d, long long shift = 0);
// 0 -> A -> A⊕A -> A -> 0 with the middle term in the basis p
ExtPtr rebased_split(extcat::Category cat, const Tetramodule& a, const Matrix& p, const std::string& name);
// over Q[x]/(x^2): A ⊕ A with x·(u, v) = (x u + c x v, x v)
ExtPtr derivation_extension(const BialgPtr& dual_numbers, long long c = 1);
// over Q[x]/(x^2): 0 -> A -> A⊗A -> A⊗A -> A -> 0 from the periodic
// resolution, middle map x⊗1 - 1⊗x
ExtPtr periodic_extension(const BialgPtr& dual_numbers);

// unit:<base>, split:<base>, rebased-split:<shift>:<base>, derivation:<c>,
// periodic (the last two over the dual numbers)
ExtPtr extension_alias(const std::string& alias);
bool is_extension_alias(const std::string& alias);

}  // namespace hopfcoh::cli
