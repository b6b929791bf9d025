#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/bialg/bialgebra.hpp"
#include "hopfcoh/exactla/linalg.hpp"
#include "hopfcoh/verdict.hpp"

namespace hopfcoh::tetra {

using bialg::FinBialgebra;
using exactla::Matrix;
using exactla::Ring;
using BialgPtr = std::shared_ptr<const FinBialgebra>;

BialgPtr share(FinBialgebra b);

// A space with left/right actions and left/right coactions of a bialgebra.
// Bimodules and bicomodules are the same type with the other pair absent.
struct Tetramodule {
  BialgPtr base;
  std::size_t dim = 0;
  std::string name;
  std::optional<Matrix> m_left;       // dim x (dA*dim), a⊗m -> am
  std::optional<Matrix> m_right;      // dim x (dim*dA), m⊗a -> ma
  std::optional<Matrix> delta_left;   // (dA*dim) x dim, m -> m_{-1}⊗m_0
  std::optional<Matrix> delta_right;  // (dim*dA) x dim, m -> m_0⊗m_1

  enum class Kind { Tetra, Bimodule, Bicomodule, Partial };
  Kind kind() const;
  bool has_actions() const { return m_left && m_right; }
  bool has_coactions() const { return delta_left && delta_right; }
  bool is_tetra() const { return has_actions() && has_coactions(); }

  const Matrix& ml() const;
  const Matrix& mr() const;
  const Matrix& dl() const;
  const Matrix& dr() const;
  std::size_t base_dim() const { return base->dim; }
  const Ring& ring() const { return base->ring; }
};

using TetraPtr = std::shared_ptr<const Tetramodule>;
TetraPtr share(Tetramodule m);

struct TetraMap {
  TetraPtr source;
  TetraPtr target;
  Matrix matrix;  // target.dim x source.dim
};

bool same_base(const Tetramodule& a, const Tetramodule& b);
void require_same_base(const Tetramodule& a, const Tetramodule& b);

// Individual identity families; check_tetramodule runs all that apply.
Verdict check_bimodule(const Tetramodule& m);
Verdict check_bicomodule(const Tetramodule& m);
Verdict check_compatibilities(const Tetramodule& m);
Verdict check_tetramodule(const Tetramodule& m);

// commutation with every structure map present on both sides
Verdict check_map(const Tetramodule& s, const Tetramodule& t, const Matrix& f);
Verdict check_map(const TetraMap& f);

Tetramodule tautological(const BialgPtr& b);
Tetramodule trivial_bimodule(const BialgPtr& b);    // k with actions through ε
Tetramodule trivial_bicomodule(const BialgPtr& b);  // k with coactions through the unit
Tetramodule forget_to_bicomodule(const Tetramodule& m);
Tetramodule forget_to_bimodule(const Tetramodule& m);

// conjugate the structure by an invertible change of basis p (new = p old)
Tetramodule transport(const Tetramodule& m, const Matrix& p);

struct DirectSum {
  Tetramodule sum;
  std::vector<Matrix> injections;   // into the sum
  std::vector<Matrix> projections;  // out of the sum
};
DirectSum direct_sum(const std::vector<Tetramodule>& parts);

// Structure on span(sub)/span(rel) induced through a subquotient witness.
// Throws InvariantError when a structure map does not preserve sub or rel.
Tetramodule subquotient_module(const Tetramodule& m, const exactla::SubQuotient& sq, const std::string& name = "");

// projection onto the span of an echelon basis (idempotent, image = span)
Matrix span_projector(const exactla::Echelon& e);

}  // namespace hopfcoh::tetra
