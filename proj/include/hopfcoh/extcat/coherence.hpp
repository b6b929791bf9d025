#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcoh/extcat/schwede.hpp"

namespace hopfcoh::extcat {

struct ExtCoherenceOptions {
  std::size_t sample = 2;  // instances of each diagram
  std::uint64_t seed = 1;
  bool extexpl = true;
  bool intexpl = true;
  bool compexpl = true;      // needs a Hopf tetramodule base
  bool corrupt_eta = false;  // negative control: perturb every η on extensions
};

// Two composites between the same ends, compared after a sign-change
// isomorphism on the target when the twists sit on different arrows.
Verdict compare_paths(const std::string& name, const ExtensionMorphism& lhs, const ExtensionMorphism& rhs);

// One instance of each diagram; the extension lists name the tuple in order.
Verdict extexpl_instance(const std::vector<ExtPtr>& uvwxyz, Product p, bool corrupt = false);
Verdict intexpl_instance(const std::vector<ExtPtr>& uvwxyz, Product p, bool corrupt = false);
// (i, j, k) = (⊗1, ⊗2, ♯); the eight extensions are A1 A2 B1 B2 C1 C2 D1 D2
Verdict compexpl_instance(const std::vector<ExtPtr>& abcd, bool corrupt = false);

// Samples tuples from the corpus. Bimodule corpora only run extexpl and
// intexpl for the single product.
Verdict verify_ext_coherence(const std::vector<ExtPtr>& corpus, const ExtCoherenceOptions& opts = {});

struct OctahedronFace {
  std::string name;
  std::vector<std::string> path;  // vertices along the longer side
  Verdict checks;
};
struct Octahedron {
  std::vector<std::string> vertices;  // M♯N, N♯M, M⊗1N, M⊗2N, N⊗1M, N⊗2M
  std::vector<OctahedronFace> faces;
  Verdict checks;  // all faces merged, plus the morphism checks of every edge
};
Octahedron octahedron(const ExtPtr& m, const ExtPtr& n);

}  // namespace hopfcoh::extcat
