#pragma once

#include <string>
#include <vector>

#include "hopfcoh/cli/builtins.hpp"
#include "hopfcoh/verdict.hpp"

namespace hopfcoh::cli {

// Definition documents are JSON objects mapping names to objects:
//
//   {"H": {"kind": "bialgebra", "ring": "q", "dim": 2,
//          "mult": [[k, i, j, "1"], ...], "comult": [[i, j, k, "1"], ...],
//          "unit": [[i, "1"]], "counit": [[k, "1"]], "antipode": [[i, k, "1"]]},
//    "M": {"kind": "tetramodule", "base": "H", "dim": 1, "m_left": ..., ...},
//    "E": {"kind": "extension", "base": "H", "terms": ["M"], "maps": [...]}}
//
// A structure map V_1⊗..⊗V_r -> W_1⊗..⊗W_s is a list of entries
// [w_1, .., w_s, v_1, .., v_r, "p/q"]: output slots first, then input slots,
// zero-based, the first slot varying slowest. Coefficients are strings.
// Kinds: bialgebra, algebra (mult, unit), tetramodule, bimodule (m_left,
// m_right), bicomodule (delta_left, delta_right), extension. Module maps:
// m_left [m', a, m], m_right [m', m, a], delta_left [a, m', m],
// delta_right [m', a, m]. An extension lists its middle terms (names,
// module builtins, or "A") and all maps, each [row, col, "p/q"]; its
// category is bimodules over an algebra and tetramodules otherwise, unless
// "category" says "bimodules". "base" and "terms" may name builtins.

struct LoadedObject {
  enum class Kind { Bialgebra, Algebra, Module, Extension };
  Kind kind = Kind::Bialgebra;
  std::string name;
  Base base;
  Tetramodule module;
  ExtPtr extension;
  Verdict checks;
};

struct Source {
  std::string ref;
  std::string digest;  // FNV-1a 64 of the document bytes, or of the alias
};

struct Loaded {
  std::vector<LoadedObject> objects;
  std::vector<Source> sources;
};

// A builtin alias, a file, or file#name. Every object is validated; a failed
// check rejects the load with an InputError naming the identity.
Loaded load(const std::string& ref);
Loaded load_text(const std::string& text, const std::string& origin, const std::string& only = "");

std::string digest(const std::string& bytes);

// one object of the requested kind, or InputError
Base load_base(const std::string& ref, std::vector<Source>& sources);
std::vector<Tetramodule> load_modules(const std::vector<std::string>& refs, std::vector<Source>& sources);
std::vector<ExtPtr> load_extensions(const std::vector<std::string>& refs, std::vector<Source>& sources);

}  // namespace hopfcoh::cli
