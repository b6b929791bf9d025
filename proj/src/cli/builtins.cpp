#include "hopfcoh/cli/builtins.hpp"

#include <charconv>
#include <map>

#include "hopfcoh/errors.hpp"
#include "hopfcoh/tetra/functors.hpp"

namespace hopfcoh::cli {

using exactla::Rational;
using exactla::Ring;
using extcat::Category;

namespace {

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto k = s.find(':', start);
    out.push_back(s.substr(start, k - start));
    if (k == std::string::npos) return out;
    start = k + 1;
  }
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InputError("bad " + what + " '" + s + "'");
  return v;
}

long long parse_int(const std::string& s, const std::string& what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InputError("bad " + what + " '" + s + "'");
  return v;
}

Ring ring_arg(const std::vector<std::string>& parts, std::size_t i) {
  if (parts.size() <= i) return Ring::rationals();
  if (parts.size() > i + 1) throw InputError("trailing alias fields");
  return Ring::parse(parts[i]);
}

// splits "prefix:rest" and returns rest, or nullopt
std::optional<std::string> after(const std::string& s, const std::string& prefix) {
  if (s.rfind(prefix + ":", 0) == 0) return s.substr(prefix.size() + 1);
  return std::nullopt;
}

}  // namespace

Base base_alias(const std::string& alias) {
  auto parts = split_colon(alias);
  const std::string& head = parts[0];
  Base b;
  if (head == "trivial") {
    b.bialgebra = tetra::share(bialg::trivial_bialgebra(ring_arg(parts, 1)));
  } else if (head == "group-algebra" || head == "group-ring") {
    if (parts.size() < 2) throw InputError("group-algebra needs an order");
    b.bialgebra = tetra::share(bialg::group_algebra(parse_count(parts[1], "group order"), ring_arg(parts, 2)));
  } else if (head == "sweedler-h4") {
    b.bialgebra = tetra::share(bialg::sweedler_h4(ring_arg(parts, 1)));
  } else if (head == "truncated-additive") {
    if (parts.size() != 2) throw InputError("truncated-additive needs a prime");
    b.bialgebra = tetra::share(bialg::truncated_additive_hopf(static_cast<std::uint32_t>(parse_count(parts[1], "prime"))));
  } else if (head == "truncated-polynomial") {
    if (parts.size() < 2) throw InputError("truncated-polynomial needs n");
    b.bialgebra = extcat::algebra_base(bialg::truncated_polynomial(parse_count(parts[1], "n"), ring_arg(parts, 2)));
    b.algebra_only = true;
  } else {
    throw InputError("unknown builtin '" + alias + "'");
  }
  return b;
}

bool is_base_alias(const std::string& alias) {
  static const char* heads[] = {"trivial", "group-algebra", "group-ring", "sweedler-h4", "truncated-additive",
                                "truncated-polynomial"};
  const std::string head = alias.substr(0, alias.find(':'));
  for (const char* h : heads)
    if (head == h) return true;
  return false;
}

Tetramodule unit_object(const Base& b) {
  return b.algebra_only ? extcat::regular_bimodule(b.bialgebra) : tetra::tautological(b.bialgebra);
}

Category unit_category(const Base& b) { return b.algebra_only ? Category::Bimodules : Category::Tetramodules; }

Tetramodule module_alias(const std::string& alias) {
  if (auto r = after(alias, "tautological")) {
    auto b = base_alias(*r);
    if (b.algebra_only) throw InputError("tautological needs a bialgebra");
    return tetra::tautological(b.bialgebra);
  }
  if (auto r = after(alias, "induced-trivial")) {
    auto b = base_alias(*r);
    if (b.algebra_only) throw InputError("induced-trivial needs a bialgebra");
    return tetra::induced(b.bialgebra, tetra::trivial_bicomodule(b.bialgebra));
  }
  if (auto r = after(alias, "coinduced-trivial")) {
    auto b = base_alias(*r);
    if (b.algebra_only) throw InputError("coinduced-trivial needs a bialgebra");
    return tetra::coinduced(b.bialgebra, tetra::trivial_bimodule(b.bialgebra));
  }
  if (auto r = after(alias, "regular")) return extcat::regular_bimodule(base_alias(*r).bialgebra);
  throw InputError("unknown module builtin '" + alias + "'");
}

bool is_module_alias(const std::string& alias) {
  for (const char* h : {"tautological", "induced-trivial", "coinduced-trivial", "regular"})
    if (after(alias, h)) return true;
  return false;
}

std::vector<Tetramodule> standard_modules(const Base& b) {
  if (b.algebra_only) return {extcat::regular_bimodule(b.bialgebra)};
  return {tetra::tautological(b.bialgebra), tetra::induced(b.bialgebra, tetra::trivial_bicomodule(b.bialgebra)),
          tetra::coinduced(b.bialgebra, tetra::trivial_bimodule(b.bialgebra))};
}

Matrix generic_basis(std::size_t d, long long shift) {
  Matrix p = Matrix::identity(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto k = static_cast<long long>(i) + shift;
    p.set(i, d + i, Rational(k + 1));
    p.set(d + i, i, Rational(1));
    p.set(i, i, Rational(k + 2));
  }
  return p;
}

ExtPtr rebased_split(Category cat, const Tetramodule& a, const Matrix& p, const std::string& name) {
  auto s = tetra::direct_sum({a, a});
  Matrix q = exactla::inverse(p);
  auto mid = tetra::transport(s.sum, p);
  return extcat::share(extcat::make_extension(cat, a, {mid}, {p * s.injections[0], s.projections[1] * q}, name));
}

ExtPtr derivation_extension(const BialgPtr& b, long long c) {
  if (b->dim != 2) throw InputError("derivation extension: needs the dual numbers");
  auto A = extcat::regular_bimodule(b);
  auto s = tetra::direct_sum({A, A});
  Tetramodule mid = s.sum;
  Matrix D = Matrix::from_dense(2, 2, {0, 0, 0, c});
  Matrix twist = A.ml() * exactla::kron(D, Matrix::identity(2));
  Matrix extra = s.injections[0] * twist * exactla::kron(Matrix::identity(2), s.projections[1]);
  mid.m_left = *mid.m_left + extra;
  mid.name = "E_D";
  const std::string name = "derivation:" + std::to_string(c);
  return extcat::share(extcat::make_extension(Category::Bimodules, A, {mid}, {s.injections[0], s.projections[1]}, name));
}

ExtPtr periodic_extension(const BialgPtr& b) {
  if (b->dim != 2) throw InputError("periodic extension: needs the dual numbers");
  auto A = extcat::regular_bimodule(b);
  Tetramodule f;
  f.base = b;
  f.dim = 4;
  f.m_left = exactla::kron(b->mult, Matrix::identity(2));
  f.m_right = exactla::kron(Matrix::identity(2), b->mult);
  f.name = "A⊗A";
  Matrix lx = Matrix::from_dense(2, 2, {0, 0, 1, 0});
  Matrix mid = exactla::kron(Matrix::identity(2), lx) - exactla::kron(lx, Matrix::identity(2));
  Matrix iota = Matrix::from_dense(4, 2, {0, 0, 1, 0, 1, 0, 0, 1});
  return extcat::share(extcat::make_extension(Category::Bimodules, A, {f, f}, {iota, mid, b->mult}, "periodic"));
}

ExtPtr extension_alias(const std::string& alias) {
  auto dual = [] { return extcat::algebra_base(bialg::truncated_polynomial(2)); };
  if (auto r = after(alias, "unit")) {
    auto b = base_alias(*r);
    auto e = extcat::unit_extension(unit_category(b), unit_object(b));
    e.name = alias;
    return extcat::share(std::move(e));
  }
  if (auto r = after(alias, "split")) {
    auto b = base_alias(*r);
    auto e = extcat::split_extension(unit_category(b), unit_object(b));
    e.name = alias;
    return extcat::share(std::move(e));
  }
  if (auto r = after(alias, "rebased-split")) {
    auto k = r->find(':');
    if (k == std::string::npos) throw InputError("rebased-split:<shift>:<base>");
    auto b = base_alias(r->substr(k + 1));
    return rebased_split(unit_category(b), unit_object(b),
                         generic_basis(b.bialgebra->dim, parse_int(r->substr(0, k), "shift")), alias);
  }
  if (auto r = after(alias, "derivation")) return derivation_extension(dual(), parse_int(*r, "scale"));
  if (alias == "periodic") return periodic_extension(dual());
  throw InputError("unknown extension builtin '" + alias + "'");
}

bool is_extension_alias(const std::string& alias) {
  if (alias == "periodic") return true;
  for (const char* h : {"unit", "split", "rebased-split", "derivation"})
    if (after(alias, h)) return true;
  return false;
}

}  // namespace hopfcoh::cli
