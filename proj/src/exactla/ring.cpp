#include "hopfcoh/exactla/ring.hpp"

#include <cctype>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::exactla {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  return {Kind::PrimeField, p};
}

std::string Ring::tag() const {
  switch (kind) {
    case Kind::Rationals: return "q";
    case Kind::Integers: return "z";
    case Kind::PrimeField: return "f" + std::to_string(p);
  }
  return "?";
}

Ring Ring::parse(const std::string& tag) {
  if (tag == "q" || tag == "Q") return rationals();
  if (tag == "z" || tag == "Z") return integers();
  if (tag.size() > 1 && (tag[0] == 'f' || tag[0] == 'F')) {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < tag.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tag[i]))) throw InputError("bad ring tag '" + tag + "'");
      p = p * 10 + static_cast<std::uint64_t>(tag[i] - '0');
      if (p > 0xffffffffULL) throw InputError("characteristic too large in '" + tag + "'");
    }
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw InputError("bad ring tag '" + tag + "' (expected q, z or f<p>)");
}

}  // namespace hopfcoh::exactla
