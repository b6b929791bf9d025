#pragma once

#include <cstdint>
#include <string>

namespace hopfcoh::exactla {

// Ground ring of a computation. Matrices always hold exact rationals; the ring
// decides how ranks, kernels and residuals are interpreted.
struct Ring {
  enum class Kind { Rationals, Integers, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // only meaningful for PrimeField

  static constexpr Ring rationals() { return {Kind::Rationals, 0}; }
  static constexpr Ring integers() { return {Kind::Integers, 0}; }
  static Ring prime_field(std::uint32_t p);

  bool is_field() const { return kind != Kind::Integers; }
  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::uint32_t characteristic() const { return kind == Kind::PrimeField ? p : 0; }

  // "q", "z", "f5"
  std::string tag() const;
  static Ring parse(const std::string& tag);

  friend bool operator==(const Ring&, const Ring&) = default;
};

bool is_prime(std::uint64_t n);

}  // namespace hopfcoh::exactla
