#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace hopfcoh::exactla {

// Exact rational number. Values whose numerator and denominator fit in 62 bits
// are stored inline; anything larger spills to a shared immutable mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {  // NOLINT(google-explicit-constructor)
    if (n > kLimit || n < -kLimit) set_big(mpq_class(mpz_class(std::to_string(n))));
  }
  Rational(int n) : Rational(static_cast<long long>(n)) {}  // NOLINT
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q) { set_big(q); }
  explicit Rational(const mpz_class& z) { set_big(mpq_class(z)); }

  static Rational parse(const std::string& s);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // residue modulo a prime; throws if p divides the denominator
  std::uint32_t mod(std::uint32_t p) const;

 private:
  static constexpr long long kLimit = (1LL << 62) - 1;

  void set_big(const mpq_class& q);
  static Rational from_i128(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hopfcoh::exactla
