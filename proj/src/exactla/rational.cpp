#include "hopfcoh/exactla/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::exactla {

namespace {

unsigned __int128 uabs(__int128 x) { return x < 0 ? static_cast<unsigned __int128>(-x) : x; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = uabs(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_ll(long long x) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), x);
  return r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw InputError("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  unsigned __int128 g = gcd128(uabs(n), static_cast<unsigned __int128>(d));
  n /= static_cast<__int128>(g);
  d /= static_cast<__int128>(g);
  Rational r;
  if (n <= kLimit && n >= -kLimit && d <= kLimit) {
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
  } else {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.big_ = std::make_shared<const mpq_class>(q);
    r.num_ = 0;
    r.den_ = 1;
  }
  return r;
}

void Rational::set_big(const mpq_class& q0) {
  mpq_class q(q0);
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    long ln = n.get_si(), ld = d.get_si();
    if (ln <= kLimit && ln >= -kLimit && ld <= kLimit) {
      num_ = ln;
      den_ = ld;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(q);
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw InputError("malformed rational literal '" + s + "'");
  }
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("rational with zero denominator '" + s + "'");
  Rational r;
  r.set_big(q);
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_ll(num_), mpz_from_ll(den_));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_ll(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_ll(den_); }

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      long long s = a.num_ + b.num_;  // |s| < 2^63
      if (s <= Rational::kLimit && s >= -Rational::kLimit) {
        Rational r;
        r.num_ = s;
        return r;
      }
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      __int128 p = static_cast<__int128>(a.num_) * b.num_;
      if (p <= Rational::kLimit && p >= -Rational::kLimit) {
        Rational r;
        r.num_ = static_cast<long long>(p);
        return r;
      }
    }
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical form: small and big never coincide
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::uint32_t Rational::mod(std::uint32_t p) const {
  if (!big_) {
    long long P = p;
    long long d = den_ % P;
    if (d == 0) throw std::domain_error("denominator divisible by characteristic");
    long long n = num_ % P;
    if (n < 0) n += P;
    if (den_ == 1) return static_cast<std::uint32_t>(n);
    // d^(p-2) mod p
    unsigned long long base = static_cast<unsigned long long>(d), e = p - 2, inv = 1;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(static_cast<unsigned long long>(n) * inv % p);
  }
  mpz_class n = numerator(), d = denominator();
  mpz_class P(static_cast<unsigned long>(p));
  mpz_class dm = d % P;
  if (dm == 0) throw std::domain_error("denominator divisible by characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), P.get_mpz_t());
  mpz_class r = (n * inv) % P;
  if (r < 0) r += P;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hopfcoh::exactla
